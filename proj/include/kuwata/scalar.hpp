#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kuwata {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an input violates an operation's documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

struct ContextError : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// Element a + b*sqrt(d) of Q(sqrt d). Pure rationals are stored with b = 0, d = 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(int v) : a_(v) {}
    Scalar(const Rat& v) : a_(v) { a_.canonicalize(); }
    Scalar(const Int& v) : a_(v) {}
    Scalar(Rat a, Rat b, long d);

    static Scalar sqrt_of(long d);
    static Scalar parse(const std::string& text);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return sgn(b_) == 0 && a_ == 1; }
    bool is_rational() const { return sgn(b_) == 0; }
    // Caller must check is_rational() first.
    const Rat& rational() const;

    Scalar conj() const;
    Rat norm() const;
    Scalar inverse() const;
    // Sign used for canonical choices: sign of a, or of b when a = 0.
    int canonical_sign() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Total order on (a, b) used only for deterministic sorting.
    friend bool less_canonical(const Scalar& x, const Scalar& y);

    Scalar pow(unsigned long e) const;

    // Largest absolute value among numerators and denominators.
    Int height() const;

    std::string str() const;

private:
    void normalize();
    static long join(long d1, long d2);

    Rat a_{0};
    Rat b_{0};
    long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& text);

// Square root inside Q (d = 0) or Q(sqrt d); nullopt when none exists there.
std::optional<Scalar> sqrt_in(const Scalar& x, long d);

// r with r^k = x in Q, or nullopt.
std::optional<Rat> perfect_power(const Rat& x, unsigned k);

bool is_squarefree(long d);

}  // namespace kuwata
