#pragma once

#include "kuwata/unipoly.hpp"

namespace kuwata {

// num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(Scalar(1)) {}
    RatFunc(const UPoly& p) : num_(p), den_(Scalar(1)) {}
    RatFunc(const Scalar& c) : num_(c), den_(Scalar(1)) {}
    RatFunc(long c) : RatFunc(Scalar(c)) {}
    RatFunc(UPoly num, UPoly den);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    long context() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(int e) const;
    Scalar eval(const Scalar& x) const;
    // f(g(t)) for a rational function g
    RatFunc compose(const RatFunc& g) const;
    RatFunc subs_pow(int n) const;
    // f(1/t)
    RatFunc invert_var() const;
    // f(c t)
    RatFunc scale_var(const Scalar& c) const;
    RatFunc shift(const Scalar& r) const;
    RatFunc conj() const;

    // Order of vanishing at a place given by a squarefree polynomial p (negative for poles).
    int valuation_at(const UPoly& p) const;
    // Order of vanishing at t = infinity: deg den - deg num.
    int valuation_at_infinity() const;

    std::string str(const std::string& v = "t") const;

private:
    void normalize();
    UPoly num_, den_;
};

// t <- 1/t applied to a polynomial together with the clearing factor t^n (n >= deg f).
struct ClearedInverse {
    UPoly poly;
    int clearing_degree;
};
ClearedInverse invert_with_clearing(const UPoly& f, int n);

}  // namespace kuwata
