#pragma once

#include "kuwata/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kuwata {

// Dense univariate polynomial; coefficient i multiplies t^i.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Scalar& c);
    UPoly(long c) : UPoly(Scalar(c)) {}
    explicit UPoly(std::vector<Scalar> coeffs);

    static UPoly var();
    static UPoly monomial(const Scalar& c, int deg);
    // Lowest-degree-first integer or rational coefficient list.
    static UPoly from_rats(const std::vector<Rat>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Scalar& coeff(int i) const;
    const Scalar& lc() const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    long context() const;
    bool is_rational() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Scalar& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Scalar& s) { return a *= s; }
    friend UPoly operator*(const Scalar& s, UPoly a) { return a *= s; }
    UPoly operator-() const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly pow(unsigned e) const;
    Scalar eval(const Scalar& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    // Rational content (positive) for Q-coefficients; leading coefficient otherwise.
    Scalar content() const;
    UPoly primitive_part() const;
    UPoly conj() const;
    // f * conj(f), a polynomial over Q.
    UPoly norm() const;

    // f(g(t))
    UPoly compose(const UPoly& g) const;
    // f(t^n)
    UPoly subs_pow(int n) const;
    // t^n f(1/t); requires n >= degree
    UPoly reverse(int n) const;
    // f(t + r)
    UPoly shift(const Scalar& r) const;
    // f(c t)
    UPoly scale_var(const Scalar& c) const;
    // Largest e with t^e | f (f != 0).
    int low_degree() const;
    // t^(-e) f for e <= low_degree().
    UPoly shift_down(int e) const;

    std::string str(const std::string& v = "t") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g);
// Division that must be exact; throws otherwise.
UPoly exact_div(const UPoly& f, const UPoly& g);
UPoly operator%(const UPoly& f, const UPoly& g);
// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& f, const UPoly& g);
// Largest e with p^e | f; p nonconstant, f nonzero.
int valuation(const UPoly& f, const UPoly& p);
// Yun decomposition: f = c * prod(g_i^i) with g_i monic, squarefree, pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);
UPoly squarefree_part(const UPoly& f);
// Product of the irreducible factors p of s with p^m | f (s squarefree); f = 0 gives s.
UPoly multiplicity_part(const UPoly& s, const UPoly& f, int m);
// Exact square root of a polynomial in K[t], if it exists (K = Q or Q(sqrt d)).
std::optional<UPoly> poly_sqrt(const UPoly& f, long d);

// f(t + alpha/t) = N(t) / t^deg f.
UPoly subs_t_plus_alpha_over_t(const UPoly& f, const Scalar& alpha);

}  // namespace kuwata
