#pragma once

#include "kuwata/unipoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kuwata {

constexpr int kMaxVars = 8;
using Mono = std::array<std::uint16_t, kMaxVars>;

// Graded lexicographic order, largest first (variable 0 is the most significant).
struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const;
};

int mono_degree(const Mono& m);

// Sparse polynomial over Scalar in a fixed, ordered variable list.
class MultiPoly {
public:
    using Terms = std::map<Mono, Scalar, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(const std::vector<std::string>& vars, const Scalar& c);
    static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
    static MultiPoly from_upoly(const std::vector<std::string>& vars, int v, const UPoly& p);
    // sum_k coeffs[k] * var_v^k
    static MultiPoly from_coeffs(const std::vector<std::string>& vars, int v, const std::vector<MultiPoly>& coeffs);

    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(const std::string& name) const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;
    const Mono& leading_mono() const;
    const Scalar& leading_coeff() const;

    void add_term(const Mono& m, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;
    MultiPoly mul_mono(const Mono& m, const Scalar& c) const;

    int degree_in(int v) const;
    bool involves(int v) const { return degree_in(v) > 0; }
    std::vector<MultiPoly> coeffs_in(int v) const;
    MultiPoly substitute(int v, const MultiPoly& value) const;
    MultiPoly eval(int v, const Scalar& x) const;
    // Requires that no variable other than v occurs.
    UPoly to_upoly(int v) const;

    // Product of the smallest exponent of each variable over all terms.
    Mono monomial_content() const;
    // Divides by the positive rational content (the leading coefficient for non-rational data)
    // and by the monomial content.
    MultiPoly primitive_part() const;
    MultiPoly rational_primitive_part() const;
    MultiPoly divide_mono(const Mono& m) const;

    std::string str() const;

private:
    void check_compatible(const MultiPoly& o) const;
    std::vector<std::string> vars_;
    Terms terms_;
};

// Exact multivariate division; throws when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

}  // namespace kuwata
