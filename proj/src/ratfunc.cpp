#include "kuwata/ratfunc.hpp"

#include <algorithm>

namespace kuwata {

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(Scalar(1));
        return;
    }
    if (den_.degree() > 0) {
        UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Scalar l = den_.lc();
    if (!l.is_one()) {
        Scalar inv = l.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

long RatFunc::context() const {
    long d = num_.context();
    return d != 0 ? d : den_.context();
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw Error("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return RatFunc(Scalar(1)) / pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

Scalar RatFunc::eval(const Scalar& x) const {
    Scalar d = den_.eval(x);
    if (d.is_zero()) throw Error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

namespace {
// Homogenized evaluation: P(p/q) * q^n for n >= deg P.
UPoly homog(const UPoly& P, const UPoly& p, const UPoly& q, int n) {
    UPoly acc;
    UPoly pp(Scalar(1));
    std::vector<UPoly> qpow{UPoly(Scalar(1))};
    for (int i = 1; i <= n; ++i) qpow.push_back(qpow.back() * q);
    for (int i = 0; i <= P.degree(); ++i) {
        if (!P.coeff(i).is_zero()) acc += (pp * qpow[static_cast<size_t>(n - i)]) * P.coeff(i);
        pp = pp * p;
    }
    return acc;
}
}  // namespace

RatFunc RatFunc::compose(const RatFunc& g) const {
    int n = std::max(num_.degree(), den_.degree());
    if (n < 0) n = 0;
    return RatFunc(homog(num_, g.num(), g.den(), n), homog(den_, g.num(), g.den(), n));
}

RatFunc RatFunc::subs_pow(int n) const { return RatFunc(num_.subs_pow(n), den_.subs_pow(n)); }

RatFunc RatFunc::invert_var() const {
    int n = std::max(num_.degree(), den_.degree());
    return RatFunc(num_.reverse(n), den_.reverse(n));
}

RatFunc RatFunc::scale_var(const Scalar& c) const { return RatFunc(num_.scale_var(c), den_.scale_var(c)); }

RatFunc RatFunc::shift(const Scalar& r) const { return RatFunc(num_.shift(r), den_.shift(r)); }

RatFunc RatFunc::conj() const { return RatFunc(num_.conj(), den_.conj()); }

int RatFunc::valuation_at(const UPoly& p) const {
    if (num_.is_zero()) throw PreconditionError("valuation of zero rational function");
    return valuation(num_, p) - valuation(den_, p);
}

int RatFunc::valuation_at_infinity() const {
    if (num_.is_zero()) throw PreconditionError("valuation of zero rational function");
    return den_.degree() - num_.degree();
}

std::string RatFunc::str(const std::string& v) const {
    if (is_polynomial()) return num_.str(v);
    return "(" + num_.str(v) + ")/(" + den_.str(v) + ")";
}

ClearedInverse invert_with_clearing(const UPoly& f, int n) { return {f.reverse(n), n}; }

}  // namespace kuwata
