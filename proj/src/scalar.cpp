#include "kuwata/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace kuwata {

Scalar::Scalar(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ != 0 && !is_squarefree(d_)) throw ContextError("quadratic context D must be squarefree and not 1");
    a_.canonicalize();
    b_.canonicalize();
    normalize();
}

void Scalar::normalize() {
    if (sgn(b_) == 0) d_ = 0;
    else if (d_ == 0) throw ContextError("nonzero quadratic part without a context D");
}

long Scalar::join(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw ContextError("mixed quadratic contexts sqrt(" + std::to_string(d1) + ") and sqrt(" +
                       std::to_string(d2) + ")");
}

Scalar Scalar::sqrt_of(long d) { return Scalar(Rat(0), Rat(1), d); }

const Rat& Scalar::rational() const {
    if (!is_rational()) throw ContextError("value is not rational: " + str());
    return a_;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

Rat Scalar::norm() const {
    if (d_ == 0) return a_ * a_;
    return a_ * a_ - Rat(d_) * b_ * b_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (d_ == 0) return Scalar(Rat(1) / a_);
    Rat n = norm();
    return Scalar(a_ / n, -b_ / n, d_);
}

int Scalar::canonical_sign() const {
    int s = sgn(a_);
    return s != 0 ? s : sgn(b_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = join(d_, o.d_);
    a_ += o.a_;
    if (sgn(o.b_) != 0) b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = join(d_, o.d_);
    a_ -= o.a_;
    if (sgn(o.b_) != 0) b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    long d = join(d_, o.d_);
    Rat na = a_ * o.a_ + Rat(d) * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("division by zero");
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.d_ == y.d_);
}

bool less_canonical(const Scalar& x, const Scalar& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Int Scalar::height() const {
    Int h = abs(a_.get_num());
    auto upd = [&h](const Int& v) {
        Int w = abs(v);
        if (w > h) h = w;
    };
    upd(a_.get_den());
    if (sgn(b_) != 0) {
        upd(b_.get_num());
        upd(b_.get_den());
    }
    return h;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string Scalar::str() const {
    if (sgn(b_) == 0) return rat_str(a_);
    std::string tail = "*sqrt(" + std::to_string(d_) + ")";
    if (sgn(a_) == 0) return rat_str(b_) + tail;
    if (sgn(b_) < 0) return rat_str(a_) + " - " + rat_str(Rat(-b_)) + tail;
    return rat_str(a_) + " + " + rat_str(b_) + tail;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("malformed scalar: empty");
    if (s[0] == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& v) {
        size_t i = (!v.empty() && v[0] == '-') ? 1 : 0;
        if (i >= v.size()) return false;
        return std::all_of(v.begin() + static_cast<long>(i), v.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw Error("malformed scalar: '" + text + "'");
    Int n(num), d(den);
    if (d == 0) throw Error("malformed scalar: zero denominator in '" + text + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return Scalar(parse_rat(s));
    auto close = s.find(')', pos);
    if (close == std::string::npos || close + 1 != s.size()) throw Error("malformed scalar: '" + text + "'");
    long d = std::stol(s.substr(pos + 5, close - pos - 5));
    std::string head = s.substr(0, pos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    // split head into rational part and coefficient at the last sign that is not leading
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;)
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            split = i;
            break;
        }
    std::string apart = split == std::string::npos ? "" : head.substr(0, split);
    std::string bpart = split == std::string::npos ? head : head.substr(split);
    Rat a = apart.empty() ? Rat(0) : parse_rat(apart);
    Rat b;
    if (bpart.empty() || bpart == "+") b = 1;
    else if (bpart == "-") b = -1;
    else b = parse_rat(bpart);
    return Scalar(a, b, d);
}

bool is_squarefree(long d) {
    if (d == 0 || d == 1) return false;
    long m = d < 0 ? -d : d;
    for (long p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

std::optional<Rat> perfect_power(const Rat& x, unsigned k) {
    if (k == 0) return std::nullopt;
    if (sgn(x) == 0) return Rat(0);
    if (sgn(x) < 0 && k % 2 == 0) return std::nullopt;
    Int num = abs(x.get_num()), den = x.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
    Rat r(rn, rd);
    if (sgn(x) < 0) r = -r;
    return r;
}

std::optional<Scalar> sqrt_in(const Scalar& x, long d) {
    if (x.is_zero()) return Scalar(0);
    if (x.is_rational()) {
        if (auto r = perfect_power(x.a(), 2)) return Scalar(*r);
        if (d == 0) return std::nullopt;
        if (auto q = perfect_power(x.a() / Rat(d), 2)) return Scalar(Rat(0), *q, d);
        return std::nullopt;
    }
    if (x.d() != d) return std::nullopt;
    // (p + q sqrt d)^2 = a + b sqrt d  =>  p^2 = (a +- sqrt(norm)) / 2, q = b / (2p)
    auto n = perfect_power(x.norm(), 2);
    if (!n) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat p2 = (x.a() + Rat(sign) * *n) / 2;
        if (sgn(p2) == 0) continue;
        if (auto p = perfect_power(p2, 2)) {
            Rat q = x.b() / (Rat(2) * *p);
            Scalar r(*p, q, d);
            if (r * r == x) return r.canonical_sign() < 0 ? -r : r;
        }
    }
    return std::nullopt;
}

}  // namespace kuwata
