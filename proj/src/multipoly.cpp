#include "kuwata/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace kuwata {

bool GrlexGreater::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    for (int i = 0; i < kMaxVars; ++i)
        if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)])
            return a[static_cast<size_t>(i)] > b[static_cast<size_t>(i)];
    return false;
}

int mono_degree(const Mono& m) {
    int s = 0;
    for (auto e : m) s += e;
    return s;
}

namespace {
Mono mono_add(const Mono& a, const Mono& b) {
    Mono r{};
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned s = static_cast<unsigned>(a[i]) + b[i];
        if (s > 0xFFFF) throw Error("monomial exponent overflow");
        r[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_sub(const Mono& a, const Mono& b) {
    Mono r{};
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}
}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.size() > static_cast<size_t>(kMaxVars)) throw Error("too many polynomial variables");
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Scalar& c) {
    MultiPoly p(vars);
    p.add_term(Mono{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    MultiPoly p(vars);
    Mono m{};
    m[static_cast<size_t>(p.var_index(name))] = 1;
    p.add_term(m, Scalar(1));
    return p;
}

MultiPoly MultiPoly::from_upoly(const std::vector<std::string>& vars, int v, const UPoly& u) {
    MultiPoly p(vars);
    for (int i = 0; i <= u.degree(); ++i) {
        Mono m{};
        m[static_cast<size_t>(v)] = static_cast<std::uint16_t>(i);
        p.add_term(m, u.coeff(i));
    }
    return p;
}

MultiPoly MultiPoly::from_coeffs(const std::vector<std::string>& vars, int v, const std::vector<MultiPoly>& coeffs) {
    MultiPoly p(vars);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [m, c] : coeffs[k].terms_) {
            Mono mm = m;
            mm[static_cast<size_t>(v)] = static_cast<std::uint16_t>(mm[static_cast<size_t>(v)] + k);
            p.add_term(mm, c);
        }
    }
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    throw Error("unknown polynomial variable '" + name + "'");
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

Scalar MultiPoly::constant_value() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

const Mono& MultiPoly::leading_mono() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Scalar& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_ && !vars_.empty() && !o.vars_.empty())
        throw Error("polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    if (vars_.empty()) vars_ = o.vars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    if (vars_.empty()) vars_ = o.vars_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<std::pair<Mono, Scalar>> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prods.emplace_back(mono_add(ma, mb), ca * cb);
    GrlexGreater cmp;
    std::sort(prods.begin(), prods.end(), [&cmp](const auto& x, const auto& y) { return cmp(x.first, y.first); });
    auto hint = r.terms_.end();
    for (size_t i = 0; i < prods.size();) {
        size_t j = i;
        Scalar s = std::move(prods[i].second);
        for (++j; j < prods.size() && prods[j].first == prods[i].first; ++j) s += prods[j].second;
        if (!s.is_zero()) hint = r.terms_.emplace_hint(hint, prods[i].first, std::move(s));
        i = j;
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, Scalar(1)), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::mul_mono(const Mono& mono, const Scalar& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    auto hint = r.terms_.end();
    for (const auto& [m, x] : terms_) hint = r.terms_.emplace_hint(hint, mono_add(m, mono), x * c);
    return r;
}

int MultiPoly::degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<size_t>(v)]));
    return d;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int v) const {
    int d = degree_in(v);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, -1) + 1), MultiPoly(vars_));
    for (const auto& [m, c] : terms_) {
        Mono mm = m;
        auto k = mm[static_cast<size_t>(v)];
        mm[static_cast<size_t>(v)] = 0;
        out[k].terms_.emplace(mm, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(int v, const MultiPoly& value) const {
    auto cs = coeffs_in(v);
    MultiPoly acc(vars_);
    for (size_t k = cs.size(); k-- > 0;) {
        acc = acc * value;
        acc += cs[k];
    }
    return acc;
}

MultiPoly MultiPoly::eval(int v, const Scalar& x) const {
    return substitute(v, constant(vars_, x));
}

UPoly MultiPoly::to_upoly(int v) const {
    std::vector<Scalar> c(static_cast<size_t>(std::max(degree_in(v), -1) + 1));
    for (const auto& [m, x] : terms_) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != v && m[static_cast<size_t>(i)] != 0)
                throw Error("polynomial is not univariate in " + vars_[static_cast<size_t>(v)]);
        c[m[static_cast<size_t>(v)]] = x;
    }
    return UPoly(std::move(c));
}

Mono MultiPoly::monomial_content() const {
    Mono r{};
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            r = m;
            first = false;
        } else {
            for (size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], m[i]);
        }
    }
    return r;
}

MultiPoly MultiPoly::divide_mono(const Mono& mono) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (!mono_divides(mono, m)) throw Error("monomial does not divide polynomial");
        r.terms_.emplace(mono_sub(m, mono), c);
    }
    return r;
}

MultiPoly MultiPoly::rational_primitive_part() const {
    if (terms_.empty()) return *this;
    bool rational = std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_rational(); });
    Scalar content;
    if (!rational) {
        content = leading_coeff();
    } else {
        Int num = 0, den = 1;
        for (const auto& [m, c] : terms_) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.a().get_num().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den().get_mpz_t());
        }
        Rat q(num, den);
        q.canonicalize();
        if (sgn(leading_coeff().a()) < 0) q = -q;
        content = Scalar(q);
    }
    if (content.is_one()) return *this;
    MultiPoly r = *this;
    r *= content.inverse();
    return r;
}

MultiPoly MultiPoly::primitive_part() const {
    return rational_primitive_part().divide_mono(monomial_content());
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = c.is_rational() && sgn(c.a()) < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (neg) cs = Scalar(-c).str();
        if (!c.is_rational()) cs = "(" + cs + ")";
        bool has_var = mono_degree(m) > 0;
        if (!has_var || cs != "1") os << cs;
        bool star = !has_var || cs != "1";
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (m[i] == 0) continue;
            if (star) os << "*";
            os << vars_[i];
            if (m[i] > 1) os << "^" << m[i];
            star = true;
        }
        first = false;
    }
    return os.str();
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw Error("multivariate division by zero");
    MultiPoly q(a.vars().empty() ? b.vars() : a.vars());
    if (b.is_constant()) {
        q = a;
        q *= b.constant_value().inverse();
        return q;
    }
    MultiPoly r = a;
    const Mono& lb = b.leading_mono();
    Scalar inv = b.leading_coeff().inverse();
    while (!r.is_zero()) {
        const Mono& lr = r.leading_mono();
        if (!mono_divides(lb, lr)) throw Error("inexact multivariate division");
        Mono m = mono_sub(lr, lb);
        Scalar c = r.leading_coeff() * inv;
        q.add_term(m, c);
        r -= b.mul_mono(m, c);
    }
    return q;
}

}  // namespace kuwata
