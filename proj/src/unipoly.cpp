#include "kuwata/unipoly.hpp"

#include "ffield.hpp"
#include "kuwata/roots.hpp"

#include <algorithm>
#include <sstream>

namespace kuwata {

namespace {
const Scalar kZero{};
}

UPoly::UPoly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::var() { return monomial(Scalar(1), 1); }

UPoly UPoly::monomial(const Scalar& c, int deg) {
    if (c.is_zero()) return {};
    std::vector<Scalar> v(static_cast<size_t>(deg) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

UPoly UPoly::from_rats(const std::vector<Rat>& coeffs) {
    std::vector<Scalar> v(coeffs.begin(), coeffs.end());
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Scalar& UPoly::lc() const { return c_.empty() ? kZero : c_.back(); }

long UPoly::context() const {
    for (const auto& s : c_)
        if (!s.is_rational()) return s.d();
    return 0;
}

bool UPoly::is_rational() const { return context() == 0; }

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly result(Scalar(1)), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * lc().inverse();
}

Scalar UPoly::content() const {
    if (is_zero()) return Scalar(0);
    if (!is_rational()) return lc();
    Int num = 0, den = 1;
    for (const auto& s : c_) {
        const Rat& q = s.a();
        if (sgn(q) == 0) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Rat c(num, den);
    c.canonicalize();
    if (sgn(lc().a()) < 0) c = -c;
    return Scalar(c);
}

UPoly UPoly::primitive_part() const {
    if (is_zero()) return {};
    return *this * content().inverse();
}

UPoly UPoly::conj() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

UPoly UPoly::norm() const {
    if (is_rational()) return *this;
    return *this * conj();
}

UPoly UPoly::compose(const UPoly& g) const {
    UPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * g;
        acc += UPoly(c_[i]);
    }
    return acc;
}

UPoly UPoly::subs_pow(int n) const {
    if (n < 1) throw PreconditionError("subs_pow needs n >= 1");
    if (is_zero()) return {};
    std::vector<Scalar> r(static_cast<size_t>(degree() * n) + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(n)] = c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::reverse(int n) const {
    if (is_zero()) return {};
    if (n < degree()) throw PreconditionError("reverse needs n >= degree");
    std::vector<Scalar> r(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(n) - i] = c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::shift(const Scalar& r) const {
    if (r.is_zero()) return *this;
    // Horner with (t + r)
    UPoly lin(std::vector<Scalar>{r, Scalar(1)});
    return compose(lin);
}

UPoly UPoly::scale_var(const Scalar& c) const {
    UPoly r = *this;
    Scalar p(1);
    for (auto& x : r.c_) {
        x *= p;
        p *= c;
    }
    r.trim();
    return r;
}

int UPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

UPoly UPoly::shift_down(int e) const {
    if (e <= 0) return *this;
    if (e > low_degree()) throw Error("shift_down beyond valuation");
    return UPoly(std::vector<Scalar>(c_.begin() + e, c_.end()));
}

std::string UPoly::str(const std::string& v) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Scalar& c = c_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool compound = !c.is_rational();
        bool neg = c.is_rational() && sgn(c.a()) < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (neg) cs = Scalar(-c).str();
        if (compound) cs = "(" + cs + ")";
        if (i == 0) os << cs;
        else {
            if (cs != "1") os << cs << "*";
            os << v;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    if (f.degree() < g.degree()) return {UPoly(), f};
    std::vector<Scalar> r = f.coeffs();
    const int dg = g.degree();
    std::vector<Scalar> q(static_cast<size_t>(f.degree() - dg) + 1);
    Scalar inv = g.lc().inverse();
    for (int k = f.degree() - dg; k >= 0; --k) {
        Scalar c = r[static_cast<size_t>(k + dg)];
        if (c.is_zero()) continue;
        c *= inv;
        q[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= dg; ++j) r[static_cast<size_t>(k + j)] -= c * g.coeff(j);
    }
    r.resize(static_cast<size_t>(dg));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& f, const UPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

UPoly operator%(const UPoly& f, const UPoly& g) { return divrem(f, g).second; }

namespace {

UPoly from_ints(const std::vector<Int>& v) {
    std::vector<Scalar> cs;
    for (const auto& c : v) cs.emplace_back(c);
    return UPoly(std::move(cs));
}

bool divides(const UPoly& h, const UPoly& f) { return divrem(f, h).second.is_zero(); }

// Modular gcd over Z: images modulo word-size primes, combined by CRT until the lifted
// candidate stabilizes and divides both inputs. Unlucky primes show up as too-large degrees.
UPoly gcd_modular(const UPoly& f, const UPoly& g) {
    using ff::u64;
    const std::vector<Int> F = integer_primitive(f), G = integer_primitive(g);
    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), F.back().get_mpz_t(), G.back().get_mpz_t());
    std::vector<Int> acc;  // CRT image of gamma * monic gcd, coefficients mod M
    Int M = 1;
    int deg = std::min(f.degree(), g.degree()) + 1;
    UPoly last;
    for (u64 p = (1ULL << 61) - 1;; p -= 2) {
        if (!is_prime_u64(p)) continue;
        if (ff::mod_int(F.back(), p) == 0 || ff::mod_int(G.back(), p) == 0) continue;
        ff::Fp fld{p};
        auto red = [&](const std::vector<Int>& v) {
            ff::Poly<ff::Fp> r;
            for (const auto& c : v) r.push_back(ff::mod_int(c, p));
            ff::trim(fld, r);
            return r;
        };
        auto h = ff::gcd(fld, red(F), red(G));
        const int dh = static_cast<int>(h.size()) - 1;
        if (dh == 0) return UPoly(Scalar(1));
        if (dh > deg) continue;
        const u64 gm = ff::mod_int(gamma, p);
        for (auto& c : h) c = fld.mul(c, gm);
        const Int P(static_cast<unsigned long>(p));
        if (dh < deg) {
            deg = dh;
            acc.assign(h.size(), Int(0));
            for (size_t i = 0; i < h.size(); ++i) acc[i] = Int(static_cast<unsigned long>(h[i]));
            M = P;
            last = UPoly();
            continue;
        }
        // x = acc + M * ((h - acc) * M^-1 mod p)
        Int Minv, Mp(static_cast<unsigned long>(ff::mod_int(M, p)));
        mpz_invert(Minv.get_mpz_t(), Mp.get_mpz_t(), P.get_mpz_t());
        const u64 mi = Minv.get_ui();
        for (size_t i = 0; i < h.size(); ++i) {
            u64 diff = fld.sub(h[i], ff::mod_int(acc[i], p));
            acc[i] += M * Int(static_cast<unsigned long>(fld.mul(diff, mi)));
        }
        M *= P;
        std::vector<Int> sym(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) {
            sym[i] = acc[i];
            if (sym[i] * 2 > M) sym[i] -= M;
        }
        UPoly cand = from_ints(sym);
        if (cand == last && divides(cand, f) && divides(cand, g)) return cand.monic();
        last = cand;
    }
}

}  // namespace

UPoly gcd(const UPoly& f, const UPoly& g) {
    if (f.is_zero()) return g.is_zero() ? g : g.monic();
    if (g.is_zero()) return f.monic();
    if (f.degree() >= 8 && g.degree() >= 8 && f.is_rational() && g.is_rational()) return gcd_modular(f, g);
    UPoly a = f, b = g;
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive_part();
    }
    return a.monic();
}

int valuation(const UPoly& f, const UPoly& p) {
    if (p.degree() < 1) throw PreconditionError("valuation needs a nonconstant place polynomial");
    if (f.is_zero()) throw PreconditionError("valuation of the zero polynomial");
    int e = 0;
    UPoly cur = f;
    while (true) {
        auto [q, r] = divrem(cur, p);
        if (!r.is_zero()) return e;
        cur = std::move(q);
        ++e;
    }
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() < 1) return out;
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = exact_div(f, a);
    UPoly c = exact_div(fp, a);
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.monic(), i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UPoly squarefree_part(const UPoly& f) {
    UPoly r(Scalar(1));
    for (auto& [g, m] : squarefree_decomposition(f)) r = r * g;
    return r;
}

UPoly multiplicity_part(const UPoly& s, const UPoly& f, int m) {
    if (f.is_zero()) return s.monic();
    UPoly r = s.monic(), g = f;
    for (int i = 0; i < m && r.degree() > 0; ++i) {
        r = gcd(r, g);
        if (r.degree() < 1) break;
        g = exact_div(g, r);
    }
    return r.degree() < 1 ? UPoly(Scalar(1)) : r;
}

std::optional<UPoly> poly_sqrt(const UPoly& f, long d) {
    if (f.is_zero()) return UPoly();
    if (f.degree() % 2 != 0) return std::nullopt;
    auto lead = sqrt_in(f.lc(), d);
    if (!lead) return std::nullopt;
    const int m = f.degree() / 2;
    std::vector<Scalar> g(static_cast<size_t>(m) + 1);
    g[static_cast<size_t>(m)] = *lead;
    Scalar inv2 = (Scalar(2) * *lead).inverse();
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of t^(m+k) in g^2 equals f_(m+k)
        Scalar acc = f.coeff(m + k);
        for (int i = k + 1; i <= m; ++i) {
            int j = m + k - i;
            if (j <= k || j > m) continue;
            acc -= g[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
        }
        g[static_cast<size_t>(k)] = acc * inv2;
    }
    UPoly r(std::move(g));
    if (r * r != f) return std::nullopt;
    return r;
}

UPoly subs_t_plus_alpha_over_t(const UPoly& f, const Scalar& alpha) {
    // t^n f(t + alpha/t) = sum f_i (t^2 + alpha)^i t^(n-i)
    const int n = f.degree();
    if (n < 0) return {};
    UPoly q(std::vector<Scalar>{alpha, Scalar(0), Scalar(1)});
    UPoly acc, qp(Scalar(1));
    for (int i = 0; i <= n; ++i) {
        if (!f.coeff(i).is_zero()) acc += (qp * f.coeff(i)) * UPoly::monomial(Scalar(1), n - i);
        qp = qp * q;
    }
    return acc;
}

}  // namespace kuwata
