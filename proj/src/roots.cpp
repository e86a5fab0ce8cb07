#include "kuwata/roots.hpp"

#include "ffield.hpp"

#include <algorithm>
#include <map>

namespace kuwata {

using ff::u64;

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        if (n % q == 0) return n == q;
    Int z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<Int> integer_primitive(const UPoly& f) {
    if (!f.is_rational()) throw ContextError("integer_primitive needs rational coefficients");
    Int den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den().get_mpz_t());
    std::vector<Int> v;
    Int g = 0;
    for (const auto& c : f.coeffs()) {
        Rat q = c.a() * den;
        v.push_back(q.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

namespace {

template <class F>
ff::Poly<F> reduce(const F& fld, const std::vector<Int>& coeffs, u64 p) {
    ff::Poly<F> r;
    for (const auto& c : coeffs) r.push_back(fld.from_small(ff::mod_int(c, p)));
    ff::trim(fld, r);
    return r;
}

// Element of (Z/M)[sqrt D]; D = 0 means plain Z/M.
struct Lift {
    Int a, b;
};

struct LiftRing {
    Int M;
    Int D;
    Lift norm(Lift x) const {
        mpz_mod(x.a.get_mpz_t(), x.a.get_mpz_t(), M.get_mpz_t());
        mpz_mod(x.b.get_mpz_t(), x.b.get_mpz_t(), M.get_mpz_t());
        return x;
    }
    Lift mul(const Lift& x, const Lift& y) const { return norm({x.a * y.a + D * x.b * y.b, x.a * y.b + x.b * y.a}); }
    Lift add(const Lift& x, const Lift& y) const { return norm({x.a + y.a, x.b + y.b}); }
    Lift sub(const Lift& x, const Lift& y) const { return norm({x.a - y.a, x.b - y.b}); }
    Lift inv(const Lift& x) const {
        Int n = x.a * x.a - D * x.b * x.b, ni;
        mpz_mod(n.get_mpz_t(), n.get_mpz_t(), M.get_mpz_t());
        if (!mpz_invert(ni.get_mpz_t(), n.get_mpz_t(), M.get_mpz_t())) throw Error("non-unit during Hensel lifting");
        return norm({x.a * ni, -x.b * ni});
    }
    Lift eval(const std::vector<Int>& f, const Lift& x) const {
        Lift acc{0, 0};
        for (size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x), Lift{f[i], 0});
        return acc;
    }
};

Int symmetric(const Int& v, const Int& M) {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    if (r * 2 > M) r -= M;
    return r;
}

std::vector<Int> derivative_int(const std::vector<Int>& f) {
    std::vector<Int> r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned long>(i));
    return r;
}

template <class F>
bool good_prime(const F& fld, const std::vector<Int>& f, u64 p) {
    if (ff::mod_int(f.back(), p) == 0) return false;
    auto fp = reduce(fld, f, p);
    auto g = ff::gcd(fld, fp, ff::derivative(fld, fp));
    return g.size() == 1;
}

// Candidate roots in Q(sqrt d) of a squarefree integer polynomial, verified exactly.
std::vector<Scalar> squarefree_roots(const std::vector<Int>& f, long d) {
    std::vector<Scalar> out;
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return out;
    if (n == 1) {
        Rat q(-f[0], f[1]);
        q.canonicalize();
        out.emplace_back(q);
        return out;
    }
    // bound on |A|, |B| where 2*lc*root = A + B sqrt d (or lc*root = A when d = 0)
    Int maxc = 0;
    for (const auto& c : f)
        if (abs(c) > maxc) maxc = abs(c);
    Int N = 2 * (abs(f.back()) + maxc) + 1;
    Int target = 2 * N;

    std::vector<std::pair<Int, Int>> residues;  // roots mod p as (a, b)
    u64 p = 1009;
    for (;; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (d != 0) {
            if (std::labs(d) > 1 && p % static_cast<u64>(std::labs(d)) == 0) continue;
            u64 dn = ff::mod_int(Int(d), p);
            if (ff::powmod_u64(dn, (p - 1) / 2, p) != p - 1) continue;  // need an inert prime
            ff::Fp2 fld{p, dn};
            if (!good_prime(fld, f, p)) continue;
            for (auto r : ff::roots(fld, reduce(fld, f, p))) residues.emplace_back(Int(static_cast<unsigned long>(r.a)), Int(static_cast<unsigned long>(r.b)));
        } else {
            ff::Fp fld{p};
            if (!good_prime(fld, f, p)) continue;
            for (auto r : ff::roots(fld, reduce(fld, f, p))) residues.emplace_back(Int(static_cast<unsigned long>(r)), Int(0));
        }
        break;
    }
    auto df = derivative_int(f);
    UPoly fs;
    {
        std::vector<Scalar> cs;
        for (const auto& c : f) cs.emplace_back(c);
        fs = UPoly(std::move(cs));
    }
    const Int P(static_cast<unsigned long>(p));
    for (const auto& [ra, rb] : residues) {
        LiftRing ring{P, Int(d)};
        Lift th{ra, rb};
        while (ring.M <= target) {
            LiftRing next{ring.M * ring.M, Int(d)};
            Lift fv = next.eval(f, th);
            Lift dv = next.eval(df, th);
            th = next.sub(th, next.mul(fv, next.inv(dv)));
            ring = next;
        }
        Int scale = d == 0 ? f.back() : 2 * f.back();
        Lift X = ring.mul(th, Lift{scale, 0});
        Int A = symmetric(X.a, ring.M), B = symmetric(X.b, ring.M);
        Rat qa(A, scale), qb(B, scale);
        qa.canonicalize();
        qb.canonicalize();
        Scalar cand = d == 0 ? Scalar(qa) : Scalar(qa, qb, d);
        if (fs.eval(cand).is_zero()) out.push_back(cand);
    }
    return out;
}

void sort_roots(std::vector<RootMult>& r) {
    std::sort(r.begin(), r.end(), [](const RootMult& x, const RootMult& y) {
        if (x.root.height() != y.root.height()) return x.root.height() < y.root.height();
        return less_canonical(x.root, y.root);
    });
}

UPoly strip_roots(const UPoly& f, const std::vector<RootMult>& roots) {
    UPoly c = f;
    for (const auto& r : roots) {
        UPoly lin(std::vector<Scalar>{-r.root, Scalar(1)});
        for (int i = 0; i < r.multiplicity; ++i) c = exact_div(c, lin);
    }
    return c;
}

}  // namespace

RootReport roots_in_field(const UPoly& f, long d) {
    if (f.is_zero()) throw PreconditionError("roots of the zero polynomial");
    if (d != 0 && !is_squarefree(d)) throw ContextError("quadratic context D must be squarefree");
    long fc = f.context();
    if (fc != 0 && fc != d) throw ContextError("polynomial lives in a different quadratic context");
    RootReport rep;
    for (auto& [g, m] : squarefree_decomposition(f)) {
        UPoly searched = g.is_rational() ? g : squarefree_part(g.norm());
        for (const auto& r : squarefree_roots(integer_primitive(searched), d))
            if (g.eval(r).is_zero()) rep.roots.push_back({r, m});
    }
    sort_roots(rep.roots);
    rep.cofactor = strip_roots(f, rep.roots);
    return rep;
}

RootReport rational_roots(const UPoly& f) {
    if (!f.is_rational()) throw ContextError("rational_roots needs rational coefficients");
    return roots_in_field(f, 0);
}

namespace {

// Prime factorization by trial division; false when a cofactor above the bound remains.
bool trial_factor(Int n, std::map<Int, int>& out, unsigned long bound = 1000000) {
    n = abs(n);
    for (unsigned long q = 2; q <= bound && n > 1; q += (q == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            ++out[Int(q)];
            n /= q;
        }
        if (Int(q) * q > n) break;
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            ++out[n];
            return true;
        }
        return false;
    }
    return true;
}

bool divisors(const Int& n, std::size_t cap, std::vector<Int>& out) {
    std::map<Int, int> fac;
    if (!trial_factor(n, fac)) return false;
    out = {Int(1)};
    for (const auto& [q, e] : fac) {
        size_t base = out.size();
        Int pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pw);
                if (out.size() > cap) return false;
            }
        }
    }
    return true;
}

}  // namespace

DivisorRootReport rational_roots_by_divisors(const UPoly& f, std::size_t divisor_cap) {
    if (!f.is_rational()) throw ContextError("rational roots need rational coefficients");
    if (f.is_zero()) throw PreconditionError("roots of the zero polynomial");
    DivisorRootReport rep;
    for (auto& [g, m] : squarefree_decomposition(f)) {
        int z = g.low_degree();
        if (z > 0) rep.roots.push_back({Scalar(0), m});
        auto ip = integer_primitive(g.shift_down(z));
        if (ip.size() < 2) continue;
        std::vector<Int> dn, dd;
        if (!divisors(ip.front(), divisor_cap, dn) || !divisors(ip.back(), divisor_cap, dd) ||
            dn.size() * dd.size() > divisor_cap) {
            rep.overflow = true;
            continue;
        }
        std::vector<Scalar> found;
        for (const auto& a : dn)
            for (const auto& b : dd)
                for (int s : {1, -1}) {
                    Rat q(a * s, b);
                    q.canonicalize();
                    Scalar c(q);
                    if (std::find(found.begin(), found.end(), c) != found.end()) continue;
                    if (g.eval(c).is_zero()) found.push_back(c);
                }
        for (auto& c : found) rep.roots.push_back({c, m});
    }
    sort_roots(rep.roots);
    rep.cofactor = strip_roots(f, rep.roots);
    return rep;
}

std::vector<int> modular_degree_pattern(const UPoly& f, u64 p) {
    if (!is_prime_u64(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
    auto ip = integer_primitive(f);
    if (ip.size() < 2) return {};
    ff::Fp fld{p};
    if (ff::mod_int(ip.back(), p) == 0) throw PreconditionError("bad prime " + std::to_string(p) + ": divides the leading coefficient");
    auto g = reduce(fld, ip, p);
    if (ff::gcd(fld, g, ff::derivative(fld, g)).size() != 1)
        throw PreconditionError("bad prime " + std::to_string(p) + ": divides the discriminant");
    std::vector<int> pattern;
    g = ff::monic(fld, g);
    ff::Poly<ff::Fp> x{0, 1};
    ff::Poly<ff::Fp> h = x;
    for (int d = 1; static_cast<int>(g.size()) - 1 >= 2 * d; ++d) {
        h = ff::powmod(fld, h, p, g);
        auto hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = fld.sub(hx[1], 1);
        ff::trim(fld, hx);
        auto c = ff::gcd(fld, g, hx);
        int dc = static_cast<int>(c.size()) - 1;
        if (dc > 0) {
            for (int k = 0; k < dc / d; ++k) pattern.push_back(d);
            ff::Poly<ff::Fp> q;
            ff::divrem(fld, g, c, &q);
            g = ff::monic(fld, q);
            h = ff::divrem(fld, h, g);
        }
    }
    if (g.size() > 1) pattern.push_back(static_cast<int>(g.size()) - 1);
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

}  // namespace kuwata
