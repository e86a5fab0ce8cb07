#pragma once

// Small prime fields F_p and their quadratic extensions F_p[s]/(s^2 - D), with dense polynomial
// helpers used by modular root finding and distinct-degree factorization.

#include "kuwata/scalar.hpp"

#include <cstdint>
#include <vector>

namespace kuwata::ff {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 powmod_u64(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * a % p);
        a = static_cast<u64>(static_cast<u128>(a) * a % p);
        e >>= 1;
    }
    return r;
}

inline u64 mod_int(const Int& v, u64 p) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

struct Fp {
    using E = u64;
    u64 p;
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(E a, E b) const {
        E s = a + b;
        return s >= p ? s - p : s;
    }
    E sub(E a, E b) const { return a >= b ? a - b : a + p - b; }
    E neg(E a) const { return a == 0 ? 0 : p - a; }
    E mul(E a, E b) const { return static_cast<E>(static_cast<u128>(a) * b % p); }
    E inv(E a) const { return powmod_u64(a, p - 2, p); }
    bool is_zero(E a) const { return a == 0; }
    E from_small(u64 k) const { return k % p; }
    // sequence of elements used for random-free splitting
    E shift_element(u64 k) const { return k % p; }
    u64 order() const { return p; }
};

struct Fp2 {
    struct E {
        u64 a = 0, b = 0;
        bool operator==(const E& o) const { return a == o.a && b == o.b; }
    };
    u64 p;
    u64 dn;  // D mod p, a non-residue
    E zero() const { return {}; }
    E one() const { return {1, 0}; }
    E add(E x, E y) const { return {fa(x.a, y.a), fa(x.b, y.b)}; }
    E sub(E x, E y) const { return {fs(x.a, y.a), fs(x.b, y.b)}; }
    E neg(E x) const { return {fs(0, x.a), fs(0, x.b)}; }
    E mul(E x, E y) const {
        u64 aa = fm(x.a, y.a), bb = fm(fm(x.b, y.b), dn);
        return {fa(aa, bb), fa(fm(x.a, y.b), fm(x.b, y.a))};
    }
    E inv(E x) const {
        u64 n = fs(fm(x.a, x.a), fm(dn, fm(x.b, x.b)));
        u64 ni = powmod_u64(n, p - 2, p);
        return {fm(x.a, ni), fm(fs(0, x.b), ni)};
    }
    bool is_zero(E x) const { return x.a == 0 && x.b == 0; }
    E from_small(u64 k) const { return {k % p, 0}; }
    E shift_element(u64 k) const { return {k % p, (k / p) % p}; }
    u64 order() const { return p * p; }

private:
    u64 fa(u64 x, u64 y) const {
        u64 s = x + y;
        return s >= p ? s - p : s;
    }
    u64 fs(u64 x, u64 y) const { return x >= y ? x - y : x + p - y; }
    u64 fm(u64 x, u64 y) const { return static_cast<u64>(static_cast<u128>(x) * y % p); }
};

template <class F>
using Poly = std::vector<typename F::E>;

template <class F>
void trim(const F& f, Poly<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, f.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(f, r);
    return r;
}

// Returns remainder; quotient written to q when non-null.
template <class F>
Poly<F> divrem(const F& f, Poly<F> a, const Poly<F>& b, Poly<F>* q = nullptr) {
    const size_t db = b.size() - 1;
    typename F::E inv = f.inv(b.back());
    if (q) q->assign(a.size() >= b.size() ? a.size() - db : 0, f.zero());
    while (a.size() >= b.size()) {
        typename F::E c = f.mul(a.back(), inv);
        size_t s = a.size() - b.size();
        if (q) (*q)[s] = c;
        for (size_t j = 0; j <= db; ++j) a[s + j] = f.sub(a[s + j], f.mul(c, b[j]));
        a.pop_back();
        trim(f, a);
    }
    return a;
}

template <class F>
Poly<F> monic(const F& f, Poly<F> a) {
    if (a.empty()) return a;
    typename F::E inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
    return a;
}

template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
    trim(f, a);
    trim(f, b);
    while (!b.empty()) {
        Poly<F> r = divrem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
    Poly<F> r;
    for (size_t i = 1; i < a.size(); ++i) {
        typename F::E k = f.from_small(i);
        r.push_back(f.mul(a[i], k));
    }
    trim(f, r);
    return r;
}

template <class F>
Poly<F> powmod(const F& f, Poly<F> base, u64 e, const Poly<F>& m) {
    Poly<F> result{f.one()};
    base = divrem(f, base, m);
    while (e) {
        if (e & 1) result = divrem(f, mul(f, result, base), m);
        e >>= 1;
        if (e) base = divrem(f, mul(f, base, base), m);
    }
    return result;
}

template <class F>
typename F::E eval(const F& f, const Poly<F>& a, typename F::E x) {
    typename F::E acc = f.zero();
    for (size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

// Roots of a squarefree polynomial g that splits into distinct linear factors.
template <class F>
void split_linear(const F& f, const Poly<F>& g, std::vector<typename F::E>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
        return;
    }
    const u64 half = (f.order() - 1) / 2;
    for (u64 k = 0;; ++k) {
        Poly<F> lin{f.shift_element(k), f.one()};
        Poly<F> h = powmod(f, lin, half, g);
        if (h.empty()) continue;
        h[0] = f.sub(h[0], f.one());
        trim(f, h);
        Poly<F> d = gcd(f, g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            Poly<F> q;
            divrem(f, g, d, &q);
            split_linear(f, d, out);
            split_linear(f, monic(f, q), out);
            return;
        }
        if (k > 4 * f.order() + 64) throw Error("modular root splitting failed");
    }
}

// All roots in the field of a squarefree polynomial a.
template <class F>
std::vector<typename F::E> roots(const F& f, const Poly<F>& a) {
    std::vector<typename F::E> out;
    if (a.size() <= 1) return out;
    Poly<F> m = monic(f, a);
    Poly<F> x{f.zero(), f.one()};
    Poly<F> xq = powmod(f, x, f.order(), m);
    // x^q - x
    if (xq.size() < 2) xq.resize(2, f.zero());
    xq[1] = f.sub(xq[1], f.one());
    trim(f, xq);
    Poly<F> g = gcd(f, m, xq);
    split_linear(f, g, out);
    return out;
}

}  // namespace kuwata::ff
