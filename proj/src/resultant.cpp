#include "kuwata/resultant.hpp"

#include <utility>

namespace kuwata {

namespace {

Scalar ring_div(const Scalar& a, const Scalar& b) { return a / b; }
MultiPoly ring_div(const MultiPoly& a, const MultiPoly& b) { return exact_div(a, b); }
bool ring_zero(const Scalar& a) { return a.is_zero(); }
bool ring_zero(const MultiPoly& a) { return a.is_zero(); }

template <class C>
void trim(std::vector<C>& p) {
    while (!p.empty() && ring_zero(p.back())) p.pop_back();
}

template <class C>
int deg(const std::vector<C>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class C>
C ring_pow(const C& x, int e, const C& one) {
    C r = one, b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

// lc(B)^(deg A - deg B + 1) * A mod B
template <class C>
std::vector<C> prem(const std::vector<C>& A, const std::vector<C>& B) {
    std::vector<C> R = A;
    const int dB = deg(B);
    const C& lb = B.back();
    int e = deg(A) - dB + 1;
    while (!R.empty() && deg(R) >= dB) {
        C lr = R.back();
        int s = deg(R) - dB;
        for (auto& c : R) c = c * lb;
        for (int j = 0; j <= dB; ++j) R[static_cast<size_t>(s + j)] = R[static_cast<size_t>(s + j)] - lr * B[static_cast<size_t>(j)];
        R.pop_back();
        trim(R);
        --e;
    }
    if (e > 0 && !R.empty()) {
        C f = lb;
        for (int i = 1; i < e; ++i) f = f * lb;
        for (auto& c : R) c = c * f;
    }
    return R;
}

template <class C>
C subresultant(std::vector<C> A, std::vector<C> B, const C& one, const C& zero) {
    trim(A);
    trim(B);
    if (A.empty() || B.empty()) return zero;
    int dA = deg(A), dB = deg(B);
    if (dB == 0) return ring_pow(B[0], dA, one);
    if (dA == 0) return ring_pow(A[0], dB, one);
    bool negate = false;
    if (dA < dB) {
        std::swap(A, B);
        std::swap(dA, dB);
        if ((dA % 2) && (dB % 2)) negate = true;
    }
    C g = one, h = one;
    while (true) {
        int delta = deg(A) - deg(B);
        if ((deg(A) % 2) && (deg(B) % 2)) negate = !negate;
        std::vector<C> R = prem(A, B);
        A = std::move(B);
        if (R.empty()) return zero;
        C div = g * ring_pow(h, delta, one);
        for (auto& c : R) c = ring_div(c, div);
        B = std::move(R);
        g = A.back();
        if (delta > 0) h = ring_div(ring_pow(g, delta, one), ring_pow(h, delta - 1, one));
        if (deg(B) <= 0) break;
    }
    int da = deg(A);
    C res = ring_div(ring_pow(B[0], da, one), ring_pow(h, da - 1, one));
    if (da == 0) res = one;
    return negate ? zero - res : res;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    const auto& vars = f.vars().empty() ? g.vars() : f.vars();
    MultiPoly probe(vars);
    int v = probe.var_index(var);
    if (!f.involves(v) && !g.involves(v)) throw PreconditionError("resultant variable '" + var + "' absent from both inputs");
    return subresultant(f.coeffs_in(v), g.coeffs_in(v), MultiPoly::constant(vars, Scalar(1)), MultiPoly(vars));
}

Scalar resultant(const UPoly& f, const UPoly& g) {
    return subresultant(f.coeffs(), g.coeffs(), Scalar(1), Scalar(0));
}

std::vector<std::vector<Scalar>> sylvester_matrix(const UPoly& f, const UPoly& g) {
    const int m = f.degree(), n = g.degree();
    const int N = m + n;
    std::vector<std::vector<Scalar>> S(static_cast<size_t>(N), std::vector<Scalar>(static_cast<size_t>(N)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = g.coeff(n - j);
    return S;
}

RankDet exact_rank_det(const std::vector<std::vector<Scalar>>& input) {
    RankDet out;
    const size_t n = input.size();
    for (const auto& row : input)
        if (row.size() != n) throw PreconditionError("exact_rank_det needs a square matrix");
    if (n == 0) {
        out.det = Scalar(1);
        return out;
    }
    auto M = input;
    Scalar prev(1);
    bool swapped_odd = false;
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t p = r;
        while (p < n && M[p][c].is_zero()) ++p;
        if (p == n) continue;
        if (p != r) {
            std::swap(M[p], M[r]);
            swapped_odd = !swapped_odd;
        }
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) / prev;
            M[i][c] = Scalar(0);
        }
        prev = M[r][c];
        ++r;
    }
    out.rank = static_cast<int>(r);
    if (r < n) {
        out.det = Scalar(0);
    } else {
        out.det = swapped_odd ? -M[n - 1][n - 1] : M[n - 1][n - 1];
    }
    return out;
}

}  // namespace kuwata
