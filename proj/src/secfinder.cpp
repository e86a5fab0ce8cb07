#include "kuwata/secfinder.hpp"

#include "kuwata/resultant.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>

namespace kuwata {

const std::vector<std::string> kAnsatzVars = {"t", "p1", "b1", "b0", "c2", "c1", "c0"};

namespace {

enum : int { T = 0, P1 = 1, B1 = 2, B0 = 3, C2 = 4, C1 = 5, C0 = 6 };

MultiPoly var(int i) { return MultiPoly::variable(kAnsatzVars, kAnsatzVars[static_cast<size_t>(i)]); }
MultiPoly cst(const Scalar& c) { return MultiPoly::constant(kAnsatzVars, c); }

// Removes the largest power of variable v dividing f (used only where v != 0 is known).
MultiPoly strip_power(const MultiPoly& f, int v) {
    if (f.is_zero()) return f;
    Mono m{};
    m[static_cast<size_t>(v)] = f.monomial_content()[static_cast<size_t>(v)];
    return f.divide_mono(m);
}

MultiPoly tidy(const MultiPoly& f, int v) { return strip_power(f, v).rational_primitive_part(); }

// f with var v replaced by num/den, multiplied by den^deg_v(f).
MultiPoly subs_frac(const MultiPoly& f, int v, const MultiPoly& num, const MultiPoly& den) {
    auto cs = f.coeffs_in(v);
    if (cs.size() <= 1) return f;
    const int k = static_cast<int>(cs.size()) - 1;
    MultiPoly acc(kAnsatzVars), npow = cst(Scalar(1));
    std::vector<MultiPoly> dpow{cst(Scalar(1))};
    for (int j = 1; j <= k; ++j) dpow.push_back(dpow.back() * den);
    for (int j = 0; j <= k; ++j) {
        if (!cs[static_cast<size_t>(j)].is_zero()) acc += cs[static_cast<size_t>(j)] * npow * dpow[static_cast<size_t>(k - j)];
        npow = npow * num;
    }
    return acc;
}

// f linear in v: f = L v + R  ->  v = num / den with num = -R, den = L.
SolvedLinear solve_linear(const MultiPoly& f, int v) {
    auto cs = f.coeffs_in(v);
    if (cs.size() != 2) throw Error("expected an equation linear in " + kAnsatzVars[static_cast<size_t>(v)]);
    return {kAnsatzVars[static_cast<size_t>(v)], -cs[0], cs[1]};
}

MultiPoly subs_solved(const MultiPoly& f, int v, const SolvedLinear& s) { return subs_frac(f, v, s.num, s.den); }

Scalar eval_all(MultiPoly f, const std::vector<std::pair<int, Scalar>>& values) {
    for (auto& [v, x] : values) f = f.eval(v, x);
    if (!f.is_constant()) throw Error("evaluation left free variables: " + f.str());
    return f.is_zero() ? Scalar(0) : f.constant_value();
}

UPoly eval_to_upoly(MultiPoly f, const std::vector<std::pair<int, Scalar>>& values, int v) {
    for (auto& [w, x] : values) f = f.eval(w, x);
    return f.to_upoly(v);
}

UPoly gcd_all(const std::vector<UPoly>& fs) {
    UPoly g;
    for (auto& f : fs) g = gcd(g, f);
    return g;
}

int threads_from_env(int configured) {
    if (configured > 0) return configured;
    if (const char* s = std::getenv("KUWATA_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    return 1;
}

struct Collector {
    const WeierstrassSurface& S;
    std::map<std::string, SectionPt> by_x;

    // Builds and verifies the candidate; returns false when it fails verification.
    bool offer(const Scalar& b2, const Scalar& b1, const Scalar& b0, const Scalar& c3, const Scalar& c2,
               const Scalar& c1, const Scalar& c0) {
        UPoly x(std::vector<Scalar>{b0, b1, b2});
        UPoly y(std::vector<Scalar>{c0, c1, c2, c3});
        if (!section_residual(S, RatFunc(x), RatFunc(y)).is_zero()) return false;
        SectionPt P = canonical_sign(verify_section(S, RatFunc(x), RatFunc(y)));
        by_x.emplace(P.x.str(), P);
        return true;
    }
};

void record_roots(BranchReport& br, const UPoly& f, long d, const FinderConfig& cfg) {
    br.eliminant = f;
    RootReport rr = roots_in_field(f, d);
    for (auto& r : rr.roots) (r.root.is_rational() ? br.rational_roots : br.field_roots).push_back(r);
    br.cofactor = rr.cofactor;
    if (rr.cofactor.degree() < 1 || !rr.cofactor.is_rational()) return;
    UPoly sq = squarefree_part(rr.cofactor);
    for (std::uint64_t p : cfg.primes) {
        try {
            br.modular_patterns.push_back({p, modular_degree_pattern(sq, p)});
        } catch (const PreconditionError&) {
            br.notes.push_back("prime " + std::to_string(p) + " is bad for the cofactor; skipped");
        }
    }
}

std::vector<Scalar> roots_of(const UPoly& f, long d) {
    std::vector<Scalar> out;
    if (f.degree() < 1) return out;
    for (auto& r : roots_in_field(f, d).roots) out.push_back(r.root);
    return out;
}

void branch_p1_nonzero(const AnsatzState& st, long d, const FinderConfig& cfg, Collector& col, BranchReport& br) {
    const MultiPoly &F1 = st.residual[0], &F2 = st.residual[1], &F3 = st.residual[2];
    for (auto* f : {&F1, &F2, &F3})
        if (!f->involves(B0)) {
            br.status = "degenerate";
            br.notes.push_back("residual equation free of b0: " + f->str());
            return;
        }
    // Pairings tried in order; the first is res_b1(res_b0(F1, F3), res_b0(F2, F3)). A zero
    // resultant means a shared factor, and another pivot still gives a complete candidate set.
    const int pairings[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    const char* names[3] = {"F1", "F2", "F3"};
    MultiPoly G1, G2, R;
    for (auto& pr : pairings) {
        const MultiPoly &Fa = st.residual[static_cast<size_t>(pr[0])], &Fb = st.residual[static_cast<size_t>(pr[1])],
                        &Fp = st.residual[static_cast<size_t>(pr[2])];
        std::string tag = std::string("res_b1(res_b0(") + names[pr[0]] + ", " + names[pr[2]] + "), res_b0(" +
                          names[pr[1]] + ", " + names[pr[2]] + "))";
        if (threads_from_env(cfg.threads) > 1) {
            auto f1 = std::async(std::launch::async, [&] { return tidy(resultant(Fa, Fp, "b0"), P1); });
            G2 = tidy(resultant(Fb, Fp, "b0"), P1);
            G1 = f1.get();
        } else {
            G1 = tidy(resultant(Fa, Fp, "b0"), P1);
            G2 = tidy(resultant(Fb, Fp, "b0"), P1);
        }
        if (G1.is_zero() || G2.is_zero()) {
            br.notes.push_back(std::string("degenerate elimination; equations dependent: res_b0(") +
                               names[G1.is_zero() ? pr[0] : pr[1]] + ", " + names[pr[2]] + ") = 0");
            continue;
        }
        br.eliminant_var = "p1";
        br.predicted_degree = G1.degree_in(B1) * G2.degree_in(P1) + G2.degree_in(B1) * G1.degree_in(P1);
        if (br.predicted_degree > cfg.degree_budget) {
            br.status = "budget-exceeded";
            br.notes.push_back("predicted degree of R(p1) is " + std::to_string(br.predicted_degree) +
                               ", budget " + std::to_string(cfg.degree_budget));
            return;
        }
        R = G1.involves(B1) || G2.involves(B1) ? tidy(resultant(G1, G2, "b1"), P1) : MultiPoly(kAnsatzVars);
        if (R.is_zero()) {
            br.notes.push_back("degenerate elimination; equations dependent: " + tag + " = 0");
            continue;
        }
        br.notes.push_back("eliminant " + tag);
        break;
    }
    if (R.is_zero()) {
        br.status = "degenerate";
        return;
    }
    UPoly r = R.to_upoly(P1);
    record_roots(br, r, d, cfg);
    std::vector<Scalar> p1s;
    for (auto& x : br.rational_roots) p1s.push_back(x.root);
    for (auto& x : br.field_roots) p1s.push_back(x.root);
    for (const Scalar& p1 : p1s) {
        if (p1.is_zero()) continue;
        UPoly g = gcd(eval_to_upoly(G1, {{P1, p1}}, B1), eval_to_upoly(G2, {{P1, p1}}, B1));
        if (g.is_zero()) {
            br.notes.push_back("b1 undetermined at p1 = " + p1.str());
            continue;
        }
        for (const Scalar& b1 : roots_of(g, d)) {
            std::vector<UPoly> fs;
            for (auto* f : {&F1, &F2, &F3}) fs.push_back(eval_to_upoly(*f, {{P1, p1}, {B1, b1}}, B0));
            UPoly h = gcd_all(fs);
            if (h.is_zero()) {
                br.notes.push_back("b0 undetermined at (p1, b1) = (" + p1.str() + ", " + b1.str() + ")");
                continue;
            }
            for (const Scalar& b0 : roots_of(h, d)) {
                std::vector<std::pair<int, Scalar>> at = {{P1, p1}, {B1, b1}, {B0, b0}};
                Scalar c[3];
                for (int k = 0; k < 3; ++k)
                    c[k] = eval_all(st.solved[static_cast<size_t>(k)].num, at) /
                           eval_all(st.solved[static_cast<size_t>(k)].den, at);
                ++br.candidates;
                if (!col.offer(p1 * p1, b1, b0, p1.pow(3), c[0], c[1], c[2]))
                    br.notes.push_back("candidate failed verification at p1 = " + p1.str());
            }
        }
    }
}

// Equations of the p1 = 0 branch: coefficient of t^k, k = 0..4, in b1, b0, c2, c1, c0.
std::vector<MultiPoly> p1_zero_equations(const AnsatzState& st) {
    std::vector<MultiPoly> e;
    for (int k = 0; k <= 4; ++k) e.push_back(st.equations[static_cast<size_t>(k)].eval(P1, Scalar(0)));
    return e;
}

void branch_linear_b1(const AnsatzState& st, long d, const FinderConfig& cfg, Collector& col, BranchReport& br) {
    auto e = p1_zero_equations(st);
    // t^4: c2^2 - a3 b1 - b4 = 0;  t^3 linear in b0 with coefficient -a3
    SolvedLinear sb1 = solve_linear(e[4], B1);
    MultiPoly b1 = sb1.num * (Scalar(1) / sb1.den.constant_value());
    MultiPoly e3 = e[3].substitute(B1, b1);
    SolvedLinear sb0 = solve_linear(e3, B0);
    MultiPoly b0 = sb0.num * (Scalar(1) / sb0.den.constant_value());
    auto in_c = [&](const MultiPoly& f) { return f.substitute(B1, b1).substitute(B0, b0); };
    MultiPoly e2 = in_c(e[2]), e1 = in_c(e[1]), e0 = in_c(e[0]);

    // c2 != 0: c0 = -R / (2 c2) from t^2
    SolvedLinear sc0 = solve_linear(e2, C0);
    MultiPoly h1 = tidy(subs_solved(e1, C0, sc0), C2);
    MultiPoly h0 = tidy(subs_solved(e0, C0, sc0), C2);
    br.eliminant_var = "c2";
    MultiPoly res = h1.involves(C1) || h0.involves(C1) ? tidy(resultant(h1, h0, "c1"), C2) : MultiPoly(kAnsatzVars);
    if (res.is_zero()) {
        br.status = "degenerate";
        br.notes.push_back("degenerate elimination; equations dependent: res_c1 of the t^1, t^0 equations = 0");
    } else {
        record_roots(br, res.to_upoly(C2), d, cfg);
        std::vector<Scalar> c2s;
        for (auto& x : br.rational_roots) c2s.push_back(x.root);
        for (auto& x : br.field_roots) c2s.push_back(x.root);
        for (const Scalar& c2 : c2s) {
            if (c2.is_zero()) continue;
            UPoly g = gcd(eval_to_upoly(h1, {{C2, c2}}, C1), eval_to_upoly(h0, {{C2, c2}}, C1));
            if (g.is_zero()) {
                br.notes.push_back("c1 undetermined at c2 = " + c2.str());
                continue;
            }
            for (const Scalar& c1 : roots_of(g, d)) {
                std::vector<std::pair<int, Scalar>> at = {{C2, c2}, {C1, c1}};
                Scalar vb1 = eval_all(b1, at), vb0 = eval_all(b0, at);
                Scalar c0 = eval_all(sc0.num, at) / eval_all(sc0.den, at);
                ++br.candidates;
                if (!col.offer(Scalar(0), vb1, vb0, Scalar(0), c2, c1, c0))
                    br.notes.push_back("candidate failed verification at c2 = " + c2.str());
            }
        }
    }
    // c2 = 0: x is determined, y must be a square root of x^3 + A x + B of degree <= 1
    Scalar vb1 = eval_all(b1, {{C2, Scalar(0)}}), vb0 = eval_all(b0, {{C2, Scalar(0)}, {C1, Scalar(0)}});
    UPoly x(std::vector<Scalar>{vb0, vb1});
    if (auto y = poly_sqrt(x.pow(3) + col.S.A * x + col.S.B, d); y && y->degree() <= 1) {
        ++br.candidates;
        col.offer(Scalar(0), vb1, vb0, Scalar(0), Scalar(0), y->coeff(1), y->coeff(0));
    }
}

void branch_square_c2(const AnsatzState& st, long d, const FinderConfig& cfg, Collector& col, BranchReport& br) {
    auto e = p1_zero_equations(st);
    auto root = sqrt_in(st.beta[4], d);
    if (!root) {
        br.status = "skipped";
        br.notes.push_back("sqrt(" + st.beta[4].str() + ") is not in the active field; sub-case skipped");
        return;
    }
    const Scalar c2 = *root;
    auto fix = [&](const MultiPoly& f) { return f.eval(C2, c2); };
    // t^3 linear in c1, t^2 linear in c0, both with constant coefficient 2 c2
    SolvedLinear sc1 = solve_linear(fix(e[3]), C1);
    MultiPoly c1 = sc1.num * (Scalar(1) / sc1.den.constant_value());
    SolvedLinear sc0 = solve_linear(fix(e[2]).substitute(C1, c1), C0);
    MultiPoly c0 = sc0.num * (Scalar(1) / sc0.den.constant_value());
    MultiPoly e1 = fix(e[1]).substitute(C1, c1).substitute(C0, c0).rational_primitive_part();
    MultiPoly e0 = fix(e[0]).substitute(C1, c1).substitute(C0, c0).rational_primitive_part();
    br.eliminant_var = "b1";
    MultiPoly res = resultant(e1, e0, "b0").rational_primitive_part();
    if (res.is_zero()) {
        br.status = "degenerate";
        br.notes.push_back("degenerate elimination; equations dependent: res_b0 of the t^1, t^0 equations = 0");
        return;
    }
    record_roots(br, res.to_upoly(B1), d, cfg);
    std::vector<Scalar> b1s;
    for (auto& x : br.rational_roots) b1s.push_back(x.root);
    for (auto& x : br.field_roots) b1s.push_back(x.root);
    for (const Scalar& b1 : b1s) {
        UPoly g = gcd(eval_to_upoly(e1, {{B1, b1}}, B0), eval_to_upoly(e0, {{B1, b1}}, B0));
        if (g.is_zero()) {
            br.notes.push_back("b0 undetermined at b1 = " + b1.str());
            continue;
        }
        for (const Scalar& b0 : roots_of(g, d)) {
            std::vector<std::pair<int, Scalar>> at = {{B1, b1}, {B0, b0}};
            ++br.candidates;
            if (!col.offer(Scalar(0), b1, b0, Scalar(0), c2, eval_all(c1, at), eval_all(c0, at)))
                br.notes.push_back("candidate failed verification at b1 = " + b1.str());
        }
    }
}

void branch_zero_c2(const AnsatzState& st, long d, const FinderConfig& cfg, Collector& col, BranchReport& br) {
    auto e = p1_zero_equations(st);
    auto fix = [&](const MultiPoly& f) { return f.eval(C2, Scalar(0)); };
    // t^3: -(b1^3 + a2 b1 + b3) = 0
    br.eliminant_var = "b1";
    MultiPoly cubic = fix(e[3]);
    if (cubic.is_zero()) {
        br.status = "degenerate";
        br.notes.push_back("t^3 equation vanishes identically");
        return;
    }
    record_roots(br, cubic.to_upoly(B1), d, cfg);
    std::vector<Scalar> b1s;
    for (auto& x : br.rational_roots) b1s.push_back(x.root);
    for (auto& x : br.field_roots) b1s.push_back(x.root);
    for (const Scalar& b1 : b1s) {
        // t^2: c1^2 = M(b0), t^1: 2 c1 c0 = N(b0), t^0: c0^2 = Q(b0)
        MultiPoly e2 = fix(e[2]).eval(B1, b1), e1 = fix(e[1]).eval(B1, b1), e0 = fix(e[0]).eval(B1, b1);
        MultiPoly M = e2.coeffs_in(C1)[0] * Scalar(-1);
        MultiPoly N = e1.coeffs_in(C1)[0] * Scalar(-1);
        MultiPoly Q = e0.coeffs_in(C0)[0] * Scalar(-1);
        UPoly m = M.to_upoly(B0), n = N.to_upoly(B0), q = Q.to_upoly(B0);
        // c0 != 0: N^2 = 4 Q M
        UPoly w = n * n - Scalar(4) * q * m;
        if (w.is_zero()) {
            br.status = "degenerate";
            br.notes.push_back("degenerate elimination; equations dependent at b1 = " + b1.str() + ": N^2 - 4QM = 0");
        }
        for (const Scalar& b0 : roots_of(w, d)) {
            Scalar qv = q.eval(b0);
            if (qv.is_zero()) continue;
            auto c0 = sqrt_in(qv, d);
            if (!c0) {
                br.notes.push_back("c0 = sqrt(" + qv.str() + ") outside the active field at b0 = " + b0.str());
                continue;
            }
            ++br.candidates;
            col.offer(Scalar(0), b1, b0, Scalar(0), Scalar(0), n.eval(b0) / (Scalar(2) * *c0), *c0);
        }
        // c0 = 0: Q(b0) = N(b0) = 0, c1 = sqrt(M(b0))
        for (const Scalar& b0 : roots_of(gcd(q, n), d)) {
            auto c1 = sqrt_in(m.eval(b0), d);
            if (!c1) {
                br.notes.push_back("c1 = sqrt(" + m.eval(b0).str() + ") outside the active field at b0 = " + b0.str());
                continue;
            }
            ++br.candidates;
            col.offer(Scalar(0), b1, b0, Scalar(0), Scalar(0), *c1, Scalar(0));
        }
    }
}

Int coeff_height(const RatFunc& f) {
    Int h = 0;
    for (auto* p : {&f.num(), &f.den()})
        for (auto& c : p->coeffs()) h = std::max(h, c.height());
    return h;
}

}  // namespace

AnsatzState derive_coefficient_system(const WeierstrassSurface& S) {
    if (S.weight != 1 || S.A.degree() > 3 || S.B.degree() > 5)
        throw PreconditionError("ansatz inapplicable: needs deg A <= 3 and deg B <= 5 (weight 1, additive fiber at "
                                "infinity); got deg A = " +
                                std::to_string(S.A.degree()) + ", deg B = " + std::to_string(S.B.degree()) +
                                ", weight " + std::to_string(S.weight));
    AnsatzState st;
    for (int k = 0; k <= 3; ++k) st.alpha.push_back(S.A.coeff(k));
    for (int k = 0; k <= 5; ++k) st.beta.push_back(S.B.coeff(k));
    MultiPoly t = var(T), p1 = var(P1);
    MultiPoly x = p1.pow(2) * t.pow(2) + var(B1) * t + var(B0);
    MultiPoly y = p1.pow(3) * t.pow(3) + var(C2) * t.pow(2) + var(C1) * t + var(C0);
    MultiPoly E = y * y - x.pow(3) - MultiPoly::from_upoly(kAnsatzVars, T, S.A) * x -
                  MultiPoly::from_upoly(kAnsatzVars, T, S.B);
    st.equations = E.coeffs_in(T);
    st.equations.resize(7, MultiPoly(kAnsatzVars));
    if (!st.equations[6].is_zero()) throw Error("t^6 coefficient should vanish: " + st.equations[6].str());

    SolvedLinear c2 = solve_linear(st.equations[5], C2);
    MultiPoly e4 = tidy(subs_solved(st.equations[4], C2, c2), P1);
    SolvedLinear c1 = solve_linear(e4, C1);
    MultiPoly e3 = tidy(subs_solved(subs_solved(st.equations[3], C2, c2), C1, c1), P1);
    SolvedLinear c0 = solve_linear(e3, C0);
    st.solved = {c2, c1, c0};
    for (int k : {2, 1, 0}) {
        MultiPoly f = subs_solved(subs_solved(subs_solved(st.equations[static_cast<size_t>(k)], C2, c2), C1, c1), C0, c0);
        st.residual.push_back(tidy(f, P1));
    }
    return st;
}

SectionPt canonical_sign(const SectionPt& P) {
    if (P.zero || P.y.is_zero()) return P;
    return P.y.num().lc().canonical_sign() < 0 ? neg(P) : P;
}

bool section_less(const SectionPt& P, const SectionPt& Q) {
    if (P.zero != Q.zero) return P.zero;
    int dp = P.x.num().degree(), dq = Q.x.num().degree();
    if (dp != dq) return dp < dq;
    Int hp = coeff_height(P.x), hq = coeff_height(Q.x);
    if (hp != hq) return hp < hq;
    const auto &a = P.x.num().coeffs(), &b = Q.x.num().coeffs();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return less_canonical(a[i], b[i]);
    return false;
}

EliminationReport find_sections(const WeierstrassSurface& S, const FinderConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    AnsatzState st = derive_coefficient_system(S);
    EliminationReport rep;
    Collector col{S, {}};
    const long d = S.field_d;

    BranchReport nz;
    nz.branch = "p1!=0";
    branch_p1_nonzero(st, d, cfg, col, nz);
    rep.budget_exceeded = nz.status == "budget-exceeded";
    rep.branches.push_back(nz);

    BranchReport z;
    if (!st.beta[5].is_zero()) {
        z.branch = "p1=0";
        z.status = "not-applicable";
        z.notes.push_back("t^5 coefficient -b5 is nonzero: no sections with p1 = 0");
    } else if (!st.alpha[3].is_zero()) {
        z.branch = "p1=0/linear-b1";
        branch_linear_b1(st, d, cfg, col, z);
    } else if (!st.beta[4].is_zero()) {
        z.branch = "p1=0/square-c2";
        branch_square_c2(st, d, cfg, col, z);
    } else {
        z.branch = "p1=0/zero-c2";
        branch_zero_c2(st, d, cfg, col, z);
    }
    rep.branches.push_back(z);

    for (auto& [k, P] : col.by_x) rep.sections.push_back(P);
    std::sort(rep.sections.begin(), rep.sections.end(), section_less);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<SectionPt> brute_force_sections(const WeierstrassSurface& S, int num_bound, int den_bound) {
    std::vector<Rat> vals{Rat(0)};
    for (int den = 1; den <= den_bound; ++den)
        for (int num = 1; num <= num_bound; ++num) {
            Rat q(num, den);
            q.canonicalize();
            if (q.get_num() == num && q.get_den() == den) {
                vals.push_back(q);
                vals.push_back(-q);
            }
        }
    std::map<std::string, SectionPt> found;
    for (const Rat& p1 : vals)
        for (const Rat& b1 : vals)
            for (const Rat& b0 : vals) {
                UPoly x(std::vector<Scalar>{Scalar(b0), Scalar(b1), Scalar(p1 * p1)});
                auto y = poly_sqrt(x.pow(3) + S.A * x + S.B, S.field_d);
                if (!y || y->degree() > 3) continue;
                SectionPt P = canonical_sign(verify_section(S, RatFunc(x), RatFunc(*y)));
                found.emplace(P.x.str(), P);
            }
    std::vector<SectionPt> out;
    for (auto& [k, P] : found) out.push_back(P);
    std::sort(out.begin(), out.end(), section_less);
    return out;
}

}  // namespace kuwata
