#include "kuwata/kuwata.hpp"

#include "kuwata/roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kuwata {

namespace {

Scalar third(const Scalar& x) { return x / Scalar(3); }

RatFunc tvar() { return RatFunc(UPoly::var()); }

long join_field(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw ContextError("two different quadratic fields: " + std::to_string(d1) + ", " + std::to_string(d2));
}

Scalar require_sqrt(const Scalar& v, long d, const std::string& what) {
    auto r = sqrt_in(v, d);
    if (!r) throw SectionError("no square root of " + what + " = " + v.str() + (d ? " in Q(sqrt(" + std::to_string(d) + "))" : " in Q"));
    return *r;
}

// One-dimensional kernel of a full-rank r x (r+1) matrix by Gauss-Jordan elimination.
std::vector<Scalar> kernel_vector(std::vector<std::vector<Scalar>> m) {
    const size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Scalar inv = m[r][c].inverse();
        for (auto& v : m[r]) v *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    if (pivot_col.size() + 1 != cols) throw Error("the three-point system does not have a one-dimensional kernel");
    size_t free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free_col] = Scalar(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_col];
    return v;
}

MultiPoly linear_form(const std::array<Scalar, 4>& c) {
    MultiPoly f(kCubicVars);
    for (int i = 0; i < 4; ++i)
        if (!c[i].is_zero()) f += MultiPoly::variable(kCubicVars, kCubicVars[i]) * c[i];
    return f;
}

MultiPoly cvar(int i) { return MultiPoly::variable(kCubicVars, kCubicVars[i]); }

}  // namespace

// ---------------------------------------------------------------- curves

Depressed legendre_to_depressed(const Scalar& lambda, const Scalar& mu) {
    if ((lambda * mu * (lambda - mu)).is_zero()) throw PreconditionError("degenerate Legendre roots: lambda mu (lambda - mu) = 0");
    Depressed r;
    r.a = third(lambda * mu - lambda * lambda - mu * mu);
    r.b = (Scalar(3) * lambda * mu * (lambda + mu) - Scalar(2) * (lambda.pow(3) + mu.pow(3))) / Scalar(27);
    r.delta = Scalar(-16) * (Scalar(4) * r.a.pow(3) + Scalar(27) * r.b.pow(2));
    Scalar other = Scalar(16) * (lambda * mu * (lambda - mu)).pow(2);
    if (r.delta != other) throw Error("discriminant identity failed for the Legendre conversion");
    return r;
}

CurveSpec CurveSpec::from_depressed(const Scalar& a, const Scalar& b) {
    CurveSpec c;
    c.a = a;
    c.b = b;
    if (c.delta().is_zero()) throw PreconditionError("singular curve: 4a^3 + 27b^2 = 0");
    return c;
}

CurveSpec CurveSpec::from_legendre(const Scalar& lambda, const Scalar& mu) {
    Depressed d = legendre_to_depressed(lambda, mu);
    CurveSpec c;
    c.a = d.a;
    c.b = d.b;
    c.legendre = std::array<Scalar, 2>{lambda, mu};
    return c;
}

Scalar CurveSpec::delta() const { return Scalar(-16) * (Scalar(4) * a.pow(3) + Scalar(27) * b.pow(2)); }

Scalar CurveSpec::j() const {
    Scalar a3 = Scalar(4) * a.pow(3);
    return Scalar(1728) * a3 / (a3 + Scalar(27) * b.pow(2));
}

KuwataFamily KuwataFamily::make(const CurveSpec& E, const CurveSpec& F, int h, long field_d) {
    if (h < 0 || h > 2) throw PreconditionError("h must be 0, 1 or 2");
    if (E.delta().is_zero() || F.delta().is_zero()) throw PreconditionError("singular curve");
    if (E.j() == F.j()) throw PreconditionError("j(E) = j(F) = " + E.j().str());
    KuwataFamily f;
    f.E = E;
    f.F = F;
    f.h = h;
    f.field_d = field_d;
    return f;
}

KuwataFamily KuwataFamily::from_legendre(const Scalar& lambda, const Scalar& mu, const Scalar& nu, const Scalar& xi,
                                         int h, long field_d) {
    return make(CurveSpec::from_legendre(lambda, mu), CurveSpec::from_legendre(nu, xi), h, field_d);
}

std::array<Scalar, 4> KuwataFamily::legendre() const {
    if (!has_legendre()) throw PreconditionError("this construction needs Legendre data (lambda, mu, nu, xi)");
    return {(*E.legendre)[0], (*E.legendre)[1], (*F.legendre)[0], (*F.legendre)[1]};
}

RatFunc KuwataFamily::B() const {
    RatFunc t = tvar();
    return RatFunc(F.delta()) * t + RatFunc(Scalar(864) * E.b * F.b) + RatFunc(E.delta()) / t;
}

Scalar KuwataFamily::ratio() const { return E.delta() / F.delta(); }

// ---------------------------------------------------------------- surfaces

WeierstrassSurface build_pi(const KuwataFamily& fam, int i) {
    if (i < 1) throw PreconditionError("pi_i needs i >= 1");
    RatFunc A(Scalar(-48) * fam.E.a * fam.F.a);
    WeierstrassSurface S = normalize_model(A, fam.B().subs_pow(i), fam.field_d);
    if (i <= 6 && euler_characteristic(S) != 2)
        throw Error("pi_" + std::to_string(i) + " should be K3 but chi = " + std::to_string(euler_characteristic(S)));
    return S;
}

WeierstrassSurface build_twist(const KuwataFamily& fam, int i) {
    if (i < 1 || i > 3) throw PreconditionError("twists are built for i in {1, 2, 3}");
    return quadratic_twist_0_infty(build_pi(fam, i)).surface;
}

// ---------------------------------------------------------------- deflation

Deflation deflate(const KuwataFamily& fam, int i, int root_choice) {
    if (i != 3 && i != 5) throw PreconditionError("deflation is defined for i in {3, 5}");
    Scalar ratio = fam.ratio();
    if (!ratio.is_rational()) throw PreconditionError("needs extension: Delta(E)/Delta(F) is not rational");
    auto root = perfect_power(ratio.rational(), static_cast<unsigned>(i));
    if (!root)
        throw PreconditionError("needs extension: Delta(E)/Delta(F) = " + ratio.str() + " is not a " +
                                std::to_string(i) + "-th power in Q");
    Deflation D;
    D.k = i;
    D.alpha = Scalar(*root);
    long d = fam.field_d;
    if (root_choice % i != 0) {
        if (i != 3) throw PreconditionError("fifth roots of unity are outside a quadratic field");
        d = join_field(d, -3);
        D.alpha = D.alpha * omega().pow(static_cast<unsigned>(((root_choice % 3) + 3) % 3));
    }
    KuwataFamily f = fam;
    f.field_d = d;

    const Scalar& al = D.alpha;
    UPoly s = UPoly::var();
    if (i == 3)
        D.deflation_poly = s.pow(3) - Scalar(3) * al * s;
    else
        D.deflation_poly = s.pow(5) - Scalar(5) * al * s.pow(3) + Scalar(5) * al * al * s;

    Scalar c864 = Scalar(864) * fam.E.b * fam.F.b;
    UPoly Bpsi = Scalar(-1) * fam.F.delta() * D.deflation_poly + UPoly(c864);
    D.psi = make_surface(UPoly(Scalar(-48) * fam.E.a * fam.F.a), Bpsi, d);
    D.pi = build_pi(f, i);

    RatFunc target = f.B().subs_pow(i);
    int chosen = 0;
    for (int sign : {1, -1}) {
        UPoly num = subs_t_plus_alpha_over_t(Bpsi.scale_var(Scalar(sign)), al);
        RatFunc got(num, UPoly::monomial(Scalar(1), Bpsi.degree()));
        std::ostringstream w;
        w << "s = " << (sign < 0 ? "-" : "") << "(t + " << al.str() << "/t): B_psi(s) "
          << (got == target ? "==" : "!=") << " Delta(F) t^" << i << " + 864bd + Delta(E)/t^" << i;
        D.witness.push_back(w.str());
        if (got == target && chosen == 0) chosen = sign;
    }
    if (chosen == 0) throw Error("substitution identity failed for both signs");
    D.sign = chosen;
    return D;
}

SectionPt pullback_section(const Deflation& defl, const SectionPt& P) {
    if (P.zero) return P;
    RatFunc st(Scalar(defl.sign) * (UPoly::var().pow(2) + UPoly(defl.alpha)), UPoly::var());
    RatFunc c = defl.pi.coord_scale;
    RatFunc x = c.pow(2) * P.x.compose(st);
    RatFunc y = c.pow(3) * P.y.compose(st);
    return verify_section(defl.pi, x, y);
}

// ---------------------------------------------------------------- rank tables

RankValue expected_ranks(int i, int h) {
    if (h < 0 || h > 2) throw PreconditionError("h must be 0, 1 or 2");
    static const int base[] = {0, 4, 8, 12, 16, 16};
    if (i >= 1 && i <= 6) return {base[i - 1] + h, false};
    if (i == 60) return {40 + h, true};
    throw PreconditionError("rank table covers i in 1..6 and i = 60");
}

int q_rank_bound(int i) {
    static const int bound[] = {1, 5, 7, 9, 5, 11};
    if (i < 1 || i > 6) throw PreconditionError("Q-rank bound covers i in 1..6");
    return bound[i - 1];
}

// ---------------------------------------------------------------- CorQ

CorqReport corq_params(const Rat& rho, const Rat& tau, const Rat& u) {
    for (const Rat* v : {&rho, &tau})
        if (*v == 0 || *v == 1 || *v == -1) throw PreconditionError("rho and tau must avoid 0, 1, -1");
    if (u == 0) throw PreconditionError("u must be nonzero");
    CorqReport r;
    r.rho = rho;
    r.tau = tau;
    r.u = u;
    Rat t2 = tau * tau, r2 = rho * rho;
    // only the product l2 n2 is fixed; n2 = 1 is a scaling choice
    r.n2 = 1;
    r.l2 = u * u * (rho - 1) * (t2 - 1) / (4 * (rho + 1) * t2);
    r.k = r.n2 * (t2 + 1) / (t2 - 1);
    r.n = r.n2 * 2 * tau / (t2 - 1);
    r.m = r.l2 * (r2 + 1) / (r2 - 1);
    r.l = r.l2 * 2 * rho / (r2 - 1);
    r.lambda = r.l * r.l;
    r.mu = r.m * r.m;
    r.nu = r.n * r.n;
    r.xi = r.k * r.k;
    r.legendre_E = r.lambda / r.mu;
    r.legendre_F = r.nu / r.xi;

    auto add = [&](const std::string& label, const Rat& v) {
        SquareCheck c{label, Scalar(v), std::nullopt};
        if (v != 0) {
            if (auto q = perfect_power(v, 2)) c.root = Scalar(abs(*q));
        }
        if (!c.root) r.problems.push_back(label + " = " + rat_str(v) + " is not a nonzero square");
        r.squares.push_back(c);
    };
    add("2(k+n2)(m+l)", 2 * (r.k + r.n2) * (r.m + r.l));
    add("2(k+n2)(m-l)", 2 * (r.k + r.n2) * (r.m - r.l));
    add("2(m+l2)(k+n)", 2 * (r.m + r.l2) * (r.k + r.n));
    add("2(m+l2)(k-n)", 2 * (r.m + r.l2) * (r.k - r.n));

    if (rho == tau) r.problems.push_back("rho = tau: equal Legendre parameters");
    bool degenerate = false;
    try {
        CurveSpec E = CurveSpec::from_legendre(Scalar(r.lambda), Scalar(r.mu));
        CurveSpec F = CurveSpec::from_legendre(Scalar(r.nu), Scalar(r.xi));
        r.j_distinct = E.j() != F.j();
        if (!r.j_distinct) r.problems.push_back("j(E) = j(F) = " + E.j().str());
    } catch (const PreconditionError& e) {
        degenerate = true;
        r.problems.push_back(e.what());
    }
    r.valid = !degenerate && r.j_distinct && r.problems.empty();
    return r;
}

std::optional<CorqReport> corq_search(int bound) {
    for (int rho = 2; rho <= bound; ++rho)
        for (int tau = 2; tau <= bound; ++tau)
            for (int u = 1; u <= bound; ++u) {
                CorqReport r = corq_params(Rat(rho), Rat(tau), Rat(u));
                if (r.valid) return r;
            }
    return std::nullopt;
}

// ---------------------------------------------------------------- points on the twist of pi_2

WeierstrassSurface pi2prime_surface(const KuwataFamily& fam, bool primed) {
    KuwataFamily f = fam;
    if (primed) f.field_d = join_field(fam.field_d, -1);
    return build_twist(f, 2);
}

namespace {

// x = c_{-1}/t + c_0 + c_1 t in the coordinates where the twist reads t y^2 = ...; on the
// minimal model of the twist the x-coordinate is t times that (or its t -> 1/t image).
std::optional<SectionPt> p_point_try(const WeierstrassSurface& S, const std::array<Scalar, 4>& p,
                                     const std::array<Scalar, 4>& r, bool invert, std::string* why) {
    const Scalar &lam = p[0], &mu = p[1], &nu = p[2], &xi = p[3];
    Scalar sl = r[0] + r[1], sx = r[2] + r[3];
    if (sl.is_zero() || sx.is_zero()) {
        if (why) *why = "vanishing denominator in the point formula";
        return std::nullopt;
    }
    Scalar cm = Scalar(2) * sl * lam * mu / sx;
    Scalar c0 = Scalar(-4) / Scalar(3) * (Scalar(2) * xi - nu) * (lam + mu) + Scalar(4) * r[0] * r[1] * r[2] * r[3];
    Scalar c1 = Scalar(2) * sx * xi * (xi - nu) / sl;
    UPoly x = invert ? UPoly(std::vector<Scalar>{c1, c0, cm}) : UPoly(std::vector<Scalar>{cm, c0, c1});
    UPoly rhs = x.pow(3) + S.A * x + S.B;
    auto y = poly_sqrt(rhs, S.field_d);
    if (!y) {
        if (why) *why = "x^3 + A x + B is not a square for x = " + x.str();
        return std::nullopt;
    }
    return verify_section(S, RatFunc(x), RatFunc(*y));
}

SectionPt p_point(const WeierstrassSurface& S, const std::array<Scalar, 4>& p, const std::array<Scalar, 4>& r,
                  bool invert) {
    std::string why;
    auto P = p_point_try(S, p, r, invert, &why);
    if (!P) throw SectionError(why);
    return *P;
}

struct PointParams {
    std::array<Scalar, 4> p, q;  // (lambda, mu, nu, xi) for P1, P2 and its sigma image for P3, P4
};

PointParams point_params(const KuwataFamily& fam, bool primed) {
    auto L = fam.legendre();
    PointParams pp;
    pp.p = primed ? std::array<Scalar, 4>{L[1], L[0], L[3], L[2]} : L;
    pp.q = {pp.p[2], pp.p[3], pp.p[0], pp.p[1]};
    return pp;
}

}  // namespace

std::vector<CatalogPoint> pi2prime_points(const KuwataFamily& fam, bool primed) {
    WeierstrassSurface S = pi2prime_surface(fam, primed);
    long d = S.field_d;
    PointParams pp = point_params(fam, primed);
    auto roots = [&](const std::array<Scalar, 4>& v) {
        return std::array<Scalar, 4>{require_sqrt(v[0], d, "lambda"), require_sqrt(v[1], d, "mu"),
                                     require_sqrt(v[3], d, "xi"), require_sqrt(v[3] - v[2], d, "xi - nu")};
    };
    std::array<Scalar, 4> rp = roots(pp.p), rq = roots(pp.q);
    // the second point flips sqrt(lambda): it is the one defined over the field with sqrt(mu) - sqrt(lambda)
    std::array<Scalar, 4> rp2 = rp, rq2 = rq;
    rp2[0] = -rp2[0];
    rq2[0] = -rq2[0];
    std::string tick = primed ? "'" : "";
    std::vector<CatalogPoint> out;
    out.push_back({"P1" + tick, p_point(S, pp.p, rp, false)});
    out.push_back({"P2" + tick, p_point(S, pp.p, rp2, false)});
    out.push_back({"P3" + tick, p_point(S, pp.q, rq, true)});
    out.push_back({"P4" + tick, p_point(S, pp.q, rq2, true)});
    return out;
}

std::vector<CatalogPoint> pi2prime_sign_variants(const KuwataFamily& fam, bool primed, bool over_q_only) {
    WeierstrassSurface S = pi2prime_surface(fam, primed);
    long d = S.field_d;
    PointParams pp = point_params(fam, primed);
    std::vector<CatalogPoint> out;
    for (int inv = 0; inv < 2; ++inv) {
        const auto& v = inv ? pp.q : pp.p;
        std::array<std::optional<Scalar>, 4> r = {sqrt_in(v[0], d), sqrt_in(v[1], d), sqrt_in(v[3], d),
                                                  sqrt_in(v[3] - v[2], d)};
        if (!r[0] || !r[1] || !r[2] || !r[3]) continue;
        // flipping all four roots gives the same x, so the first sign stays +
        for (int m = 0; m < 8; ++m) {
            std::array<Scalar, 4> rr = {*r[0], (m & 1) ? -*r[1] : *r[1], (m & 2) ? -*r[2] : *r[2],
                                        (m & 4) ? -*r[3] : *r[3]};
            auto P = p_point_try(S, v, rr, inv == 1, nullptr);
            if (!P) continue;
            if (over_q_only && !(P->x.num().is_rational() && P->y.num().is_rational())) continue;
            std::string label = std::string(inv ? "sigma" : "id") + (primed ? "'" : "") + "[+";
            for (int b = 0; b < 3; ++b) label += (m >> b) & 1 ? "-" : "+";
            out.push_back({label + "]", *P});
        }
    }
    return out;
}

// ---------------------------------------------------------------- nine lines

std::vector<CatalogPoint> nine_lines_sections(const KuwataFamily& fam) {
    auto [lam, mu, nu, xi] = fam.legendre();
    WeierstrassSurface S = build_twist(fam, 3);
    const Scalar A[4][3] = {
        {nu - xi, xi - nu, nu},
        {-xi, -nu, xi},
        {-mu, -lam, lam},
        {lam - mu, mu - lam, mu},
    };
    std::vector<CatalogPoint> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Scalar &a1 = A[0][i], &a2 = A[1][i], &a3 = A[2][j], &a4 = A[3][j];
            Scalar p12 = a1 * a2, s12 = a1 + a2, p34 = a3 * a4, s34 = a3 + a4;
            UPoly x(std::vector<Scalar>{Scalar(4) * p34, Scalar(4) / Scalar(3) * s12 * s34, Scalar(4) * p12});
            UPoly y(std::vector<Scalar>{Scalar(4) * p34 * s34, Scalar(8) * p34 * s12, Scalar(8) * p12 * s34,
                                        Scalar(4) * p12 * s12});
            std::string label = "S(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            out.push_back({label, verify_section(S, RatFunc(x), RatFunc(y))});
        }
    return out;
}

// ---------------------------------------------------------------- 27 lines

const std::vector<std::string> kCubicVars = {"X", "Y", "Z", "W"};

bool line_on_cubic(const MultiPoly& cubic, const std::array<Scalar, 4>& H, const std::array<Scalar, 4>& H2) {
    int p = -1;
    for (int i = 0; i < 4 && p < 0; ++i)
        if (!H[i].is_zero()) p = i;
    if (p < 0) return false;
    std::array<Scalar, 4> G = H2;
    Scalar f = H2[p] / H[p];
    for (int i = 0; i < 4; ++i) G[i] -= f * H[i];
    int q = -1;
    for (int i = 0; i < 4 && q < 0; ++i)
        if (!G[i].is_zero()) q = i;
    if (q < 0) return false;  // the two planes coincide
    auto solve_for = [](const std::array<Scalar, 4>& c, int v) {
        std::array<Scalar, 4> rest = c;
        rest[v] = Scalar(0);
        return linear_form(rest) * (Scalar(-1) / c[v]);
    };
    MultiPoly vq = solve_for(G, q);
    MultiPoly vp = solve_for(H, p).substitute(q, vq);
    return cubic.substitute(p, vp).substitute(q, vq).is_zero();
}

int CubicLinesReport::count(const std::string& datum) const {
    return static_cast<int>(std::count_if(lines.begin(), lines.end(), [&](const LineOnCubic& l) { return l.datum == datum; }));
}

CubicLinesReport cubic_surface_and_lines(const Scalar& lambda, const Scalar& mu, const Scalar& nu, const Scalar& xi) {
    for (const Scalar* v : {&lambda, &mu, &nu, &xi})
        if (v->is_zero()) throw PreconditionError("lambda, mu, nu, xi must be nonzero");
    if (lambda == mu || nu == xi) throw PreconditionError("lambda != mu and nu != xi are required");
    CubicLinesReport rep;
    MultiPoly X = cvar(0), Y = cvar(1), Z = cvar(2), W = cvar(3);
    auto g3 = [&](const MultiPoly& z, const MultiPoly& y) { return z * (z - y * nu) * (z - y * xi); };
    auto h3 = [&](const MultiPoly& x, const MultiPoly& w) { return x * (x - w * lambda) * (x - w * mu); };
    rep.cubic = g3(Z, Y) - h3(X, W);
    {
        Depressed e = legendre_to_depressed(lambda, mu), f = legendre_to_depressed(nu, xi);
        rep.cubic_depressed = Z.pow(3) + Z * Y.pow(2) * f.a + Y.pow(3) * f.b - X.pow(3) - X * W.pow(2) * e.a -
                              W.pow(3) * e.b;
    }

    const Scalar zero(0), one(1);
    std::array<Scalar, 3> P = {zero, lambda, mu}, Q = {zero, nu, xi};
    for (const Scalar& al : Q)
        for (const Scalar& be : P) {
            LineOnCubic L;
            L.kind = "coordinate";
            L.H = {zero, -al, one, zero};
            L.H2 = {one, zero, zero, -be};
            L.field = "Q";
            L.datum = "coordinate";
            L.gamma = be;
            L.contained = line_on_cubic(rep.cubic, L.H, L.H2);
            rep.lines.push_back(L);
        }

    std::vector<int> sigma = {0, 1, 2};
    do {
        GraphData G;
        G.sigma = sigma;
        std::vector<std::vector<Scalar>> m;
        for (int i = 0; i < 3; ++i) {
            const Scalar &p = P[i], &q = Q[sigma[i]];
            m.push_back({p * q, p, q, one});
        }
        std::vector<Scalar> v = kernel_vector(m);
        const Scalar &cxz = v[0], &cxy = v[1], &cwz = v[2], &cwy = v[3];
        G.form = {cxz, cxy, cwz, cwy};

        // [X : W] = [-(cwz Z + cwy Y) : cxz Z + cxy Y]; compare h o M with g on Y = 1
        UPoly z = UPoly::var();
        UPoly xm = Scalar(-1) * (cwz * z + UPoly(cwy)), wm = cxz * z + UPoly(cxy);
        UPoly hm = xm * (xm - lambda * wm) * (xm - mu * wm);
        UPoly gz = z * (z - UPoly(nu)) * (z - UPoly(xi));
        if (hm.degree() != 3) throw Error("graph map does not carry the three roots onto each other");
        G.kappa = hm.lc();
        if (hm != G.kappa * gz) throw Error("h(M(Z, Y)) is not a multiple of g(Z, Y)");

        // dehomogenized intersection of the form with C on Y = W = 1
        UPoly Xv = UPoly::var();
        UPoly zn = Scalar(-1) * (cxy * Xv + UPoly(cwy)), zd = cxz * Xv + UPoly(cwz);
        UPoly N = zn * (zn - nu * zd) * (zn - xi * zd) - Xv * (Xv - UPoly(lambda)) * (Xv - UPoly(mu)) * zd.pow(3);
        G.f = exact_div(N, Xv * (Xv - UPoly(lambda)) * (Xv - UPoly(mu)));

        if (G.kappa.is_rational()) G.cube_root = perfect_power(1 / G.kappa.rational(), 3);
        G.gamma_roots_of_f = true;
        for (int k = 0; k < 3; ++k) {
            LineOnCubic L;
            L.kind = "graph";
            L.sigma = sigma;
            L.k = k;
            if (!G.cube_root) {
                L.field = "requires extension";
                L.datum = "requires-extension";
                rep.lines.push_back(L);
                continue;
            }
            Scalar s = Scalar(*G.cube_root) * omega().pow(static_cast<unsigned>(k));
            L.H = {one, s * cwy, s * cwz, zero};
            L.H2 = {zero, -(s * cxy), -(s * cxz), one};
            L.field = k == 0 ? "Q" : "Q(sqrt(-3))";
            L.datum = k == 0 ? "cube-root" : "cube-root+mu3";
            L.contained = line_on_cubic(rep.cubic, L.H, L.H2);
            if (!cxz.is_zero()) {
                Scalar zz = (s.inverse() - cxy) / cxz;
                L.gamma = -(s * (cwz * zz + cwy));
                if (!G.f.eval(*L.gamma).is_zero()) G.gamma_roots_of_f = false;
            }
            rep.lines.push_back(L);
        }
        rep.graphs.push_back(G);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return rep;
}

CubicLinesReport cubic_surface_and_lines(const KuwataFamily& fam) {
    auto [lam, mu, nu, xi] = fam.legendre();
    return cubic_surface_and_lines(lam, mu, nu, xi);
}

// ---------------------------------------------------------------- cube ratios

bool cube_condition(const Rat& rho, const Rat& tau) {
    Rat num = tau * (tau * tau * tau * tau - 1), den = rho * (rho * rho * rho * rho - 1);
    if (num == 0 || den == 0) return false;
    return perfect_power(num / den, 3).has_value();
}

std::optional<ConicPoint> conic_cube_example(const Rat& tau, const Rat& mu, const Rat& xi, const Rat& m) {
    Rat t3 = tau * tau * tau;
    Rat den = mu - t3 * m * m * xi;
    if (den == 0) return std::nullopt;
    Rat lam = (mu * mu - t3 * m * xi * xi) / den;
    return ConicPoint{lam, m * lam};
}

}  // namespace kuwata
