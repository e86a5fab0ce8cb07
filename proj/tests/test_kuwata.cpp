#include <doctest.h>

#include "kuwata/kuwata.hpp"
#include "kuwata/secfinder.hpp"

#include <random>
#include <set>

using namespace kuwata;

namespace {

UPoly P(std::initializer_list<long> lowest_first) {
    std::vector<Scalar> v;
    for (long c : lowest_first) v.emplace_back(c);
    return UPoly(v);
}

UPoly tpow(int e) { return UPoly::monomial(Scalar(1), e); }

KuwataFamily cube_family() { return KuwataFamily::from_legendre(16, 1, 6, 1); }

std::vector<SectionPt> pts(const std::vector<CatalogPoint>& v) {
    std::vector<SectionPt> out;
    for (auto& c : v) out.push_back(c.P);
    return out;
}

std::set<std::string> types_except(const WeierstrassSurface& S, bool skip_ends) {
    std::set<std::string> out;
    for (auto& f : singular_fibers(S)) {
        bool end = f.place.infinite || (f.place.is_linear() && f.place.root().is_zero());
        if (skip_ends && end) continue;
        out.insert(f.type.str());
    }
    return out;
}

}  // namespace

TEST_CASE("Legendre roots to depressed form") {
    Depressed e = legendre_to_depressed(16, 1);
    CHECK(e.a == Scalar(Rat(-241, 3)));
    CHECK(e.b == Scalar(Rat(-7378, 27)));
    // 16 lambda^2 mu^2 (lambda - mu)^2 = 16 * 256 * 225
    CHECK(e.delta == Scalar(921600));
    CHECK(e.delta == Scalar(-16) * (Scalar(4) * e.a.pow(3) + Scalar(27) * e.b.pow(2)));

    Depressed f = legendre_to_depressed(1, -1);
    CHECK(f.a == Scalar(-1));
    CHECK(f.b == Scalar(0));
    CHECK(f.delta == Scalar(64));

    Depressed g = legendre_to_depressed(Scalar(Rat(2, 7)), Scalar(-5));
    Depressed h = legendre_to_depressed(Scalar(-5), Scalar(Rat(2, 7)));
    CHECK(g.a == h.a);
    CHECK(g.b == h.b);
    CHECK_THROWS_AS(legendre_to_depressed(3, 3), PreconditionError);
    CHECK_THROWS_AS(legendre_to_depressed(0, 3), PreconditionError);
}

TEST_CASE("families refuse equal j-invariants") {
    CHECK_THROWS_AS(KuwataFamily::from_legendre(16, 1, 32, 2), PreconditionError);
    // lambda and 1 - lambda have the same j
    CHECK_THROWS_AS(KuwataFamily::from_legendre(Scalar(Rat(9, 25)), 1, Scalar(Rat(16, 25)), 1), PreconditionError);
    auto fam = cube_family();
    CHECK(fam.E.j() != fam.F.j());
    CHECK(fam.ratio() == Scalar(64));
    Scalar bd864 = Scalar(864) * fam.E.b * fam.F.b;
    CHECK(fam.B() * RatFunc(tpow(1)) == RatFunc(UPoly(std::vector<Scalar>{Scalar(921600), bd864, Scalar(14400)})));
}

TEST_CASE("fiber audit of pi_i and the twists") {
    auto fam = cube_family();
    Place zero = Place::at_root(Scalar(0)), inf = Place::at_infinity();

    auto pi2 = build_pi(fam, 2);
    CHECK(classify_fiber(pi2, zero).type.str() == "IV*");
    CHECK(classify_fiber(pi2, inf).type.str() == "IV*");
    CHECK(euler_characteristic(pi2) == 2);

    auto pi3 = build_pi(fam, 3);
    FiberData f0 = classify_fiber(pi3, zero);
    CHECK(f0.type.str() == "I0*");
    CHECK(f0.vA == 4);
    CHECK(f0.vB == 3);
    CHECK(f0.vDelta == 6);
    CHECK(classify_fiber(pi3, inf).type.str() == "I0*");

    auto pi6 = build_pi(fam, 6);
    CHECK(classify_fiber(pi6, zero).type.str() == "smooth");
    CHECK(classify_fiber(pi6, inf).type.str() == "smooth");
    for (auto& t : types_except(pi6, false)) CHECK((t == "I1" || t == "II"));
    CHECK(base_change(build_pi(fam, 1), 6).surface == pi6);

    auto tw2 = build_twist(fam, 2);
    CHECK(tw2.A == Scalar(-48) * fam.E.a * fam.F.a * tpow(2));
    CHECK(tw2.B.degree() == 5);
    CHECK(euler_characteristic(tw2) == 1);
    for (auto& t : types_except(tw2, false)) CHECK((t == "I1" || t == "II"));
    CHECK(*shioda_tate_rank(tw2).rank == 8);
    CHECK_NOTHROW(derive_coefficient_system(tw2));

    auto tw3 = build_twist(fam, 3);
    UPoly B3 = fam.F.delta() * tpow(6) + Scalar(864) * fam.E.b * fam.F.b * tpow(3) + UPoly(fam.E.delta());
    CHECK(tw3.B == B3);
    CHECK(tw3.B.coeff(6) == fam.F.delta());
    CHECK_THROWS_AS(derive_coefficient_system(tw3), PreconditionError);

    for (int i = 1; i <= 3; ++i) CHECK(quadratic_twist_0_infty(build_twist(fam, i)).surface == build_pi(fam, i));
    CHECK_THROWS_AS(build_twist(fam, 4), PreconditionError);
}

TEST_CASE("deflation of pi_3 for the cube-ratio pair") {
    auto fam = cube_family();
    Deflation D = deflate(fam, 3);
    CHECK(D.alpha == Scalar(4));
    // -Delta(F)(s^3 - 3 alpha s) matches +Delta(F) t^3 only for s = -(t + alpha/t)
    CHECK(D.sign == -1);
    REQUIRE(D.witness.size() == 2);
    CHECK(D.witness[1].find("==") != std::string::npos);
    CHECK(D.psi.B.degree() == 3);
    CHECK(classify_fiber(D.psi, Place::at_infinity()).type.str() == "I0*");
    CHECK(*shioda_tate_rank(D.psi).rank == 4);

    // s^3 - 3 alpha s at s = t + alpha/t is t^3 + alpha^3/t^3
    UPoly s = UPoly::var();
    CHECK(subs_t_plus_alpha_over_t(s.pow(3) - Scalar(12) * s, 4) == tpow(6) + UPoly(64));

    Deflation D1 = deflate(KuwataFamily::from_legendre(16, 1, 6, 1, 0, -3), 3, 1);
    CHECK(D1.alpha == Scalar(4) * omega());
    CHECK(transport_surface(D.psi, Symmetry{SymmetryKind::ScaleT, omega()}) == D1.psi);
    CHECK(D1.pi == build_pi(KuwataFamily::from_legendre(16, 1, 6, 1, 0, -3), 3));

    CHECK_THROWS_AS(deflate(KuwataFamily::from_legendre(5, 2, 7, 3), 3), PreconditionError);
    CHECK_THROWS_AS(deflate(fam, 4), PreconditionError);
}

TEST_CASE("fifth-power deflation has an additive fiber at infinity") {
    // Delta(E)/Delta(F) = 3^20
    auto fam = KuwataFamily::from_legendre(-81, -27, 1, 2);
    CHECK(fam.ratio() == Scalar(Rat(3486784401)));
    Deflation D = deflate(fam, 5);
    CHECK(D.alpha == Scalar(81));
    CHECK(D.psi.B.degree() == 5);
    CHECK(D.psi.weight == 1);
    CHECK(classify_fiber(D.psi, Place::at_infinity()).type.str() == "II");
    UPoly s = UPoly::var();
    UPoly d5 = s.pow(5) - Scalar(5 * 81) * s.pow(3) + Scalar(5 * 81 * 81) * s;
    CHECK(D.deflation_poly == d5);
    CHECK(subs_t_plus_alpha_over_t(d5, 81) == tpow(10) + UPoly(Scalar(Rat(3486784401))));
}

TEST_CASE("pullback along s = t + alpha/t") {
    // y^2 = x^3 + s^3 + 1 carries x = -s, y = 1
    Deflation D;
    D.k = 3;
    D.alpha = Scalar(2);
    D.sign = 1;
    D.psi = make_surface(UPoly(), P({1, 0, 0, 1}));
    RatFunc st(P({2, 0, 1}), tpow(1));
    D.pi = normalize_model(RatFunc(), RatFunc(P({1, 0, 0, 1})).compose(st));
    SectionPt s = verify_section(D.psi, RatFunc(P({0, -1})), RatFunc(1));
    SectionPt q = pullback_section(D, s);
    CHECK(section_residual(D.pi, q.x, q.y).is_zero());
    CHECK(pullback_section(D, SectionPt::zero_section()).zero);
    SectionPt twice = mul(D.psi, s, 2);
    CHECK(pullback_section(D, twice) == mul(D.pi, q, 2));
    SectionPt bogus{RatFunc(P({0, 1})), RatFunc(1), false};
    CHECK_THROWS_AS(pullback_section(D, bogus), SectionError);
}

TEST_CASE("rank tables") {
    CHECK(expected_ranks(4, 0).rank == 12);
    CHECK(expected_ranks(2, 1).rank == 5);
    CHECK(expected_ranks(6, 2).rank == 18);
    CHECK(expected_ranks(60, 0).rank == 40);
    CHECK(expected_ranks(60, 0).lower_bound);
    CHECK(q_rank_bound(6) == 11);
    CHECK(q_rank_bound(5) == 5);
    CHECK_THROWS_AS(q_rank_bound(7), PreconditionError);
    CHECK_THROWS_AS(expected_ranks(7, 0), PreconditionError);
}

TEST_CASE("CorQ parametrization") {
    CorqReport r = corq_params(2, 4, 1);
    // k^2 - n^2 = n2^2 and m^2 - l^2 = l2^2
    CHECK(r.k * r.k - r.n * r.n == r.n2 * r.n2);
    CHECK(r.m * r.m - r.l * r.l == r.l2 * r.l2);
    CHECK(r.legendre_F == Rat(64, 289));  // (2 tau / (tau^2 + 1))^2
    CHECK(r.legendre_E == Rat(16, 25));
    REQUIRE(r.squares.size() == 4);
    for (auto& sq : r.squares) {
        CAPTURE(sq.label);
        REQUIRE(sq.root.has_value());
        CHECK(*sq.root * *sq.root == sq.value);
    }
    CHECK(r.valid);

    CorqReport bad = corq_params(2, 3, 1);
    CHECK_FALSE(bad.j_distinct);
    CHECK_FALSE(bad.valid);
    CHECK(bad.legendre_E + bad.legendre_F == 1);  // 16/25 and 9/25

    CorqReport same = corq_params(3, 3, 2);
    CHECK_FALSE(same.valid);
    CHECK(same.problems.front().find("rho = tau") != std::string::npos);

    CHECK_THROWS_AS(corq_params(1, 3, 1), PreconditionError);
    CHECK_THROWS_AS(corq_params(2, 3, 0), PreconditionError);

    auto found = corq_search(5);
    REQUIRE(found.has_value());
    CHECK(found->rho == 2);
    CHECK(found->tau == 4);
    CHECK(found->u == 1);
}

TEST_CASE("points on the twist of pi_2 for a CorQ fixture") {
    CorqReport r = corq_params(2, 4, 1);
    auto fam = KuwataFamily::from_legendre(Scalar(r.lambda), Scalar(r.mu), Scalar(r.nu), Scalar(r.xi));
    auto S = pi2prime_surface(fam, false);
    auto q = pi2prime_points(fam, false);
    REQUIRE(q.size() == 4);
    for (auto& c : q) {
        CAPTURE(c.label);
        CHECK(section_residual(S, c.P.x, c.P.y).is_zero());
        CHECK(c.P.x.num().is_rational());
        CHECK(c.P.y.num().is_rational());
        CHECK(c.P.x.num().degree() == 2);
        CHECK(height_pairing(S, c.P, c.P) == 2);
    }
    GramReport g = gram_matrix(S, pts(q));
    // the sigma images satisfy P1 + P2 + P3 = P4 here
    CHECK(g.rank == 3);
    CHECK(add(S, add(S, q[0].P, q[1].P), q[2].P) == q[3].P);

    // the rational sign choices span rank 4, the bound over Q for this twist
    auto rat = pi2prime_sign_variants(fam, false, true);
    CHECK(rat.size() == 8);
    CHECK(gram_matrix(S, pts(rat)).rank == 4);

    auto Si = pi2prime_surface(fam, true);
    CHECK(Si.field_d == -1);
    auto primed = pi2prime_points(fam, true);
    for (auto& c : primed) CHECK(section_residual(Si, c.P.x, c.P.y).is_zero());
    auto all = pi2prime_sign_variants(fam, true, false);
    CHECK(all.size() == 16);
    auto all8 = pts(q);
    for (auto& c : primed) all8.push_back(c.P);
    CHECK(gram_matrix(Si, all8).rank == 5);
}

TEST_CASE("nine sections from the matrix of root differences") {
    auto fam = cube_family();
    auto S = build_twist(fam, 3);
    auto nine = nine_lines_sections(fam);
    REQUIRE(nine.size() == 9);
    for (auto& c : nine) {
        CHECK(section_residual(S, c.P.x, c.P.y).is_zero());
        CHECK(height_pairing(S, c.P, c.P) > 0);
    }
    GramReport g = gram_matrix(S, pts(nine));
    CHECK(g.rank == 5);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    int done = 0;
    while (done < 3) {
        std::array<Scalar, 4> v;
        for (auto& x : v) x = Scalar(Rat(num(rng), den(rng)));
        try {
            auto f = KuwataFamily::from_legendre(v[0], v[1], v[2], v[3]);
            CAPTURE(v[0].str() + " " + v[1].str() + " " + v[2].str() + " " + v[3].str());
            CHECK(nine_lines_sections(f).size() == 9);
            ++done;
        } catch (const PreconditionError&) {
        }
    }
}

TEST_CASE("27 lines on the cubic surface") {
    auto rep = cubic_surface_and_lines(cube_family());
    REQUIRE(rep.lines.size() == 27);
    for (auto& l : rep.lines) CHECK(l.contained);
    CHECK(rep.count("coordinate") == 9);
    CHECK(rep.count("cube-root") == 6);
    CHECK(rep.count("cube-root+mu3") == 12);
    for (auto& g : rep.graphs) {
        CHECK(g.cube_root.has_value());
        CHECK(g.f.degree() == 3);
        CHECK(g.gamma_roots_of_f);
    }
    // a perturbed line is not on the cubic
    auto l = rep.lines[10];
    l.H[1] += Scalar(1);
    CHECK_FALSE(line_on_cubic(rep.cubic, l.H, l.H2));

    // sigma = id reproduces nu xi (lambda - mu) XY + mu lambda (xi - nu) WZ + (nu mu - xi lambda) XZ
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-20, 20);
    for (int trial = 0; trial < 3; ++trial) {
        Scalar la(num(rng)), mu(num(rng)), nu(num(rng)), xi(num(rng));
        if ((la * mu * nu * xi).is_zero() || la == mu || nu == xi) continue;
        auto r = cubic_surface_and_lines(la, mu, nu, xi);
        std::array<Scalar, 4> G = {nu * mu - xi * la, nu * xi * (la - mu), mu * la * (xi - nu), Scalar(0)};
        const auto& F = r.graphs[0].form;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(F[i] * G[j] == F[j] * G[i]);
        for (auto& line : r.lines)
            if (line.datum != "requires-extension") CHECK(line.contained);
    }

    // nu mu = xi lambda: the identity form loses its XZ term
    auto deg = cubic_surface_and_lines(2, 6, 1, 3);
    CHECK(deg.graphs[0].form[0].is_zero());
    for (auto& line : deg.lines)
        if (line.datum != "requires-extension") CHECK(line.contained);

    // the depressed model is the Legendre one after x -> x + (lambda + mu)/3
    MultiPoly X = MultiPoly::variable(kCubicVars, "X"), W = MultiPoly::variable(kCubicVars, "W");
    MultiPoly Z = MultiPoly::variable(kCubicVars, "Z"), Y = MultiPoly::variable(kCubicVars, "Y");
    MultiPoly shifted = rep.cubic_depressed.substitute(0, X - W * Scalar(Rat(17, 3))).substitute(2, Z - Y * Scalar(Rat(7, 3)));
    CHECK(shifted == rep.cubic);
}

TEST_CASE("cube ratios") {
    CHECK(cube_condition(3, 2));  // 30 / 240 = 1/8
    CHECK(cube_condition(2, 3));
    CHECK_FALSE(cube_condition(2, 4));
    CHECK_FALSE(cube_condition(2, 1));
    auto fam = cube_family();
    CHECK(fam.ratio() == Scalar(64));
    // 16 * 15 * 1 = 2^3 * 6 * 5 * 1
    Rat lam = 16, mu = 1, nu = 6, xi = 1;
    CHECK(lam * (lam - mu) * mu == 8 * nu * (nu - xi) * xi);
    auto c = conic_cube_example(2, 1, 1, Rat(3, 8));
    REQUIRE(c.has_value());
    CHECK(c->lambda == 16);
    CHECK(c->nu == 6);
    CHECK_FALSE(conic_cube_example(1, 1, 1, 1).has_value());
}
