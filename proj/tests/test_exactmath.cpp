#include <doctest.h>

#include "kuwata/ratfunc.hpp"
#include "kuwata/resultant.hpp"
#include "kuwata/roots.hpp"

#include <random>

using namespace kuwata;

namespace {

UPoly P(std::initializer_list<long> lowest_first) {
    std::vector<Scalar> v;
    for (long c : lowest_first) v.emplace_back(c);
    return UPoly(v);
}

UPoly lin(const Scalar& r) { return UPoly(std::vector<Scalar>{-r, Scalar(1)}); }

Scalar laplace_det(const std::vector<std::vector<Scalar>>& m) {
    const size_t n = m.size();
    if (n == 0) return Scalar(1);
    if (n == 1) return m[0][0];
    Scalar acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Scalar>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Scalar> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Scalar term = m[0][j] * laplace_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

UPoly random_poly(std::mt19937& rng, int deg, int range = 9) {
    std::uniform_int_distribution<int> dist(-range, range);
    std::vector<Scalar> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(Rat(dist(rng)));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return UPoly(c);
}

}  // namespace

TEST_CASE("quadratic scalars: parsing, printing, norm identity, conjugation") {
    Scalar w = Scalar::parse("-1/2 + 1/2*sqrt(-3)");
    CHECK(w.str() == "-1/2 + 1/2*sqrt(-3)");
    CHECK(w * w * w == Scalar(1));
    CHECK(Scalar::parse("7/3").str() == "7/3");
    CHECK(Scalar::parse("-2/4") == Scalar(Rat(-1, 2)));
    CHECK(Scalar::parse("sqrt(2)") * Scalar::parse("sqrt(2)") == Scalar(2));
    CHECK(Scalar::parse("3 - 2*sqrt(5)").b() == -2);
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("abc"));
    CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), ContextError);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-30, 30);
    for (long D : {-3L, -1L, 2L, 5L}) {
        for (int k = 0; k < 40; ++k) {
            Rat a(dist(rng), 1 + std::abs(dist(rng))), b(dist(rng), 1 + std::abs(dist(rng)));
            a.canonicalize();
            b.canonicalize();
            Scalar x(a, b, D), y(Rat(dist(rng)), Rat(dist(rng)), D);
            CHECK(x * x.conj() == Scalar(a * a - Rat(D) * b * b));
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x + y).conj() == x.conj() + y.conj());
            if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
            auto r = sqrt_in(x * x, D);
            REQUIRE(r.has_value());
            CHECK(*r * *r == x * x);
        }
    }
    CHECK(!sqrt_in(Scalar(2), 0).has_value());
    CHECK(sqrt_in(Scalar(-12), -3).value() == Scalar(Rat(0), Rat(2), -3));
}

TEST_CASE("perfect powers") {
    CHECK(perfect_power(Rat(64), 3).value() == 4);
    CHECK(perfect_power(Rat(25, 9), 2).value() == Rat(5, 3));
    CHECK(!perfect_power(Rat(2), 2).has_value());
    CHECK(perfect_power(Rat(-243, 32), 5).value() == Rat(-3, 2));
    CHECK(!perfect_power(Rat(-4), 2).has_value());
}

TEST_CASE("univariate arithmetic") {
    UPoly t = UPoly::var();
    UPoly f = (t - UPoly(6)).pow(2) * (t + UPoly(12));
    UPoly g = (t - UPoly(6)) * (t - UPoly(1));
    CHECK(gcd(f, g) == t - UPoly(6));
    UPoly cubic = t.pow(3) + t * Scalar(5) + UPoly(11);
    CHECK(cubic.eval(Scalar(0)) == Scalar(11));
    auto [q, r] = divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());

    // s^3 - 3 alpha s at s = t + alpha/t equals t^3 + alpha^3/t^3
    for (long alpha : {4L, -7L, 1L}) {
        UPoly s3 = t.pow(3) - t * Scalar(3 * alpha);
        UPoly N = subs_t_plus_alpha_over_t(s3, Scalar(alpha));
        CHECK(N == t.pow(6) + UPoly(Scalar(alpha).pow(3)));
    }
    // s^5 - 5 alpha s^3 + 5 alpha^2 s -> t^5 + alpha^5/t^5
    UPoly s5 = t.pow(5) - t.pow(3) * Scalar(45) + t * Scalar(405);
    CHECK(subs_t_plus_alpha_over_t(s5, Scalar(9)) == t.pow(10) + UPoly(Scalar(9).pow(5)));

    auto sq = squarefree_decomposition(f * Scalar(3));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == std::pair<UPoly, int>{t + UPoly(12), 1});
    CHECK(sq[1] == std::pair<UPoly, int>{t - UPoly(6), 2});
    CHECK(valuation(f, t - UPoly(6)) == 2);
    CHECK(poly_sqrt(f * f, 0).value() * poly_sqrt(f * f, 0).value() == f * f);
    CHECK(!poly_sqrt(f, 0).has_value());
    CHECK(multiplicity_part(t * (t - UPoly(6)), f * t, 2) == t - UPoly(6));
}

TEST_CASE("gcd of large rational polynomials against the Euclidean sequence") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> co(-40, 40), den(1, 5);
    auto rnd = [&](int deg) {
        std::vector<Scalar> v;
        for (int i = 0; i < deg; ++i) v.emplace_back(Rat(co(rng), den(rng)));
        v.emplace_back(Rat(co(rng) | 1, den(rng)));
        return UPoly(v);
    };
    auto euclid = [](UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = b;
            b = r;
        }
        return a.monic();
    };
    for (int trial = 0; trial < 8; ++trial) {
        CAPTURE(trial);
        UPoly h = rnd(trial), a = rnd(9 + trial), b = rnd(12);
        if (trial % 3 == 0) b = b * a.pow(2);  // repeated shared factor
        UPoly f = h * a * a, g = h * b;
        UPoly expect = euclid(f, g);
        CHECK(gcd(f, g) == expect);
        CHECK(gcd(g, f) == expect);
        auto sq = squarefree_decomposition(f);
        UPoly prod(Scalar(1));
        for (auto& [q, m] : sq) prod = prod * q.pow(static_cast<unsigned>(m));
        CHECK(prod == f.monic());
    }
    UPoly t = UPoly::var();
    CHECK(gcd(t.pow(12) - UPoly(1), t.pow(8) - UPoly(1)) == t.pow(4) - UPoly(1));
    CHECK(gcd(t.pow(12) + UPoly(1), t.pow(9) + UPoly(2)) == UPoly(1));
}

TEST_CASE("rational functions: inversion involution and composition") {
    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        RatFunc f(random_poly(rng, 3), random_poly(rng, 2));
        CHECK(f.invert_var().invert_var() == f);
        auto c = invert_with_clearing(f.num(), 5);
        UPoly back = invert_with_clearing(c.poly, 5).poly;
        CHECK(back == f.num());
    }
    UPoly t = UPoly::var();
    RatFunc x(t.pow(2) + UPoly(1), t);
    CHECK(x.valuation_at(t) == -1);
    CHECK(x.valuation_at_infinity() == -1);
    RatFunc comp = RatFunc(t.pow(2)).compose(x);
    CHECK(comp == x * x);
}

TEST_CASE("resultant: reference values") {
    std::vector<std::string> v{"x", "b1", "b0"};
    auto x = MultiPoly::variable(v, "x");
    auto b1 = MultiPoly::variable(v, "b1");
    auto b0 = MultiPoly::variable(v, "b0");
    auto one = MultiPoly::constant(v, Scalar(1));
    // product-formula oracle: roots of x^2 - 1 are +-1, g(1) g(-1) = (-1)(-3) = 3
    auto r = resultant(x * x - one, x - one * Scalar(2), "x");
    CHECK(r == MultiPoly::constant(v, Scalar(3)));
    auto f = x.pow(3) + b1 * x - b0;
    CHECK(resultant(f, f, "x").is_zero());
    // 2x2 Sylvester determinant [[1, -b1], [1, -b0]] = b1 - b0
    CHECK(resultant(x - b1, x - b0, "x") == b1 - b0);
    CHECK_THROWS_AS(resultant(b1, b0, "x"), PreconditionError);
    CHECK(resultant(P({-1, 0, 1}), P({-2, 1})) == Scalar(3));
}

TEST_CASE("resultant: subresultant chain agrees with Sylvester determinant; multiplicativity") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 25; ++k) {
        UPoly f = random_poly(rng, 1 + k % 4), g = random_poly(rng, 1 + (k / 2) % 5), h = random_poly(rng, 1 + k % 3);
        auto S = sylvester_matrix(f, g);
        CHECK(resultant(f, g) == laplace_det(S));
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
        CHECK(resultant(h, f * g) == resultant(h, f) * resultant(h, g));
    }
    // multivariate agrees with specialization
    std::vector<std::string> v{"x", "y"};
    auto x = MultiPoly::variable(v, "x");
    auto y = MultiPoly::variable(v, "y");
    auto c = [&](long n) { return MultiPoly::constant(v, Scalar(n)); };
    auto F = x.pow(3) * y + x * y.pow(2) - c(3) * x + c(5);
    auto G = x.pow(2) - y * x * c(2) + y.pow(3) - c(1);
    auto R = resultant(F, G, "x");
    for (long yy : {-2L, 0L, 1L, 3L}) {
        UPoly fy = F.eval(1, Scalar(yy)).to_upoly(0), gy = G.eval(1, Scalar(yy)).to_upoly(0);
        // leading coefficient of F in x is y; specialization is exact when it does not vanish
        if (yy == 0) continue;
        CHECK(R.eval(1, Scalar(yy)).constant_value() == resultant(fy, gy));
    }
}

TEST_CASE("multivariate exact division and content stripping") {
    std::vector<std::string> v{"p1", "b1", "b0"};
    auto p = MultiPoly::variable(v, "p1");
    auto b = MultiPoly::variable(v, "b1");
    auto c = MultiPoly::variable(v, "b0");
    auto A = p.pow(2) * b - c * Scalar(3) + MultiPoly::constant(v, Scalar(7));
    auto B = b * c - p + MultiPoly::constant(v, Scalar(Rat(1, 2)));
    CHECK(exact_div(A * B, B) == A);
    CHECK_THROWS(exact_div(A * B + p, B));
    auto pp = (A * p.pow(3) * Scalar(Rat(6, 5))).primitive_part();
    CHECK(pp == A.rational_primitive_part());
}

TEST_CASE("rational roots") {
    UPoly t = UPoly::var();
    UPoly q = t.pow(2) + t * Scalar(6) + UPoly(36);
    UPoly f = (t - UPoly(6)).pow(2) * (t + UPoly(12)) * q * (t.pow(2) - UPoly(3));
    auto rep = rational_roots(f);
    REQUIRE(rep.roots.size() == 2);
    CHECK(rep.roots[0].root == Scalar(6));
    CHECK(rep.roots[0].multiplicity == 2);
    CHECK(rep.roots[1].root == Scalar(-12));
    CHECK(rep.roots[1].multiplicity == 1);
    CHECK(rep.cofactor == q * (t.pow(2) - UPoly(3)));

    auto none = rational_roots(t.pow(2) + UPoly(1));
    CHECK(none.roots.empty());
    CHECK(none.cofactor == t.pow(2) + UPoly(1));

    auto lin1 = rational_roots(t * Scalar(12) - UPoly(4));
    REQUIRE(lin1.roots.size() == 1);
    CHECK(lin1.roots[0].root == Scalar(Rat(1, 3)));

    CHECK(rational_roots(UPoly(5)).roots.empty());
}

TEST_CASE("rational roots: randomized fixtures against the divisor route") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9), mult(1, 3);
    for (int k = 0; k < 20; ++k) {
        UPoly f(Scalar(Rat(num(rng) == 0 ? 3 : 7, den(rng))));
        int nroots = 1 + k % 4;
        for (int i = 0; i < nroots; ++i) {
            Rat r(num(rng), den(rng));
            r.canonicalize();
            f = f * lin(Scalar(r)).pow(static_cast<unsigned>(mult(rng)));
        }
        f = f * (UPoly::var().pow(2) * Scalar(2) + UPoly(3 + k));
        auto a = rational_roots(f);
        auto b = rational_roots_by_divisors(f);
        REQUIRE(!b.overflow);
        REQUIRE(a.roots.size() == b.roots.size());
        for (size_t i = 0; i < a.roots.size(); ++i) {
            CHECK(a.roots[i].root == b.roots[i].root);
            CHECK(a.roots[i].multiplicity == b.roots[i].multiplicity);
            CHECK(f.eval(a.roots[i].root).is_zero());
            // multiplicity matches the order of vanishing of f
            CHECK(valuation(f, lin(a.roots[i].root)) == a.roots[i].multiplicity);
        }
        CHECK(a.cofactor == b.cofactor);
    }
}

TEST_CASE("roots in a quadratic field") {
    UPoly t = UPoly::var();
    auto r = roots_in_field((t.pow(2) + t + UPoly(1)) * (t - UPoly(2)), -3);
    REQUIRE(r.roots.size() == 3);
    for (const auto& x : r.roots) CHECK(((x.root * x.root) + x.root + Scalar(1)) * (x.root - Scalar(2)) == Scalar(0));
    auto s = roots_in_field(t.pow(2) - UPoly(8), 2);
    REQUIRE(s.roots.size() == 2);
    CHECK(roots_in_field(t.pow(2) - UPoly(8), 3).roots.empty());
    // coefficients in the field itself
    Scalar w = Scalar::parse("-1/2 + 1/2*sqrt(-3)");
    UPoly g = lin(w) * lin(Scalar(Rat(3, 7))) * (t.pow(2) + UPoly(5));
    auto gr = roots_in_field(g, -3);
    REQUIRE(gr.roots.size() == 2);
    CHECK(gr.cofactor == t.pow(2) + UPoly(5));
    // Gaussian rationals: (t^2 + 4)(t - 1/2) has roots 2i, -2i, 1/2
    auto gi = roots_in_field((t.pow(2) + UPoly(4)) * lin(Scalar(Rat(1, 2))), -1);
    REQUIRE(gi.roots.size() == 3);
    for (const auto& x : gi.roots) CHECK((x.root * x.root + Scalar(4)) * (x.root - Scalar(Rat(1, 2))) == Scalar(0));
}

TEST_CASE("modular degree patterns") {
    UPoly t = UPoly::var();
    CHECK(modular_degree_pattern((t - UPoly(1)) * (t - UPoly(2)), 5) == std::vector<int>{1, 1});
    // t^2 + 1 has no root mod 3 (values 1, 2, 2)
    CHECK(modular_degree_pattern(t.pow(2) + UPoly(1), 3) == std::vector<int>{2});
    // roots 2 and 3 mod 5
    CHECK(modular_degree_pattern(t.pow(2) + UPoly(1), 5) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(modular_degree_pattern(t.pow(2) * Scalar(5) + UPoly(1), 5), PreconditionError);
    CHECK_THROWS_AS(modular_degree_pattern((t - UPoly(1)) * (t - UPoly(4)), 3), PreconditionError);
    // irreducible cubic with an irreducible reduction
    CHECK(modular_degree_pattern(t.pow(3) - UPoly(2), 7) == std::vector<int>{3});
}

TEST_CASE("exact rank and determinant") {
    using M = std::vector<std::vector<Scalar>>;
    M id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto a = exact_rank_det(id);
    CHECK(a.rank == 3);
    CHECK(a.det == Scalar(1));
    Scalar d(Rat(4, 3)), o(Rat(2, 3));
    M g{{d, o, o}, {o, d, o}, {o, o, d}};
    auto b = exact_rank_det(g);
    CHECK(b.rank == 3);
    CHECK(b.det == laplace_det(g));
    CHECK(b.det == Scalar(Rat(32, 27)));
    M z{{0, 0}, {0, 0}};
    auto c = exact_rank_det(z);
    CHECK(c.rank == 0);
    CHECK(c.det == Scalar(0));
    M s{{0, 2, 1}, {0, 4, 2}, {3, 1, 1}};
    CHECK(exact_rank_det(s).rank == 2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int k = 0; k < 10; ++k) {
        M r(4, std::vector<Scalar>(4));
        for (auto& row : r)
            for (auto& x : row) x = Scalar(Rat(dist(rng), 1 + std::abs(dist(rng))));
        CHECK(exact_rank_det(r).det == laplace_det(r));
    }
}
