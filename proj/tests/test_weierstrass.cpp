#include <doctest.h>

#include "kuwata/weierstrass.hpp"

using namespace kuwata;

namespace {

UPoly P(std::initializer_list<long> lowest_first) {
    std::vector<Scalar> v;
    for (long c : lowest_first) v.emplace_back(c);
    return UPoly(v);
}

UPoly tpow(int e) { return UPoly::monomial(Scalar(1), e); }

WeierstrassSurface top_surface() { return make_surface(UPoly(), Scalar(108) * P({12, -48, 84, -74, 27})); }

int count_type(const std::vector<FiberData>& fs, const std::string& name) {
    int n = 0;
    for (auto& f : fs)
        if (f.type.str() == name) n += f.place.degree();
    return n;
}

}  // namespace

TEST_CASE("component counts and valuation table") {
    CHECK(component_count(parse_fiber_type("IV*")) == 7);
    CHECK(component_count(parse_fiber_type("I0*")) == 5);
    CHECK(component_count(parse_fiber_type("I3")) == 3);
    CHECK(component_count(parse_fiber_type("I1")) == 1);
    CHECK(component_count(parse_fiber_type("I2*")) == 7);
    CHECK(component_count(parse_fiber_type("II*")) == 9);
    for (const char* s : {"II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*", "I1", "I5"}) {
        FiberType t = parse_fiber_type(s);
        CHECK(t.str() == s);
        CHECK(discriminant_valuation(t) >= 1);
    }
    CHECK(fiber_type_from_valuations(2, 3, 8).str() == "I2*");
    CHECK(fiber_type_from_valuations(0, 0, 5).str() == "I5");
    CHECK(fiber_type_from_valuations(kInfiniteValuation, 2, 4).str() == "IV");
    CHECK(fiber_type_from_valuations(3, kInfiniteValuation, 9).str() == "III*");
    CHECK_THROWS_AS(fiber_type_from_valuations(4, 6, 12), PreconditionError);
}

TEST_CASE("normalize_model clears Laurent tails at t = 0") {
    UPoly t = UPoly::var();
    // y^2 = x^3 + c x + (p t^2 + q + r / t^2)
    RatFunc A(Scalar(-7));
    RatFunc B = RatFunc(Scalar(5) * t.pow(2) + UPoly(Scalar(3))) + RatFunc(UPoly(Scalar(2)), t.pow(2));
    WeierstrassSurface S = normalize_model(A, B);
    CHECK(S.clearing_k == 1);
    CHECK(S.A == Scalar(-7) * tpow(4));
    CHECK(S.B == Scalar(2) * tpow(4) + Scalar(3) * tpow(6) + Scalar(5) * tpow(8));
    CHECK(S.weight == 2);
    CHECK(S.coord_scale == RatFunc(t));

    WeierstrassSurface poly = normalize_model(RatFunc(P({1, 1})), RatFunc(P({0, 2, 1})));
    CHECK(poly.clearing_k == 0);
    CHECK(poly.A == P({1, 1}));
    CHECK(poly.B == P({0, 2, 1}));

    WeierstrassSurface odd = normalize_model(RatFunc(), RatFunc(UPoly(Scalar(1)), tpow(7)));
    CHECK(odd.clearing_k == 2);
    CHECK(odd.B == tpow(5));

    CHECK_THROWS_AS(normalize_model(RatFunc(), RatFunc(UPoly(Scalar(1)), P({1, 1}))), PreconditionError);
}

TEST_CASE("minimalization removes u^4, u^6 factors") {
    UPoly u = P({-2, 1});
    WeierstrassSurface S = make_surface(u.pow(4) * P({1, 1}), u.pow(6) * P({3}));
    CHECK(S.A == P({1, 1}));
    CHECK(S.B == P({3}));
    CHECK(S.coord_scale == RatFunc(UPoly(Scalar(1)), u));
    CHECK_THROWS_AS(make_surface(UPoly(), UPoly()), PreconditionError);
    CHECK_THROWS_AS(make_surface(Scalar(-3) * P({0, 0, 1}), Scalar(2) * P({0, 0, 0, 1})), PreconditionError);
}

TEST_CASE("discriminant and j-invariant") {
    WeierstrassSurface top = top_surface();
    CHECK(discriminant(top) == Scalar(-432) * top.B.pow(2));
    CHECK(j_invariant(top).is_zero());
    WeierstrassSurface s1728 = make_surface(P({1, 0, 1}), UPoly());
    CHECK(j_invariant(s1728) == RatFunc(1728));
}

TEST_CASE("Top's surface: four II fibers, IV at infinity, rank six") {
    WeierstrassSurface top = top_surface();
    auto fs = singular_fibers(top);
    CHECK(count_type(fs, "II") == 4);
    FiberData inf = classify_fiber(top, Place::at_infinity());
    CHECK(inf.type.str() == "IV");
    CHECK(inf.vDelta == 4);
    CHECK(fs.back().place.infinite);
    CHECK(euler_characteristic(top) == 1);
    ShiodaTate st = shioda_tate_rank(top);
    REQUIRE(st.rank.has_value());
    CHECK(*st.rank == 6);
    CHECK(st.trivial_excess == 2);
}

TEST_CASE("y^2 = x^3 + t has rank zero") {
    WeierstrassSurface S = make_surface(UPoly(), tpow(1));
    CHECK(classify_fiber(S, Place::at_root(Scalar(0))).type.str() == "II");
    CHECK(classify_fiber(S, Place::at_infinity()).type.str() == "II*");
    CHECK(euler_characteristic(S) == 1);
    CHECK(*shioda_tate_rank(S).rank == 0);
}

TEST_CASE("places split over the active field") {
    // B = t^2 + 3: roots +-sqrt(-3)
    WeierstrassSurface q = make_surface(UPoly(), P({3, 0, 1}));
    auto fq = singular_fibers(q);
    REQUIRE(fq.size() == 2);
    CHECK(fq[0].place.degree() == 2);
    CHECK(fq[0].place.certified_irreducible);
    WeierstrassSurface k = make_surface(UPoly(), P({3, 0, 1}), -3);
    auto fk = singular_fibers(k);
    REQUIRE(fk.size() == 3);
    CHECK(fk[0].place.is_linear());
    CHECK(fk[1].place.is_linear());
    CHECK(fk[0].type.str() == "II");
    CHECK(fk[2].place.infinite);
    CHECK(fk[2].type.str() == "IV*");
}

TEST_CASE("quadratic twist at 0 and infinity follows the involution") {
    // local models at t = 0 for each type; the constant terms keep infinity generic
    struct Case {
        UPoly A, B;
        const char* type;
    };
    std::vector<Case> cases = {
        {P({1}), P({1}), "smooth"},         {P({-3}), P({2, 1}), "I1"},
        {P({-3}), P({2, 0, 1}), "I2"},       {tpow(1), tpow(1), "II"},
        {tpow(1), tpow(2), "III"},          {tpow(2), tpow(2), "IV"},
        {tpow(2), tpow(3), "I0*"},          {Scalar(-3) * tpow(2), P({0, 0, 0, 2, 1}), "I1*"},
        {tpow(3), tpow(4), "IV*"},          {tpow(3), tpow(5), "III*"},
        {tpow(4), tpow(5), "II*"},
    };
    for (auto& c : cases) {
        CAPTURE(c.type);
        WeierstrassSurface S = make_surface(c.A, c.B);
        CHECK(classify_fiber(S, Place::at_root(Scalar(0))).type.str() == c.type);
        SurfaceChange tw = quadratic_twist_0_infty(S);
        for (auto& tr : tw.transforms) {
            CAPTURE(tr.place.str());
            CHECK(tr.matches());
        }
        CHECK(tw.transforms[0].actual == twist_involution(parse_fiber_type(c.type)));
        SurfaceChange back = quadratic_twist_0_infty(tw.surface);
        CHECK(back.surface == S);
        CHECK(j_invariant(tw.surface) == j_invariant(S));
    }
}

TEST_CASE("base change predictions at ramified points") {
    WeierstrassSurface iii = make_surface(tpow(1), tpow(2) + UPoly(Scalar(1)) * tpow(6));
    CHECK(classify_fiber(iii, Place::at_root(Scalar(0))).type.str() == "III");
    SurfaceChange bc = base_change(iii, 2);
    CHECK(bc.transforms[0].actual.str() == "I0*");
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        for (auto& c : {std::pair{tpow(1), tpow(1)}, std::pair{tpow(2), tpow(3)}, std::pair{P({-3}), P({2, 1})}}) {
            WeierstrassSurface S = make_surface(c.first, c.second);
            SurfaceChange ch = base_change(S, n);
            for (auto& tr : ch.transforms) {
                CAPTURE(tr.place.str());
                CAPTURE(tr.before.str());
                CHECK(tr.matches());
            }
            CHECK(j_invariant(ch.surface) == j_invariant(S).subs_pow(n));
        }
    }
    WeierstrassSurface S = top_surface();
    CHECK(base_change(S, 1).surface == S);
    CHECK(ramified_cover_transform(parse_fiber_type("IV"), 2).str() == "IV*");
    CHECK(ramified_cover_transform(parse_fiber_type("II*"), 2).str() == "IV*");
    CHECK(ramified_cover_transform(parse_fiber_type("II"), 2).str() == "IV");
    CHECK(ramified_cover_transform(parse_fiber_type("I3*"), 2).str() == "I6");
    CHECK(ramified_cover_transform(parse_fiber_type("III*"), 2).str() == "I0*");
}
