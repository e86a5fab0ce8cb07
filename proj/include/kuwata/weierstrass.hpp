#pragma once

#include "kuwata/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kuwata {

enum class Kodaira { Smooth, I, IStar, II, III, IV, IVStar, IIIStar, IIStar };

struct FiberType {
    Kodaira kind = Kodaira::Smooth;
    int nu = 0;  // index for I_nu and I_nu*
    std::string str() const;
    friend bool operator==(const FiberType& a, const FiberType& b) {
        return a.kind == b.kind && (a.kind != Kodaira::I && a.kind != Kodaira::IStar ? true : a.nu == b.nu);
    }
};

FiberType parse_fiber_type(const std::string& s);
int component_count(const FiberType& t);
// Discriminant valuation of a minimal model with this fiber.
int discriminant_valuation(const FiberType& t);
// Type from valuations of a locally minimal model (char 0). Use kInfiniteValuation for A = 0 or B = 0.
FiberType fiber_type_from_valuations(int vA, int vB, int vDelta);
// Quadratic twist at a place: I_nu <-> I_nu*, II <-> IV*, III <-> III*, IV <-> II*.
FiberType twist_involution(const FiberType& t);
// Fiber above a point of ramification index e under a cyclic base change.
FiberType ramified_cover_transform(const FiberType& t, int e);

constexpr int kInfiniteValuation = 1 << 20;

struct Place {
    bool infinite = false;
    UPoly poly;  // monic squarefree; empty for the place at infinity
    bool certified_irreducible = true;

    static Place at_infinity();
    static Place at_root(const Scalar& r);
    static Place of_poly(const UPoly& p, bool certified);
    int degree() const { return infinite ? 1 : poly.degree(); }
    bool is_linear() const { return !infinite && poly.degree() == 1; }
    Scalar root() const;  // for linear places
    std::string str() const;
    friend bool operator==(const Place& a, const Place& b) { return a.infinite == b.infinite && a.poly == b.poly; }
};

struct FiberData {
    Place place;
    FiberType type;
    int vA = 0, vB = 0, vDelta = 0;
    int components = 1;
};

// y^2 = x^3 + A x + B over K(t), minimal at every finite place. The chart at infinity is
// A*(u) = u^(4n) A(1/u), B*(u) = u^(6n) B(1/u) with n = weight (minimal).
struct WeierstrassSurface {
    UPoly A, B;
    int weight = 1;
    long field_d = 0;        // active quadratic context (0 = Q)
    int clearing_k = 0;      // k of the (u^(2k) x, u^(3k) y) clearing substitution, u = t
    RatFunc coord_scale{1};  // model coordinates = coord_scale^2 x, coord_scale^3 y of the input model

    friend bool operator==(const WeierstrassSurface& a, const WeierstrassSurface& b) {
        return a.A == b.A && a.B == b.B && a.weight == b.weight;
    }
    std::string str() const;
};

// Minimalizes at finite places and picks the minimal weight at infinity.
WeierstrassSurface make_surface(const UPoly& A, const UPoly& B, long field_d = 0);
// Clears poles at t = 0 by (x, y) -> (t^(2k) x, t^(3k) y) with minimal k; poles elsewhere are rejected.
WeierstrassSurface normalize_model(const RatFunc& A, const RatFunc& B, long field_d = 0);

UPoly discriminant(const WeierstrassSurface& S);
RatFunc j_invariant(const WeierstrassSurface& S);

struct LocalChart {
    UPoly A, B;
};
LocalChart chart_at_infinity(const WeierstrassSurface& S);

FiberData classify_fiber(const WeierstrassSurface& S, const Place& place);
// All singular fibers: finite places from the discriminant, then infinity.
std::vector<FiberData> singular_fibers(const WeierstrassSurface& S);

int euler_characteristic(const WeierstrassSurface& S);

struct ShiodaTate {
    int chi = 0;
    int trivial_excess = 0;  // sum over places of (m - 1) * deg
    std::optional<int> rank;
    std::string formula;
};
ShiodaTate shioda_tate_rank(const WeierstrassSurface& S, std::optional<int> rho = std::nullopt);

struct FiberTransform {
    Place place;
    FiberType before, predicted, actual;
    bool matches() const { return predicted == actual; }
};

struct SurfaceChange {
    WeierstrassSurface surface;
    std::vector<FiberTransform> transforms;
};

SurfaceChange base_change(const WeierstrassSurface& S, int n);
SurfaceChange quadratic_twist_0_infty(const WeierstrassSurface& S);

}  // namespace kuwata
