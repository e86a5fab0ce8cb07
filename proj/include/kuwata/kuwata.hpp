#pragma once

#include "kuwata/multipoly.hpp"
#include "kuwata/mwlattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kuwata {

struct Depressed {
    Scalar a, b, delta;
};

// y^2 = x(x - lambda)(x - mu) moved to y^2 = x^3 + a x + b by x -> x + (lambda + mu)/3.
Depressed legendre_to_depressed(const Scalar& lambda, const Scalar& mu);

struct CurveSpec {
    Scalar a, b;
    std::optional<std::array<Scalar, 2>> legendre;  // (lambda, mu) when known

    static CurveSpec from_depressed(const Scalar& a, const Scalar& b);
    static CurveSpec from_legendre(const Scalar& lambda, const Scalar& mu);
    Scalar delta() const;  // -16 (4 a^3 + 27 b^2)
    Scalar j() const;
};

struct KuwataFamily {
    CurveSpec E, F;
    int h = 0;         // 0 not isogenous, 1 isogenous without CM, 2 with CM (user supplied)
    long field_d = 0;  // active quadratic context

    // Throws PreconditionError when j(E) = j(F) or h is out of range.
    static KuwataFamily make(const CurveSpec& E, const CurveSpec& F, int h = 0, long field_d = 0);
    static KuwataFamily from_legendre(const Scalar& lambda, const Scalar& mu, const Scalar& nu, const Scalar& xi,
                                      int h = 0, long field_d = 0);
    bool has_legendre() const { return E.legendre && F.legendre; }
    // lambda, mu, nu, xi; throws PreconditionError without Legendre data
    std::array<Scalar, 4> legendre() const;
    // Delta(F) t + 864 b d + Delta(E) / t
    RatFunc B() const;
    Scalar ratio() const;  // Delta(E) / Delta(F)
};

// Normalized model of y^2 = x^3 - 48 a c x + B(t^i).
WeierstrassSurface build_pi(const KuwataFamily& fam, int i);
// Twist of pi_i by the places 0 and infinity, i in {1, 2, 3}.
WeierstrassSurface build_twist(const KuwataFamily& fam, int i);

struct Deflation {
    int k = 3;
    Scalar alpha;
    int sign = 1;              // s = sign * (t + alpha / t)
    UPoly deflation_poly;      // s^3 - 3 alpha s, or s^5 - 5 alpha s^3 + 5 alpha^2 s
    WeierstrassSurface psi;    // y^2 = x^3 - 48 a c x - Delta(F) deflation_poly(s) + 864 b d
    WeierstrassSurface pi;     // build_pi(fam, k), the target of pullbacks
    std::vector<std::string> witness;
};

// root_choice r picks alpha * omega^r; r != 0 needs k = 3 and moves to Q(sqrt(-3)).
Deflation deflate(const KuwataFamily& fam, int i, int root_choice = 0);
SectionPt pullback_section(const Deflation& defl, const SectionPt& P);

struct RankValue {
    int rank = 0;
    bool lower_bound = false;
};
// rank MW(pi_i) for j(E) != j(F): i in 1..6, or i = 60 (lower bound).
RankValue expected_ranks(int i, int h);
// Upper bound for the rank over Q, i in 1..6.
int q_rank_bound(int i);

struct SquareCheck {
    std::string label;
    Scalar value;
    std::optional<Scalar> root;
};

struct CorqReport {
    Rat rho, tau, u;
    Rat l, m, n, k, l2, n2;
    Rat lambda, mu, nu, xi;
    Rat legendre_E, legendre_F;  // lambda / mu and nu / xi
    std::vector<SquareCheck> squares;
    bool j_distinct = false;
    bool valid = false;
    std::vector<std::string> problems;
};

// Throws PreconditionError for rho or tau in {0, 1, -1} or u = 0.
CorqReport corq_params(const Rat& rho, const Rat& tau, const Rat& u);
// First valid triple in a fixed enumeration of small integers (rho, tau in 2..bound, u in 1..bound).
std::optional<CorqReport> corq_search(int bound);

struct CatalogPoint {
    std::string label;
    SectionPt P;
};

// P1..P4 over Q (primed = false) or P1'..P4' over Q(i) (primed = true), on build_twist(fam, 2)
// with the field set accordingly. Throws SectionError when a needed square root is missing.
std::vector<CatalogPoint> pi2prime_points(const KuwataFamily& fam, bool primed);
WeierstrassSurface pi2prime_surface(const KuwataFamily& fam, bool primed);
// Every consistent sign choice of the four square roots in the point formula, for both the identity
// and the sigma-transported parameters; over_q_only keeps sections with rational coefficients.
std::vector<CatalogPoint> pi2prime_sign_variants(const KuwataFamily& fam, bool primed, bool over_q_only);

// The nine degree-2 sections of build_twist(fam, 3) from the matrix of differences of roots.
std::vector<CatalogPoint> nine_lines_sections(const KuwataFamily& fam);

// Variables of the cubic surface: X, Y, Z, W.
extern const std::vector<std::string> kCubicVars;

struct LineOnCubic {
    std::array<Scalar, 4> H, H2;  // linear forms in X, Y, Z, W
    std::string kind;             // coordinate | graph
    std::vector<int> sigma;       // for graph lines: Q_{sigma(i)} matched with P_i
    int k = -1;                   // cube-root index
    std::string field;            // Q | Q(sqrt(-3)) | requires extension
    std::string datum;            // coordinate | cube-root | cube-root+mu3
    bool contained = false;
    std::optional<Scalar> gamma;  // X where the line meets Y = W = 1
};

struct GraphData {
    std::vector<int> sigma;
    std::array<Scalar, 4> form;  // coefficients of XZ, XY, WZ, WY
    Scalar kappa;                // h(M(Z, Y)) = kappa g(Z, Y)
    std::optional<Rat> cube_root;  // rational s with s^3 = 1 / kappa
    UPoly f;                     // cubic cofactor of the dehomogenized intersection
    bool gamma_roots_of_f = false;
};

struct CubicLinesReport {
    MultiPoly cubic;            // Z (Z - nu Y)(Z - xi Y) - X (X - lambda W)(X - mu W)
    MultiPoly cubic_depressed;  // Z^3 + c Z Y^2 + d Y^3 - X^3 - a X W^2 - b W^3
    std::vector<LineOnCubic> lines;
    std::vector<GraphData> graphs;
    int count(const std::string& datum) const;
};

// Lines are built over Q(sqrt(-3)).
CubicLinesReport cubic_surface_and_lines(const Scalar& lambda, const Scalar& mu, const Scalar& nu, const Scalar& xi);
CubicLinesReport cubic_surface_and_lines(const KuwataFamily& fam);
// Substitutes the line into the cubic and checks that nothing is left.
bool line_on_cubic(const MultiPoly& cubic, const std::array<Scalar, 4>& H, const std::array<Scalar, 4>& H2);

// tau (tau^4 - 1) / (rho (rho^4 - 1)) is a cube in Q.
bool cube_condition(const Rat& rho, const Rat& tau);

struct ConicPoint {
    Rat lambda, nu;
};
// Rational point on lambda (lambda - mu) mu = tau^3 nu (nu - xi) xi on the line nu = m lambda.
std::optional<ConicPoint> conic_cube_example(const Rat& tau, const Rat& mu, const Rat& xi, const Rat& m);

}  // namespace kuwata
