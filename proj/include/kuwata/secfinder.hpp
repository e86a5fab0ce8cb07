#pragma once

#include "kuwata/mwlattice.hpp"
#include "kuwata/multipoly.hpp"
#include "kuwata/roots.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kuwata {

// Unknowns of the ansatz x = p1^2 t^2 + b1 t + b0, y = p1^3 t^3 + c2 t^2 + c1 t + c0.
extern const std::vector<std::string> kAnsatzVars;  // t, p1, b1, b0, c2, c1, c0

// c = num / den with den a monomial in p1 (p1 != 0 branch).
struct SolvedLinear {
    std::string var;
    MultiPoly num, den;
};

struct AnsatzState {
    std::vector<MultiPoly> equations;  // coefficient of t^k in y^2 - x^3 - A x - B, k = 0..6
    std::vector<SolvedLinear> solved;  // c2, c1, c0 in terms of p1, b1, b0
    std::vector<MultiPoly> residual;   // F1, F2, F3 from t^2, t^1, t^0
    std::vector<Scalar> alpha, beta;      // coefficients of A (deg <= 3) and B (deg <= 5)
};

// Throws PreconditionError ("ansatz inapplicable") unless weight 1, deg A <= 3, deg B <= 5.
AnsatzState derive_coefficient_system(const WeierstrassSurface& S);

struct ModularPattern {
    std::uint64_t prime = 0;
    std::vector<int> degrees;
};

struct BranchReport {
    std::string branch;
    std::string status = "ok";  // ok | skipped | degenerate | budget-exceeded | not-applicable
    std::string eliminant_var;
    UPoly eliminant;
    int predicted_degree = -1;  // a-priori bound on the eliminant degree (p1 != 0 branch)
    std::vector<RootMult> rational_roots;
    std::vector<RootMult> field_roots;  // roots in the active quadratic field that are not rational
    UPoly cofactor;                     // part of the eliminant without roots in the active field
    std::vector<ModularPattern> modular_patterns;
    std::vector<std::string> notes;
    int candidates = 0;
};

struct EliminationReport {
    std::vector<BranchReport> branches;
    std::vector<SectionPt> sections;  // one per x-coordinate, sorted by (deg x, height)
    bool budget_exceeded = false;
    double seconds = 0;
};

struct FinderConfig {
    int degree_budget = 2000;
    std::vector<std::uint64_t> primes = {101, 103, 107};
    int threads = 0;  // 0: KUWATA_THREADS or 1
};

EliminationReport find_sections(const WeierstrassSurface& S, const FinderConfig& cfg = {});

// Canonical representative of {P, -P}: leading coefficient of y has positive canonical sign.
SectionPt canonical_sign(const SectionPt& P);
// Sort key order used by reports.
bool section_less(const SectionPt& P, const SectionPt& Q);

// Grid oracle: every (p1, b1, b0) in {n/d : |n| <= num_bound, 1 <= d <= den_bound} for which
// x^3 + A x + B is the square of a polynomial of degree <= 3.
std::vector<SectionPt> brute_force_sections(const WeierstrassSurface& S, int num_bound, int den_bound);

}  // namespace kuwata
