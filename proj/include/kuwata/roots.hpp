#pragma once

#include "kuwata/unipoly.hpp"

#include <cstdint>
#include <vector>

namespace kuwata {

struct RootMult {
    Scalar root;
    int multiplicity = 0;
};

struct RootReport {
    std::vector<RootMult> roots;  // ascending (canonical order)
    UPoly cofactor;               // f divided by prod (t - r)^m
};

// All rational roots of f (over Q) with multiplicities. Candidates come from p-adic lifting of
// simple roots modulo a good prime; every reported root is verified by exact evaluation.
RootReport rational_roots(const UPoly& f);

// Roots lying in Q(sqrt d) (d = 0 means Q). f may have coefficients in Q(sqrt d); such an f is
// searched through its norm f * conj(f) and the hits are checked against f itself.
RootReport roots_in_field(const UPoly& f, long d);

struct DivisorRootReport {
    std::vector<RootMult> roots;
    UPoly cofactor;
    bool overflow = false;  // divisor enumeration exceeded the cap; roots may be missing
};

// Textbook route: rational root theorem with trial-division factoring of the constant and
// leading coefficients, capped by the number of candidate divisors.
DivisorRootReport rational_roots_by_divisors(const UPoly& f, std::size_t divisor_cap = 100000);

// Degrees of the irreducible factors of f modulo p (distinct-degree factorization), ascending.
// Throws PreconditionError when p divides the leading coefficient or the discriminant.
std::vector<int> modular_degree_pattern(const UPoly& f, std::uint64_t p);

// Integer primitive polynomial proportional to a rational f: coefficients as Int, lowest first.
std::vector<Int> integer_primitive(const UPoly& f);

bool is_prime_u64(std::uint64_t n);

}  // namespace kuwata
