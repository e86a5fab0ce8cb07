#pragma once

#include "kuwata/weierstrass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kuwata {

struct SectionError : Error {
    using Error::Error;
};

struct ComponentUnknown : Error {
    using Error::Error;
};

// A point of the generic fiber; the zero section is the point at infinity.
struct SectionPt {
    RatFunc x, y;
    bool zero = false;

    static SectionPt zero_section();
    friend bool operator==(const SectionPt& a, const SectionPt& b) {
        return a.zero == b.zero && (a.zero || (a.x == b.x && a.y == b.y));
    }
    std::string str() const;
};

RatFunc section_residual(const WeierstrassSurface& S, const RatFunc& x, const RatFunc& y);
// Throws SectionError carrying the nonzero residual.
SectionPt verify_section(const WeierstrassSurface& S, const RatFunc& x, const RatFunc& y);

SectionPt neg(const SectionPt& P);
SectionPt add(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q);
SectionPt mul(const WeierstrassSurface& S, const SectionPt& P, long n);

// (P.Z); the zero section returns the self-intersection convention -chi.
int pz_intersection(const WeierstrassSurface& S, const SectionPt& P);
// (P.Q), computed as ((P - Q).Z).
int pq_intersection(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q);
// Fiber-coordinate rule summed over rational meeting points (x-difference where y != 0, else
// y-difference). Valid only where the sections meet at smooth points of the Weierstrass model;
// nullopt when a meeting point is not a rational place.
std::optional<int> pq_intersection_local_rule(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q);

struct ComponentId {
    enum Kind { Identity, NonIdentity, Unknown } kind = Identity;
    Scalar key;  // distinguishes non-identity components where several exist
    std::string str() const;
};

ComponentId component_at(const WeierstrassSurface& S, const SectionPt& P, const FiberData& fiber);
// Local contribution of (P, Q) at one fiber (already weighted by the place degree).
Rat contribution(const FiberData& fiber, const ComponentId& cp, const ComponentId& cq);

struct ContributionEntry {
    int i = 0, j = 0;
    std::string place, type;
    Rat value;
};

struct GramReport {
    std::vector<SectionPt> sections;
    std::vector<std::vector<Rat>> matrix;
    int rank = 0;
    Rat det;
    int chi = 0;
    std::vector<ContributionEntry> ledger;
};

Rat height_pairing(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q);
GramReport gram_matrix(const WeierstrassSurface& S, const std::vector<SectionPt>& sections);

enum class SymmetryKind { Identity, OmegaX, InvertT, ScaleT };

struct Symmetry {
    SymmetryKind kind = SymmetryKind::Identity;
    Scalar zeta{1};  // for ScaleT: t -> zeta t
};

// The surface the symmetry carries S to (S itself for OmegaX and Identity).
WeierstrassSurface transport_surface(const WeierstrassSurface& S, const Symmetry& sym);
// Image of P, verified on transport_surface(S, sym).
SectionPt apply_symmetry(const WeierstrassSurface& S, const SectionPt& P, const Symmetry& sym);

Scalar omega();  // (-1 + sqrt(-3)) / 2

}  // namespace kuwata
