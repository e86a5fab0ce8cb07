#include "kuwata/mwlattice.hpp"

#include "kuwata/resultant.hpp"
#include "kuwata/roots.hpp"

namespace kuwata {

SectionPt SectionPt::zero_section() {
    SectionPt z;
    z.zero = true;
    return z;
}

std::string SectionPt::str() const {
    if (zero) return "O";
    return "(" + x.str() + ", " + y.str() + ")";
}

RatFunc section_residual(const WeierstrassSurface& S, const RatFunc& x, const RatFunc& y) {
    return y * y - x * x * x - RatFunc(S.A) * x - RatFunc(S.B);
}

SectionPt verify_section(const WeierstrassSurface& S, const RatFunc& x, const RatFunc& y) {
    RatFunc r = section_residual(S, x, y);
    if (!r.is_zero()) throw SectionError("not a section: residual " + r.str());
    SectionPt P;
    P.x = x;
    P.y = y;
    return P;
}

SectionPt neg(const SectionPt& P) {
    if (P.zero) return P;
    SectionPt Q = P;
    Q.y = -Q.y;
    return Q;
}

SectionPt add(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q) {
    if (P.zero) return Q;
    if (Q.zero) return P;
    RatFunc lambda;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return SectionPt::zero_section();
        lambda = (RatFunc(3) * P.x * P.x + RatFunc(S.A)) / (RatFunc(2) * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    SectionPt R;
    R.x = lambda * lambda - P.x - Q.x;
    R.y = lambda * (P.x - R.x) - P.y;
    return R;
}

SectionPt mul(const WeierstrassSurface& S, const SectionPt& P, long n) {
    if (n < 0) return neg(mul(S, P, -n));
    SectionPt acc = SectionPt::zero_section(), base = P;
    while (n) {
        if (n & 1) acc = add(S, acc, base);
        n >>= 1;
        if (n) base = add(S, base, base);
    }
    return acc;
}

namespace {

RatFunc tpow(int e) { return RatFunc(UPoly::monomial(Scalar(1), e)); }

RatFunc chart_inf(const RatFunc& f, int w) { return f.invert_var() * tpow(w); }

int pole_pairs(const RatFunc& x, int weight) {
    int total = 0;
    for (auto& [g, m] : squarefree_decomposition(x.den())) {
        if (m % 2) throw Error("odd pole order of x at " + g.str() + " (model not minimal?)");
        total += (m / 2) * g.degree();
    }
    if (!x.is_zero()) {
        int v = 2 * weight + x.valuation_at_infinity();
        if (v < 0) {
            if (v % 2) throw Error("odd pole order of x at infinity (model not minimal?)");
            total += -v / 2;
        }
    }
    return total;
}

// Section and model written in a chart where the place is pi = 0.
struct Local {
    RatFunc x, y;
    UPoly A, B, pi;
    bool linear = false;
    Scalar at;
};

Local localize(const WeierstrassSurface& S, const SectionPt& P, const Place& place) {
    Local L;
    if (place.infinite) {
        int n = S.weight;
        LocalChart ch = chart_at_infinity(S);
        L.x = chart_inf(P.x, 2 * n);
        L.y = chart_inf(P.y, 3 * n);
        L.A = ch.A;
        L.B = ch.B;
        L.pi = UPoly::var();
        L.linear = true;
        L.at = Scalar(0);
    } else {
        L.x = P.x;
        L.y = P.y;
        L.A = S.A;
        L.B = S.B;
        L.pi = place.poly;
        L.linear = place.is_linear();
        if (L.linear) L.at = place.root();
    }
    return L;
}

bool vanishes_at(const RatFunc& f, const UPoly& pi) { return f.is_zero() || f.valuation_at(pi) >= 1; }

bool passes_singular_point(const Local& L, const FiberData& fiber) {
    if (!L.x.is_zero() && L.x.valuation_at(L.pi) < 0) return false;
    if (fiber.type.kind == Kodaira::I) {
        // node at x = -3B / (2A)
        RatFunc f = RatFunc(Scalar(2) * L.A) * L.x + RatFunc(Scalar(3) * L.B);
        return vanishes_at(f, L.pi);
    }
    return vanishes_at(L.x, L.pi);
}

ComponentId keyed(const Local& L, const RatFunc& f, int e) {
    ComponentId c;
    if (!L.linear) {
        c.kind = ComponentId::Unknown;
        return c;
    }
    c.kind = ComponentId::NonIdentity;
    c.key = (f / RatFunc(L.pi).pow(e)).eval(L.at);
    return c;
}

std::optional<int> meet_at(const RatFunc& xp, const RatFunc& yp, const RatFunc& xq, const RatFunc& yq,
                           const Scalar& r) {
    UPoly pi = UPoly::var() - UPoly(r);
    bool pole_p = !xp.is_zero() && xp.valuation_at(pi) < 0;
    bool pole_q = !xq.is_zero() && xq.valuation_at(pi) < 0;
    if (pole_p != pole_q) return 0;
    if (pole_p) {
        RatFunc dz = xp / yp - xq / yq;
        if (dz.is_zero()) return std::nullopt;
        return dz.valuation_at(pi);
    }
    if (xp.eval(r) != xq.eval(r) || yp.eval(r) != yq.eval(r)) return 0;
    RatFunc d = yp.eval(r).is_zero() ? yp - yq : xp - xq;
    if (d.is_zero()) return std::nullopt;
    return d.valuation_at(pi);
}

}  // namespace

int pz_intersection(const WeierstrassSurface& S, const SectionPt& P) {
    if (P.zero) return -euler_characteristic(S);
    return pole_pairs(P.x, S.weight);
}

int pq_intersection(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q) {
    if (P == Q) throw PreconditionError("(P.Q) needs distinct sections");
    if (P.zero) return pz_intersection(S, Q);
    if (Q.zero) return pz_intersection(S, P);
    return pz_intersection(S, add(S, P, neg(Q)));
}

std::optional<int> pq_intersection_local_rule(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q) {
    if (P == Q || P.zero || Q.zero) throw PreconditionError("local rule needs distinct nonzero sections");
    int total = 0;
    RatFunc dx = P.x - Q.x, dy = P.y - Q.y;
    UPoly cand = dx.is_zero() ? dy.num() : dx.num();
    UPoly poles = gcd(P.x.den(), Q.x.den());
    for (const UPoly& f : {cand, poles}) {
        if (f.degree() < 1) continue;
        RootReport rr = roots_in_field(squarefree_part(f), S.field_d);
        if (rr.cofactor.degree() >= 1) {
            // a meeting point at a non-rational place cannot be handled here
            UPoly g = &f == &poles ? rr.cofactor : gcd(rr.cofactor, dy.is_zero() ? dx.num() : dy.num());
            if (g.degree() >= 1) return std::nullopt;
        }
        for (auto& r : rr.roots) {
            auto m = meet_at(P.x, P.y, Q.x, Q.y, r.root);
            if (!m) return std::nullopt;
            total += *m;
        }
    }
    int n = S.weight;
    auto m = meet_at(chart_inf(P.x, 2 * n), chart_inf(P.y, 3 * n), chart_inf(Q.x, 2 * n), chart_inf(Q.y, 3 * n),
                     Scalar(0));
    if (!m) return std::nullopt;
    return total + *m;
}

std::string ComponentId::str() const {
    switch (kind) {
        case Identity: return "identity";
        case NonIdentity: return "non-identity[" + key.str() + "]";
        case Unknown: return "unknown";
    }
    return "?";
}

ComponentId component_at(const WeierstrassSurface& S, const SectionPt& P, const FiberData& fiber) {
    ComponentId id;
    if (P.zero || fiber.components == 1) return id;
    Local L = localize(S, P, fiber.place);
    if (!passes_singular_point(L, fiber)) return id;
    const FiberType& t = fiber.type;
    if ((t.kind == Kodaira::I && t.nu == 2) || t.kind == Kodaira::III || t.kind == Kodaira::IIIStar) {
        id.kind = ComponentId::NonIdentity;
        id.key = Scalar(1);
        return id;
    }
    if (t.kind == Kodaira::IV) return keyed(L, L.y, 1);
    if (t.kind == Kodaira::IVStar) return keyed(L, L.y, 2);
    if (t.kind == Kodaira::IStar && t.nu == 0) return keyed(L, L.x, 1);
    id.kind = ComponentId::Unknown;
    return id;
}

Rat contribution(const FiberData& fiber, const ComponentId& cp, const ComponentId& cq) {
    if (cp.kind == ComponentId::Identity || cq.kind == ComponentId::Identity) return Rat(0);
    if (cp.kind == ComponentId::Unknown || cq.kind == ComponentId::Unknown)
        throw ComponentUnknown("needs manual component data at " + fiber.place.str() + " (" + fiber.type.str() + ")");
    bool same = cp.key == cq.key;
    Rat v;
    switch (fiber.type.kind) {
        case Kodaira::I:
        case Kodaira::III: v = Rat(1, 2); break;
        case Kodaira::IIIStar: v = Rat(3, 2); break;
        case Kodaira::IV: v = same ? Rat(2, 3) : Rat(1, 3); break;
        case Kodaira::IVStar: v = same ? Rat(4, 3) : Rat(2, 3); break;
        case Kodaira::IStar: v = same ? Rat(1) : Rat(1, 2); break;
        default: throw ComponentUnknown("no contribution table for " + fiber.type.str());
    }
    return v * fiber.place.degree();
}

namespace {

struct SectionData {
    int pz = 0;
    std::vector<ComponentId> comps;
};

SectionData section_data(const WeierstrassSurface& S, const SectionPt& P, const std::vector<FiberData>& fibers) {
    SectionData d;
    d.pz = pz_intersection(S, P);
    for (auto& f : fibers) d.comps.push_back(component_at(S, P, f));
    return d;
}

Rat pairing(const WeierstrassSurface& S, int chi, const std::vector<FiberData>& fibers, const SectionPt& P,
            const SectionData& dp, const SectionPt& Q, const SectionData& dq, int i, int j,
            std::vector<ContributionEntry>* ledger) {
    if (P.zero || Q.zero) return Rat(0);
    Rat h = P == Q ? Rat(2 * chi + 2 * dp.pz) : Rat(chi + dp.pz + dq.pz - pq_intersection(S, P, Q));
    for (size_t k = 0; k < fibers.size(); ++k) {
        Rat c = contribution(fibers[k], dp.comps[k], dq.comps[k]);
        if (sgn(c) == 0) continue;
        h -= c;
        if (ledger) ledger->push_back({i, j, fibers[k].place.str(), fibers[k].type.str(), c});
    }
    return h;
}

}  // namespace

Rat height_pairing(const WeierstrassSurface& S, const SectionPt& P, const SectionPt& Q) {
    auto fibers = singular_fibers(S);
    int chi = euler_characteristic(S);
    return pairing(S, chi, fibers, P, section_data(S, P, fibers), Q, section_data(S, Q, fibers), 0, 0, nullptr);
}

GramReport gram_matrix(const WeierstrassSurface& S, const std::vector<SectionPt>& sections) {
    GramReport rep;
    rep.sections = sections;
    auto fibers = singular_fibers(S);
    rep.chi = euler_characteristic(S);
    std::vector<SectionData> data;
    for (auto& P : sections) data.push_back(section_data(S, P, fibers));
    const size_t n = sections.size();
    rep.matrix.assign(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Rat h = pairing(S, rep.chi, fibers, sections[i], data[i], sections[j], data[j], static_cast<int>(i),
                            static_cast<int>(j), &rep.ledger);
            rep.matrix[i][j] = h;
            rep.matrix[j][i] = h;
        }
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = Scalar(rep.matrix[i][j]);
    RankDet rd = exact_rank_det(m);
    rep.rank = rd.rank;
    rep.det = n == 0 ? Rat(1) : rd.det.rational();
    return rep;
}

Scalar omega() { return Scalar(Rat(-1, 2), Rat(1, 2), -3); }

WeierstrassSurface transport_surface(const WeierstrassSurface& S, const Symmetry& sym) {
    switch (sym.kind) {
        case SymmetryKind::Identity: return S;
        case SymmetryKind::OmegaX: {
            if (!S.A.is_zero()) throw PreconditionError("x -> omega x needs A = 0 (j = 0)");
            if (S.field_d != 0 && S.field_d != -3) throw ContextError("x -> omega x needs the field Q(sqrt(-3))");
            WeierstrassSurface T = S;
            T.field_d = -3;
            return T;
        }
        case SymmetryKind::InvertT: {
            int n = S.weight;
            LocalChart ch = chart_at_infinity(S);
            WeierstrassSurface T = make_surface(ch.A, ch.B, S.field_d);
            if (T.weight != n) throw Error("t -> 1/t changed the model weight");
            return T;
        }
        case SymmetryKind::ScaleT: {
            if (sym.zeta.is_zero()) throw PreconditionError("t -> zeta t needs zeta != 0");
            long d = S.field_d != 0 ? S.field_d : sym.zeta.d();
            return make_surface(S.A.scale_var(sym.zeta), S.B.scale_var(sym.zeta), d);
        }
    }
    return S;
}

SectionPt apply_symmetry(const WeierstrassSurface& S, const SectionPt& P, const Symmetry& sym) {
    WeierstrassSurface T = transport_surface(S, sym);
    if (P.zero) return P;
    RatFunc x, y;
    switch (sym.kind) {
        case SymmetryKind::Identity: return P;
        case SymmetryKind::OmegaX:
            x = P.x * RatFunc(omega());
            y = P.y;
            break;
        case SymmetryKind::InvertT:
            x = chart_inf(P.x, 2 * S.weight);
            y = chart_inf(P.y, 3 * S.weight);
            break;
        case SymmetryKind::ScaleT:
            x = P.x.scale_var(sym.zeta);
            y = P.y.scale_var(sym.zeta);
            break;
    }
    return verify_section(T, x, y);
}

}  // namespace kuwata
