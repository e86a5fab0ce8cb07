#include "kuwata/weierstrass.hpp"

#include "kuwata/roots.hpp"

#include <algorithm>

namespace kuwata {

std::string FiberType::str() const {
    switch (kind) {
        case Kodaira::Smooth: return "smooth";
        case Kodaira::I: return "I" + std::to_string(nu);
        case Kodaira::IStar: return "I" + std::to_string(nu) + "*";
        case Kodaira::II: return "II";
        case Kodaira::III: return "III";
        case Kodaira::IV: return "IV";
        case Kodaira::IVStar: return "IV*";
        case Kodaira::IIIStar: return "III*";
        case Kodaira::IIStar: return "II*";
    }
    return "?";
}

FiberType parse_fiber_type(const std::string& s) {
    static const std::pair<const char*, Kodaira> fixed[] = {
        {"smooth", Kodaira::Smooth}, {"II", Kodaira::II},         {"III", Kodaira::III},
        {"IV", Kodaira::IV},         {"IV*", Kodaira::IVStar},    {"III*", Kodaira::IIIStar},
        {"II*", Kodaira::IIStar}};
    for (auto& [name, k] : fixed)
        if (s == name) return {k, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            int nu = std::stoi(digits);
            if (!star && nu == 0) return {Kodaira::Smooth, 0};
            return {star ? Kodaira::IStar : Kodaira::I, nu};
        }
    }
    throw Error("unknown fiber type '" + s + "'");
}

int component_count(const FiberType& t) {
    switch (t.kind) {
        case Kodaira::Smooth: return 1;
        case Kodaira::I: return t.nu;
        case Kodaira::IStar: return t.nu + 5;
        case Kodaira::II: return 1;
        case Kodaira::III: return 2;
        case Kodaira::IV: return 3;
        case Kodaira::IVStar: return 7;
        case Kodaira::IIIStar: return 8;
        case Kodaira::IIStar: return 9;
    }
    return 1;
}

int discriminant_valuation(const FiberType& t) {
    switch (t.kind) {
        case Kodaira::Smooth: return 0;
        case Kodaira::I: return t.nu;
        case Kodaira::IStar: return 6 + t.nu;
        case Kodaira::II: return 2;
        case Kodaira::III: return 3;
        case Kodaira::IV: return 4;
        case Kodaira::IVStar: return 8;
        case Kodaira::IIIStar: return 9;
        case Kodaira::IIStar: return 10;
    }
    return 0;
}

FiberType fiber_type_from_valuations(int vA, int vB, int vD) {
    if (vD == 0) return {Kodaira::Smooth, 0};
    if (vA == 0 || vB == 0) return {Kodaira::I, vD};  // vA = 0 forces vB = 0 when vD > 0
    if (vA >= 4 && vB >= 6) throw PreconditionError("model is not minimal at this place");
    if (vA == 2 && vB == 3 && vD > 6) return {Kodaira::IStar, vD - 6};
    switch (vD) {
        case 2: return {Kodaira::II, 0};
        case 3: return {Kodaira::III, 0};
        case 4: return {Kodaira::IV, 0};
        case 6: return {Kodaira::IStar, 0};
        case 8: return {Kodaira::IVStar, 0};
        case 9: return {Kodaira::IIIStar, 0};
        case 10: return {Kodaira::IIStar, 0};
        default: break;
    }
    throw Error("inconsistent valuations vA=" + std::to_string(vA) + " vB=" + std::to_string(vB) +
                " vDelta=" + std::to_string(vD));
}

FiberType twist_involution(const FiberType& t) {
    switch (t.kind) {
        case Kodaira::Smooth: return {Kodaira::IStar, 0};
        case Kodaira::I: return {Kodaira::IStar, t.nu};
        case Kodaira::IStar: return t.nu == 0 ? FiberType{Kodaira::Smooth, 0} : FiberType{Kodaira::I, t.nu};
        case Kodaira::II: return {Kodaira::IVStar, 0};
        case Kodaira::IVStar: return {Kodaira::II, 0};
        case Kodaira::III: return {Kodaira::IIIStar, 0};
        case Kodaira::IIIStar: return {Kodaira::III, 0};
        case Kodaira::IV: return {Kodaira::IIStar, 0};
        case Kodaira::IIStar: return {Kodaira::IV, 0};
    }
    return t;
}

FiberType ramified_cover_transform(const FiberType& t, int e) {
    if (e < 1) throw PreconditionError("ramification index must be positive");
    switch (t.kind) {
        case Kodaira::Smooth: return t;
        case Kodaira::I: return {Kodaira::I, e * t.nu};
        case Kodaira::IStar:
            if (e % 2 == 0) return t.nu == 0 ? FiberType{Kodaira::Smooth, 0} : FiberType{Kodaira::I, e * t.nu};
            return {Kodaira::IStar, e * t.nu};
        default: break;
    }
    // potentially good reduction: v(Delta) scales by e and is reduced mod 12
    int v = (e * discriminant_valuation(t)) % 12;
    switch (v) {
        case 0: return {Kodaira::Smooth, 0};
        case 2: return {Kodaira::II, 0};
        case 3: return {Kodaira::III, 0};
        case 4: return {Kodaira::IV, 0};
        case 6: return {Kodaira::IStar, 0};
        case 8: return {Kodaira::IVStar, 0};
        case 9: return {Kodaira::IIIStar, 0};
        case 10: return {Kodaira::IIStar, 0};
        default: break;
    }
    throw Error("no fiber type for reduced discriminant valuation " + std::to_string(v));
}

Place Place::at_infinity() {
    Place p;
    p.infinite = true;
    return p;
}

Place Place::at_root(const Scalar& r) {
    Place p;
    p.poly = UPoly::var() - UPoly(r);
    return p;
}

Place Place::of_poly(const UPoly& f, bool certified) {
    if (f.degree() < 1) throw PreconditionError("a place needs a nonconstant polynomial");
    Place p;
    p.poly = f.monic();
    p.certified_irreducible = certified || f.degree() == 1;
    return p;
}

Scalar Place::root() const {
    if (!is_linear()) throw PreconditionError("place is not a rational point");
    return -poly.coeff(0);
}

std::string Place::str() const {
    if (infinite) return "inf";
    if (is_linear()) return root().str();
    return poly.str();
}

std::string WeierstrassSurface::str() const {
    return "y^2 = x^3 + (" + A.str() + ")*x + (" + B.str() + ")";
}

namespace {

int weight_for(const UPoly& A, const UPoly& B) {
    int n = 1;
    if (!A.is_zero()) n = std::max(n, (A.degree() + 3) / 4);
    if (!B.is_zero()) n = std::max(n, (B.degree() + 5) / 6);
    return n;
}

int val(const UPoly& f, const UPoly& p) { return f.is_zero() ? kInfiniteValuation : valuation(f, p); }

int val_inf(const UPoly& f, int bound) { return f.is_zero() ? kInfiniteValuation : bound - f.degree(); }

// Coprime refinement of a squarefree g by the exact valuation of f (levels below cap).
std::vector<UPoly> refine_by_valuation(const UPoly& g, const UPoly& f, int cap) {
    std::vector<UPoly> out;
    UPoly prev = g;
    for (int m = 1; m <= cap; ++m) {
        UPoly ge = multiplicity_part(g, f, m);
        UPoly level = exact_div(prev, ge);
        if (level.degree() >= 1) out.push_back(level.monic());
        prev = ge;
        if (prev.degree() < 1) break;
    }
    if (prev.degree() >= 1) out.push_back(prev.monic());
    return out;
}

bool place_less(const FiberData& x, const FiberData& y) {
    const Place& p = x.place;
    const Place& q = y.place;
    if (p.infinite != q.infinite) return q.infinite;
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    if (p.is_linear()) {
        Scalar a = p.root(), b = q.root();
        if (a.height() != b.height()) return a.height() < b.height();
        return less_canonical(a, b);
    }
    return p.poly.str() < q.poly.str();
}

}  // namespace

WeierstrassSurface make_surface(const UPoly& A0, const UPoly& B0, long field_d) {
    UPoly A = A0, B = B0;
    UPoly delta = Scalar(-16) * (Scalar(4) * A.pow(3) + Scalar(27) * B.pow(2));
    if (delta.is_zero()) throw PreconditionError("singular generic fiber: 4A^3 + 27B^2 = 0");
    WeierstrassSurface S;
    S.field_d = field_d;
    if (field_d == 0) S.field_d = std::max(A.context(), B.context());
    else if ((A.context() != 0 && A.context() != field_d) || (B.context() != 0 && B.context() != field_d))
        throw ContextError("coefficients live outside the active field");
    RatFunc scale(1);
    for (;;) {
        UPoly g = A.is_zero() ? B : (B.is_zero() ? A : gcd(A, B));
        if (g.degree() < 1) break;
        UPoly s = squarefree_part(g);
        UPoly u = gcd(multiplicity_part(s, A, 4), multiplicity_part(s, B, 6));
        if (u.degree() < 1) break;
        A = exact_div(A, u.pow(4));
        B = exact_div(B, u.pow(6));
        scale = scale / RatFunc(u);
    }
    S.A = A;
    S.B = B;
    S.weight = weight_for(A, B);
    S.coord_scale = scale;
    return S;
}

WeierstrassSurface normalize_model(const RatFunc& A, const RatFunc& B, long field_d) {
    int k = 0;
    for (auto [f, w] : {std::pair{&A, 4}, std::pair{&B, 6}}) {
        const UPoly& den = f->den();
        if (den.degree() != den.low_degree())
            throw PreconditionError("poles away from t = 0 and t = infinity: denominator " + den.str());
        int e = den.degree();
        k = std::max(k, (e + w - 1) / w);
    }
    RatFunc tk = RatFunc(UPoly::var()).pow(k);
    RatFunc An = A * tk.pow(4), Bn = B * tk.pow(6);
    WeierstrassSurface S = make_surface(An.num(), Bn.num(), field_d);
    S.clearing_k = k;
    S.coord_scale = S.coord_scale * tk;
    return S;
}

UPoly discriminant(const WeierstrassSurface& S) {
    UPoly d = Scalar(-16) * (Scalar(4) * S.A.pow(3) + Scalar(27) * S.B.pow(2));
    if (d.is_zero()) throw PreconditionError("discriminant vanishes identically");
    return d;
}

RatFunc j_invariant(const WeierstrassSurface& S) {
    UPoly num = Scalar(-1728) * (Scalar(4) * S.A).pow(3);
    return RatFunc(num, discriminant(S));
}

LocalChart chart_at_infinity(const WeierstrassSurface& S) {
    int n = S.weight;
    return {S.A.is_zero() ? UPoly() : S.A.reverse(4 * n), S.B.is_zero() ? UPoly() : S.B.reverse(6 * n)};
}

FiberData classify_fiber(const WeierstrassSurface& S, const Place& place) {
    FiberData fd;
    fd.place = place;
    UPoly delta = discriminant(S);
    if (place.infinite) {
        int n = S.weight;
        fd.vA = val_inf(S.A, 4 * n);
        fd.vB = val_inf(S.B, 6 * n);
        fd.vDelta = 12 * n - delta.degree();
    } else {
        fd.vA = val(S.A, place.poly);
        fd.vB = val(S.B, place.poly);
        fd.vDelta = valuation(delta, place.poly);
    }
    while (fd.vA >= 4 && fd.vB >= 6) {
        fd.vA -= 4;
        fd.vB -= 6;
        fd.vDelta -= 12;
    }
    fd.type = fiber_type_from_valuations(fd.vA, fd.vB, fd.vDelta);
    fd.components = component_count(fd.type);
    return fd;
}

std::vector<FiberData> singular_fibers(const WeierstrassSurface& S) {
    std::vector<FiberData> out;
    UPoly delta = discriminant(S);
    for (auto& [g, mult] : squarefree_decomposition(delta)) {
        (void)mult;
        for (const UPoly& ga : refine_by_valuation(g, S.A, 5))
            for (const UPoly& piece : refine_by_valuation(ga, S.B, 7)) {
                RootReport rr = roots_in_field(piece, S.field_d);
                for (auto& r : rr.roots) out.push_back(classify_fiber(S, Place::at_root(r.root)));
                if (rr.cofactor.degree() >= 1)
                    out.push_back(classify_fiber(S, Place::of_poly(rr.cofactor, rr.cofactor.degree() <= 3)));
            }
    }
    FiberData inf = classify_fiber(S, Place::at_infinity());
    if (inf.type.kind != Kodaira::Smooth) out.push_back(inf);
    std::sort(out.begin(), out.end(), place_less);
    return out;
}

int euler_characteristic(const WeierstrassSurface& S) {
    int total = 0;
    for (auto& f : singular_fibers(S)) total += f.vDelta * f.place.degree();
    if (total % 12 != 0 || total == 0)
        throw Error("total discriminant valuation " + std::to_string(total) + " is not a positive multiple of 12");
    return total / 12;
}

ShiodaTate shioda_tate_rank(const WeierstrassSurface& S, std::optional<int> rho) {
    ShiodaTate st;
    for (auto& f : singular_fibers(S)) st.trivial_excess += (f.components - 1) * f.place.degree();
    st.chi = euler_characteristic(S);
    if (st.chi == 1) {
        st.rank = 8 - st.trivial_excess;
        st.formula = "rank = 8 - " + std::to_string(st.trivial_excess);
    } else if (rho) {
        st.rank = *rho - 2 - st.trivial_excess;
        st.formula = "rank = " + std::to_string(*rho) + " - 2 - " + std::to_string(st.trivial_excess);
    } else {
        st.formula = "rank = rho - 2 - " + std::to_string(st.trivial_excess);
    }
    return st;
}

SurfaceChange base_change(const WeierstrassSurface& S, int n) {
    if (n < 1) throw PreconditionError("base change degree must be positive");
    SurfaceChange ch;
    ch.surface = make_surface(S.A.subs_pow(n), S.B.subs_pow(n), S.field_d);
    ch.surface.clearing_k = S.clearing_k;
    ch.surface.coord_scale = S.coord_scale.subs_pow(n) * ch.surface.coord_scale;
    for (const Place& p : {Place::at_root(Scalar(0)), Place::at_infinity()}) {
        FiberTransform tr;
        tr.place = p;
        tr.before = classify_fiber(S, p).type;
        tr.predicted = ramified_cover_transform(tr.before, n);
        tr.actual = classify_fiber(ch.surface, p).type;
        ch.transforms.push_back(tr);
    }
    return ch;
}

SurfaceChange quadratic_twist_0_infty(const WeierstrassSurface& S) {
    SurfaceChange ch;
    UPoly t = UPoly::var();
    ch.surface = make_surface(S.A * t.pow(2), S.B * t.pow(3), S.field_d);
    for (const Place& p : {Place::at_root(Scalar(0)), Place::at_infinity()}) {
        FiberTransform tr;
        tr.place = p;
        tr.before = classify_fiber(S, p).type;
        tr.predicted = twist_involution(tr.before);
        tr.actual = classify_fiber(ch.surface, p).type;
        ch.transforms.push_back(tr);
    }
    return ch;
}

}  // namespace kuwata
