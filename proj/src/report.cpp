#include "kuwata/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kuwata {

namespace {

Json rat_json(const Rat& q) { return rat_str(q); }

Json matrix_json(const std::vector<std::vector<Rat>>& m) {
    Json out = Json::array();
    for (auto& row : m) {
        Json r = Json::array();
        for (auto& v : row) r.push_back(rat_json(v));
        out.push_back(r);
    }
    return out;
}

Json roots_json(const std::vector<RootMult>& v) {
    Json out = Json::array();
    for (auto& r : v) out.push_back({{"root", to_json(r.root)}, {"multiplicity", r.multiplicity}});
    return out;
}

Json sections_json(const std::vector<SectionPt>& v) {
    Json out = Json::array();
    for (auto& s : v) out.push_back(to_json(s));
    return out;
}

Json forms_json(const std::array<Scalar, 4>& f) {
    Json out = Json::array();
    for (auto& c : f) out.push_back(to_json(c));
    return out;
}

std::string linear_form_text(const std::array<Scalar, 4>& f) {
    std::string out;
    for (size_t i = 0; i < 4; ++i) {
        if (f[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + f[i].str() + ")*" + kCubicVars[i];
    }
    return out.empty() ? "0" : out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Scalar parse_scalar_text(const std::string& text) {
    try {
        return Scalar::parse(text);
    } catch (const std::exception& e) {
        throw InputError("malformed scalar '" + text + "': " + e.what());
    }
}

UPoly parse_coeff_list(const std::string& text) {
    std::vector<Scalar> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_scalar_text(trim(item)));
    if (c.empty()) throw InputError("empty coefficient list");
    return UPoly(c);
}

int parse_index(const std::string& spec, size_t from) {
    std::string digits = spec.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad surface spec '" + spec + "'");
    return std::stoi(digits);
}

bool is_leaf(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string leaf_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    return j.dump();
}

void render_text(const Json& j, int indent, std::ostringstream& out);

void render_value(const std::string& label, const Json& v, int indent, std::ostringstream& out) {
    std::string pad(static_cast<size_t>(indent), ' ');
    if (v.is_object() && v.contains("coeffs") && v.contains("text")) {
        out << pad << label << v["text"].get<std::string>() << "\n";
    } else if (is_leaf(v)) {
        out << pad << label << leaf_text(v) << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_leaf)) {
        out << pad << label << "[";
        bool first = true;
        for (auto& e : v) {
            out << (first ? "" : ", ") << leaf_text(e);
            first = false;
        }
        out << "]\n";
    } else if (v.empty()) {
        out << pad << label << (v.is_array() ? "[]" : "{}") << "\n";
    } else if (label == "- " && v.is_object()) {
        // first key on the dash line
        std::ostringstream inner;
        render_text(v, indent + 2, inner);
        std::string s = inner.str();
        out << pad << "- " << s.substr(static_cast<size_t>(indent) + 2);
    } else {
        out << pad << label.substr(0, label.find_last_not_of(' ') + 1) << "\n";
        render_text(v, indent + 2, out);
    }
}

void render_text(const Json& j, int indent, std::ostringstream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) render_value(it.key() + ": ", it.value(), indent, out);
    } else if (j.is_array()) {
        for (auto& e : j) render_value("- ", e, indent, out);
    } else {
        render_value("", j, indent, out);
    }
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const UPoly& f) {
    Json c = Json::array();
    for (auto& x : f.coeffs()) c.push_back(to_json(x));
    return {{"coeffs", c}, {"text", f.str()}};
}

Json to_json(const RatFunc& f) {
    if (f.is_polynomial()) return to_json(f.num());
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.str()}};
}

Json to_json(const SectionPt& P) {
    if (P.zero) return {{"zero", true}};
    return {{"x", to_json(P.x)}, {"y", to_json(P.y)}};
}

Json to_json(const Place& p) { return p.str(); }

Json to_json(const FiberData& f) {
    Json j = {{"place", to_json(f.place)},
              {"placeDegree", f.place.degree()},
              {"type", f.type.str()},
              {"vA", f.vA >= kInfiniteValuation ? Json("inf") : Json(f.vA)},
              {"vB", f.vB >= kInfiniteValuation ? Json("inf") : Json(f.vB)},
              {"vDelta", f.vDelta},
              {"components", f.components}};
    if (!f.place.certified_irreducible) j["irreducibleCertified"] = false;
    return j;
}

Json to_json(const WeierstrassSurface& S) {
    Json fibers = Json::array();
    for (auto& f : singular_fibers(S)) fibers.push_back(to_json(f));
    ShiodaTate st = shioda_tate_rank(S);
    Json stj = {{"chi", st.chi}, {"trivialExcess", st.trivial_excess}, {"formula", st.formula}};
    stj["rank"] = st.rank ? Json(*st.rank) : Json(nullptr);
    return {{"equation", S.str()}, {"A", to_json(S.A)},        {"B", to_json(S.B)}, {"weight", S.weight},
            {"fieldD", S.field_d}, {"fibers", fibers}, {"shiodaTate", stj}};
}

Json to_json(const GramReport& g) {
    Json ledger = Json::array();
    for (auto& e : g.ledger)
        ledger.push_back({{"i", e.i}, {"j", e.j}, {"place", e.place}, {"type", e.type}, {"value", rat_json(e.value)}});
    return {{"sections", sections_json(g.sections)},
            {"matrix", matrix_json(g.matrix)},
            {"rank", g.rank},
            {"det", rat_json(g.det)},
            {"chi", g.chi},
            {"contributions", ledger}};
}

Json to_json(const EliminationReport& r) {
    Json branches = Json::array();
    for (auto& b : r.branches) {
        Json pats = Json::array();
        for (auto& m : b.modular_patterns) pats.push_back({{"prime", m.prime}, {"degrees", m.degrees}});
        Json bj = {{"branch", b.branch},
                   {"status", b.status},
                   {"eliminantVar", b.eliminant_var},
                   {"resultantDegree", b.eliminant.is_zero() ? Json(nullptr) : Json(b.eliminant.degree())},
                   {"predictedDegree", b.predicted_degree < 0 ? Json(nullptr) : Json(b.predicted_degree)},
                   {"rationalRoots", roots_json(b.rational_roots)},
                   {"fieldRoots", roots_json(b.field_roots)},
                   {"cofactorDegree", b.cofactor.is_zero() ? Json(nullptr) : Json(b.cofactor.degree())},
                   {"modularPatterns", pats},
                   {"candidates", b.candidates},
                   {"notes", b.notes}};
        branches.push_back(bj);
    }
    return {{"branches", branches}, {"sections", sections_json(r.sections)}, {"budgetExceeded", r.budget_exceeded}};
}

Json to_json(const CurveSpec& c) {
    Json j = {{"a", to_json(c.a)}, {"b", to_json(c.b)}, {"delta", to_json(c.delta())}, {"j", to_json(c.j())}};
    if (c.legendre) j["legendre"] = {to_json((*c.legendre)[0]), to_json((*c.legendre)[1])};
    return j;
}

Json to_json(const KuwataFamily& fam) {
    return {{"E", to_json(fam.E)},
            {"F", to_json(fam.F)},
            {"h", fam.h},
            {"D", fam.field_d},
            {"ratio", to_json(fam.ratio())},
            {"B", to_json(fam.B())}};
}

Json to_json(const Deflation& d) {
    return {{"k", d.k},
            {"alpha", to_json(d.alpha)},
            {"sign", d.sign},
            {"deflationPoly", to_json(d.deflation_poly)},
            {"psi", to_json(d.psi)},
            {"pi", d.pi.str()},
            {"witness", d.witness}};
}

Json to_json(const CorqReport& r) {
    Json sq = Json::array();
    for (auto& s : r.squares)
        sq.push_back({{"label", s.label}, {"value", to_json(s.value)}, {"root", s.root ? to_json(*s.root) : Json(nullptr)}});
    return {{"rho", rat_json(r.rho)},
            {"tau", rat_json(r.tau)},
            {"u", rat_json(r.u)},
            {"l", rat_json(r.l)},
            {"m", rat_json(r.m)},
            {"n", rat_json(r.n)},
            {"k", rat_json(r.k)},
            {"l2", rat_json(r.l2)},
            {"n2", rat_json(r.n2)},
            {"family",
             {{"lambda", rat_json(r.lambda)}, {"mu", rat_json(r.mu)}, {"nu", rat_json(r.nu)}, {"xi", rat_json(r.xi)}}},
            {"legendreE", rat_json(r.legendre_E)},
            {"legendreF", rat_json(r.legendre_F)},
            {"squares", sq},
            {"jDistinct", r.j_distinct},
            {"valid", r.valid},
            {"problems", r.problems}};
}

Json to_json(const CubicLinesReport& r) {
    Json lines = Json::array();
    for (auto& l : r.lines) {
        Json j = {{"kind", l.kind},
                  {"H", linear_form_text(l.H)},
                  {"H2", linear_form_text(l.H2)},
                  {"field", l.field},
                  {"datum", l.datum},
                  {"contained", l.contained}};
        if (l.kind == "graph") {
            j["sigma"] = l.sigma;
            j["k"] = l.k;
        }
        j["gamma"] = l.gamma ? to_json(*l.gamma) : Json(nullptr);
        lines.push_back(j);
    }
    Json graphs = Json::array();
    for (auto& g : r.graphs)
        graphs.push_back({{"sigma", g.sigma},
                          {"form", forms_json(g.form)},
                          {"kappa", to_json(g.kappa)},
                          {"cubeRoot", g.cube_root ? rat_json(*g.cube_root) : Json(nullptr)},
                          {"f", to_json(g.f)},
                          {"gammaRootsOfF", g.gamma_roots_of_f}});
    return {{"cubic", r.cubic.str()},
            {"cubicDepressed", r.cubic_depressed.str()},
            {"counts",
             {{"coordinate", r.count("coordinate")},
              {"cubeRoot", r.count("cube-root")},
              {"cubeRootMu3", r.count("cube-root+mu3")},
              {"requiresExtension", r.count("requires-extension")}}},
            {"lines", lines},
            {"graphs", graphs}};
}

Json to_json(const std::vector<CatalogPoint>& pts) {
    Json out = Json::array();
    for (auto& c : pts) {
        Json j = {{"label", c.label}};
        j.update(to_json(c.P));
        out.push_back(j);
    }
    return out;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar_text(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(Rat(j.get<long>()));
    throw InputError("scalar must be a \"p/q\" string, got " + j.dump());
}

std::vector<std::vector<Rat>> gram_from_json(const Json& g) {
    const Json& m = g.contains("matrix") ? g["matrix"] : g;
    std::vector<std::vector<Rat>> out;
    for (auto& row : m) {
        std::vector<Rat> r;
        for (auto& v : row) {
            Scalar s = scalar_from_json(v);
            if (!s.is_rational()) throw InputError("Gram entries are rational");
            r.push_back(s.rational());
        }
        out.push_back(r);
    }
    return out;
}

KuwataFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("family must be a JSON object");
    auto get = [&](const char* key) {
        if (!j.contains(key)) throw InputError(std::string("family is missing \"") + key + "\"");
        return scalar_from_json(j[key]);
    };
    int h = 0;
    if (j.contains("h")) {
        if (!j["h"].is_number_integer()) throw InputError("h must be 0, 1 or 2");
        h = j["h"].get<int>();
    }
    long d = 0;
    if (j.contains("D")) {
        if (j["D"].is_number_integer()) d = j["D"].get<long>();
        else if (j["D"].is_string()) {
            try {
                d = std::stol(j["D"].get<std::string>());
            } catch (const std::exception&) {
                throw InputError("D must be an integer");
            }
        } else throw InputError("D must be an integer");
        if (d != 0 && !is_squarefree(d)) throw PreconditionError("D = " + std::to_string(d) + " is not squarefree");
    }
    if (j.contains("lambda"))
        return KuwataFamily::from_legendre(get("lambda"), get("mu"), get("nu"), get("xi"), h, d);
    if (j.contains("a"))
        return KuwataFamily::make(CurveSpec::from_depressed(get("a"), get("b")),
                                  CurveSpec::from_depressed(get("c"), get("d")), h, d);
    throw InputError("family needs {a, b, c, d} or {lambda, mu, nu, xi}");
}

KuwataFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return family_from_json(j);
}

WeierstrassSurface top_surface(long d) {
    return make_surface(UPoly(), Scalar(108) * UPoly(std::vector<Scalar>{12, -48, 84, -74, 27}), d);
}

WeierstrassSurface surface_from_spec(const std::string& spec, const KuwataFamily* fam, long d) {
    if (spec == "top") return top_surface(d);
    if (spec.rfind("weierstrass:", 0) == 0) {
        std::string body = spec.substr(12);
        auto semi = body.find(';');
        if (semi == std::string::npos) throw InputError("weierstrass spec needs '<A coeffs>;<B coeffs>'");
        return make_surface(parse_coeff_list(body.substr(0, semi)), parse_coeff_list(body.substr(semi + 1)), d);
    }
    auto need_family = [&] {
        if (!fam) throw PreconditionError("surface '" + spec + "' needs a family (--family)");
        KuwataFamily f = *fam;
        if (d != 0) f.field_d = d;
        return f;
    };
    if (spec.rfind("twist", 0) == 0) {
        auto f = need_family();
        return build_twist(f, parse_index(spec, 5));
    }
    if (spec.rfind("psi", 0) == 0) {
        auto f = need_family();
        auto colon = spec.find(':');
        int k = parse_index(spec.substr(0, colon), 3);
        int root = colon == std::string::npos ? 0 : parse_index(spec, colon + 1);
        return deflate(f, k, root).psi;
    }
    if (spec.rfind("pi", 0) == 0) {
        auto f = need_family();
        return build_pi(f, parse_index(spec, 2));
    }
    throw InputError("unknown surface '" + spec + "'");
}

std::string emit_report(const Json& report, Format format) {
    if (format == Format::Json) return report.dump(2) + "\n";
    std::ostringstream out;
    render_text(report, 0, out);
    return out.str();
}

}  // namespace kuwata
