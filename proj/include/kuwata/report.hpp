#pragma once

#include "kuwata/kuwata.hpp"
#include "kuwata/secfinder.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kuwata {

using Json = nlohmann::ordered_json;

// Unreadable input files and malformed scalars.
struct InputError : Error {
    using Error::Error;
};

enum class Format { Json, Text };

// Exact scalars are strings: "p/q" or "p/q + r/s*sqrt(D)".
Json to_json(const Scalar& s);
Json to_json(const UPoly& f);  // {"coeffs": [lowest first], "text"}
Json to_json(const RatFunc& f);
Json to_json(const SectionPt& P);
Json to_json(const Place& p);
Json to_json(const FiberData& f);
Json to_json(const WeierstrassSurface& S);  // includes the singular fibers and Shioda-Tate data
Json to_json(const GramReport& g);
Json to_json(const EliminationReport& r);
Json to_json(const CurveSpec& c);
Json to_json(const KuwataFamily& fam);
Json to_json(const Deflation& d);
Json to_json(const CorqReport& r);
Json to_json(const CubicLinesReport& r);
Json to_json(const std::vector<CatalogPoint>& pts);

Scalar scalar_from_json(const Json& j);
std::vector<std::vector<Rat>> gram_from_json(const Json& g);

// {"a","b","c","d"} or {"lambda","mu","nu","xi"}, optional "h" and "D".
KuwataFamily family_from_json(const Json& j);
KuwataFamily read_family_file(const std::string& path);

// y^2 = x^3 + 108 (27 t^4 - 74 t^3 + 84 t^2 - 48 t + 12)
WeierstrassSurface top_surface(long d = 0);

// top | pi<i> | twist<i> | psi<k> | psi<k>:<root> | weierstrass:<A coeffs>;<B coeffs>
// Coefficient lists are comma separated, lowest degree first. fam may be null for top and weierstrass.
WeierstrassSurface surface_from_spec(const std::string& spec, const KuwataFamily* fam, long d);

std::string emit_report(const Json& report, Format format);

}  // namespace kuwata
