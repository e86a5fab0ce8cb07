// kuwata: command-line front end over the library modules.

#include "kuwata/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace kuwata;

namespace {

struct RunConfig {
    std::string family_path;
    std::string format = "json";
    int budget = 2000;
    std::vector<std::uint64_t> primes = {101, 103, 107};
    long d = 0;
    unsigned seed = 7;
};

constexpr int kExitOk = 0, kExitInput = 1, kExitPrecondition = 2, kExitBudget = 3;

struct Outcome {
    Json report;
    int code = kExitOk;
};

KuwataFamily load_family(const RunConfig& cfg) {
    if (cfg.family_path.empty()) throw PreconditionError("this verb needs --family <file>");
    KuwataFamily fam = read_family_file(cfg.family_path);
    if (cfg.d != 0) fam.field_d = cfg.d;
    return fam;
}

std::optional<KuwataFamily> maybe_family(const RunConfig& cfg) {
    if (cfg.family_path.empty()) return std::nullopt;
    return load_family(cfg);
}

FinderConfig finder_config(const RunConfig& cfg) {
    FinderConfig f;
    f.degree_budget = cfg.budget;
    f.primes = cfg.primes;
    return f;
}

std::vector<SectionPt> points_of(const std::vector<CatalogPoint>& v) {
    std::vector<SectionPt> out;
    for (auto& c : v) out.push_back(c.P);
    return out;
}

Json verified_catalog(const WeierstrassSurface& S, const std::vector<CatalogPoint>& pts) {
    Json out = to_json(pts);
    for (size_t i = 0; i < pts.size(); ++i) {
        out[i]["verified"] = section_residual(S, pts[i].P.x, pts[i].P.y).is_zero();
        out[i]["selfHeight"] = rat_str(height_pairing(S, pts[i].P, pts[i].P));
    }
    return out;
}

Json rank_rows(int h) {
    Json rows = Json::array();
    for (int i : {1, 2, 3, 4, 5, 6, 60}) {
        RankValue r = expected_ranks(i, h);
        Json row = {{"i", i}, {"rank", r.rank}, {"lowerBound", r.lower_bound}};
        row["rankOverQBound"] = i <= 6 ? Json(q_rank_bound(i)) : Json(nullptr);
        rows.push_back(row);
    }
    return rows;
}

Outcome family_info(const RunConfig& cfg) {
    KuwataFamily fam = load_family(cfg);
    Json j = to_json(fam);
    Scalar ratio = fam.ratio();
    for (unsigned k : {3u, 5u}) {
        std::optional<Rat> r = ratio.is_rational() ? perfect_power(ratio.rational(), k) : std::nullopt;
        j["alpha" + std::to_string(k)] = r ? Json(rat_str(*r)) : Json(nullptr);
    }
    j["rankTable"] = rank_rows(fam.h);
    return {j};
}

Outcome fibers(const RunConfig& cfg, const std::string& which, int i, int root) {
    KuwataFamily fam = load_family(cfg);
    Json j;
    if (which == "twist") {
        j["surface"] = "twist" + std::to_string(i);
        j["data"] = to_json(build_twist(fam, i));
    } else if (which == "psi") {
        j["surface"] = "psi" + std::to_string(i);
        j["data"] = to_json(deflate(fam, i, root).psi);
    } else {
        int n = 0;
        try {
            n = std::stoi(which);
        } catch (const std::exception&) {
            throw InputError("fibers expects i, twist or psi, got '" + which + "'");
        }
        j["surface"] = "pi" + std::to_string(n);
        j["data"] = to_json(build_pi(fam, n));
    }
    return {j};
}

Outcome find(const RunConfig& cfg, const std::string& spec) {
    auto fam = maybe_family(cfg);
    WeierstrassSurface S = surface_from_spec(spec, fam ? &*fam : nullptr, cfg.d);
    EliminationReport r = find_sections(S, finder_config(cfg));
    Json j = {{"surface", S.str()}, {"report", to_json(r)}};
    return {j, r.budget_exceeded ? kExitBudget : kExitOk};
}

Outcome gram(const RunConfig& cfg, const std::string& source) {
    auto fam = maybe_family(cfg);
    auto need = [&]() -> const KuwataFamily& {
        if (!fam) throw PreconditionError("source '" + source + "' needs --family");
        return *fam;
    };
    WeierstrassSurface S;
    std::vector<SectionPt> secs;
    int code = kExitOk;
    if (source == "nine-lines") {
        S = build_twist(need(), 3);
        secs = points_of(nine_lines_sections(need()));
    } else if (source == "pi2prime" || source == "pi2prime-primed") {
        bool primed = source == "pi2prime-primed";
        S = pi2prime_surface(need(), primed);
        secs = points_of(pi2prime_points(need(), false));
        if (primed)
            for (auto& p : pi2prime_points(need(), true)) secs.push_back(p.P);
    } else if (source == "pi2prime-variants") {
        S = pi2prime_surface(need(), cfg.d == -1);
        secs = points_of(pi2prime_sign_variants(need(), cfg.d == -1, cfg.d != -1));
    } else if (source.rfind("finder:", 0) == 0) {
        S = surface_from_spec(source.substr(7), fam ? &*fam : nullptr, cfg.d);
        EliminationReport r = find_sections(S, finder_config(cfg));
        if (r.budget_exceeded) code = kExitBudget;
        secs = r.sections;
    } else {
        throw InputError("unknown section source '" + source + "'");
    }
    Json j = {{"source", source}, {"surface", S.str()}, {"gram", to_json(gram_matrix(S, secs))}};
    return {j, code};
}

Outcome nine_lines(const RunConfig& cfg, int random_count) {
    Json out = Json::array();
    std::vector<KuwataFamily> fams;
    if (auto fam = maybe_family(cfg)) fams.push_back(*fam);
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    while (static_cast<int>(fams.size()) < random_count + (cfg.family_path.empty() ? 0 : 1)) {
        std::array<Scalar, 4> v;
        for (auto& x : v) x = Scalar(Rat(num(rng), den(rng)));
        try {
            fams.push_back(KuwataFamily::from_legendre(v[0], v[1], v[2], v[3]));
        } catch (const PreconditionError&) {
        }
    }
    if (fams.empty()) throw PreconditionError("nine-lines needs --family or --random n");
    for (auto& fam : fams) {
        auto S = build_twist(fam, 3);
        auto nine = nine_lines_sections(fam);
        auto [la, mu, nu, xi] = fam.legendre();
        out.push_back({{"legendre", {to_json(la), to_json(mu), to_json(nu), to_json(xi)}},
                       {"surface", S.str()},
                       {"sections", verified_catalog(S, nine)},
                       {"gramRank", gram_matrix(S, points_of(nine)).rank}});
    }
    return {Json{{"families", out}}};
}

Outcome lines27(const RunConfig& cfg) { return {to_json(cubic_surface_and_lines(load_family(cfg)))}; }

Outcome corq(const std::string& rho, const std::string& tau, const std::string& u) {
    auto rat = [](const std::string& s) {
        Json j = s;
        Scalar v = scalar_from_json(j);
        if (!v.is_rational()) throw InputError("corq parameters are rational");
        return v.rational();
    };
    return {to_json(corq_params(rat(rho), rat(tau), rat(u)))};
}

Outcome pi2prime(const RunConfig& cfg, bool primed) {
    KuwataFamily fam = load_family(cfg);
    auto S = pi2prime_surface(fam, primed);
    auto pts = pi2prime_points(fam, false);
    if (primed)
        for (auto& p : pi2prime_points(fam, true)) pts.push_back(p);
    Json j = {{"surface", S.str()},
              {"fieldD", S.field_d},
              {"points", verified_catalog(S, pts)},
              {"gram", to_json(gram_matrix(S, points_of(pts)))}};
    auto variants = pi2prime_sign_variants(fam, primed, !primed);
    j["signVariants"] = {{"count", variants.size()}, {"gramRank", gram_matrix(S, points_of(variants)).rank}};
    return {j};
}

Outcome deflate_verb(const RunConfig& cfg, int i, int root, bool run_finder) {
    KuwataFamily fam = load_family(cfg);
    Deflation D = deflate(fam, i, root);
    Json j = to_json(D);
    int code = kExitOk;
    if (run_finder) {
        EliminationReport r = find_sections(D.psi, finder_config(cfg));
        if (r.budget_exceeded) code = kExitBudget;
        Json pulled = Json::array();
        std::vector<SectionPt> back;
        for (auto& s : r.sections) back.push_back(pullback_section(D, s));
        for (auto& s : back) pulled.push_back(to_json(s));
        j["finder"] = to_json(r);
        j["gramPsi"] = to_json(gram_matrix(D.psi, r.sections));
        j["pullbacks"] = pulled;
        j["gramPi"] = to_json(gram_matrix(D.pi, back));
    }
    return {j, code};
}

Outcome top_demo(const RunConfig& cfg) {
    auto S = top_surface(cfg.d);
    EliminationReport r = find_sections(S, finder_config(cfg));
    Json xs = Json::array();
    std::vector<SectionPt> linear;
    for (auto& s : r.sections) {
        xs.push_back(to_json(s.x));
        if (s.x.num().degree() == 1 && s.x.num().is_rational()) linear.push_back(s);
    }
    Json full = to_json(r), elim = nullptr;
    for (auto& b : full["branches"])
        if (b["branch"].get<std::string>().rfind("p1=0", 0) == 0) elim = b;
    Json j = {{"surface", S.str()},
              {"xCoordinates", xs},
              {"elimination", elim},
              {"gram", to_json(gram_matrix(S, linear))},
              {"budgetExceeded", r.budget_exceeded}};
    return {j, r.budget_exceeded ? kExitBudget : kExitOk};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kuwata elliptic surfaces: fibers, sections and Mordell-Weil lattices"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--family", cfg.family_path, "family JSON file");
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", cfg.budget, "resultant degree budget")->check(CLI::PositiveNumber);
    app.add_option("--primes", cfg.primes, "primes for modular degree patterns");
    app.add_option("--D", cfg.d, "active quadratic discriminant");
    app.add_option("--seed", cfg.seed, "seed for generated fixtures");

    std::function<Outcome()> run;

    app.add_subcommand("family-info", "curves, discriminants, ratio and the rank table")->callback([&] {
        run = [&] { return family_info(cfg); };
    });

    auto* fib = app.add_subcommand("fibers", "singular fibers of pi_i, a twist or a deflation");
    std::string fib_which;
    int fib_i = 2, fib_root = 0;
    fib->add_option("which", fib_which, "i, twist or psi")->required();
    fib->add_option("i", fib_i, "index for twist (1-3) or psi (3 or 5)");
    fib->add_option("--root", fib_root, "cube root choice for psi");
    fib->callback([&] { run = [&] { return fibers(cfg, fib_which, fib_i, fib_root); }; });

    auto* rt = app.add_subcommand("rank-table", "Mordell-Weil ranks of pi_i");
    rt->set_help_flag("--help", "Print this help message and exit");
    int rt_h = -1;
    rt->add_option("--h", rt_h, "0, 1 or 2")->check(CLI::Range(0, 2));
    rt->callback([&] {
        run = [&] {
            int h = rt_h >= 0 ? rt_h : maybe_family(cfg).value_or(KuwataFamily{}).h;
            return Outcome{Json{{"h", h}, {"rows", rank_rows(h)}}};
        };
    });

    auto* fs = app.add_subcommand("find-sections", "sections with deg x <= 2 by resultant elimination");
    std::string fs_spec;
    fs->add_option("surface", fs_spec, "top | pi<i> | twist<i> | psi<k>[:r] | weierstrass:<A>;<B>")->required();
    fs->callback([&] { run = [&] { return find(cfg, fs_spec); }; });

    auto* gr = app.add_subcommand("gram", "height pairing Gram matrix");
    std::string gr_source;
    gr->add_option("source", gr_source, "nine-lines | pi2prime | pi2prime-primed | pi2prime-variants | finder:<surface>")
        ->required();
    gr->callback([&] { run = [&] { return gram(cfg, gr_source); }; });

    auto* nl = app.add_subcommand("nine-lines", "the nine degree-2 sections of the twist of pi_3");
    int nl_random = 0;
    nl->add_option("--random", nl_random, "extra random parameter tuples (seeded)");
    nl->callback([&] { run = [&] { return nine_lines(cfg, nl_random); }; });

    app.add_subcommand("lines27", "27 lines on the cubic surface")->callback([&] {
        run = [&] { return lines27(cfg); };
    });

    auto* cq = app.add_subcommand("corq", "parameters with rational points on the twist of pi_2");
    std::string cq_rho, cq_tau, cq_u;
    cq->add_option("rho", cq_rho)->required();
    cq->add_option("tau", cq_tau)->required();
    cq->add_option("u", cq_u)->required();
    cq->callback([&] { run = [&] { return corq(cq_rho, cq_tau, cq_u); }; });

    auto* pp = app.add_subcommand("pi2prime-points", "P1..P4 (and P1'..P4' with --primed)");
    bool pp_primed = false;
    pp->add_flag("--primed", pp_primed, "add the points over Q(i)");
    pp->callback([&] { run = [&] { return pi2prime(cfg, pp_primed); }; });

    auto* df = app.add_subcommand("deflate", "quotient by t -> alpha/t");
    int df_i = 3, df_root = 0;
    bool df_find = false;
    df->add_option("i", df_i, "3 or 5")->required();
    df->add_option("--root", df_root, "root of unity index for alpha");
    df->add_flag("--find", df_find, "run the finder on psi and pull the sections back");
    df->callback([&] { run = [&] { return deflate_verb(cfg, df_i, df_root, df_find); }; });

    app.add_subcommand("top-demo", "sections of y^2 = x^3 + 108(27t^4 - 74t^3 + 84t^2 - 48t + 12)")->callback([&] {
        run = [&] { return top_demo(cfg); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    Format fmt = cfg.format == "text" ? Format::Text : Format::Json;
    try {
        Outcome o = run();
        std::cout << emit_report(o.report, fmt);
        return o.code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
