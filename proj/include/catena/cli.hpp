#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parse.hpp"
#include "report.hpp"

// Command line front end.  Exit codes: 0 success, 2 invalid input, 3 budget
// or cap exceeded (including integer overflow), 4 internal inconsistency.

namespace catena::cli {

namespace detail {

struct Ctx {
    std::string gens;
    std::string file;
    std::string element;
    std::string u, v;
    std::string kind = "eq";
    bool json = false;
    bool dot = false;
    bool show_missing = false;
    bool witness = false;
    bool minimize = false;
    std::int64_t bound = -1;
    unsigned threads = 1;
};

inline IntMatrix load_generators(const Ctx& c) {
    if (!c.gens.empty() && !c.file.empty())
        fail(errc::bad_input, "give either --gens or --file, not both");
    if (!c.gens.empty()) return parse_generators(c.gens);
    if (!c.file.empty()) {
        std::ifstream in(c.file);
        if (!in) fail(errc::bad_input, "cannot open file: " + c.file);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            fail(errc::bad_input, std::string("bad JSON: ") + e.what());
        }
        if (!doc.contains("generators") || !doc["generators"].is_array())
            fail(errc::bad_input, "JSON input needs a \"generators\" array");
        IntMatrix rows;
        for (const auto& row : doc["generators"]) {
            if (!row.is_array()) fail(errc::bad_input, "generators must be arrays of integers");
            IntVector r;
            for (const auto& x : row) {
                if (!x.is_number_integer()) fail(errc::bad_input, "generator entries must be integers");
                r.push_back(x.get<std::int64_t>());
            }
            rows.push_back(std::move(r));
        }
        if (rows.empty()) fail(errc::bad_input, "no generators given");
        return rows;
    }
    fail(errc::bad_input, "no generators given (use --gens or --file)");
}

inline Limits env_limits() {
    Limits lim;
    if (const char* s = std::getenv("CATENA_BUDGET")) {
        std::int64_t v = catena::detail::parse_int(s);
        if (v <= 0) fail(errc::bad_input, "CATENA_BUDGET must be positive");
        lim.solver_nodes = static_cast<std::uint64_t>(v);
        lim.fiber_cap = static_cast<std::uint64_t>(v);
        lim.completion_pairs = static_cast<std::uint64_t>(v);
    }
    return lim;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline AffineSemigroup make_monoid(const Ctx& c, const Limits& lim) {
    auto s = AffineSemigroup::create(load_generators(c), std::nullopt, 1, lim);
    if (c.minimize && !s.minimal_generating()) return minimized(s, lim);
    return s;
}

inline void add_gens_opts(CLI::App* sub, Ctx& c) {
    sub->add_option("--gens", c.gens, "generators, e.g. \"31,47,57\" or \"1 0; 1 3; 1 5\"");
    sub->add_option("--file", c.file, "JSON file with a \"generators\" array");
    sub->add_flag("--json", c.json, "machine readable output");
}

inline void run_catenary_variant(const Ctx& c, const std::string& variant, std::ostream& out,
                                 const Limits& lim) {
    AffineSemigroup s = make_monoid(c, lim);
    Json j;
    j["variant"] = variant;
    if (!c.element.empty()) {
        IntVector x = parse_element(c.element, s.dim());
        CatenaryResult r;
        if (variant == "ordinary")
            r = catenary_element(s, x, lim);
        else if (variant == "equal")
            r = equal_catenary_element(s, x, lim);
        else if (variant == "monotone")
            r = monotone_catenary_element(s, x, lim);
        else
            r = homogeneous_catenary_element(s, x, lim);
        if (!c.json) {
            out << r.value << "\n";
            return;
        }
        j["element"] = x;
        j["value"] = r.value;
        if (c.witness && r.witness) j["witness"] = to_json(*r.witness);
        emit(out, j);
        return;
    }
    if (variant == "monotone") {
        const std::int64_t bound = c.bound >= 0 ? c.bound : default_scan_bound(s);
        std::int64_t v = monotone_catenary_monoid_bounded(s, bound, lim, c.threads);
        if (!c.json) {
            out << v << "  # bounded-scan to degree " << bound << "\n";
            return;
        }
        j["value"] = v;
        j["method"] = "bounded-scan";
        j["bound"] = bound;
        emit(out, j);
        return;
    }
    std::int64_t v;
    if (variant == "ordinary")
        v = catenary_monoid(s, lim);
    else if (variant == "equal")
        v = equal_catenary_monoid(s, lim);
    else
        v = homogeneous_catenary_monoid(s, lim);
    if (!c.json) {
        out << v << "\n";
        return;
    }
    j["value"] = v;
    emit(out, j);
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"factorization invariants of finitely generated commutative monoids"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);
    detail::Ctx c;

    auto* sub_fac = app.add_subcommand("factorizations", "enumerate the fiber of an element");
    detail::add_gens_opts(sub_fac, c);
    sub_fac->add_option("--element", c.element)->required();

    auto* sub_dist = app.add_subcommand("distance", "distance between two factorizations");
    sub_dist->add_option("--u", c.u)->required();
    sub_dist->add_option("--v", c.v)->required();
    sub_dist->add_flag("--json", c.json);

    auto* sub_nabla = app.add_subcommand("nabla", "support graph of a fiber");
    detail::add_gens_opts(sub_nabla, c);
    sub_nabla->add_option("--element", c.element)->required();
    sub_nabla->add_flag("--dot", c.dot, "Graphviz output");
    sub_nabla->add_flag("--show-missing", c.show_missing, "include absent pairs dashed");

    auto* sub_betti = app.add_subcommand("betti", "Betti elements");
    detail::add_gens_opts(sub_betti, c);

    auto* sub_pres = app.add_subcommand("presentation", "a minimal presentation");
    detail::add_gens_opts(sub_pres, c);

    auto* sub_cat = app.add_subcommand("catenary", "catenary degree");
    auto* sub_cat_eq = app.add_subcommand("catenary-eq", "equal catenary degree");
    auto* sub_cat_mon = app.add_subcommand("catenary-mon", "monotone catenary degree");
    auto* sub_cat_hom = app.add_subcommand("catenary-hom", "homogeneous catenary degree");
    for (auto* sub : {sub_cat, sub_cat_eq, sub_cat_mon, sub_cat_hom}) {
        detail::add_gens_opts(sub, c);
        sub->add_option("--element", c.element, "per-element value instead of the monoid value");
        sub->add_flag("--witness", c.witness, "include a witness chain in JSON output");
    }
    sub_cat_mon->add_option("--bound", c.bound, "degree bound for the monoid-level scan");
    sub_cat_mon->add_option("--threads", c.threads, "parallel scan workers");

    auto* sub_omega = app.add_subcommand("omega", "omega-primality");
    auto* sub_tame = app.add_subcommand("tame", "tame degree");
    for (auto* sub : {sub_omega, sub_tame}) {
        detail::add_gens_opts(sub, c);
        sub->add_option("--element", c.element, "per-element value instead of the monoid value");
        sub->add_flag("--minimize", c.minimize, "re-present by atoms first if needed");
    }

    auto* sub_hf = app.add_subcommand("half-factorial", "test half-factoriality");
    detail::add_gens_opts(sub_hf, c);

    auto* sub_lift = app.add_subcommand("lift", "print a lifted generator matrix");
    detail::add_gens_opts(sub_lift, c);
    sub_lift->add_option("--kind", c.kind, "eq or hom")->check(CLI::IsMember({"eq", "hom"}));

    auto* sub_report = app.add_subcommand("report", "full invariant report (JSON)");
    detail::add_gens_opts(sub_report, c);
    sub_report->add_option("--bound", c.bound, "degree bound for the monotone scan");
    sub_report->add_flag("--witness", c.witness, "include witness chains");
    sub_report->add_flag("--minimize", c.minimize, "re-present by atoms first if needed");
    sub_report->add_option("--threads", c.threads, "parallel scan workers");

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const Limits lim = detail::env_limits();
        if (app.got_subcommand(sub_fac)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            IntVector x = parse_element(c.element, s.dim());
            auto fiber = factorizations(s, x, lim);
            if (c.json) {
                Json j;
                j["generators"] = to_json(s.generators());
                j["element"] = x;
                Json fs = Json::array();
                for (const auto& f : fiber) fs.push_back(f.exponents);
                j["factorizations"] = std::move(fs);
                j["lengths"] = lengths(s, x, lim);
                detail::emit(out, j);
            } else {
                for (const auto& f : fiber) out << to_string(f.exponents) << "\n";
            }
        } else if (app.got_subcommand(sub_dist)) {
            Factorization u = make_factorization(parse_element(c.u, catena::detail::split(c.u, " \t,").size()));
            Factorization v = make_factorization(parse_element(c.v, catena::detail::split(c.v, " \t,").size()));
            std::int64_t d = distance(u, v);
            if (c.json) {
                Json j;
                j["u"] = u.exponents;
                j["v"] = v.exponents;
                j["distance"] = d;
                detail::emit(out, j);
            } else {
                out << d << "\n";
            }
        } else if (app.got_subcommand(sub_nabla)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            IntVector x = parse_element(c.element, s.dim());
            FiberGraph g = nabla_graph(s, x, lim);
            if (c.dot) {
                out << to_dot(s, g, c.show_missing);
            } else if (c.json) {
                Json j;
                j["element"] = x;
                Json vs = Json::array();
                for (const auto& f : g.vertices) vs.push_back(f.exponents);
                j["vertices"] = std::move(vs);
                Json es = Json::array();
                for (const auto& e : g.edges) {
                    Json je;
                    je["i"] = e.i;
                    je["j"] = e.j;
                    je["weight"] = e.weight;
                    es.push_back(std::move(je));
                }
                j["edges"] = std::move(es);
                j["components"] = g.component;
                j["component_count"] = g.component_count;
                j["is_betti"] = g.is_betti();
                if (c.show_missing) {
                    Json miss = Json::array();
                    for (std::size_t i = 0; i < g.vertices.size(); ++i)
                        for (std::size_t k = i + 1; k < g.vertices.size(); ++k) {
                            bool present = false;
                            for (const auto& e : g.edges)
                                if (e.i == i && e.j == k) {
                                    present = true;
                                    break;
                                }
                            if (!present) {
                                Json je;
                                je["i"] = i;
                                je["j"] = k;
                                je["weight"] = distance(g.vertices[i], g.vertices[k]);
                                miss.push_back(std::move(je));
                            }
                        }
                    j["missing"] = std::move(miss);
                }
                detail::emit(out, j);
            } else {
                out << "vertices " << g.vertices.size() << "\n";
                out << "edges " << g.edges.size() << "\n";
                out << "components " << g.component_count << "\n";
            }
        } else if (app.got_subcommand(sub_betti)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            auto betti = betti_elements(s, lim);
            if (c.json) {
                Json j = Json::array();
                for (const auto& [elem, comps] : betti) {
                    Json e;
                    e["element"] = elem.value;
                    e["degree"] = elem.degree;
                    e["components"] = comps;
                    j.push_back(std::move(e));
                }
                detail::emit(out, j);
            } else if (s.dim() == 1) {
                std::string line;
                for (const auto& [elem, comps] : betti) {
                    if (!line.empty()) line += ' ';
                    line += std::to_string(elem.value[0]);
                }
                out << line << "\n";
            } else {
                for (const auto& [elem, comps] : betti) out << to_string(elem.value) << "\n";
            }
        } else if (app.got_subcommand(sub_pres)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            Presentation pres = minimal_generators(s, lim);
            if (c.json) {
                detail::emit(out, presentation_json(s, pres));
            } else {
                for (const auto& r : pres.relations) out << binomial_to_string(s, r) << "\n";
                out << "max total degree: " << pres.max_total_degree << "\n";
            }
        } else if (app.got_subcommand(sub_cat)) {
            detail::run_catenary_variant(c, "ordinary", out, lim);
        } else if (app.got_subcommand(sub_cat_eq)) {
            detail::run_catenary_variant(c, "equal", out, lim);
        } else if (app.got_subcommand(sub_cat_mon)) {
            detail::run_catenary_variant(c, "monotone", out, lim);
        } else if (app.got_subcommand(sub_cat_hom)) {
            detail::run_catenary_variant(c, "homogeneous", out, lim);
        } else if (app.got_subcommand(sub_omega)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            std::int64_t v = c.element.empty()
                                 ? omega_monoid(s, lim)
                                 : omega_element(s, parse_element(c.element, s.dim()), lim);
            if (c.json) {
                Json j;
                j["omega"] = v;
                detail::emit(out, j);
            } else {
                out << v << "\n";
            }
        } else if (app.got_subcommand(sub_tame)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            if (c.json) {
                Json j;
                if (c.element.empty()) {
                    j["tame"] = tame_monoid(s, lim);
                    j["method"] = "candidate-set";
                } else {
                    j["tame"] = tame_element(s, parse_element(c.element, s.dim()), lim);
                }
                detail::emit(out, j);
            } else {
                std::int64_t v = c.element.empty()
                                     ? tame_monoid(s, lim)
                                     : tame_element(s, parse_element(c.element, s.dim()), lim);
                out << v << "\n";
            }
        } else if (app.got_subcommand(sub_hf)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            if (c.json) {
                Json j;
                j["half_factorial"] = s.half_factorial();
                j["omega_witness"] =
                    s.half_factorial() ? to_json(*s.half_factorial_witness()) : Json(nullptr);
                detail::emit(out, j);
            } else if (s.half_factorial()) {
                out << "yes\n";
                std::string w;
                for (const auto& q : *s.half_factorial_witness()) {
                    if (!w.empty()) w += ' ';
                    w += q.str();
                }
                out << "omega: " << w << "\n";
            } else {
                out << "no\n";
            }
        } else if (app.got_subcommand(sub_lift)) {
            AffineSemigroup s = detail::make_monoid(c, lim);
            AffineSemigroup l = c.kind == "eq" ? lift_eq(s, lim) : lift_hom(s, lim);
            if (c.json) {
                Json j;
                j["kind"] = c.kind;
                j["generators"] = to_json(l.generators());
                detail::emit(out, j);
            } else {
                out << format_generators(l.generators()) << "\n";
            }
        } else if (app.got_subcommand(sub_report)) {
            AffineSemigroup s = AffineSemigroup::create(detail::load_generators(c), std::nullopt, 1, lim);
            ReportOptions opts;
            opts.scan_bound = c.bound;
            opts.witnesses = c.witness;
            opts.minimize = c.minimize;
            opts.threads = c.threads;
            detail::emit(out, report_json(s, opts, lim));
        }
        return 0;
    } catch (const error& e) {
        err << kToolName << ": " << e.what() << "\n";
        if (is_resource_error(e.code())) return 3;
        return e.code() == errc::internal ? 4 : 2;
    } catch (const std::exception& e) {
        err << kToolName << ": " << e.what() << "\n";
        return 4;
    }
}

} // namespace catena::cli
