#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "catenary.hpp"
#include "invariants.hpp"
#include "version.hpp"

// The machine-readable invariant report.  All collections are canonically
// sorted and serialized through ordered maps, so equal inputs produce
// byte-identical documents.

namespace catena {

using Json = nlohmann::ordered_json;

struct ReportOptions {
    std::int64_t scan_bound = -1; // monotone scan; < 0 means 20 x max generator degree
    bool witnesses = false;
    bool minimize = false;
    unsigned threads = 1;
};

inline std::int64_t default_scan_bound(const AffineSemigroup& s) {
    return checked_mul(20, s.max_gen_degree());
}

inline Json to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(q.str());
    return a;
}

inline Json to_json(const IntVector& v) { return Json(v); }

inline Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(row);
    return a;
}

inline Json to_json(const ChainWitness& w) {
    Json j;
    j["from"] = w.from.exponents;
    j["to"] = w.to.exponents;
    Json chain = Json::array();
    for (const auto& f : w.chain) chain.push_back(f.exponents);
    j["chain"] = std::move(chain);
    return j;
}

inline Json semigroup_json(const AffineSemigroup& s) {
    Json j;
    j["dimension"] = s.dim();
    j["generators"] = to_json(s.generators());
    j["rho"] = to_json(s.rho());
    j["weights"] = to_json(s.weights());
    j["half_factorial"] = s.half_factorial();
    j["omega_witness"] =
        s.half_factorial() ? to_json(*s.half_factorial_witness()) : Json(nullptr);
    auto [atom_rows, minimal] = atoms(s);
    j["atoms"] = to_json(atom_rows);
    j["minimal_generating"] = minimal;
    return j;
}

inline Json presentation_json(const AffineSemigroup& s, const Presentation& pres) {
    Json j;
    Json rels = Json::array();
    for (const auto& r : pres.relations) {
        Json e;
        e["plus"] = r.plus.exponents;
        e["minus"] = r.minus.exponents;
        e["element"] = r.a_degree.value;
        e["total_degree"] = r.total_degree;
        e["text"] = binomial_to_string(s, r);
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    Json betti = Json::array();
    for (const auto& [elem, comps] : pres.betti) {
        Json e;
        e["element"] = elem.value;
        e["degree"] = elem.degree;
        e["components"] = comps;
        betti.push_back(std::move(e));
    }
    j["betti"] = std::move(betti);
    j["max_total_degree"] = pres.max_total_degree;
    return j;
}

// Full invariant panel.  When the generating system is not minimal, omega
// and tame are null unless opts.minimize asked for the monoid to be
// re-presented by its atoms first.
inline Json report_json(const AffineSemigroup& input, const ReportOptions& opts = {},
                        const Limits& lim = {}) {
    AffineSemigroup s = input;
    Json notes = Json::array();
    if (!s.minimal_generating() && opts.minimize) {
        s = minimized(s, lim);
        notes.push_back("generating system replaced by its atoms");
    }
    Json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["semigroup"] = semigroup_json(s);

    Json inv;
    Presentation pres = minimal_generators(s, lim);
    Json betti = Json::array();
    std::int64_t cat = 0;
    for (const auto& [elem, comps] : pres.betti) {
        CatenaryResult c = catenary_element(s, elem.value, lim);
        cat = std::max(cat, c.value);
        Json e;
        e["element"] = elem.value;
        e["degree"] = elem.degree;
        e["components"] = comps;
        e["catenary"] = c.value;
        if (opts.witnesses && c.witness) e["witness"] = to_json(*c.witness);
        betti.push_back(std::move(e));
    }
    inv["betti"] = std::move(betti);
    inv["catenary"] = cat;
    inv["catenary_eq"] = equal_catenary_monoid(s, lim);
    inv["catenary_hom"] = homogeneous_catenary_monoid(s, lim);
    const std::int64_t bound = opts.scan_bound >= 0 ? opts.scan_bound : default_scan_bound(s);
    Json mon;
    mon["value"] = monotone_catenary_monoid_bounded(s, bound, lim, opts.threads);
    mon["method"] = "bounded-scan";
    mon["bound"] = bound;
    inv["catenary_mon"] = std::move(mon);
    inv["max_total_degree"] = pres.max_total_degree;
    if (s.minimal_generating()) {
        inv["omega"] = omega_monoid(s, lim);
        Json tame;
        tame["value"] = tame_monoid(s, lim);
        tame["method"] = "candidate-set";
        inv["tame"] = std::move(tame);
    } else {
        inv["omega"] = nullptr;
        inv["tame"] = nullptr;
        notes.push_back("omega and tame need a minimal generating system (see --minimize)");
    }
    j["invariants"] = std::move(inv);
    j["notes"] = std::move(notes);
    return j;
}

} // namespace catena
