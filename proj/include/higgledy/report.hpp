/**
 * @file report.hpp
 * @brief JSON interchange for constructions and verification reports.
 *
 * One schema rule everywhere: field elements travel as enumeration
 * indices, and every document embeds the field (characteristic, degree,
 * modulus coefficients) so a report is self-describing.  Serialization is
 * deterministic (object keys are sorted by nlohmann::json, all ordering
 * below is enumeration order), so identical configs produce byte-identical
 * documents.  Timing never enters a report for the same reason.
 */
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "higgledy/constructions.hpp"
#include "higgledy/verification.hpp"

namespace higgledy {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "higgledy";
inline constexpr const char* kToolVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Fields, vectors, subspaces
// ---------------------------------------------------------------------------

inline Json field_to_json(const Field& F) {
    return Json{{"p", F.characteristic()},
                {"k", F.degree()},
                {"q", F.size()},
                {"modulus", F.modulus()},
                {"name", F.name()}};
}

inline Field field_from_json(const Json& j) {
    const std::uint64_t p = j.at("p").get<std::uint64_t>();
    const unsigned k = j.at("k").get<unsigned>();
    if (k <= 1) return Field::prime(p);
    return Field::with_modulus(p, j.at("modulus").get<std::vector<std::uint32_t>>());
}

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (Scalar s : v) a.push_back(s.v);
    return a;
}

inline Vec vec_from_json(const Field& F, const Json& j) {
    Vec v;
    for (const auto& e : j) v.push_back(F.element(e.get<std::uint64_t>()));
    return v;
}

inline Json subspace_to_json(const Subspace& s) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < s.rank(); ++r) rows.push_back(vec_to_json(s.row(r)));
    return Json{{"rank", s.rank()}, {"rows", rows}};
}

inline Subspace subspace_from_json(const Field& F, const Json& j) {
    std::vector<Vec> rows;
    for (const auto& r : j.at("rows")) rows.push_back(vec_from_json(F, r));
    return Subspace::from_rows(F, rows);
}

// ---------------------------------------------------------------------------
// Line families and design families
// ---------------------------------------------------------------------------

inline Json lineset_to_json(const LineSet& ls) {
    Json lines = Json::array();
    for (const auto& l : ls.lines) lines.push_back(subspace_to_json(l));
    return Json{{"kind", "lineset"},
                {"name", ls.name},
                {"field", field_to_json(ls.space.field)},
                {"dim", ls.space.dim},
                {"lines", lines},
                {"tags", ls.tags}};
}

inline LineSet lineset_from_json(const Json& j) {
    if (j.at("kind") != "lineset") throw std::invalid_argument("document is not a line family");
    const Field F = field_from_json(j.at("field"));
    Space sp(F, j.at("dim").get<int>());
    LineSet ls(sp, j.at("name").get<std::string>());
    const auto& lines = j.at("lines");
    const auto tags = j.at("tags").get<std::vector<std::string>>();
    if (tags.size() != lines.size()) throw std::invalid_argument("tags and lines differ in length");
    for (std::size_t i = 0; i < lines.size(); ++i) ls.add(subspace_from_json(F, lines[i]), tags[i]);
    return ls;
}

inline Json design_to_json(const DesignFamily& fam) {
    Json members = Json::array();
    for (const auto& m : fam.members)
        members.push_back(Json{{"alpha", m.alpha.v}, {"codim", m.codim}, {"space", subspace_to_json(m.space)}});
    return Json{{"kind", "design"},
                {"mode", fam.mode},
                {"field", field_to_json(fam.params.base)},
                {"label_field", field_to_json(fam.label_field)},
                {"d", fam.params.d},
                {"s", fam.params.s},
                {"r", fam.params.r},
                {"t", fam.params.t},
                {"members", members}};
}

inline DesignFamily design_from_json(const Json& j) {
    if (j.at("kind") != "design") throw std::invalid_argument("document is not a design family");
    DesignParams p{field_from_json(j.at("field")), j.at("d").get<int>(), j.at("s").get<unsigned>(),
                   j.at("r").get<unsigned>(), j.at("t").get<unsigned>()};
    DesignFamily fam{p, field_from_json(j.at("label_field")), j.at("mode").get<std::string>(), {}};
    for (const auto& m : j.at("members")) {
        PolySubspace ps{fam.label_field.element(m.at("alpha").get<std::uint64_t>()),
                        subspace_from_json(p.base, m.at("space")), m.at("codim").get<unsigned>()};
        fam.members.push_back(std::move(ps));
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

inline Json generator_report_to_json(const GeneratorReport& rep) {
    Json hist = Json::object();
    for (const auto& [rank, count] : rep.rank_histogram) hist[std::to_string(rank)] = count;
    Json j{{"verdict", rep.verdict}, {"rank_histogram", hist}};
    if (rep.counterexample_dual) {
        j["counterexample"] = Json{{"hyperplane_dual", vec_to_json(*rep.counterexample_dual)},
                                   {"trace_span", subspace_to_json(*rep.counterexample_trace)}};
    }
    return j;
}

inline Json witness_to_json(const TransversalWitness& w) {
    Json meets = Json::array();
    for (const auto& m : w.meets) meets.push_back(subspace_to_json(m));
    return Json{{"subspace", subspace_to_json(w.h)}, {"meets", meets}};
}

inline Json sufficiency_to_json(const SufficiencyReport& rep) {
    return Json{{"generator", rep.generator},
                {"transversal_geometric", rep.transversal_geometric},
                {"transversal_pluecker", rep.transversal_pluecker},
                {"finders_agree", rep.finders_agree},
                {"implication_holds", rep.implication_holds},
                {"size_bound_holds", rep.size_bound_holds},
                {"consistent", rep.consistent}};
}

inline Json design_report_to_json(const DesignReport& rep) {
    return Json{{"mode", rep.mode},
                {"s", rep.s},
                {"measured", rep.measured},
                {"bound", Json{{"num", rep.bound_num}, {"den", rep.bound_den}}},
                {"bound_satisfied", rep.bound_satisfied},
                {"witness", subspace_to_json(rep.witness)}};
}

inline Json wronskian_report_to_json(const WronskianReport& rep) {
    return Json{{"degree", rep.degree},
                {"bound", rep.bound},
                {"nonzero", rep.nonzero},
                {"within_bound", rep.within_bound}};
}

inline Json search_report_to_json(const SearchReport& rep) {
    return Json{{"found", rep.found},
                {"best", rep.best},
                {"certified_none_below", rep.certified_none_below},
                {"partial", rep.partial},
                {"subsets_checked", rep.subsets_checked},
                {"subsets_pruned", rep.subsets_pruned},
                {"suff_violations", rep.suff_violations},
                {"size_bound_violations", rep.size_bound_violations}};
}

/// Standard envelope: tool identity, the verified claim in plain words,
/// the echoed configuration, and the payload.
inline Json make_report(const std::string& command, const std::string& claim, const Json& config,
                        const Json& payload) {
    return Json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", command},
                {"claim", claim},
                {"config", config},
                {"result", payload}};
}

}  // namespace higgledy
