#pragma once

// JSON documents: configuration input (curve dual graphs and stratified data)
// and report output. Output uses insertion-ordered objects so field order is
// fixed by the emitters below.

#include "tamefiber/fiber_config.hpp"
#include "tamefiber/monodromy_zeta.hpp"
#include "tamefiber/rational_points.hpp"
#include "tamefiber/surgery.hpp"
#include "tamefiber/tameness.hpp"
#include "tamefiber/trace_formula.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace tamefiber::io {

using Document = nlohmann::ordered_json;
using ParsedInput = std::variant<FiberConfiguration, StratumData>;

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(ErrorKind::ParseError, "unknown field '" + (path.empty() ? key : path + "." + key) + "'");
}

inline const json& require(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end())
        fail(ErrorKind::ParseError, "missing field '" + (path.empty() ? key : path + "." + key) + "'");
    return *it;
}

inline Int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(ErrorKind::ParseError, "field '" + path + "' must be an integer");
    return v.get<Int>();
}

inline std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(ErrorKind::ParseError, "field '" + path + "' must be a string");
    return v.get<std::string>();
}

inline const json& as_array(const json& v, const std::string& path) {
    if (!v.is_array()) fail(ErrorKind::ParseError, "field '" + path + "' must be an array");
    return v;
}

inline const json& as_object(const json& v, const std::string& path) {
    if (!v.is_object()) fail(ErrorKind::ParseError, "'" + (path.empty() ? "document" : path) + "' must be an object");
    return v;
}

inline FiberConfiguration parse_curve(const json& doc) {
    reject_unknown(doc, "", {"kind", "residue_char", "mode", "components", "intersections"});
    const Int p = as_int(require(doc, "residue_char", ""), "residue_char");
    Mode mode = Mode::sncd;
    if (doc.contains("mode")) {
        const std::string m = as_string(doc.at("mode"), "mode");
        if (m == "sncd") mode = Mode::sncd;
        else if (m == "ncd") mode = Mode::ncd;
        else fail(ErrorKind::ParseError, "field 'mode' must be \"sncd\" or \"ncd\"");
    }
    std::vector<Component> comps;
    const json& jc = as_array(require(doc, "components", ""), "components");
    for (std::size_t k = 0; k < jc.size(); ++k) {
        const std::string path = "components[" + std::to_string(k) + "]";
        const json& c = as_object(jc[k], path);
        reject_unknown(c, path, {"id", "multiplicity", "genus", "self_intersection"});
        Component comp;
        comp.id = as_string(require(c, "id", path), path + ".id");
        comp.multiplicity = as_int(require(c, "multiplicity", path), path + ".multiplicity");
        comp.genus = as_int(require(c, "genus", path), path + ".genus");
        if (c.contains("self_intersection") && !c.at("self_intersection").is_null())
            comp.self_intersection = as_int(c.at("self_intersection"), path + ".self_intersection");
        comps.push_back(std::move(comp));
    }
    std::vector<Pairing> pairs;
    if (doc.contains("intersections")) {
        const json& ji = as_array(doc.at("intersections"), "intersections");
        for (std::size_t k = 0; k < ji.size(); ++k) {
            const std::string path = "intersections[" + std::to_string(k) + "]";
            const json& e = as_object(ji[k], path);
            reject_unknown(e, path, {"a", "b", "count"});
            pairs.push_back({as_string(require(e, "a", path), path + ".a"),
                             as_string(require(e, "b", path), path + ".b"),
                             as_int(require(e, "count", path), path + ".count")});
        }
    }
    return FiberConfiguration::make(p, mode, std::move(comps), pairs);
}

inline StratumData parse_strata(const json& doc) {
    reject_unknown(doc, "", {"kind", "residue_char", "strata", "total_chi"});
    StratumData data;
    data.residue_char = as_int(require(doc, "residue_char", ""), "residue_char");
    const json& js = as_array(require(doc, "strata", ""), "strata");
    for (std::size_t k = 0; k < js.size(); ++k) {
        const std::string path = "strata[" + std::to_string(k) + "]";
        const json& s = as_object(js[k], path);
        reject_unknown(s, path, {"multiplicity", "chi_open"});
        data.strata.push_back({as_int(require(s, "multiplicity", path), path + ".multiplicity"),
                               as_int(require(s, "chi_open", path), path + ".chi_open")});
    }
    if (doc.contains("total_chi") && !doc.at("total_chi").is_null())
        data.total_chi = as_int(doc.at("total_chi"), "total_chi");
    check_strata(data);
    return data;
}

inline Document big_int(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Document(static_cast<std::int64_t>(v));
    return Document(v.str());
}

} // namespace detail

/// Parses a configuration document. ParseError for malformed JSON (with line)
/// or bad fields (with path); InvariantError for structural violations.
inline ParsedInput parse(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + e.what());
    }
    detail::as_object(doc, "");
    const std::string kind = detail::as_string(detail::require(doc, "kind", ""), "kind");
    if (kind == "curve_dual_graph") return detail::parse_curve(doc);
    if (kind == "stratified") return detail::parse_strata(doc);
    fail(ErrorKind::ParseError, "field 'kind' must be \"curve_dual_graph\" or \"stratified\"");
}

// --- emitters ---------------------------------------------------------------

inline Document to_document(const IntegerPolynomial& poly) {
    Document coeffs = Document::array();
    for (const BigInt& c : poly.coefficients()) coeffs.push_back(detail::big_int(c));
    return coeffs;
}

inline Document to_document(const CyclotomicProduct& cp) {
    Document exps = Document::object();
    for (const auto& [d, e] : cp.exponents()) exps[std::to_string(d)] = e;
    Document out;
    out["cyclotomic"] = exps;
    if (is_polynomial(cp)) out["coefficients"] = to_document(expand(cp));
    return out;
}

inline Document to_document(const FiberConfiguration& config) {
    Document out;
    out["kind"] = "curve_dual_graph";
    out["residue_char"] = config.residue_char();
    out["mode"] = std::string(to_string(config.mode()));
    Document comps = Document::array();
    for (const Component& c : config.components()) {
        Document jc;
        jc["id"] = c.id;
        jc["multiplicity"] = c.multiplicity;
        jc["genus"] = c.genus;
        if (c.self_intersection) jc["self_intersection"] = *c.self_intersection;
        comps.push_back(std::move(jc));
    }
    out["components"] = std::move(comps);
    Document pairs = Document::array();
    for (const Pairing& p : config.pairings()) pairs.push_back({{"a", p.a}, {"b", p.b}, {"count", p.count}});
    out["intersections"] = std::move(pairs);
    return out;
}

inline Document to_document(const StratumData& data) {
    Document out;
    out["kind"] = "stratified";
    out["residue_char"] = data.residue_char;
    Document strata = Document::array();
    for (const Stratum& s : data.strata)
        strata.push_back({{"multiplicity", s.multiplicity}, {"chi_open", s.chi_open}});
    out["strata"] = std::move(strata);
    if (data.total_chi) out["total_chi"] = *data.total_chi;
    return out;
}

inline Document to_document(const ValidationReport& r) {
    Document out;
    out["ok"] = r.ok;
    out["derived_genus"] = r.derived_genus;
    Document nu = Document::object();
    for (const auto& [id, v] : r.nu) nu[id] = v;
    out["nu"] = std::move(nu);
    Document violations = Document::array();
    for (const Violation& v : r.violations) {
        Document jv;
        jv["identity"] = std::string(to_string(v.identity));
        if (v.component) jv["component"] = *v.component;
        jv["detail"] = v.detail;
        violations.push_back(std::move(jv));
    }
    out["violations"] = std::move(violations);
    return out;
}

inline Document to_document(const ZetaReport& r) {
    Document out;
    out["zeta"] = to_document(r.zeta);
    out["tame_euler_char"] = r.tame_euler_char;
    if (r.char_poly_h1) out["char_poly_h1"] = to_document(*r.char_poly_h1);
    if (r.q_poly) out["q_poly"] = to_document(*r.q_poly);
    if (r.quotient_q_over_p) out["quotient_q_over_p"] = to_document(*r.quotient_q_over_p);
    return out;
}

inline Document to_document(const TamenessReport& r) {
    Document out;
    out["tame"] = r.tame_numeric;
    out["sum_N_chi"] = r.sum_N_chi;
    out["sum_Nprime_chi"] = r.sum_Nprime_chi;
    out["p_tame"] = r.p_tame;
    Document witnesses = Document::object();
    for (const auto& [d, v] : r.d_tame_witnesses) witnesses[std::to_string(d)] = v;
    out["d_tame"] = std::move(witnesses);
    Document notes = Document::array();
    for (ApplicabilityNote n : r.applicability_notes) notes.push_back(std::string(to_string(n)));
    out["applicability_notes"] = std::move(notes);
    return out;
}

inline Document to_document(const SaitoReport& r) {
    Document out;
    out["tame"] = r.tame;
    out["p_tame"] = r.p_tame;
    out["pseudo_wild"] = r.pseudo_wild;
    out["jacobian_type"] = r.jacobian_type_used ? Document(to_string(*r.jacobian_type_used)) : Document(nullptr);
    out["consistent"] = r.consistent;
    return out;
}

inline Document to_document(const PrimedCheck& r) {
    Document out;
    out["q_root_order_free"] = r.q_root_order_free;
    out["d_tame"] = r.d_tame;
    out["equivalent"] = r.equivalent;
    out["index_set_is_full"] = r.index_set_is_full;
    out["genus_one_escape"] = r.genus_one_escape;
    return out;
}

inline Document to_document(const UnipotenceReport& r) {
    return Document{{"h1_unipotent", r.h1_unipotent}, {"tame", r.tame}};
}

inline Document to_document(const DegreeSet& r) {
    Document out;
    out["bound"] = r.bound;
    out["members"] = Document(std::vector<Int>(r.members.begin(), r.members.end()));
    return out;
}

inline Document to_document(const TraceReport& r) {
    Document out;
    out["trace"] = r.lefschetz_trace;
    out["s"] = r.rational_volume;
    out["epsilon"] = r.error_term;
    out["holds"] = r.holds;
    out["wild_index_set"] = Document(r.wild_index_set);
    return out;
}

inline Document to_document(const SaitoQuestionCheck& r) {
    return Document{{"applicable", r.applicable}, {"vanishes", r.vanishes}};
}

inline Document to_document(const MinimalityReport& r) {
    Document out;
    out["minimal"] = r.minimal;
    out["witnesses"] = Document(r.witnesses);
    return out;
}

inline Document to_document(const ContractionOutcome& r) {
    Document out;
    out["class"] = std::string(to_string(r.cls));
    out["usable"] = r.usable();
    out["configuration"] = to_document(r.configuration);
    return out;
}

template <class Report>
std::string emit(const Report& report) {
    return to_document(report).dump();
}

} // namespace tamefiber::io
