#pragma once

#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "partition.hpp"
#include "poset.hpp"
#include "schur.hpp"

// External wire formats. All JSON here is built with ordered_json and fully
// determined by the value being rendered, so repeated runs serialize
// byte-identically (the one exception is VerificationReport.elapsed_ms,
// which reports wall time).

namespace schurbound {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const Chain& chain) {
    Json arr = Json::array();
    for (const Partition& p : chain.elements) arr.push_back(to_json(p));
    return arr;
}

/// {"rank": r, "terms": [{"partition": [...], "coeff": n}, ...]},
/// terms in canonical listing (reverse-lexicographic) key order.
inline Json to_json(const CPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back(Json{{"partition", to_json(key)}, {"coeff", c}});
    return Json{{"rank", p.rank()}, {"terms", std::move(terms)}};
}

/// Same shape as CPolynomial with "degree" added.
inline Json to_json(const SchurExpansion& e) {
    Json terms = Json::array();
    for (const auto& [key, c] : e.coeffs())
        terms.push_back(Json{{"partition", to_json(key)}, {"coeff", c}});
    return Json{{"rank", e.rank()}, {"degree", e.degree()}, {"terms", std::move(terms)}};
}

/// {top, bottom, nodes[], edges[][2], longest_from_top{}}; the map is keyed
/// by the comma text form since JSON object keys are strings.
inline Json to_json(const HasseInterval& iv) {
    Json nodes = Json::array();
    Json longest = Json::object();
    for (const Partition& node : iv.nodes()) {
        nodes.push_back(to_json(node));
        longest[to_string(node)] = iv.longest_from_top(node);
    }
    Json edges = Json::array();
    for (const auto& [parent, child] : iv.edges())
        edges.push_back(Json::array({to_json(parent), to_json(child)}));
    return Json{{"top", to_json(iv.top())},
                {"bottom", to_json(iv.bottom())},
                {"nodes", std::move(nodes)},
                {"edges", std::move(edges)},
                {"longest_from_top", std::move(longest)}};
}

inline Json to_json(const BoundCertificate& cert) {
    return Json{{"lambda", to_json(cert.lambda)},
                {"n", cert.n},
                {"longest_length", cert.longest_length},
                {"best_chain", to_json(cert.best_chain)},
                {"per_step", Json(cert.per_step)},
                {"bound_B", cert.bound_B},
                {"floor_bound", cert.floor_bound}};
}

inline Json to_json(const VerificationRecord& rec) {
    Json parts = Json::array();
    for (const Partition& p : rec.partitions) parts.push_back(to_json(p));
    Json out{{"partitions", std::move(parts)}};
    for (const auto& [name, value] : rec.values) out[name] = value;
    out["pass"] = rec.pass;
    return out;
}

/// {scope, records[], all_pass, elapsed_ms}
inline Json to_json(const VerificationReport& report) {
    Json scope{{"mode", report.mode}};
    for (const auto& [name, value] : report.scope) scope[name] = value;
    Json records = Json::array();
    for (const auto& rec : report.records) records.push_back(to_json(rec));
    return Json{{"scope", std::move(scope)},
                {"records", std::move(records)},
                {"all_pass", report.all_pass},
                {"elapsed_ms", report.elapsed_ms}};
}

/// Graphviz rendering: one node per partition labeled with its comma form,
/// one directed edge per cover, ranked top to bottom.
inline std::string to_dot(const HasseInterval& iv) {
    std::string out = "digraph hasse {\n  rankdir=TB;\n";
    for (const Partition& node : iv.nodes()) out += "  \"" + to_string(node) + "\";\n";
    for (const auto& [parent, child] : iv.edges())
        out += "  \"" + to_string(parent) + "\" -> \"" + to_string(child) + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace schurbound
