#pragma once

// JSON forms for the CLI: derivations as {"var": "polynomial text"}, pairs
// as {"vars", "D", "U", "weights"}, certificates as {"kind", "degree",
// "weight", "element"}, and point files as {"assignments": {"var":
// "rational"}}.  All numbers that may exceed machine range travel as exact
// rational strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "lnd/grading.hpp"
#include "lnd/models.hpp"

namespace lnd {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson derivation_to_json(const Derivation& d) {
    OrderedJson out = OrderedJson::object();
    for (std::size_t i = 0; i < d.table()->size(); ++i)
        out[d.table()->name(i)] = d.image(i).to_string();
    return out;
}

inline OrderedJson pair_to_json(const FundamentalPair& p) {
    OrderedJson out = OrderedJson::object();
    out["vars"] = p.table->names();
    out["D"] = derivation_to_json(p.D);
    out["U"] = derivation_to_json(p.U);
    if (p.weights) out["weights"] = *p.weights;
    return out;
}

inline OrderedJson certificate_to_json(const Certificate& c) {
    OrderedJson out = OrderedJson::object();
    out["kind"] = (c.kind == CertKind::A1) ? "A1" : "A2";
    out["degree"] = c.degree;
    out["weight"] = c.weight;
    out["element"] = c.element.to_string();
    return out;
}

inline OrderedJson report_lines_json(const std::vector<std::string>& lines) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& l : lines) arr.push_back(l);
    return arr;
}

// Reads {"assignments": {"var": "rational", ...}}; every table variable must
// be assigned; unknown names are an error.
inline PointAssignment point_from_json(const OrderedJson& doc, const VarTablePtr& table) {
    if (!doc.contains("assignments") || !doc["assignments"].is_object())
        throw std::invalid_argument("point file must contain an \"assignments\" object");
    std::vector<bool> seen(table->size(), false);
    PointAssignment pt(table->size(), Rational(0));
    for (const auto& [key, val] : doc["assignments"].items()) {
        auto idx = table->find(key);
        if (!idx) throw std::invalid_argument("point assigns unknown variable \"" + key + "\"");
        if (!val.is_string())
            throw std::invalid_argument("assignment for \"" + key + "\" must be a rational string");
        pt[*idx] = parse_rational(val.get<std::string>());
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < table->size(); ++i)
        if (!seen[i])
            throw std::invalid_argument("point does not assign variable \"" + table->name(i) + "\"");
    return pt;
}

}  // namespace lnd
