#ifndef FNF_IO_HPP
#define FNF_IO_HPP

#include <cstdio>
#include <set>
#include <string>

#include <json.hpp>

#include "fnf/expr.hpp"
#include "fnf/reduction.hpp"

namespace fnf {

using json = nlohmann::json;

class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

class DegreeOverflowError : public SchemaError {
public:
    DegreeOverflowError(int i, int j, int order)
        : SchemaError("coefficient at (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") exceeds the truncation order " + std::to_string(order)) {}
};

inline constexpr const char* kFormSchema = "fnf.form/1";
inline constexpr const char* kMapSchema = "fnf.map/1";
inline constexpr const char* kNormalFormSchema = "fnf.normal_form/1";
inline constexpr const char* kTranscriptSchema = "fnf.transcript/1";

namespace detail {

inline std::set<int> jet_support(const Jet2& j) {
    std::set<int> s;
    for (auto& [k, v] : j.coefficients()) {
        auto sup = v.support();
        s.insert(sup.begin(), sup.end());
    }
    return s;
}

inline json generators_json(const std::set<int>& gens) {
    json a = json::array();
    for (int g : gens) a.push_back("t" + std::to_string(g));
    return a;
}

inline std::set<int> parse_generator_list(const json& doc) {
    std::set<int> declared;
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw SchemaError("missing 'generators' array");
    for (auto& g : doc["generators"]) {
        std::string name = g.get<std::string>();
        if (name.size() < 2 || name[0] != 't') throw SchemaError("bad generator name '" + name + "'");
        for (size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw SchemaError("bad generator name '" + name + "'");
        int idx = std::stoi(name.substr(1));
        if (idx < 1 || idx > kMaxVars)
            throw SchemaError("generator index out of supported range: '" + name + "'");
        declared.insert(idx);
    }
    return declared;
}

inline json jet_json(const Jet2& j) {
    json a = json::array();
    for (auto& [k, v] : j.coefficients()) a.push_back(json::array({k.first, k.second, v.to_string()}));
    return a;
}

inline Jet2 jet_from_json(const json& a, int order, const std::set<int>& declared) {
    Jet2 j(order);
    if (!a.is_array()) throw SchemaError("coefficient list must be an array");
    for (auto& entry : a) {
        if (!entry.is_array() || entry.size() != 3) throw SchemaError("coefficient entry must be [i, j, expr]");
        int i = entry[0].get<int>(), jj = entry[1].get<int>();
        if (i < 0 || jj < 0) throw SchemaError("negative exponent in coefficient entry");
        if (i + jj > order) throw DegreeOverflowError(i, jj, order);
        FieldElement c = parse_coefficient(entry[2].get<std::string>(), declared);
        j.add_coeff(i, jj, c);
    }
    return j;
}

inline int parse_order(const json& doc) {
    if (!doc.contains("order") || !doc["order"].is_number_integer()) throw SchemaError("missing integer 'order'");
    int n = doc["order"].get<int>();
    if (n < 1) throw SchemaError("'order' must be positive");
    return n;
}

inline void check_schema(const json& doc, const char* expected) {
    if (!doc.contains("schema") || doc["schema"] != expected)
        throw SchemaError(std::string("expected schema '") + expected + "'");
}

}  // namespace detail

// ---- FormDocument ----------------------------------------------------------

inline json form_to_json(const OneFormJet& eta, const json& metadata = json()) {
    std::set<int> gens = detail::jet_support(eta.P);
    auto qg = detail::jet_support(eta.Q);
    gens.insert(qg.begin(), qg.end());
    json doc;
    doc["schema"] = kFormSchema;
    doc["order"] = eta.order();
    doc["generators"] = detail::generators_json(gens);
    doc["P"] = detail::jet_json(eta.P);
    doc["Q"] = detail::jet_json(eta.Q);
    if (!metadata.is_null()) doc["metadata"] = metadata;
    return doc;
}

inline OneFormJet form_from_json(const json& doc) {
    detail::check_schema(doc, kFormSchema);
    int order = detail::parse_order(doc);
    auto declared = detail::parse_generator_list(doc);
    if (!doc.contains("P") || !doc.contains("Q")) throw SchemaError("form document needs 'P' and 'Q'");
    return OneFormJet(detail::jet_from_json(doc["P"], order, declared),
                      detail::jet_from_json(doc["Q"], order, declared));
}

// ---- MapDocument -----------------------------------------------------------

inline json map_to_json(const FormalMapJet& phi, const json& metadata = json()) {
    std::set<int> gens = detail::jet_support(phi.U);
    auto vg = detail::jet_support(phi.V);
    gens.insert(vg.begin(), vg.end());
    json doc;
    doc["schema"] = kMapSchema;
    doc["order"] = phi.order();
    doc["generators"] = detail::generators_json(gens);
    doc["U"] = detail::jet_json(phi.U);
    doc["V"] = detail::jet_json(phi.V);
    if (!metadata.is_null()) doc["metadata"] = metadata;
    return doc;
}

inline FormalMapJet map_from_json(const json& doc) {
    detail::check_schema(doc, kMapSchema);
    int order = detail::parse_order(doc);
    auto declared = detail::parse_generator_list(doc);
    if (!doc.contains("U") || !doc.contains("V")) throw SchemaError("map document needs 'U' and 'V'");
    // FormalMapJet validates zero constant term and invertible linear part
    return FormalMapJet(detail::jet_from_json(doc["U"], order, declared),
                        detail::jet_from_json(doc["V"], order, declared));
}

// ---- NormalForm ------------------------------------------------------------

inline json normal_form_to_json(const NormalForm& nf) {
    json doc;
    doc["schema"] = kNormalFormSchema;
    doc["order"] = nf.N;
    doc["residues"] = json::array(
        {nf.residues.alpha1.to_string(), nf.residues.alpha2.to_string(), nf.residues.alpha3.to_string()});
    json b = json::array();
    for (auto& bk : nf.b) b.push_back(bk.to_string());
    doc["b"] = b;
    json gens = json::array();
    for (auto& g : nf.field.generators) gens.push_back(g.name);
    doc["field"] = {{"generators", gens}, {"transcendence_degree", nf.field.transcendence_degree}};
    return doc;
}

inline NormalForm normal_form_from_json(const json& doc) {
    detail::check_schema(doc, kNormalFormSchema);
    NormalForm nf;
    nf.N = detail::parse_order(doc);
    if (!doc.contains("residues") || doc["residues"].size() != 3)
        throw SchemaError("normal form document needs three residues");
    nf.residues.alpha1 = parse_coefficient(doc["residues"][0].get<std::string>());
    nf.residues.alpha2 = parse_coefficient(doc["residues"][1].get<std::string>());
    nf.residues.alpha3 = parse_coefficient(doc["residues"][2].get<std::string>());
    for (auto& s : doc.at("b")) nf.b.push_back(parse_coefficient(s.get<std::string>()));
    std::set<int> gens;
    if (doc.contains("field"))
        for (auto& g : doc["field"]["generators"]) gens.insert(std::stoi(g.get<std::string>().substr(1)));
    nf.field = make_descriptor(gens);
    return nf;
}

// ---- Transcript ------------------------------------------------------------

inline json transcript_to_json(const ReductionTranscript& t) {
    json doc;
    doc["schema"] = kTranscriptSchema;
    doc["order"] = t.order;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(t.input_digest));
    doc["input_digest"] = std::string(buf);
    json rect = json::array();
    for (auto& st : t.rectification) rect.push_back({{"k", st.k}, {"c", st.c.to_string()}});
    doc["rectification"] = rect;
    json steps = json::array();
    for (auto& st : t.steps)
        steps.push_back({{"m", st.m},
                         {"alpha", detail::jet_json(st.alpha)},
                         {"beta", detail::jet_json(st.beta)},
                         {"delta", detail::jet_json(st.delta)},
                         {"b", st.b.to_string()}});
    doc["steps"] = steps;
    return doc;
}

inline ReductionTranscript transcript_from_json(const json& doc) {
    detail::check_schema(doc, kTranscriptSchema);
    ReductionTranscript t;
    t.order = detail::parse_order(doc);
    t.input_digest = std::stoull(doc.at("input_digest").get<std::string>(), nullptr, 16);
    for (auto& st : doc.at("rectification"))
        t.rectification.push_back({st.at("k").get<int>(), parse_coefficient(st.at("c").get<std::string>())});
    for (auto& st : doc.at("steps")) {
        ReductionStep step(st.at("m").get<int>(), t.order);
        std::set<int> all;
        for (int v = 1; v <= kMaxVars; ++v) all.insert(v);
        step.alpha = detail::jet_from_json(st.at("alpha"), t.order, all);
        step.beta = detail::jet_from_json(st.at("beta"), t.order, all);
        step.delta = detail::jet_from_json(st.at("delta"), t.order, all);
        step.b = parse_coefficient(st.at("b").get<std::string>());
        t.steps.push_back(std::move(step));
    }
    return t;
}

}  // namespace fnf

#endif  // FNF_IO_HPP
