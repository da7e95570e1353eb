#include "tanglekit/json_io.hpp"

#include <json.hpp>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json label_array(const Matroid& m, Mask mask) {
    ordered_json arr = ordered_json::array();
    for (const auto& l : m.labels_of(mask)) arr.push_back(l);
    return arr;
}

ordered_json tangle_body(const Tangle& t, bool include_matroid) {
    ordered_json j;
    j["order"] = t.order;
    auto arr = ordered_json::array();
    for (Mask h : t.maximal_small) arr.push_back(label_array(t.matroid, h));
    j["maximal_small"] = std::move(arr);
    if (include_matroid)
        j["matroid"] = ordered_json::parse(expr_to_json(t.matroid.expr()));
    return j;
}

}  // namespace

std::string tangle_to_json(const Tangle& t, bool include_matroid, bool pretty) {
    ordered_json j = tangle_body(t, include_matroid);
    return pretty ? j.dump(2) : j.dump();
}

Tangle tangle_from_json(const Matroid& m, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw StructuralError(std::string("bad JSON: ") + e.what());
    }
    Tangle t;
    t.matroid = m;
    t.order = j.at("order").get<int>();
    for (const auto& set : j.at("maximal_small"))
        t.maximal_small.push_back(m.mask_of_labels(set.get<std::vector<std::string>>()));
    std::sort(t.maximal_small.begin(), t.maximal_small.end());
    return t;
}

std::string report_json(const Matroid& m, std::optional<long> value,
                        std::optional<Mask> witness,
                        const std::optional<AxiomViolation>& violation, bool pretty) {
    ordered_json j;
    j["value"] = value ? ordered_json(*value) : ordered_json(nullptr);
    j["witness"] = witness ? label_array(m, *witness) : ordered_json(nullptr);
    if (violation) {
        ordered_json v;
        v["axiom"] = violation->axiom;
        auto arr = ordered_json::array();
        for (Mask w : violation->witnesses) arr.push_back(label_array(m, w));
        v["witnesses"] = std::move(arr);
        j["violation"] = std::move(v);
    } else {
        j["violation"] = nullptr;
    }
    return pretty ? j.dump(2) : j.dump();
}

std::string trace_to_json(const ReductionResult& result, bool pretty) {
    ordered_json j;
    auto steps = ordered_json::array();
    for (const auto& s : result.steps) {
        ordered_json step;
        step["element"] = s.element;
        step["kind"] = removal_kind_name(s.kind);
        step["rule"] = s.rule;
        step["breadth"] = s.breadth;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["final"] = ordered_json::parse(expr_to_json(result.final_matroid.expr()));
    j["final_tangle"] = tangle_body(result.final_tangle, false);
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace tanglekit
