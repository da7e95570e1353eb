#include "tanglekit/matroid_expr.hpp"

#include <json.hpp>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json_impl(const MatroidExpr& e) {
    ordered_json j;
    switch (e.kind) {
        case MatroidExpr::Kind::Uniform:
            j["kind"] = "uniform";
            j["rank"] = e.rank;
            j["size"] = e.size;
            break;
        case MatroidExpr::Kind::Graphic: {
            j["kind"] = "graphic";
            j["vertices"] = e.vertices;
            auto edges = ordered_json::array();
            for (const auto& ed : e.edges) edges.push_back({ed[0], ed[1]});
            j["edges"] = std::move(edges);
            j["labels"] = e.labels;
            break;
        }
        case MatroidExpr::Kind::Linear:
            j["kind"] = "linear";
            j["prime"] = e.prime;
            j["columns"] = e.columns;
            j["labels"] = e.labels;
            break;
        case MatroidExpr::Kind::RankTable: {
            j["kind"] = "rank_table";
            j["labels"] = e.labels;
            auto ranks = ordered_json::array();
            for (auto r : e.ranks) ranks.push_back(static_cast<int>(r));
            j["ranks"] = std::move(ranks);
            break;
        }
        case MatroidExpr::Kind::Dual:
            j["kind"] = "dual";
            j["of"] = to_json_impl(*e.children.at(0));
            break;
        case MatroidExpr::Kind::Delete:
            j["kind"] = "delete";
            j["of"] = to_json_impl(*e.children.at(0));
            j["elements"] = e.elements;
            break;
        case MatroidExpr::Kind::Contract:
            j["kind"] = "contract";
            j["of"] = to_json_impl(*e.children.at(0));
            j["elements"] = e.elements;
            break;
        case MatroidExpr::Kind::DirectSum: {
            j["kind"] = "direct_sum";
            auto parts = ordered_json::array();
            for (const auto& c : e.children) parts.push_back(to_json_impl(*c));
            j["parts"] = std::move(parts);
            break;
        }
        case MatroidExpr::Kind::PrincipalExtension:
            j["kind"] = "principal_extension";
            j["of"] = to_json_impl(*e.children.at(0));
            j["flat"] = e.elements;
            j["new"] = e.new_label;
            break;
    }
    return j;
}

ExprPtr from_json_impl(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw StructuralError("matroid expression must be an object with a 'kind' field");
    auto e = std::make_shared<MatroidExpr>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform") {
        e->kind = MatroidExpr::Kind::Uniform;
        e->rank = j.at("rank").get<int>();
        e->size = j.at("size").get<int>();
    } else if (kind == "graphic") {
        e->kind = MatroidExpr::Kind::Graphic;
        e->vertices = j.at("vertices").get<int>();
        for (const auto& ed : j.at("edges")) {
            if (!ed.is_array() || ed.size() != 2) throw StructuralError("bad edge entry");
            e->edges.push_back({ed[0].get<int>(), ed[1].get<int>()});
        }
        e->labels = j.at("labels").get<std::vector<std::string>>();
    } else if (kind == "linear") {
        e->kind = MatroidExpr::Kind::Linear;
        e->prime = j.at("prime").get<int>();
        e->columns = j.at("columns").get<std::vector<std::vector<int>>>();
        e->labels = j.at("labels").get<std::vector<std::string>>();
    } else if (kind == "rank_table") {
        e->kind = MatroidExpr::Kind::RankTable;
        e->labels = j.at("labels").get<std::vector<std::string>>();
        for (const auto& r : j.at("ranks")) {
            int v = r.get<int>();
            if (v < 0 || v > 255) throw StructuralError("rank entry out of range");
            e->ranks.push_back(static_cast<std::uint8_t>(v));
        }
    } else if (kind == "dual") {
        e->kind = MatroidExpr::Kind::Dual;
        e->children = {from_json_impl(j.at("of"))};
    } else if (kind == "delete" || kind == "contract") {
        e->kind = kind == "delete" ? MatroidExpr::Kind::Delete : MatroidExpr::Kind::Contract;
        e->children = {from_json_impl(j.at("of"))};
        e->elements = j.at("elements").get<std::vector<std::string>>();
    } else if (kind == "direct_sum") {
        e->kind = MatroidExpr::Kind::DirectSum;
        for (const auto& part : j.at("parts")) e->children.push_back(from_json_impl(part));
        if (e->children.size() != 2)
            throw StructuralError("direct_sum takes exactly two parts");
    } else if (kind == "principal_extension") {
        e->kind = MatroidExpr::Kind::PrincipalExtension;
        e->children = {from_json_impl(j.at("of"))};
        e->elements = j.at("flat").get<std::vector<std::string>>();
        e->new_label = j.at("new").get<std::string>();
    } else {
        throw StructuralError("unknown expression kind '" + kind + "'");
    }
    return e;
}

}  // namespace

std::string expr_to_json(const MatroidExpr& expr, bool pretty) {
    ordered_json j = to_json_impl(expr);
    return pretty ? j.dump(2) : j.dump();
}

ExprPtr expr_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw StructuralError(std::string("bad JSON: ") + e.what());
    }
    return from_json_impl(j);
}

}  // namespace tanglekit
