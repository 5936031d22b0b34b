#include "mixlap/json_io.hpp"

namespace mixlap {

namespace {

nlohmann::json int_to_json(const Int& value) {
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

}  // namespace

nlohmann::json to_json(const EisensteinInt& x) {
    return nlohmann::json::array({int_to_json(x.a()), int_to_json(x.b())});
}

nlohmann::json to_json(const MixedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"u", e.u},
                         {"v", e.v},
                         {"orientation",
                          e.orientation == Orientation::undirected ? "undirected"
                                                                   : "directed"}});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

MixedGraph graph_from_json(const nlohmann::json& j) {
    std::vector<Edge> edges;
    for (const auto& item : j.at("edges")) {
        Edge e;
        e.u = item.at("u").get<int>();
        e.v = item.at("v").get<int>();
        const std::string orientation = item.at("orientation").get<std::string>();
        if (orientation == "undirected")
            e.orientation = Orientation::undirected;
        else if (orientation == "directed")
            e.orientation = Orientation::directed;
        else
            throw std::invalid_argument("unknown orientation \"" + orientation + "\"");
        edges.push_back(e);
    }
    return MixedGraph(j.at("n").get<int>(), std::move(edges));
}

nlohmann::json to_json(const ExactMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.row_count(); ++i)
        for (int j = 0; j < m.col_count(); ++j) entries.push_back(to_json(m.at(i, j)));
    return {{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", entries}};
}

nlohmann::json to_json(const CycleClassReport& report) {
    return {{"a", report.a},
            {"b", report.b},
            {"c", report.c},
            {"phi", to_string(report.phi)},
            {"psi", to_string(report.psi)}};
}

nlohmann::json to_json(const SPLabeling& labeling) {
    nlohmann::json labels = nlohmann::json::object();
    for (std::size_t v = 0; v < labeling.labels.size(); ++v)
        labels[std::to_string(v + 1)] = labeling.labels[v];
    return {{"labels", labels}};
}

nlohmann::json to_json(const MinorReport& report) {
    return {{"v1", report.v1},
            {"v2", report.v2},
            {"algebraic", to_json(report.algebraic)},
            {"combinatorial", to_json(report.combinatorial)},
            {"norm_algebraic", int_to_json(report.algebraic.norm())},
            {"norm_combinatorial", int_to_json(report.combinatorial.norm())},
            {"match", report.exact_match ? "exact"
                      : report.norm_match ? "norm"
                                          : "mismatch"}};
}

nlohmann::json to_json(const TreeCountReport& report) {
    nlohmann::json j{{"applicable", report.applicable},
                     {"norms_all_equal", report.norms_all_equal},
                     {"kirchhoff", int_to_json(report.kirchhoff)},
                     {"matches", report.matches},
                     {"connected", report.connected}};
    if (report.norms_all_equal) {
        j["common_cofactor_norm"] = int_to_json(report.common_cofactor_norm);
        j["tree_count"] = int_to_json(report.tree_count);
    }
    if (report.witness) {
        j["witness"] = {{"first", {{"row", report.witness->row1},
                                   {"col", report.witness->col1},
                                   {"norm", int_to_json(report.witness->norm1)}}},
                        {"second", {{"row", report.witness->row2},
                                    {"col", report.witness->col2},
                                    {"norm", int_to_json(report.witness->norm2)}}}};
    }
    return j;
}

}  // namespace mixlap
