#include "mixlap/matrix_builder.hpp"

#include <numeric>

namespace mixlap {

namespace {

std::vector<int> vertex_labels(const MixedGraph& g) {
    std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()));
    std::iota(labels.begin(), labels.end(), 1);
    return labels;
}

std::vector<int> edge_labels(const MixedGraph& g) {
    std::vector<int> labels(static_cast<std::size_t>(g.edge_count()));
    std::iota(labels.begin(), labels.end(), 1);
    return labels;
}

}  // namespace

ExactMatrix build_N(const MixedGraph& g) {
    ExactMatrix m(vertex_labels(g), vertex_labels(g));
    for (const auto& e : g.edges()) {
        if (e.orientation == Orientation::undirected) {
            m.at(e.u - 1, e.v - 1) = EisensteinInt(1);
            m.at(e.v - 1, e.u - 1) = EisensteinInt(1);
        } else {
            m.at(e.u - 1, e.v - 1) = EisensteinInt::omega();
            m.at(e.v - 1, e.u - 1) = EisensteinInt::omega_bar();
        }
    }
    return m;
}

ExactMatrix build_D(const MixedGraph& g) {
    ExactMatrix m(vertex_labels(g), vertex_labels(g));
    for (int v = 1; v <= g.vertex_count(); ++v)
        m.at(v - 1, v - 1) = EisensteinInt(g.degree(v));
    return m;
}

ExactMatrix build_L(const MixedGraph& g) {
    ExactMatrix m = build_D(g);
    const ExactMatrix n = build_N(g);
    for (int i = 0; i < m.row_count(); ++i)
        for (int j = 0; j < m.col_count(); ++j) m.at(i, j) -= n.at(i, j);
    return m;
}

ExactMatrix build_Q(const MixedGraph& g) {
    ExactMatrix m = build_D(g);
    const ExactMatrix n = build_N(g);
    for (int i = 0; i < m.row_count(); ++i)
        for (int j = 0; j < m.col_count(); ++j) m.at(i, j) += n.at(i, j);
    return m;
}

ExactMatrix build_S(const MixedGraph& g) {
    ExactMatrix m(vertex_labels(g), edge_labels(g));
    int col = 0;
    for (const auto& e : g.edges()) {
        if (e.orientation == Orientation::undirected) {
            m.at(e.u - 1, col) = EisensteinInt(1);   // canonical tail = smaller index
            m.at(e.v - 1, col) = EisensteinInt(-1);
        } else {
            m.at(e.u - 1, col) = EisensteinInt(1);
            m.at(e.v - 1, col) = -EisensteinInt::omega_bar();
        }
        ++col;
    }
    return m;
}

ExactMatrix build_T(const MixedGraph& g) {
    ExactMatrix m(vertex_labels(g), edge_labels(g));
    int col = 0;
    for (const auto& e : g.edges()) {
        if (e.orientation == Orientation::undirected) {
            m.at(e.u - 1, col) = EisensteinInt(1);
            m.at(e.v - 1, col) = EisensteinInt(1);
        } else {
            m.at(e.u - 1, col) = EisensteinInt::omega();
            m.at(e.v - 1, col) = EisensteinInt(1);
        }
        ++col;
    }
    return m;
}

}  // namespace mixlap
