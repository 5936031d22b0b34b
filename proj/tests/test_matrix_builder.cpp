#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "mixlap/exact_linalg.hpp"
#include "mixlap/matrix_builder.hpp"
#include "mixlap/verify.hpp"

using namespace mixlap;

namespace {

MixedGraph load_fixture(const char* name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return MixedGraph::parse(buffer.str());
}

const EisensteinInt one(1);
const EisensteinInt w = EisensteinInt::omega();
const EisensteinInt wbar = EisensteinInt::omega_bar();

}  // namespace

TEST_CASE("Laplacian of the five-edge diamond matches the known display") {
    const MixedGraph g = load_fixture("diamond_sp.graph");
    const ExactMatrix l = build_L(g);
    const EisensteinInt z(0);
    const std::vector<std::vector<EisensteinInt>> expected = {
        {EisensteinInt(3), -w, -w, -one},
        {-wbar, EisensteinInt(2), -one, z},
        {-wbar, -one, EisensteinInt(3), -wbar},
        {-one, z, -w, EisensteinInt(2)},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(l.at(i, j) == expected[i][j]);
}

TEST_CASE("quasi-Laplacian of the oriented four-cycle matches the known display") {
    const MixedGraph g = load_fixture("c4_quasi.graph");
    const ExactMatrix q = build_Q(g);
    const EisensteinInt z(0);
    const EisensteinInt two(2);
    const std::vector<std::vector<EisensteinInt>> expected = {
        {two, w, z, one},
        {wbar, two, wbar, z},
        {z, w, two, one},
        {one, z, one, two},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(q.at(i, j) == expected[i][j]);
}

TEST_CASE("adjacency matrix basics") {
    const MixedGraph single = MixedGraph::parse("n 2\ne 1 2 --\n");
    const ExactMatrix n = build_N(single);
    CHECK(n.at(0, 1) == one);
    CHECK(n.at(1, 0) == one);
    CHECK(n.at(0, 0).is_zero());

    const MixedGraph empty = MixedGraph::parse("n 3\n");
    CHECK(build_N(empty) == ExactMatrix({1, 2, 3}, {1, 2, 3}));
    CHECK(build_L(empty) == build_Q(empty));
    CHECK(build_D(empty) == build_N(empty));

    const MixedGraph g = load_fixture("diamond_sp.graph");
    const ExactMatrix adj = build_N(g);
    const ExactMatrix l = build_L(g);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(adj.at(i, j) == -l.at(i, j));
}

TEST_CASE("incidence columns") {
    SUBCASE("directed edge") {
        const MixedGraph g = MixedGraph::parse("n 2\ne 1 2 ->\n");
        const ExactMatrix s = build_S(g);
        CHECK(s.at(0, 0) == one);
        CHECK(s.at(1, 0) == -wbar);
        // One-edge hand computation against the L definition.
        const ExactMatrix product = multiply_conj_transpose(s, s);
        CHECK(product.at(0, 1) == -w);
        CHECK(product == build_L(g));

        const ExactMatrix t = build_T(g);
        CHECK(t.at(0, 0) == w);
        CHECK(t.at(1, 0) == one);
        const ExactMatrix quasi = multiply_conj_transpose(t, t);
        CHECK(quasi.at(0, 1) == w);
        CHECK(quasi == build_Q(g));
    }
    SUBCASE("undirected edge gives the classical incidence column") {
        const MixedGraph g = MixedGraph::parse("n 2\ne 1 2 --\n");
        const ExactMatrix s = build_S(g);
        CHECK(s.at(0, 0) == one);
        CHECK(s.at(1, 0) == -one);
        const ExactMatrix l = multiply_conj_transpose(s, s);
        CHECK(l.at(0, 0) == one);
        CHECK(l.at(0, 1) == -one);
        const ExactMatrix t = build_T(g);
        const ExactMatrix q = multiply_conj_transpose(t, t);
        CHECK(q.at(0, 0) == one);
        CHECK(q.at(0, 1) == one);
    }
    SUBCASE("directed path factorizes exactly") {
        const MixedGraph g = MixedGraph::parse("n 3\ne 1 2 ->\ne 2 3 ->\n");
        CHECK(multiply_conj_transpose(build_S(g), build_S(g)) == build_L(g));
    }
}

TEST_CASE("factorizations and structure on random graphs") {
    std::mt19937_64 seeds(424242);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(seeds() % 6);
        const MixedGraph g = random_connected_mixed_graph(n, n, seeds());
        const ExactMatrix s = build_S(g);
        const ExactMatrix t = build_T(g);
        const ExactMatrix l = build_L(g);
        const ExactMatrix q = build_Q(g);

        CHECK(multiply_conj_transpose(s, s) == l);
        CHECK(multiply_conj_transpose(t, t) == q);
        CHECK(is_hermitian(l));
        CHECK(is_hermitian(q));
        for (int v = 1; v <= n; ++v)
            CHECK(l.at(v - 1, v - 1) == EisensteinInt(g.degree(v)));

        // The two nonzero entries of any S column multiply to the negated
        // adjacency entry.
        const ExactMatrix adj = build_N(g);
        for (int e = 1; e <= g.edge_count(); ++e) {
            const Edge& edge = g.edge(e);
            const EisensteinInt zu = s.at(edge.u - 1, e - 1);
            const EisensteinInt zv = s.at(edge.v - 1, e - 1);
            CHECK(zu * zv.conj() == -adj.at(edge.u - 1, edge.v - 1));
        }
    }
}

TEST_CASE("vertex relabeling preserves submatrix determinant norms") {
    const MixedGraph g = load_fixture("diamond_sp.graph");
    // Swap labels 1 <-> 3 by rebuilding the edge list.
    auto relabel = [](int v) { return v == 1 ? 3 : v == 3 ? 1 : v; };
    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        e.u = relabel(e.u);
        e.v = relabel(e.v);
        if (e.orientation == Orientation::undirected && e.u > e.v) std::swap(e.u, e.v);
        edges.push_back(e);
    }
    const MixedGraph permuted(4, edges);
    const ExactMatrix l = build_L(g);
    const ExactMatrix lp = build_L(permuted);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            const Int original = cofactor(l, i, j).norm();
            const Int relabeled = cofactor(lp, relabel(i), relabel(j)).norm();
            CHECK(original == relabeled);
        }
    }
}

TEST_CASE("submatrix selection and deletion") {
    const MixedGraph g = load_fixture("diamond_sp.graph");
    const ExactMatrix l = build_L(g);

    SUBCASE("deletion of row 1 and column 1") {
        const ExactMatrix minor = delete_submatrix(l, {1}, {1});
        CHECK(minor.row_labels() == std::vector<int>{2, 3, 4});
        CHECK(det(minor).norm() == 64);
    }
    SUBCASE("full selection is the identity operation") {
        CHECK(select_submatrix(l, {1, 2, 3, 4}, {1, 2, 3, 4}) == l);
    }
    SUBCASE("selection sorts requested labels") {
        CHECK(select_submatrix(l, {3, 2}, {2, 3}) == select_submatrix(l, {2, 3}, {2, 3}));
    }
    SUBCASE("empty selection yields the 0x0 matrix with determinant one") {
        const ExactMatrix empty = select_submatrix(l, {}, {});
        CHECK(empty.row_count() == 0);
        CHECK(det(empty) == EisensteinInt(1));
    }
    SUBCASE("unknown labels are rejected") {
        CHECK_THROWS_AS(select_submatrix(l, {7}, {1}), unknown_label_error);
        CHECK_THROWS_AS(delete_submatrix(l, {1}, {9}), unknown_label_error);
    }
}
