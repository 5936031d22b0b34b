#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "mixlap/exact_linalg.hpp"
#include "mixlap/matrix_builder.hpp"
#include "mixlap/minor_theorems.hpp"
#include "mixlap/structure.hpp"
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

Substructure cycle_substructure(const MixedWalk& cycle) {
    Substructure s;
    s.vertices.assign(cycle.vertices.begin(), cycle.vertices.end() - 1);
    s.edge_ids = cycle.edge_ids;
    std::sort(s.vertices.begin(), s.vertices.end());
    std::sort(s.edge_ids.begin(), s.edge_ids.end());
    return s;
}

Substructure full_substructure(const MixedGraph& g) {
    Substructure s;
    for (int v = 1; v <= g.vertex_count(); ++v) s.vertices.push_back(v);
    for (int e = 1; e <= g.edge_count(); ++e) s.edge_ids.push_back(e);
    return s;
}

}  // namespace

TEST_CASE("classify_cycle basics") {
    SUBCASE("all-undirected four-cycle") {
        const MixedGraph c4 =
            MixedGraph::parse("n 4\ne 1 2 --\ne 2 3 --\ne 3 4 --\ne 1 4 --\n");
        const auto cycles = enumerate_simple_cycles(c4);
        REQUIRE(cycles.size() == 1);
        const CycleClassReport r = classify_cycle(cycles[0], c4);
        CHECK(r.a == 0);
        CHECK(r.b == 0);
        CHECK(r.c == 4);
        CHECK(r.phi == PhiClass::phi4);
        CHECK(r.psi == PsiClass::psi4);
    }
    SUBCASE("all-forward directed triangle, with determinant oracles") {
        const MixedGraph c3 = MixedGraph::parse("n 3\ne 1 2 ->\ne 2 3 ->\ne 3 1 ->\n");
        const auto cycles = enumerate_simple_cycles(c3);
        REQUIRE(cycles.size() == 1);
        const CycleClassReport r = classify_cycle(cycles[0], c3);
        CHECK(r.a + r.b == 3);
        CHECK(r.c == 0);
        CHECK(r.phi == PhiClass::phi3);
        CHECK(r.psi == PsiClass::psi4);  // residue 3, even c
        CHECK(det(build_S(c3)).norm() == 4);
        CHECK(det(build_T(c3)).norm() == 0);
    }
    SUBCASE("the oriented four-cycle fixture") {
        const MixedGraph g = load_fixture("c4_quasi.graph");
        const auto cycles = enumerate_simple_cycles(g);
        REQUIRE(cycles.size() == 1);
        const CycleClassReport r = classify_cycle(cycles[0], g);
        CHECK(r.a == 1);
        CHECK(r.b == 1);
        CHECK(r.c == 2);
        CHECK(r.phi == PhiClass::phi4);
        CHECK(r.psi == PsiClass::psi4);
    }
    SUBCASE("non-cycle input is rejected") {
        const MixedGraph g = MixedGraph::parse("n 2\ne 1 2 --\n");
        CHECK_THROWS_AS(classify_cycle(MixedWalk{{1, 2}, {1}, {true}}, g),
                        std::invalid_argument);
    }
}

TEST_CASE("cycle classes are invariant under traversal direction and start") {
    std::mt19937_64 seeds(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(seeds() % 5);
        // A single oriented cycle graph.
        const MixedGraph base = [&] {
            std::vector<Edge> edges;
            for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, Orientation::undirected});
            edges.push_back({1, n, Orientation::undirected});
            return MixedGraph(n, edges);
        }();
        const OrientationSpace space(base);
        const MixedGraph g = space.at(seeds() % space.size());
        const auto cycles = enumerate_simple_cycles(g);
        REQUIRE(cycles.size() == 1);
        const MixedWalk& canonical = cycles[0];
        const CycleClassReport expect = classify_cycle(canonical, g);

        // Reverse the traversal and rotate the start.
        MixedWalk reversed;
        reversed.vertices.assign(canonical.vertices.rbegin(), canonical.vertices.rend());
        reversed.edge_ids.assign(canonical.edge_ids.rbegin(), canonical.edge_ids.rend());
        for (auto it = canonical.forward.rbegin(); it != canonical.forward.rend(); ++it)
            reversed.forward.push_back(!*it);
        const CycleClassReport r2 = classify_cycle(reversed, g);
        CHECK(r2.phi == expect.phi);
        CHECK(r2.psi == expect.psi);
        CHECK(r2.c == expect.c);

        MixedWalk rotated = canonical;
        rotated.vertices.erase(rotated.vertices.begin());
        rotated.vertices.push_back(rotated.vertices.front());
        std::rotate(rotated.edge_ids.begin(), rotated.edge_ids.begin() + 1,
                    rotated.edge_ids.end());
        std::vector<bool> flags(rotated.forward.begin() + 1, rotated.forward.end());
        flags.push_back(rotated.forward.front());
        rotated.forward = flags;
        const CycleClassReport r3 = classify_cycle(rotated, g);
        CHECK(r3.phi == expect.phi);
        CHECK(r3.psi == expect.psi);
    }
}

TEST_CASE("rootless tree determinant units") {
    SUBCASE("single hanging directed edge, away from the root") {
        const MixedGraph g = MixedGraph::parse("n 2\ne 1 2 ->\n");
        const Substructure c{{2}, {1}};
        CHECK(det_unit_rootless_tree_S(c, g) == -EisensteinInt::omega_bar());
        // T side: the head entry.
        CHECK(det_unit_rootless_tree_T(c, g) == EisensteinInt(1));
        CHECK(det(select_submatrix(build_T(g), {2}, {1})) == EisensteinInt(1));
    }
    SUBCASE("single hanging directed edge, toward the root") {
        const MixedGraph g = MixedGraph::parse("n 2\ne 2 1 ->\n");
        const Substructure c{{2}, {1}};
        CHECK(det_unit_rootless_tree_S(c, g) == EisensteinInt(1));
        CHECK(det_unit_rootless_tree_T(c, g) == EisensteinInt::omega());
        CHECK(det(select_submatrix(build_T(g), {2}, {1})) == EisensteinInt::omega());
    }
    SUBCASE("undirected path with canonical directions toward the root") {
        // Path 4-3-2-1 rooted at 4: canonical tails are the smaller indices,
        // which lie farther from the root, so every edge points toward it.
        const MixedGraph g = MixedGraph::parse("n 4\ne 1 2 --\ne 2 3 --\ne 3 4 --\n");
        const Substructure c{{1, 2, 3}, {1, 2, 3}};
        CHECK(det_unit_rootless_tree_S(c, g) == EisensteinInt(1));
        CHECK(det_unit_rootless_tree_T(c, g) == EisensteinInt(1));
    }
    SUBCASE("all-undirected star rooted at a leaf") {
        const MixedGraph g = MixedGraph::parse("n 4\ne 1 2 --\ne 1 3 --\ne 1 4 --\n");
        const Substructure c{{1, 2, 3}, {1, 2, 3}};  // root 4, a leaf
        CHECK(det_unit_rootless_tree_T(c, g) == EisensteinInt(1));
    }
    SUBCASE("random rootless trees: unit norm, determinant matched up to sign") {
        std::mt19937_64 seeds(321);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 2 + static_cast<int>(seeds() % 6);
            const MixedGraph g = random_connected_mixed_graph(n, 0, seeds());  // a tree
            // The root must be a leaf: deleting a higher-degree vertex splits
            // the structure into several incidence components.
            std::vector<int> leaves;
            for (int v = 1; v <= n; ++v)
                if (g.degree(v) == 1) leaves.push_back(v);
            REQUIRE(!leaves.empty());
            const int root = leaves[seeds() % leaves.size()];
            Substructure c;
            for (int v = 1; v <= n; ++v)
                if (v != root) c.vertices.push_back(v);
            for (int e = 1; e <= g.edge_count(); ++e) c.edge_ids.push_back(e);

            const EisensteinInt unit_s = det_unit_rootless_tree_S(c, g);
            const EisensteinInt unit_t = det_unit_rootless_tree_T(c, g);
            CHECK(unit_s.norm() == 1);
            CHECK(unit_t.norm() == 1);
            const EisensteinInt ds = det(select_submatrix(build_S(g), c.vertices, c.edge_ids));
            const EisensteinInt dt = det(select_submatrix(build_T(g), c.vertices, c.edge_ids));
            CHECK((ds == unit_s || ds == -unit_s));
            CHECK((dt == unit_t || dt == -unit_t));
        }
    }
    SUBCASE("wrong component kind is rejected") {
        const MixedGraph c3 = MixedGraph::parse("n 3\ne 1 2 --\ne 2 3 --\ne 1 3 --\n");
        CHECK_THROWS_AS(det_unit_rootless_tree_S(full_substructure(c3), c3),
                        std::invalid_argument);
    }
}

TEST_CASE("classify_substructure") {
    SUBCASE("one rootless tree: eligible on both sides") {
        const MixedGraph g = MixedGraph::parse("n 3\ne 1 2 ->\ne 2 3 --\n");
        const SubstructureClass cls = classify_substructure(Substructure{{2, 3}, {1, 2}}, g);
        CHECK(cls.kind == EligibilityKind::both);
        CHECK(cls.gamma1 == 0);
        CHECK(cls.gamma2 == 0);
        CHECK(cls.unit_s.norm() == 1);
        CHECK(cls.unit_t.norm() == 1);
    }
    SUBCASE("all-forward directed triangle") {
        const MixedGraph c3 = MixedGraph::parse("n 3\ne 1 2 ->\ne 2 3 ->\ne 3 1 ->\n");
        const SubstructureClass cls = classify_substructure(full_substructure(c3), c3);
        CHECK(cls.kind == EligibilityKind::si_only);
        CHECK(cls.gamma1 == 0);
        CHECK(cls.gamma2 == 1);
        CHECK(cls.unit_s.norm() == 4);
        CHECK(cls.unit_t.is_zero());
        CHECK(det(build_S(c3)).norm() == 4);
        CHECK(det(build_T(c3)).norm() == 0);
    }
    SUBCASE("a null-class cycle blocks the S side") {
        const MixedGraph c4 =
            MixedGraph::parse("n 4\ne 1 2 --\ne 2 3 --\ne 3 4 --\ne 1 4 --\n");
        const SubstructureClass cls = classify_substructure(full_substructure(c4), c4);
        CHECK_FALSE(cls.si_eligible());
        CHECK(cls.unit_s.is_zero());
        CHECK(det(build_S(c4)).is_zero());
    }
    SUBCASE("non-square substructure is rejected") {
        const MixedGraph g = MixedGraph::parse("n 2\ne 1 2 --\n");
        CHECK_THROWS_AS(classify_substructure(Substructure{{1, 2}, {1}}, g),
                        std::invalid_argument);
    }
}

TEST_CASE("substructure determinant norms match the classification exhaustively") {
    // Exhaustive over all square substructures of all orientations of all
    // connected graphs on up to 4 vertices: the sharpest oracle for the
    // component taxonomy.
    for (const MixedGraph& base : connected_graph_catalog(4)) {
        const OrientationSpace space(base);
        for (std::uint64_t index = 0; index < space.size(); ++index) {
            const MixedGraph g = space.at(index);
            const ExactMatrix s = build_S(g);
            const ExactMatrix t = build_T(g);
            const int n = g.vertex_count();
            const int m = g.edge_count();
            for (int k = 1; k <= std::min(n, m); ++k) {
                for_each_subset(n, k, [&](const std::vector<int>& vs) {
                    for_each_subset(m, k, [&](const std::vector<int>& es) {
                        const Substructure sub{vs, es};
                        const SubstructureClass cls = classify_substructure(sub, g, false);
                        const Int norm_s =
                            det(select_submatrix(s, vs, es)).norm();
                        const Int norm_t =
                            det(select_submatrix(t, vs, es)).norm();
                        Int want_s = 0, want_t = 0;
                        if (cls.si_eligible()) {
                            want_s = 1;
                            for (int i = 0; i < cls.gamma1; ++i) want_s *= 3;
                            for (int i = 0; i < cls.gamma2; ++i) want_s *= 4;
                        }
                        if (cls.sii_eligible()) {
                            want_t = 1;
                            for (int i = 0; i < cls.tau1; ++i) want_t *= 3;
                            for (int i = 0; i < cls.tau2; ++i) want_t *= 4;
                        }
                        CHECK(norm_s == want_s);
                        CHECK(norm_t == want_t);
                    });
                });
            }
        }
    }
}

TEST_CASE("null labelings") {
    SUBCASE("the diamond fixture splits into parts {1,4} and {2,3}") {
        const MixedGraph g = load_fixture("diamond_sp.graph");
        const auto labeling = sp_labeling(g);
        REQUIRE(labeling.has_value());
        CHECK(labeling->labels == std::vector<int>{0, 1, 1, 0});
    }
    SUBCASE("a residue-one cycle admits no labeling, matching the determinant") {
        const MixedGraph g = MixedGraph::parse("n 3\ne 1 2 ->\ne 2 3 --\ne 1 3 <-\n");
        // Cycle 1,2,3: one forward arrow, one backward, one undirected… adjust:
        // edges are 1->2, 2--3, 3->1; traversal 1,2,3 gives a=2, b=0, c=1.
        const auto cycles = enumerate_simple_cycles(g);
        REQUIRE(cycles.size() == 1);
        const CycleClassReport r = classify_cycle(cycles[0], g);
        CHECK(r.phi != PhiClass::phi4);
        CHECK_FALSE(sp_labeling(g).has_value());
        CHECK_FALSE(det(build_L(g)).is_zero());
    }
    SUBCASE("edgeless graph gets the all-zero labeling") {
        const MixedGraph g = MixedGraph::parse("n 3\n");
        const auto labeling = sp_labeling(g);
        REQUIRE(labeling.has_value());
        CHECK(labeling->labels == std::vector<int>{0, 0, 0});
        CHECK(null_vector_from_sp(*labeling) ==
              std::vector<EisensteinInt>(3, EisensteinInt(1)));
    }
    SUBCASE("single undirected edge is quasi-singular with labels 0 and 3") {
        const MixedGraph g = MixedGraph::parse("n 2\ne 1 2 --\n");
        const auto labeling = quasi_null_labeling(g);
        REQUIRE(labeling.has_value());
        CHECK(labeling->labels == std::vector<int>{0, 3});
        CHECK(det(build_Q(g)).is_zero());
    }
    SUBCASE("odd undirected cycle is not quasi-singular") {
        const MixedGraph c3 = MixedGraph::parse("n 3\ne 1 2 --\ne 2 3 --\ne 1 3 --\n");
        CHECK_FALSE(quasi_null_labeling(c3).has_value());
        CHECK(det(build_Q(c3)) == EisensteinInt(4));
    }
    SUBCASE("the quasi fixture is quasi-singular") {
        const MixedGraph g = load_fixture("c4_quasi.graph");
        CHECK(quasi_null_labeling(g).has_value());
        CHECK(det(build_Q(g)).is_zero());
    }
}

TEST_CASE("null vector annihilates S and L exactly") {
    auto verify = [](const MixedGraph& g) {
        const auto labeling = sp_labeling(g);
        REQUIRE(labeling.has_value());
        const std::vector<EisensteinInt> xi = null_vector_from_sp(*labeling);
        const ExactMatrix s = build_S(g);
        for (int j = 0; j < s.col_count(); ++j) {
            EisensteinInt entry;
            for (int i = 0; i < s.row_count(); ++i)
                entry += xi[static_cast<std::size_t>(i)].conj() * s.at(i, j);
            CHECK(entry.is_zero());
        }
        for (const EisensteinInt& y : multiply_vector(build_L(g), xi))
            CHECK(y.is_zero());
    };
    verify(load_fixture("diamond_sp.graph"));
    std::mt19937_64 seeds(987);
    for (int trial = 0; trial < 30; ++trial)
        verify(generate_sp_graph(2 + static_cast<int>(seeds() % 5), seeds()));
}

TEST_CASE("labeling existence is pinned to the determinant oracle exhaustively") {
    // Every orientation of every connected graph on up to 4 vertices:
    // labeling exists  <=>  every simple cycle is in the null class
    //                  <=>  the exact determinant vanishes,
    // for both the Laplacian and quasi-Laplacian sides.
    for (const MixedGraph& base : connected_graph_catalog(4)) {
        const OrientationSpace space(base);
        for (std::uint64_t index = 0; index < space.size(); ++index) {
            const MixedGraph g = space.at(index);
            bool all_phi4 = true, all_psi4 = true;
            for (const MixedWalk& cycle : enumerate_simple_cycles(g)) {
                const CycleClassReport r = classify_cycle(cycle, g);
                if (r.phi != PhiClass::phi4) all_phi4 = false;
                if (r.psi != PsiClass::psi4) all_psi4 = false;
            }
            const bool sp = sp_labeling(g).has_value();
            const bool quasi = quasi_null_labeling(g).has_value();
            const bool l_singular = det(build_L(g)).is_zero();
            const bool q_singular = det(build_Q(g)).is_zero();
            CHECK(sp == all_phi4);
            CHECK(all_phi4 == l_singular);
            CHECK(quasi == all_psi4);
            CHECK(all_psi4 == q_singular);
        }
    }
}

TEST_CASE("walks between same-label vertices have residue zero") {
    std::mt19937_64 seeds(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(seeds() % 5);
        const MixedGraph g = generate_sp_graph(n, seeds());
        const auto labeling = sp_labeling(g);
        REQUIRE(labeling.has_value());
        // Random walks via random edge steps.
        std::mt19937_64 rng(seeds());
        MixedWalk walk;
        int current = 1 + static_cast<int>(rng() % n);
        walk.vertices.push_back(current);
        for (int step = 0; step < 12; ++step) {
            std::vector<std::pair<int, bool>> moves;  // (edge id, forward)
            for (int e = 1; e <= g.edge_count(); ++e) {
                if (g.edge(e).u == current) moves.push_back({e, true});
                if (g.edge(e).v == current) moves.push_back({e, false});
            }
            if (moves.empty()) break;
            const auto [id, forward] = moves[rng() % moves.size()];
            walk.edge_ids.push_back(id);
            walk.forward.push_back(forward);
            current = forward ? g.edge(id).v : g.edge(id).u;
            walk.vertices.push_back(current);
            if (labeling->label_of(walk.vertices.front()) == labeling->label_of(current))
                CHECK(walk_class(walk, g) == 0);
        }
    }
}

TEST_CASE("cycle enumeration budget") {
    // K6 has 197 simple cycles.
    std::vector<Edge> edges;
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v) edges.push_back({u, v, Orientation::undirected});
    const MixedGraph k6(6, edges);
    CHECK(enumerate_simple_cycles(k6, 500).size() == 197);
    CHECK_THROWS_AS(enumerate_simple_cycles(k6, 100), cycle_budget_error);
}
