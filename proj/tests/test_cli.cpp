#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mixlap/cli_commands.hpp"
#include "mixlap/json_io.hpp"

using namespace mixlap;

namespace {

MixedGraph load_fixture(const char* name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return MixedGraph::parse(buffer.str());
}

}  // namespace

TEST_CASE("vertex list parsing") {
    CHECK(parse_vertex_list("2,3,4") == std::vector<int>{2, 3, 4});
    CHECK(parse_vertex_list("4,2,2") == std::vector<int>{2, 4});
    CHECK_THROWS_AS(parse_vertex_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex_list("1,x"), std::invalid_argument);
}

TEST_CASE("matrices command") {
    const MixedGraph g = load_fixture("diamond_sp.graph");
    SUBCASE("text output shows the displayed Laplacian and the check flags") {
        std::ostringstream out;
        CHECK(cmd_matrices(g, {"L"}, false, out) == 0);
        const std::string text = out.str();
        CHECK(text.find("L:") != std::string::npos);
        CHECK(text.find("-0.500000-0.866025i") != std::string::npos);
        CHECK(text.find("S*conj(S)^T == L: yes") != std::string::npos);
    }
    SUBCASE("json output carries all requested matrices") {
        std::ostringstream out;
        CHECK(cmd_matrices(g, {"N", "D", "L", "Q", "S", "T"}, true, out) == 0);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j.contains("N"));
        CHECK(j.contains("S"));
        CHECK(j["L"]["rows"].size() == 4);
        CHECK(j["S"]["cols"].size() == 5);
        CHECK(j["factorization"]["incidence_product_is_l"] == true);
    }
    SUBCASE("edgeless graph prints zero matrices") {
        std::ostringstream out;
        CHECK(cmd_matrices(MixedGraph::parse("n 2\n"), {"L", "Q"}, false, out) == 0);
        CHECK(out.str().find("0") != std::string::npos);
    }
    SUBCASE("unknown matrix names are rejected") {
        std::ostringstream out;
        CHECK_THROWS_AS(cmd_matrices(g, {"Z"}, false, out), std::invalid_argument);
    }
}

TEST_CASE("classify command") {
    SUBCASE("the oriented four-cycle") {
        std::ostringstream out;
        CHECK(cmd_classify(load_fixture("c4_quasi.graph"), false, 1000, out) == 0);
        const std::string text = out.str();
        CHECK(text.find("cycles: 1") != std::string::npos);
        CHECK(text.find("Phi4 Psi4") != std::string::npos);
        CHECK(text.find("sp: yes") != std::string::npos);
        CHECK(text.find("quasi-singular: yes") != std::string::npos);
    }
    SUBCASE("trees have no cycles and are vacuously labelable") {
        std::ostringstream out;
        CHECK(cmd_classify(MixedGraph::parse("n 3\ne 1 2 ->\ne 2 3 --\n"), false, 1000,
                           out) == 0);
        CHECK(out.str().find("cycles: 0") != std::string::npos);
        CHECK(out.str().find("sp: yes") != std::string::npos);
    }
    SUBCASE("the flipped diamond reports a witness cycle") {
        std::ostringstream out;
        CHECK(cmd_classify(load_fixture("diamond_nonsp.graph"), false, 1000, out) == 0);
        CHECK(out.str().find("sp: no") != std::string::npos);
        CHECK(out.str().find("witness cycle") != std::string::npos);
    }
    SUBCASE("json output") {
        std::ostringstream out;
        CHECK(cmd_classify(load_fixture("diamond_sp.graph"), true, 1000, out) == 0);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["sp"] == true);
        CHECK(j["cycles"].size() == 3);
        CHECK(j["sp_labeling"]["labels"]["2"] == 1);
    }
}

TEST_CASE("minor command") {
    SUBCASE("principal golden case prints both sides as 8") {
        std::ostringstream out;
        CHECK(cmd_minor(load_fixture("diamond_sp.graph"), {2, 3, 4}, {2, 3, 4}, false,
                        out) == 0);
        CHECK(out.str().find("exact match") != std::string::npos);
        CHECK(out.str().find("algebraic 8") != std::string::npos);
    }
    SUBCASE("full vertex set on a null-labeled fixture gives zero") {
        std::ostringstream out;
        CHECK(cmd_minor(load_fixture("diamond_sp.graph"), {1, 2, 3, 4}, {1, 2, 3, 4},
                        false, out) == 0);
        CHECK(out.str().find("algebraic 0") != std::string::npos);
    }
    SUBCASE("json report carries norms") {
        std::ostringstream out;
        CHECK(cmd_minor(load_fixture("c4_quasi.graph"), {2, 3, 4}, {1, 3, 4}, true, out) ==
              0);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["quasi_laplacian"]["norm_algebraic"] == 16);
        CHECK(j["quasi_laplacian"]["match"] == "exact");
    }
    SUBCASE("unknown vertices are rejected") {
        std::ostringstream out;
        CHECK_THROWS_AS(
            cmd_minor(load_fixture("c4_quasi.graph"), {5}, {1}, false, out),
            std::invalid_argument);
    }
}

TEST_CASE("treecount command") {
    SUBCASE("diamond: kirchhoff 8, L-side applicable, Q-side not") {
        std::ostringstream out;
        CHECK(cmd_treecount(load_fixture("diamond_sp.graph"), false, out) == 0);
        const std::string text = out.str();
        CHECK(text.find("kirchhoff spanning trees: 8") != std::string::npos);
        CHECK(text.find("via L: count 8 (matches kirchhoff)") != std::string::npos);
        CHECK(text.find("via Q: not applicable") != std::string::npos);
    }
    SUBCASE("four-cycle: kirchhoff 4 and Q-side count 4") {
        std::ostringstream out;
        CHECK(cmd_treecount(load_fixture("c4_quasi.graph"), false, out) == 0);
        CHECK(out.str().find("kirchhoff spanning trees: 4") != std::string::npos);
        CHECK(out.str().find("via Q: count 4") != std::string::npos);
    }
    SUBCASE("single edge: every method counts one") {
        std::ostringstream out;
        CHECK(cmd_treecount(MixedGraph::parse("n 2\ne 1 2 ->\n"), false, out) == 0);
        CHECK(out.str().find("kirchhoff spanning trees: 1") != std::string::npos);
        CHECK(out.str().find("via L: count 1") != std::string::npos);
        CHECK(out.str().find("via Q: count 1") != std::string::npos);
    }
    SUBCASE("json form includes witnesses for inapplicable sides") {
        std::ostringstream out;
        CHECK(cmd_treecount(load_fixture("c4_nonquasi.graph"), true, out) == 0);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["via_q"]["applicable"] == false);
        CHECK(j["via_q"].contains("witness"));
    }
}

TEST_CASE("verify command") {
    SweepSpec spec;
    spec.source = SweepSpec::Source::catalog;
    spec.max_vertices = 3;
    spec.mode = SweepSpec::Mode::exhaustive;
    spec.checks = {"factorization", "tree_counts"};
    SUBCASE("text summary reports all passed and exit code zero") {
        std::ostringstream out;
        CHECK(cmd_verify(spec, false, 2, out) == 0);
        CHECK(out.str().find("ALL CHECKS PASSED") != std::string::npos);
    }
    SUBCASE("json report is emitted and deterministic") {
        std::ostringstream first, second;
        CHECK(cmd_verify(spec, true, 1, first) == 0);
        CHECK(cmd_verify(spec, true, 3, second) == 0);
        CHECK(first.str() == second.str());
        const auto j = nlohmann::json::parse(first.str());
        CHECK(j["all_passed"] == true);
    }
}

TEST_CASE("graph json round-trips through the exporter") {
    for (const char* name :
         {"diamond_sp.graph", "diamond_nonsp.graph", "c4_quasi.graph", "c4_nonquasi.graph"}) {
        const MixedGraph g = load_fixture(name);
        CHECK(graph_from_json(to_json(g)) == g);
    }
}

TEST_CASE("graphs exported by commands re-parse to equal graphs") {
    const MixedGraph g = load_fixture("diamond_nonsp.graph");
    std::ostringstream out;
    CHECK(cmd_classify(g, true, 1000, out) == 0);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(graph_from_json(j["graph"]) == g);
    std::ostringstream out2;
    CHECK(cmd_matrices(g, {"N"}, true, out2) == 0);
    CHECK(graph_from_json(nlohmann::json::parse(out2.str())["graph"]) == g);
}
