#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixlap/mixed_graph.hpp"

namespace mixlap {

class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Stream over the 3^m orientation assignments of a graph's edges, in
/// lexicographic order by edge index (undirected < forward < backward).
class OrientationSpace {
public:
    explicit OrientationSpace(MixedGraph base);

    std::uint64_t size() const { return size_; }
    MixedGraph at(std::uint64_t index) const;

private:
    MixedGraph base_;
    std::uint64_t size_;
};

/// Materializes the full orientation space; throws budget_error when
/// 3^m exceeds the budget.
std::vector<MixedGraph> enumerate_orientations(const MixedGraph& g,
                                               std::uint64_t budget = 531441);

/// All connected unoriented graphs with 1..max_vertices vertices, one per
/// isomorphism class (31 graphs for max_vertices = 5), built by brute-force
/// enumeration with canonical-form deduplication.
std::vector<MixedGraph> connected_graph_catalog(int max_vertices);

/// Random connected mixed graph: a random spanning tree plus extra edges,
/// each edge oriented uniformly from {undirected, forward, backward}.
MixedGraph random_connected_mixed_graph(int n, int extra_edges, std::uint64_t seed);

/// Random mixed graph whose vertices carry a six-part labeling with
/// undirected edges inside parts and directed edges stepping the part index
/// by one; always connected and always admits sp_labeling.
MixedGraph generate_sp_graph(int n, std::uint64_t seed);

/// Random connected mixed graph all of whose cycles are in the null class of
/// the quasi-Laplacian (labels step +3 across undirected and +2 across
/// directed edges); always admits quasi_null_labeling.
MixedGraph generate_quasi_singular_graph(int n, std::uint64_t seed);

/// The sweepable checks, by name. Unknown names are a config_error.
const std::set<std::string>& known_checks();

struct SweepSpec {
    enum class Source { catalog, cycles, files };
    enum class Mode { fixed, exhaustive, random };

    Source source = Source::catalog;
    int max_vertices = 4;           // catalog
    std::vector<int> cycle_lengths; // cycles
    std::vector<std::string> files; // files (edge-list format)

    Mode mode = Mode::exhaustive;
    std::uint64_t sample_count = 100;  // random mode
    std::uint64_t seed = 1;
    std::uint64_t budget = 531441;  // exhaustive cap per base graph (3^12)

    std::set<std::string> checks;
    int pair_samples = 8;  // sampled (V1,V2) pairs for the minor checks

    /// Parses either JSON or simple "key value" lines.
    static SweepSpec parse(const std::string& text);
    nlohmann::json to_json() const;
};

struct CheckStats {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
};

struct SweepFailure {
    std::string check;
    std::string graph;  // edge-list text, sufficient to replay
    nlohmann::json detail;
};

struct SweepReport {
    nlohmann::json spec;  // the exact configuration (including seed) that ran
    std::map<std::string, CheckStats> stats;
    std::vector<SweepFailure> failures;
    std::uint64_t graphs_processed = 0;
    std::uint64_t disconnected_skipped = 0;
    double wall_seconds = 0.0;

    bool all_passed() const;
    /// Deterministic machine report; timing is deliberately excluded so that
    /// identical specs produce byte-identical JSON.
    nlohmann::json to_json() const;
    std::string summary_text() const;  // human table, includes wall time
};

/// Runs every selected check over every generated mixed graph, partitioning
/// orientation ranges across workers. Throws budget_error before doing any
/// work when an exhaustive source exceeds the budget.
SweepReport run_sweep(const SweepSpec& spec, unsigned workers = 0);

/// Re-runs one recorded failure; true when the failure reproduces.
bool replay_fails_again(const SweepFailure& failure, const SweepSpec& spec);

}  // namespace mixlap
