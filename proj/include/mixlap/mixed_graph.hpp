#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mixlap {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class Orientation { undirected, directed };

/// One edge of a mixed graph. For directed edges u is the tail and v the
/// head; for undirected edges u < v canonically.
struct Edge {
    int u = 0;
    int v = 0;
    Orientation orientation = Orientation::undirected;

    bool operator==(const Edge&) const = default;
};

/**
 * A mixed graph: vertices 1…n plus an ordered edge list in which each edge is
 * either undirected or directed. The underlying graph is simple (no
 * self-loops, at most one edge per vertex pair). Edge list order is the
 * canonical column order for all incidence matrices, so it is preserved
 * exactly as constructed.
 */
class MixedGraph {
public:
    MixedGraph() = default;
    MixedGraph(int vertex_count, std::vector<Edge> edges);

    /// Parses the edge-list text format (see docs/format in README).
    /// Throws parse_error with a line number on malformed input, duplicate
    /// edges, self-loops, and out-of-range vertex indices.
    static MixedGraph parse(std::string_view text);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int edge_id) const;  // 1-based

    int degree(int vertex) const;
    /// Edge id joining u and v in the underlying graph, or 0 if absent.
    int edge_id_between(int u, int v) const;

    MixedGraph underlying() const;
    bool is_connected() const;
    bool has_directed_edges() const;

    std::string to_edge_list_text() const;

    bool operator==(const MixedGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/**
 * A vertex subset paired with an edge subset of a parent graph. Edges may
 * keep endpoints outside the vertex subset (rootless trees retain the edge
 * incident to the deleted root); the incidence submatrix row set is exactly
 * `vertices`. Both lists are kept sorted ascending.
 */
struct Substructure {
    std::vector<int> vertices;
    std::vector<int> edge_ids;  // 1-based positions into the parent edge list

    bool square() const { return vertices.size() == edge_ids.size(); }
    bool operator==(const Substructure&) const = default;
};

/// A walk in a mixed graph: vertices[i] -> vertices[i+1] traverses
/// edge_ids[i]; forward[i] is true when the step runs from edge.u to edge.v.
/// Walks may repeat vertices and edges.
struct MixedWalk {
    std::vector<int> vertices;
    std::vector<int> edge_ids;
    std::vector<bool> forward;

    std::size_t length() const { return edge_ids.size(); }
    bool closed() const {
        return vertices.size() >= 2 && vertices.front() == vertices.back();
    }
};

/// Checks that consecutive vertices are joined by the named edges.
bool is_valid_walk(const MixedWalk& walk, const MixedGraph& g);

/// True for a closed walk visiting >= 3 distinct vertices, none repeated.
bool is_simple_cycle(const MixedWalk& walk, const MixedGraph& g);

/**
 * Connected components of the bipartite incidence structure on s: an edge and
 * a vertex are linked when the vertex is an endpoint lying inside
 * s.vertices. Endpoints outside s.vertices do not merge components. The
 * returned substructures partition s.vertices and s.edge_ids; order is
 * deterministic (by smallest member).
 */
std::vector<Substructure> components(const Substructure& s, const MixedGraph& g);

struct RootlessTreePart {
    int root = 0;  // the single endpoint missing from the component
};
struct UnicyclicPart {
    MixedWalk cycle;  // canonical: smallest vertex start, smaller neighbor first
};
struct OtherPart {};

using ComponentKind = std::variant<RootlessTreePart, UnicyclicPart, OtherPart>;

/**
 * Classifies a square connected component as produced by components():
 * a rootless tree (exactly one missing endpoint, acyclic), a unicyclic
 * substructure (all endpoints present, exactly one cycle), or neither.
 * Throws std::invalid_argument on non-square input.
 */
ComponentKind classify_component(const Substructure& c, const MixedGraph& g);

/// (a − b) mod 6 where a counts directed edges traversed tail-to-head along
/// the walk and b those traversed against their direction; undirected edges
/// contribute nothing. Result lies in [0, 6).
int walk_class(const MixedWalk& walk, const MixedGraph& g);

}  // namespace mixlap
