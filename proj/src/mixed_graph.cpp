#include "mixlap/mixed_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace mixlap {

namespace {

// Union-find over 0-based node ids.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

MixedGraph::MixedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (e.orientation == Orientation::undirected && e.u > e.v) std::swap(e.u, e.v);
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge between a vertex pair");
    }
}

MixedGraph MixedGraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok[0] == '#') continue;

        if (tok == "n") {
            if (n >= 0) throw parse_error(lineno, "repeated header");
            if (!(ls >> n) || n < 0) throw parse_error(lineno, "expected \"n <count>\"");
        } else if (tok == "e") {
            if (n < 0) throw parse_error(lineno, "edge before \"n <count>\" header");
            int u = 0, v = 0;
            std::string dir;
            if (!(ls >> u >> v >> dir))
                throw parse_error(lineno, "expected \"e <u> <v> --|->|<-\"");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "vertex index out of range");
            if (u == v) throw parse_error(lineno, "self-loop");
            if (!seen.insert(std::minmax(u, v)).second)
                throw parse_error(lineno, "duplicate edge");
            if (dir == "--") {
                edges.push_back({std::min(u, v), std::max(u, v), Orientation::undirected});
            } else if (dir == "->") {
                edges.push_back({u, v, Orientation::directed});
            } else if (dir == "<-") {
                edges.push_back({v, u, Orientation::directed});
            } else {
                throw parse_error(lineno, "unknown edge direction \"" + dir + "\"");
            }
        } else {
            throw parse_error(lineno, "unknown directive \"" + tok + "\"");
        }
        std::string rest;
        if (ls >> rest) throw parse_error(lineno, "trailing tokens");
    }
    if (n < 0) throw parse_error(lineno, "missing \"n <count>\" header");
    return MixedGraph(n, std::move(edges));
}

const Edge& MixedGraph::edge(int edge_id) const {
    if (edge_id < 1 || edge_id > edge_count())
        throw std::out_of_range("edge id out of range");
    return edges_[static_cast<std::size_t>(edge_id - 1)];
}

int MixedGraph::degree(int vertex) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.u == vertex || e.v == vertex) ++d;
    return d;
}

int MixedGraph::edge_id_between(int u, int v) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
            return static_cast<int>(i) + 1;
    }
    return 0;
}

MixedGraph MixedGraph::underlying() const {
    std::vector<Edge> plain;
    plain.reserve(edges_.size());
    for (const auto& e : edges_)
        plain.push_back({std::min(e.u, e.v), std::max(e.u, e.v), Orientation::undirected});
    return MixedGraph(n_, std::move(plain));
}

bool MixedGraph::is_connected() const {
    if (n_ <= 1) return true;
    DisjointSets ds(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) ds.unite(static_cast<std::size_t>(e.u - 1),
                                          static_cast<std::size_t>(e.v - 1));
    const auto root = ds.find(0);
    for (int v = 1; v < n_; ++v)
        if (ds.find(static_cast<std::size_t>(v)) != root) return false;
    return true;
}

bool MixedGraph::has_directed_edges() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) {
        return e.orientation == Orientation::directed;
    });
}

std::string MixedGraph::to_edge_list_text() const {
    std::ostringstream out;
    out << "n " << n_ << "\n";
    for (const auto& e : edges_) {
        out << "e " << e.u << " " << e.v << " "
            << (e.orientation == Orientation::undirected ? "--" : "->") << "\n";
    }
    return out.str();
}

bool is_valid_walk(const MixedWalk& walk, const MixedGraph& g) {
    if (walk.vertices.empty()) return false;
    if (walk.edge_ids.size() + 1 != walk.vertices.size()) return false;
    if (walk.forward.size() != walk.edge_ids.size()) return false;
    for (std::size_t i = 0; i < walk.edge_ids.size(); ++i) {
        const int id = walk.edge_ids[i];
        if (id < 1 || id > g.edge_count()) return false;
        const Edge& e = g.edge(id);
        const int from = walk.vertices[i];
        const int to = walk.vertices[i + 1];
        if (walk.forward[i]) {
            if (e.u != from || e.v != to) return false;
        } else {
            if (e.v != from || e.u != to) return false;
        }
    }
    return true;
}

bool is_simple_cycle(const MixedWalk& walk, const MixedGraph& g) {
    if (!is_valid_walk(walk, g) || !walk.closed()) return false;
    if (walk.length() < 3) return false;
    std::set<int> distinct(walk.vertices.begin(), walk.vertices.end() - 1);
    if (distinct.size() != walk.length()) return false;
    std::set<int> edges(walk.edge_ids.begin(), walk.edge_ids.end());
    return edges.size() == walk.length();
}

std::vector<Substructure> components(const Substructure& s, const MixedGraph& g) {
    const std::size_t nv = s.vertices.size();
    const std::size_t ne = s.edge_ids.size();
    // Nodes 0..nv-1 are the vertices, nv..nv+ne-1 the edges.
    DisjointSets ds(nv + ne);
    std::map<int, std::size_t> vertex_pos;
    for (std::size_t i = 0; i < nv; ++i) vertex_pos[s.vertices[i]] = i;

    for (std::size_t j = 0; j < ne; ++j) {
        const Edge& e = g.edge(s.edge_ids[j]);
        for (int endpoint : {e.u, e.v}) {
            auto it = vertex_pos.find(endpoint);
            if (it != vertex_pos.end()) ds.unite(nv + j, it->second);
        }
    }

    std::map<std::size_t, Substructure> buckets;
    for (std::size_t i = 0; i < nv; ++i) buckets[ds.find(i)].vertices.push_back(s.vertices[i]);
    for (std::size_t j = 0; j < ne; ++j) buckets[ds.find(nv + j)].edge_ids.push_back(s.edge_ids[j]);

    std::vector<Substructure> out;
    out.reserve(buckets.size());
    for (auto& [root, sub] : buckets) {
        std::sort(sub.vertices.begin(), sub.vertices.end());
        std::sort(sub.edge_ids.begin(), sub.edge_ids.end());
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const Substructure& x, const Substructure& y) {
        const int ex = x.edge_ids.empty() ? INT32_MAX : x.edge_ids.front();
        const int ey = y.edge_ids.empty() ? INT32_MAX : y.edge_ids.front();
        if (ex != ey) return ex < ey;
        const int vx = x.vertices.empty() ? INT32_MAX : x.vertices.front();
        const int vy = y.vertices.empty() ? INT32_MAX : y.vertices.front();
        return vx < vy;
    });
    return out;
}

namespace {

// Canonical closed walk around the unique cycle of a unicyclic component:
// start at the smallest cycle vertex, first step toward its smaller cycle
// neighbor.
MixedWalk canonical_cycle_walk(const std::vector<int>& cycle_vertices,
                               const std::vector<int>& cycle_edges,
                               const MixedGraph& g) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)
    for (int id : cycle_edges) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back({e.v, id});
        adj[e.v].push_back({e.u, id});
    }
    const int start = *std::min_element(cycle_vertices.begin(), cycle_vertices.end());
    auto& nbrs = adj[start];
    const int second = std::min(nbrs[0].first, nbrs[1].first);

    MixedWalk walk;
    walk.vertices.push_back(start);
    int prev_edge = 0;
    int current = start;
    int next = second;
    while (true) {
        int id = 0;
        for (auto [nbr, eid] : adj[current]) {
            if (nbr == next && eid != prev_edge) {
                id = eid;
                break;
            }
        }
        const Edge& e = g.edge(id);
        walk.edge_ids.push_back(id);
        walk.forward.push_back(e.u == current);
        walk.vertices.push_back(next);
        if (next == start) break;
        prev_edge = id;
        current = next;
        int onward = -1;
        for (auto [nbr, eid] : adj[current]) {
            if (eid != prev_edge) {
                onward = nbr;
                break;
            }
        }
        next = onward;
    }
    return walk;
}

}  // namespace

ComponentKind classify_component(const Substructure& c, const MixedGraph& g) {
    if (!c.square()) throw std::invalid_argument("classify_component: non-square component");
    if (c.vertices.empty()) return OtherPart{};

    const std::set<int> present(c.vertices.begin(), c.vertices.end());
    std::vector<int> external;  // one entry per missing endpoint occurrence
    std::vector<int> full_edges;
    for (int id : c.edge_ids) {
        const Edge& e = g.edge(id);
        const bool pu = present.count(e.u) > 0;
        const bool pv = present.count(e.v) > 0;
        if (pu && pv) {
            full_edges.push_back(id);
        } else {
            if (!pu) external.push_back(e.u);
            if (!pv) external.push_back(e.v);
        }
    }

    // Connectivity of the component over fully-present edges.
    DisjointSets ds(c.vertices.size());
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) pos[c.vertices[i]] = i;
    for (int id : full_edges) {
        const Edge& e = g.edge(id);
        ds.unite(pos[e.u], pos[e.v]);
    }
    const auto root0 = ds.find(0);
    for (std::size_t i = 1; i < c.vertices.size(); ++i)
        if (ds.find(i) != root0) return OtherPart{};

    const std::size_t p = c.vertices.size();
    if (external.empty()) {
        // p vertices, p present edges, connected: exactly one cycle. Strip
        // vertices of degree one until only the cycle remains.
        std::map<int, int> deg;
        std::map<int, std::vector<std::pair<int, int>>> adj;
        for (int id : full_edges) {
            const Edge& e = g.edge(id);
            deg[e.u]++;
            deg[e.v]++;
            adj[e.u].push_back({e.v, id});
            adj[e.v].push_back({e.u, id});
        }
        std::set<int> removed_vertices;
        std::set<int> removed_edges;
        std::queue<int> leaves;
        for (int v : c.vertices)
            if (deg[v] == 1) leaves.push(v);
        while (!leaves.empty()) {
            const int v = leaves.front();
            leaves.pop();
            removed_vertices.insert(v);
            for (auto [nbr, id] : adj[v]) {
                if (removed_edges.count(id)) continue;
                removed_edges.insert(id);
                if (--deg[nbr] == 1 && !removed_vertices.count(nbr)) leaves.push(nbr);
            }
        }
        std::vector<int> cyc_vertices, cyc_edges;
        for (int v : c.vertices)
            if (!removed_vertices.count(v)) cyc_vertices.push_back(v);
        for (int id : full_edges)
            if (!removed_edges.count(id)) cyc_edges.push_back(id);
        if (cyc_vertices.size() < 3 || cyc_vertices.size() != cyc_edges.size())
            return OtherPart{};
        return UnicyclicPart{canonical_cycle_walk(cyc_vertices, cyc_edges, g)};
    }
    if (external.size() == 1 && full_edges.size() + 1 == c.edge_ids.size() &&
        full_edges.size() + 1 == p) {
        // Connected with p-1 full edges: a tree, plus the hanging edge to the
        // missing endpoint, i.e. a rootless tree.
        return RootlessTreePart{external.front()};
    }
    return OtherPart{};
}

int walk_class(const MixedWalk& walk, const MixedGraph& g) {
    if (!is_valid_walk(walk, g)) throw std::invalid_argument("walk_class: invalid walk");
    long diff = 0;
    for (std::size_t i = 0; i < walk.edge_ids.size(); ++i) {
        const Edge& e = g.edge(walk.edge_ids[i]);
        if (e.orientation == Orientation::directed) diff += walk.forward[i] ? 1 : -1;
    }
    int r = static_cast<int>(diff % 6);
    return r < 0 ? r + 6 : r;
}

}  // namespace mixlap
