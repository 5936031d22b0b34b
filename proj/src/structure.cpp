#include "mixlap/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "mixlap/exact_linalg.hpp"
#include "mixlap/matrix_builder.hpp"

namespace mixlap {

Int phi_norm_value(PhiClass c) {
    switch (c) {
        case PhiClass::phi1: return 1;
        case PhiClass::phi2: return 3;
        case PhiClass::phi3: return 4;
        case PhiClass::phi4: return 0;
    }
    return 0;
}

Int psi_norm_value(PsiClass c) {
    switch (c) {
        case PsiClass::psi1: return 1;
        case PsiClass::psi2: return 3;
        case PsiClass::psi3: return 4;
        case PsiClass::psi4: return 0;
    }
    return 0;
}

const char* to_string(PhiClass c) {
    switch (c) {
        case PhiClass::phi1: return "Phi1";
        case PhiClass::phi2: return "Phi2";
        case PhiClass::phi3: return "Phi3";
        case PhiClass::phi4: return "Phi4";
    }
    return "?";
}

const char* to_string(PsiClass c) {
    switch (c) {
        case PsiClass::psi1: return "Psi1";
        case PsiClass::psi2: return "Psi2";
        case PsiClass::psi3: return "Psi3";
        case PsiClass::psi4: return "Psi4";
    }
    return "?";
}

CycleClassReport classify_cycle(const MixedWalk& cycle, const MixedGraph& g) {
    if (!is_simple_cycle(cycle, g))
        throw std::invalid_argument("classify_cycle: walk is not a simple cycle");
    CycleClassReport report;
    for (std::size_t i = 0; i < cycle.edge_ids.size(); ++i) {
        const Edge& e = g.edge(cycle.edge_ids[i]);
        if (e.orientation == Orientation::undirected)
            ++report.c;
        else if (cycle.forward[i])
            ++report.a;
        else
            ++report.b;
    }
    int d = (report.a - report.b) % 6;
    if (d < 0) d += 6;
    if (d == 1 || d == 5)
        report.phi = PhiClass::phi1;
    else if (d == 2 || d == 4)
        report.phi = PhiClass::phi2;
    else if (d == 3)
        report.phi = PhiClass::phi3;
    else
        report.phi = PhiClass::phi4;
    const bool c_odd = (report.c % 2) != 0;
    if (d == 0 || d == 3)
        report.psi = c_odd ? PsiClass::psi3 : PsiClass::psi4;
    else
        report.psi = c_odd ? PsiClass::psi1 : PsiClass::psi2;
    return report;
}

std::vector<MixedWalk> enumerate_simple_cycles(const MixedGraph& g, std::size_t budget) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    std::vector<MixedWalk> cycles;
    std::vector<int> path;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()) + 1, false);

    // Each cycle is found exactly once: start at its smallest vertex, extend
    // through larger vertices only, and keep the direction with the smaller
    // second vertex.
    auto emit = [&](const std::vector<int>& vs) {
        if (cycles.size() >= budget) throw cycle_budget_error(budget);
        MixedWalk walk;
        walk.vertices = vs;
        walk.vertices.push_back(vs.front());
        for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
            const int from = walk.vertices[i];
            const int to = walk.vertices[i + 1];
            const int id = g.edge_id_between(from, to);
            walk.edge_ids.push_back(id);
            walk.forward.push_back(g.edge(id).u == from);
        }
        cycles.push_back(std::move(walk));
    };

    std::function<void(int)> dfs = [&](int start) {
        const int current = path.back();
        for (int next : adj[static_cast<std::size_t>(current)]) {
            if (next == start && path.size() >= 3) {
                if (path[1] < path.back()) emit(path);
            } else if (next > start && !used[static_cast<std::size_t>(next)]) {
                used[static_cast<std::size_t>(next)] = true;
                path.push_back(next);
                dfs(start);
                path.pop_back();
                used[static_cast<std::size_t>(next)] = false;
            }
        }
    };

    for (int s = 1; s <= g.vertex_count(); ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), false);
        used[static_cast<std::size_t>(s)] = true;
        dfs(s);
    }
    return cycles;
}

namespace {

// Distances from the root through the component's edges, with the root
// itself participating via its hanging edge.
std::map<int, int> distances_from_root(int root, const Substructure& c,
                                       const MixedGraph& g) {
    std::map<int, std::vector<int>> adj;
    for (int id : c.edge_ids) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::map<int, int> dist;
    dist[root] = 0;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
        const int x = bfs.front();
        bfs.pop();
        for (int y : adj[x]) {
            if (!dist.count(y)) {
                dist[y] = dist[x] + 1;
                bfs.push(y);
            }
        }
    }
    return dist;
}

}  // namespace

EisensteinInt det_unit_rootless_tree_S(const Substructure& c, const MixedGraph& g) {
    const auto kind = classify_component(c, g);
    const auto* tree = std::get_if<RootlessTreePart>(&kind);
    if (!tree)
        throw std::invalid_argument("det_unit_rootless_tree_S: component is not a rootless tree");
    const auto dist = distances_from_root(tree->root, c, g);
    long alpha = 0, beta = 0;
    for (int id : c.edge_ids) {
        const Edge& e = g.edge(id);
        const bool away = dist.at(e.u) + 1 == dist.at(e.v);  // tail closer to the root
        if (e.orientation == Orientation::directed) {
            if (away) ++alpha;
        } else {
            if (away) ++beta;  // canonical direction: smaller endpoint is the tail
        }
    }
    // −ω̄ = ω², −1 = ω³, so the unit is ω^(2α+3β).
    return EisensteinInt::unit_power(2 * alpha + 3 * beta);
}

EisensteinInt det_unit_rootless_tree_T(const Substructure& c, const MixedGraph& g) {
    const auto kind = classify_component(c, g);
    const auto* tree = std::get_if<RootlessTreePart>(&kind);
    if (!tree)
        throw std::invalid_argument("det_unit_rootless_tree_T: component is not a rootless tree");
    const auto dist = distances_from_root(tree->root, c, g);
    long toward = 0;
    for (int id : c.edge_ids) {
        const Edge& e = g.edge(id);
        if (e.orientation == Orientation::directed && dist.at(e.u) == dist.at(e.v) + 1)
            ++toward;
    }
    return EisensteinInt::unit_power(toward);
}

SubstructureClass classify_substructure(const Substructure& s, const MixedGraph& g,
                                        bool with_units) {
    if (!s.square())
        throw std::invalid_argument("classify_substructure: substructure is not square");

    SubstructureClass result;
    bool si = true, sii = true;
    EisensteinInt unit_s(1), unit_t(1);
    ExactMatrix full_s, full_t;
    if (with_units) {
        full_s = build_S(g);
        full_t = build_T(g);
    }

    for (const Substructure& comp : components(s, g)) {
        if (!comp.square()) {
            si = sii = false;
            break;
        }
        const auto kind = classify_component(comp, g);
        if (std::holds_alternative<OtherPart>(kind)) {
            si = sii = false;
            break;
        }
        if (const auto* uni = std::get_if<UnicyclicPart>(&kind)) {
            const CycleClassReport cls = classify_cycle(uni->cycle, g);
            if (cls.phi == PhiClass::phi4) si = false;
            if (cls.phi == PhiClass::phi2) ++result.gamma1;
            if (cls.phi == PhiClass::phi3) ++result.gamma2;
            if (cls.psi == PsiClass::psi4) sii = false;
            if (cls.psi == PsiClass::psi2) ++result.tau1;
            if (cls.psi == PsiClass::psi3) ++result.tau2;
        }
        if (!si && !sii) break;
        if (with_units) {
            if (si) unit_s *= det(select_submatrix(full_s, comp.vertices, comp.edge_ids));
            if (sii) unit_t *= det(select_submatrix(full_t, comp.vertices, comp.edge_ids));
        }
    }

    result.kind = si ? (sii ? EligibilityKind::both : EligibilityKind::si_only)
                     : (sii ? EligibilityKind::sii_only : EligibilityKind::neither);
    if (!si) result.gamma1 = result.gamma2 = 0;
    if (!sii) result.tau1 = result.tau2 = 0;
    if (with_units) {
        result.unit_s = si ? unit_s : EisensteinInt(0);
        result.unit_t = sii ? unit_t : EisensteinInt(0);
    }
    return result;
}

namespace {

std::optional<SPLabeling> propagate_labels(const MixedGraph& g, int undirected_step,
                                           int directed_step) {
    const int n = g.vertex_count();
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& e : g.edges()) {
        if (e.orientation == Orientation::undirected) {
            adj[static_cast<std::size_t>(e.u)].push_back({e.v, undirected_step});
            adj[static_cast<std::size_t>(e.v)].push_back({e.u, undirected_step});
        } else {
            adj[static_cast<std::size_t>(e.u)].push_back({e.v, directed_step});
            adj[static_cast<std::size_t>(e.v)].push_back({e.u, 6 - directed_step});
        }
    }
    for (int start = 1; start <= n; ++start) {
        if (labels[static_cast<std::size_t>(start - 1)] >= 0) continue;
        labels[static_cast<std::size_t>(start - 1)] = 0;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            const int x = bfs.front();
            bfs.pop();
            for (auto [y, step] : adj[static_cast<std::size_t>(x)]) {
                const int want = (labels[static_cast<std::size_t>(x - 1)] + step) % 6;
                int& have = labels[static_cast<std::size_t>(y - 1)];
                if (have < 0) {
                    have = want;
                    bfs.push(y);
                } else if (have != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return SPLabeling{std::move(labels)};
}

}  // namespace

std::optional<SPLabeling> sp_labeling(const MixedGraph& g) {
    return propagate_labels(g, 0, 1);
}

std::optional<SPLabeling> quasi_null_labeling(const MixedGraph& g) {
    // Increments derived from solving ξ*T = 0 edgewise under the canonical T
    // convention; validated against the det-Q oracle by the test sweeps.
    return propagate_labels(g, 3, 2);
}

std::vector<EisensteinInt> null_vector_from_sp(const SPLabeling& labeling) {
    std::vector<EisensteinInt> xi;
    xi.reserve(labeling.labels.size());
    for (int label : labeling.labels)
        xi.push_back(EisensteinInt::unit_power(-label));  // ω̄^label = ω^(−label)
    return xi;
}

}  // namespace mixlap
