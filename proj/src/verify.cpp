#include "mixlap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "mixlap/exact_linalg.hpp"
#include "mixlap/json_io.hpp"
#include "mixlap/matrix_builder.hpp"
#include "mixlap/minor_theorems.hpp"
#include "mixlap/structure.hpp"

namespace mixlap {

namespace {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1) + 0xbf58476d1ce4e5b9ULL * (c + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {            // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

OrientationSpace::OrientationSpace(MixedGraph base) : base_(base.underlying()) {
    std::uint64_t s = 1;
    for (int i = 0; i < base_.edge_count(); ++i) {
        if (s > UINT64_MAX / 3) throw budget_error("orientation space exceeds 64 bits");
        s *= 3;
    }
    size_ = s;
}

MixedGraph OrientationSpace::at(std::uint64_t index) const {
    const int m = base_.edge_count();
    std::vector<Edge> edges = base_.edges();
    // Lexicographic by edge index: edge 0 is the most significant digit,
    // with undirected < forward < backward.
    for (int i = m - 1; i >= 0; --i) {
        const int digit = static_cast<int>(index % 3);
        index /= 3;
        Edge& e = edges[static_cast<std::size_t>(i)];
        if (digit == 1) {
            e.orientation = Orientation::directed;  // u -> v
        } else if (digit == 2) {
            std::swap(e.u, e.v);
            e.orientation = Orientation::directed;
        }
    }
    return MixedGraph(base_.vertex_count(), std::move(edges));
}

std::vector<MixedGraph> enumerate_orientations(const MixedGraph& g, std::uint64_t budget) {
    const OrientationSpace space(g);
    if (space.size() > budget)
        throw budget_error("orientation space of size " + std::to_string(space.size()) +
                           " exceeds budget " + std::to_string(budget));
    std::vector<MixedGraph> out;
    out.reserve(static_cast<std::size_t>(space.size()));
    for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
    return out;
}

std::vector<MixedGraph> connected_graph_catalog(int max_vertices) {
    std::vector<MixedGraph> catalog;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
        const int p = static_cast<int>(pairs.size());

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);

        for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
            std::vector<Edge> edges;
            for (int i = 0; i < p; ++i)
                if (mask & (1u << i))
                    edges.push_back({pairs[static_cast<std::size_t>(i)].first,
                                     pairs[static_cast<std::size_t>(i)].second,
                                     Orientation::undirected});
            MixedGraph g(n, edges);
            if (!g.is_connected()) continue;

            // Canonical form: the smallest edge mask over all vertex
            // relabelings. Keep only representatives.
            std::uint32_t best = mask;
            std::vector<int> relabel(perm);
            std::sort(relabel.begin(), relabel.end());
            do {
                std::uint32_t relabeled = 0;
                for (int i = 0; i < p; ++i) {
                    if (!(mask & (1u << i))) continue;
                    const int u = relabel[static_cast<std::size_t>(
                        pairs[static_cast<std::size_t>(i)].first - 1)];
                    const int v = relabel[static_cast<std::size_t>(
                        pairs[static_cast<std::size_t>(i)].second - 1)];
                    const auto [lo, hi] = std::minmax(u, v);
                    for (int t = 0; t < p; ++t) {
                        if (pairs[static_cast<std::size_t>(t)] == std::pair{lo, hi}) {
                            relabeled |= (1u << t);
                            break;
                        }
                    }
                }
                best = std::min(best, relabeled);
            } while (std::next_permutation(relabel.begin(), relabel.end()));
            if (best == mask) catalog.push_back(std::move(g));
        }
    }
    return catalog;
}

MixedGraph random_connected_mixed_graph(int n, int extra_edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    auto orient = [&](int u, int v) -> Edge {
        switch (rand_int(rng, 0, 2)) {
            case 1: return {u, v, Orientation::directed};
            case 2: return {v, u, Orientation::directed};
            default: return {std::min(u, v), std::max(u, v), Orientation::undirected};
        }
    };
    std::set<std::pair<int, int>> used;
    for (int v = 2; v <= n; ++v) {
        const int u = rand_int(rng, 1, v - 1);
        edges.push_back(orient(u, v));
        used.insert(std::minmax(u, v));
    }
    for (int t = 0; t < extra_edges; ++t) {
        if (n < 2) break;
        const int u = rand_int(rng, 1, n);
        const int v = rand_int(rng, 1, n);
        if (u == v || used.count(std::minmax(u, v))) continue;
        edges.push_back(orient(u, v));
        used.insert(std::minmax(u, v));
    }
    return MixedGraph(n, std::move(edges));
}

namespace {

// Shared skeleton for the labeled generators: grow a random spanning tree
// whose edge types fix the labels, then add extra edges only where the
// labels already permit them.
MixedGraph generate_labeled_graph(int n, std::uint64_t seed, int undirected_step,
                                  int directed_step) {
    std::mt19937_64 rng(seed);
    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    if (n >= 1) label[1] = rand_int(rng, 0, 5);
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> used;

    for (int v = 2; v <= n; ++v) {
        const int u = rand_int(rng, 1, v - 1);
        used.insert(std::minmax(u, v));
        const int kind = rand_int(rng, 0, 2);
        if (kind == 0) {
            edges.push_back({std::min(u, v), std::max(u, v), Orientation::undirected});
            label[static_cast<std::size_t>(v)] =
                (label[static_cast<std::size_t>(u)] + undirected_step) % 6;
        } else if (kind == 1) {
            edges.push_back({u, v, Orientation::directed});
            label[static_cast<std::size_t>(v)] =
                (label[static_cast<std::size_t>(u)] + directed_step) % 6;
        } else {
            edges.push_back({v, u, Orientation::directed});
            label[static_cast<std::size_t>(v)] =
                (label[static_cast<std::size_t>(u)] + 6 - directed_step) % 6;
        }
    }
    const int extras = n >= 2 ? rand_int(rng, 0, n) : 0;
    for (int t = 0; t < extras; ++t) {
        const int u = rand_int(rng, 1, n);
        const int v = rand_int(rng, 1, n);
        if (u == v || used.count(std::minmax(u, v))) continue;
        const int diff = (label[static_cast<std::size_t>(v)] -
                          label[static_cast<std::size_t>(u)] + 6) % 6;
        if (diff == (undirected_step % 6)) {
            edges.push_back({std::min(u, v), std::max(u, v), Orientation::undirected});
        } else if (diff == directed_step) {
            edges.push_back({u, v, Orientation::directed});
        } else if (diff == 6 - directed_step) {
            edges.push_back({v, u, Orientation::directed});
        } else {
            continue;
        }
        used.insert(std::minmax(u, v));
    }
    return MixedGraph(n, std::move(edges));
}

}  // namespace

MixedGraph generate_sp_graph(int n, std::uint64_t seed) {
    return generate_labeled_graph(n, seed, 0, 1);
}

MixedGraph generate_quasi_singular_graph(int n, std::uint64_t seed) {
    return generate_labeled_graph(n, seed, 3, 2);
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

namespace {

struct CheckOutcome {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<nlohmann::json> failures;

    void record(bool ok, const std::function<nlohmann::json()>& detail) {
        ++checked;
        if (!ok) {
            ++failed;
            failures.push_back(detail());
        }
    }
};

Int power_int(long base, int exp) {
    Int v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

Substructure cycle_substructure(const MixedWalk& cycle) {
    Substructure s;
    s.vertices.assign(cycle.vertices.begin(), cycle.vertices.end() - 1);
    s.edge_ids = cycle.edge_ids;
    std::sort(s.vertices.begin(), s.vertices.end());
    std::sort(s.edge_ids.begin(), s.edge_ids.end());
    return s;
}

std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    for (int i = 0; i < k; ++i) {
        const int j = rand_int(rng, i, n - 1);
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return all;
}

void check_factorization(const MixedGraph& g, std::mt19937_64&, const SweepSpec&,
                         CheckOutcome& out) {
    const ExactMatrix s = build_S(g);
    const ExactMatrix t = build_T(g);
    out.record(multiply_conj_transpose(s, s) == build_L(g),
               [] { return nlohmann::json{{"identity", "S*conj(S)^T != L"}}; });
    out.record(multiply_conj_transpose(t, t) == build_Q(g),
               [] { return nlohmann::json{{"identity", "T*conj(T)^T != Q"}}; });
}

void check_cycle_norms(const MixedGraph& g, std::mt19937_64&, const SweepSpec&,
                       CheckOutcome& out) {
    const ExactMatrix s = build_S(g);
    const ExactMatrix t = build_T(g);
    for (const MixedWalk& cycle : enumerate_simple_cycles(g, 5000)) {
        const CycleClassReport cls = classify_cycle(cycle, g);
        const Substructure sub = cycle_substructure(cycle);
        const Int ns = det(select_submatrix(s, sub.vertices, sub.edge_ids)).norm();
        const Int nt = det(select_submatrix(t, sub.vertices, sub.edge_ids)).norm();
        out.record(ns == phi_norm_value(cls.phi) && nt == psi_norm_value(cls.psi), [&] {
            return nlohmann::json{{"cycle", cycle.vertices},
                                  {"phi", to_string(cls.phi)},
                                  {"psi", to_string(cls.psi)},
                                  {"norm_s", ns.get_str()},
                                  {"norm_t", nt.get_str()}};
        });
    }
}

void check_substructure_norms(const MixedGraph& g, std::mt19937_64& rng,
                              const SweepSpec&, CheckOutcome& out) {
    const ExactMatrix s = build_S(g);
    const ExactMatrix t = build_T(g);
    const int n = g.vertex_count();
    const int m = g.edge_count();

    auto verify = [&](const Substructure& sub) {
        const SubstructureClass cls = classify_substructure(sub, g, false);
        const Int ns = det(select_submatrix(s, sub.vertices, sub.edge_ids)).norm();
        const Int nt = det(select_submatrix(t, sub.vertices, sub.edge_ids)).norm();
        const Int want_s = cls.si_eligible()
                               ? power_int(3, cls.gamma1) * power_int(4, cls.gamma2)
                               : Int(0);
        const Int want_t = cls.sii_eligible()
                               ? power_int(3, cls.tau1) * power_int(4, cls.tau2)
                               : Int(0);
        out.record(ns == want_s && nt == want_t, [&] {
            return nlohmann::json{{"vertices", sub.vertices},
                                  {"edges", sub.edge_ids},
                                  {"norm_s", ns.get_str()},
                                  {"want_s", want_s.get_str()},
                                  {"norm_t", nt.get_str()},
                                  {"want_t", want_t.get_str()}};
        });
    };

    // Exhaustive when small, random sampling otherwise.
    double combos = 0;
    for (int k = 1; k <= std::min(n, m); ++k) {
        double c = 1;
        for (int i = 0; i < k; ++i)
            c *= double(n - i) / (i + 1) * double(m - i) / (i + 1);
        combos += c;
    }
    if (combos <= 5000) {
        for (int k = 1; k <= std::min(n, m); ++k) {
            for_each_subset(n, k, [&](const std::vector<int>& vs) {
                for_each_subset(m, k, [&](const std::vector<int>& es) {
                    verify(Substructure{vs, es});
                });
            });
        }
    } else {
        for (int trial = 0; trial < 200; ++trial) {
            const int k = rand_int(rng, 1, std::min(n, m));
            verify(Substructure{random_subset(rng, n, k), random_subset(rng, m, k)});
        }
    }
}

void check_rootless_tree_units(const MixedGraph& g, std::mt19937_64&, const SweepSpec&,
                               CheckOutcome& out) {
    const int n = g.vertex_count();
    if (n < 2 || !g.is_connected()) return;
    // BFS spanning tree from vertex 1; every leaf of it roots one rootless tree.
    std::vector<int> tree_edges;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> degree_in_tree(static_cast<std::size_t>(n) + 1, 0);
    seen[1] = true;
    std::vector<int> frontier{1};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int id = 1; id <= g.edge_count(); ++id) {
                const Edge& e = g.edge(id);
                const int other = e.u == x ? e.v : (e.v == x ? e.u : 0);
                if (other == 0 || seen[static_cast<std::size_t>(other)]) continue;
                seen[static_cast<std::size_t>(other)] = true;
                tree_edges.push_back(id);
                ++degree_in_tree[static_cast<std::size_t>(e.u)];
                ++degree_in_tree[static_cast<std::size_t>(e.v)];
                next.push_back(other);
            }
        }
        frontier = std::move(next);
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    const ExactMatrix s = build_S(g);
    const ExactMatrix t = build_T(g);
    for (int root = 1; root <= n; ++root) {
        if (degree_in_tree[static_cast<std::size_t>(root)] != 1) continue;
        Substructure sub;
        for (int v = 1; v <= n; ++v)
            if (v != root) sub.vertices.push_back(v);
        sub.edge_ids = tree_edges;
        const EisensteinInt unit_s = det_unit_rootless_tree_S(sub, g);
        const EisensteinInt unit_t = det_unit_rootless_tree_T(sub, g);
        const EisensteinInt det_s = det(select_submatrix(s, sub.vertices, sub.edge_ids));
        const EisensteinInt det_t = det(select_submatrix(t, sub.vertices, sub.edge_ids));
        out.record(unit_s.is_unit() && (det_s == unit_s || det_s == -unit_s) &&
                       unit_t.is_unit() && (det_t == unit_t || det_t == -unit_t),
                   [&] {
                       return nlohmann::json{{"root", root},
                                             {"unit_s", unit_s.to_string()},
                                             {"det_s", det_s.to_string()},
                                             {"unit_t", unit_t.to_string()},
                                             {"det_t", det_t.to_string()}};
                   });
    }
}

void check_principal_minors(const MixedGraph& g, std::mt19937_64& rng, const SweepSpec&,
                            CheckOutcome& out) {
    const int n = g.vertex_count();
    auto verify = [&](const std::vector<int>& v1) {
        const MinorReport rl = principal_minor_L(g, v1);
        const MinorReport rq = principal_minor_Q(g, v1);
        out.record(rl.exact_match && rq.exact_match, [&] {
            return nlohmann::json{{"v1", v1},
                                  {"laplacian_algebraic", rl.algebraic.to_string()},
                                  {"laplacian_combinatorial", rl.combinatorial.to_string()},
                                  {"quasi_algebraic", rq.algebraic.to_string()},
                                  {"quasi_combinatorial", rq.combinatorial.to_string()}};
        });
    };
    if (n <= 6) {
        for (int k = 1; k <= n; ++k)
            for_each_subset(n, k, [&](const std::vector<int>& v1) { verify(v1); });
    } else {
        for (int trial = 0; trial < 30; ++trial)
            verify(random_subset(rng, n, rand_int(rng, 1, n)));
    }
}

void check_cauchy_binet(const MixedGraph& g, std::mt19937_64& rng, const SweepSpec& spec,
                        CheckOutcome& out) {
    const ExactMatrix s = build_S(g);
    const ExactMatrix t = build_T(g);
    const ExactMatrix l = build_L(g);
    const ExactMatrix q = build_Q(g);
    const int n = g.vertex_count();
    const int max_k = std::min(n, g.edge_count());

    auto verify = [&](const std::vector<int>& v1, const std::vector<int>& v2) {
        const EisensteinInt lhs_s = cauchy_binet_expand(s, v1, v2);
        const EisensteinInt rhs_s = det(select_submatrix(l, v1, v2));
        const EisensteinInt lhs_t = cauchy_binet_expand(t, v1, v2);
        const EisensteinInt rhs_t = det(select_submatrix(q, v1, v2));
        out.record(lhs_s == rhs_s && lhs_t == rhs_t, [&] {
            return nlohmann::json{{"v1", v1},
                                  {"v2", v2},
                                  {"expanded_s", lhs_s.to_string()},
                                  {"det_l", rhs_s.to_string()},
                                  {"expanded_t", lhs_t.to_string()},
                                  {"det_q", rhs_t.to_string()}};
        });
    };

    for (int k = 1; k <= max_k; ++k)
        for_each_subset(n, k, [&](const std::vector<int>& v1) { verify(v1, v1); });
    for (int trial = 0; trial < spec.pair_samples; ++trial) {
        if (max_k < 1) break;
        const int k = rand_int(rng, 1, max_k);
        verify(random_subset(rng, n, k), random_subset(rng, n, k));
    }
}

void check_sp_equivalence(const MixedGraph& g, std::mt19937_64&, const SweepSpec&,
                          CheckOutcome& out) {
    const auto labeling = sp_labeling(g);
    bool all_phi4 = true;
    for (const MixedWalk& cycle : enumerate_simple_cycles(g, 5000))
        if (classify_cycle(cycle, g).phi != PhiClass::phi4) all_phi4 = false;
    const ExactMatrix l = build_L(g);
    const bool singular = det(l).is_zero();

    out.record(labeling.has_value() == all_phi4 && all_phi4 == singular, [&] {
        return nlohmann::json{{"labeling", labeling.has_value()},
                              {"all_cycles_null_class", all_phi4},
                              {"laplacian_singular", singular}};
    });

    if (labeling) {
        const std::vector<EisensteinInt> xi = null_vector_from_sp(*labeling);
        const ExactMatrix s = build_S(g);
        bool left_null = true;
        for (int j = 0; j < s.col_count(); ++j) {
            EisensteinInt entry;
            for (int i = 0; i < s.row_count(); ++i)
                entry += xi[static_cast<std::size_t>(i)].conj() * s.at(i, j);
            if (!entry.is_zero()) left_null = false;
        }
        bool in_kernel = true;
        for (const EisensteinInt& y : multiply_vector(l, xi))
            if (!y.is_zero()) in_kernel = false;
        out.record(left_null && in_kernel, [&] {
            return nlohmann::json{{"xi_star_s_zero", left_null},
                                  {"l_xi_zero", in_kernel}};
        });
    }
}

void check_quasi_singularity(const MixedGraph& g, std::mt19937_64&, const SweepSpec&,
                             CheckOutcome& out) {
    const auto labeling = quasi_null_labeling(g);
    bool all_psi4 = true;
    for (const MixedWalk& cycle : enumerate_simple_cycles(g, 5000))
        if (classify_cycle(cycle, g).psi != PsiClass::psi4) all_psi4 = false;
    const ExactMatrix q = build_Q(g);
    const bool singular = det(q).is_zero();

    out.record(labeling.has_value() == all_psi4 && all_psi4 == singular, [&] {
        return nlohmann::json{{"labeling", labeling.has_value()},
                              {"all_cycles_null_class", all_psi4},
                              {"quasi_laplacian_singular", singular}};
    });

    if (labeling) {
        // ξ with ξ_v = ω^label(v) annihilates T on the left.
        const ExactMatrix t = build_T(g);
        bool left_null = true;
        for (int j = 0; j < t.col_count(); ++j) {
            EisensteinInt entry;
            for (int i = 0; i < t.row_count(); ++i)
                entry += EisensteinInt::unit_power(-labeling->labels[static_cast<std::size_t>(i)]) *
                         t.at(i, j);
            if (!entry.is_zero()) left_null = false;
        }
        out.record(left_null,
                   [&] { return nlohmann::json{{"xi_star_t_zero", left_null}}; });
    }
}

void check_offdiag_minors(const MixedGraph& g, std::mt19937_64& rng, const SweepSpec& spec,
                          CheckOutcome& out) {
    const int n = g.vertex_count();
    const int max_k = std::min(n, g.edge_count());
    if (max_k < 1) return;
    for (int trial = 0; trial < spec.pair_samples; ++trial) {
        const int k = rand_int(rng, 1, max_k);
        const std::vector<int> v1 = random_subset(rng, n, k);
        const std::vector<int> v2 = random_subset(rng, n, k);
        const MinorReport rl = offdiag_minor_L(g, v1, v2);
        const MinorReport rq = offdiag_minor_Q(g, v1, v2);
        out.record(rl.exact_match && rl.norm_match && rq.exact_match && rq.norm_match, [&] {
            return nlohmann::json{{"v1", v1},
                                  {"v2", v2},
                                  {"laplacian_algebraic", rl.algebraic.to_string()},
                                  {"laplacian_combinatorial", rl.combinatorial.to_string()},
                                  {"quasi_algebraic", rq.algebraic.to_string()},
                                  {"quasi_combinatorial", rq.combinatorial.to_string()}};
        });
    }
}

void check_tree_counts(const MixedGraph& g, std::mt19937_64&, const SweepSpec&,
                       CheckOutcome& out) {
    const TreeCountReport rl = tree_count_via_L(g);
    out.record(!rl.applicable || rl.matches, [&] {
        return nlohmann::json{{"side", "laplacian"},
                              {"kirchhoff", rl.kirchhoff.get_str()},
                              {"norms_all_equal", rl.norms_all_equal},
                              {"tree_count", rl.tree_count.get_str()}};
    });
    const TreeCountReport rq = tree_count_via_Q(g);
    out.record(!rq.applicable || rq.matches, [&] {
        return nlohmann::json{{"side", "quasi_laplacian"},
                              {"kirchhoff", rq.kirchhoff.get_str()},
                              {"norms_all_equal", rq.norms_all_equal},
                              {"tree_count", rq.tree_count.get_str()}};
    });
}

void check_matching_structure(const MixedGraph& g, std::mt19937_64& rng,
                              const SweepSpec& spec, CheckOutcome& out) {
    const int n = g.vertex_count();
    const int max_k = std::min({n, g.edge_count(), 4});
    if (max_k < 1) return;
    const ExactMatrix s = build_S(g);
    const ExactMatrix t = build_T(g);
    for (int trial = 0; trial < spec.pair_samples; ++trial) {
        const int k = rand_int(rng, 1, max_k);
        const std::vector<int> v1 = random_subset(rng, n, k);
        const std::vector<int> v2 = random_subset(rng, n, k);
        for (const MinorSide side : {MinorSide::laplacian, MinorSide::quasi_laplacian}) {
            bool ok = true;
            nlohmann::json why;
            try {
                const auto matchings = enumerate_generalized_matchings(g, v1, v2, side);
                const ExactMatrix& inc = side == MinorSide::laplacian ? s : t;
                for (const GeneralizedMatching& matching : matchings) {
                    for (const MatchingComponent& comp : matching.components) {
                        if (!comp.bridge) continue;
                        const BridgingTree& bridge = *comp.bridge;
                        if (!is_valid_walk(bridge.path, g) ||
                            bridge.path.vertices.front() != bridge.v1_vertex ||
                            bridge.path.vertices.back() != bridge.v2_vertex) {
                            ok = false;
                            why = {{"reason", "bad bridging path"}};
                            continue;
                        }
                        std::vector<int> rows1, rows2;
                        for (int x : comp.part.vertices) {
                            if (std::find(v1.begin(), v1.end(), x) != v1.end())
                                rows1.push_back(x);
                            if (std::find(v2.begin(), v2.end(), x) != v2.end())
                                rows2.push_back(x);
                        }
                        const EisensteinInt product =
                            det(select_submatrix(inc, rows1, comp.part.edge_ids)) *
                            det(select_submatrix(inc, rows2, comp.part.edge_ids)).conj();
                        const EisensteinInt closed =
                            side == MinorSide::laplacian ? tree_contribution_L(g, bridge)
                                                         : tree_contribution_Q(g, bridge);
                        if (!(closed.is_unit() &&
                              (product == closed || product == -closed))) {
                            ok = false;
                            why = {{"reason", "tree contribution mismatch"},
                                   {"product", product.to_string()},
                                   {"closed_form", closed.to_string()}};
                        }
                    }
                }
            } catch (const std::logic_error& err) {
                ok = false;
                why = {{"reason", err.what()}};
            }
            out.record(ok, [&] {
                nlohmann::json detail = why;
                detail["v1"] = v1;
                detail["v2"] = v2;
                detail["side"] = side == MinorSide::laplacian ? "laplacian" : "quasi_laplacian";
                return detail;
            });
        }
    }
}

using CheckFn = void (*)(const MixedGraph&, std::mt19937_64&, const SweepSpec&,
                         CheckOutcome&);

const std::map<std::string, CheckFn>& check_registry() {
    static const std::map<std::string, CheckFn> registry = {
        {"factorization", check_factorization},
        {"cycle_norms", check_cycle_norms},
        {"substructure_norms", check_substructure_norms},
        {"rootless_tree_units", check_rootless_tree_units},
        {"principal_minors", check_principal_minors},
        {"cauchy_binet", check_cauchy_binet},
        {"sp_equivalence", check_sp_equivalence},
        {"quasi_singularity", check_quasi_singularity},
        {"offdiag_minors", check_offdiag_minors},
        {"tree_counts", check_tree_counts},
        {"matching_structure", check_matching_structure},
    };
    return registry;
}

// Checks whose statements assume a connected graph.
bool needs_connected(const std::string& name) {
    return name == "sp_equivalence" || name == "quasi_singularity" ||
           name == "tree_counts";
}

}  // namespace

const std::set<std::string>& known_checks() {
    static const std::set<std::string> names = [] {
        std::set<std::string> out;
        for (const auto& [name, fn] : check_registry()) out.insert(name);
        return out;
    }();
    return names;
}

// ---------------------------------------------------------------------------
// Spec parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

SweepSpec spec_from_json(const nlohmann::json& j) {
    SweepSpec spec;
    const std::string source = j.value("source", "catalog");
    if (source == "catalog")
        spec.source = SweepSpec::Source::catalog;
    else if (source == "cycles")
        spec.source = SweepSpec::Source::cycles;
    else if (source == "files")
        spec.source = SweepSpec::Source::files;
    else
        throw config_error("unknown source \"" + source + "\"");
    spec.max_vertices = j.value("max_vertices", 4);
    if (j.contains("cycle_lengths"))
        spec.cycle_lengths = j.at("cycle_lengths").get<std::vector<int>>();
    if (j.contains("files"))
        spec.files = j.at("files").get<std::vector<std::string>>();

    const std::string mode = j.value("mode", "exhaustive");
    if (mode == "fixed")
        spec.mode = SweepSpec::Mode::fixed;
    else if (mode == "exhaustive")
        spec.mode = SweepSpec::Mode::exhaustive;
    else if (mode == "random")
        spec.mode = SweepSpec::Mode::random;
    else
        throw config_error("unknown mode \"" + mode + "\"");

    spec.sample_count = j.value("sample_count", std::uint64_t{100});
    spec.seed = j.value("seed", std::uint64_t{1});
    spec.budget = j.value("budget", std::uint64_t{531441});
    spec.pair_samples = j.value("pair_samples", 8);
    if (j.contains("checks"))
        for (const auto& name : j.at("checks")) spec.checks.insert(name.get<std::string>());
    for (const std::string& name : spec.checks)
        if (!known_checks().count(name)) throw config_error("unknown check \"" + name + "\"");
    return spec;
}

}  // namespace

SweepSpec SweepSpec::parse(const std::string& text) {
    // JSON when the first non-space character is '{', key-value lines otherwise.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& err) {
            throw config_error(std::string("bad sweep spec JSON: ") + err.what());
        }
        return spec_from_json(j);
    }
    nlohmann::json j = nlohmann::json::object();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key, value;
        if (!(ls >> key)) continue;
        if (key[0] == '#') continue;
        if (!(ls >> value)) throw config_error("missing value for key \"" + key + "\"");
        if (key == "source" || key == "mode") {
            j[key] = value;
        } else if (key == "checks") {
            j[key] = split_list(value);
        } else if (key == "files") {
            j[key] = split_list(value);
        } else if (key == "cycle_lengths") {
            nlohmann::json arr = nlohmann::json::array();
            for (const std::string& item : split_list(value)) arr.push_back(std::stoi(item));
            j[key] = arr;
        } else if (key == "max_vertices" || key == "pair_samples") {
            j[key] = std::stoi(value);
        } else if (key == "sample_count" || key == "seed" || key == "budget") {
            j[key] = std::stoull(value);
        } else {
            throw config_error("unknown key \"" + key + "\"");
        }
    }
    return spec_from_json(j);
}

nlohmann::json SweepSpec::to_json() const {
    nlohmann::json j;
    j["source"] = source == Source::catalog ? "catalog"
                  : source == Source::cycles ? "cycles"
                                             : "files";
    j["max_vertices"] = max_vertices;
    if (!cycle_lengths.empty()) j["cycle_lengths"] = cycle_lengths;
    if (!files.empty()) j["files"] = files;
    j["mode"] = mode == Mode::fixed ? "fixed"
                : mode == Mode::exhaustive ? "exhaustive"
                                           : "random";
    j["sample_count"] = sample_count;
    j["seed"] = seed;
    j["budget"] = budget;
    j["pair_samples"] = pair_samples;
    j["checks"] = checks;
    return j;
}

// ---------------------------------------------------------------------------
// Sweep driver
// ---------------------------------------------------------------------------

namespace {

std::vector<MixedGraph> base_graphs(const SweepSpec& spec) {
    switch (spec.source) {
        case SweepSpec::Source::catalog:
            return connected_graph_catalog(spec.max_vertices);
        case SweepSpec::Source::cycles: {
            std::vector<MixedGraph> out;
            for (int len : spec.cycle_lengths) {
                if (len < 3) throw config_error("cycle length must be at least 3");
                std::vector<Edge> edges;
                for (int v = 1; v < len; ++v)
                    edges.push_back({v, v + 1, Orientation::undirected});
                edges.push_back({1, len, Orientation::undirected});
                out.push_back(MixedGraph(len, std::move(edges)));
            }
            return out;
        }
        case SweepSpec::Source::files: {
            std::vector<MixedGraph> out;
            for (const std::string& path : spec.files) {
                std::ifstream in(path);
                if (!in) throw config_error("cannot open graph file " + path);
                std::stringstream buffer;
                buffer << in.rdbuf();
                out.push_back(MixedGraph::parse(buffer.str()));
            }
            return out;
        }
    }
    throw config_error("invalid source");
}

struct PartialResult {
    std::map<std::string, CheckStats> stats;
    std::vector<SweepFailure> failures;
    std::uint64_t graphs = 0;
    std::uint64_t disconnected = 0;
};

PartialResult run_range(const SweepSpec& spec, const std::vector<std::string>& checks,
                        const MixedGraph& base, std::size_t base_index,
                        const OrientationSpace* space, std::uint64_t lo, std::uint64_t hi) {
    PartialResult result;
    for (std::uint64_t index = lo; index < hi; ++index) {
        MixedGraph g = [&] {
            switch (spec.mode) {
                case SweepSpec::Mode::fixed:
                    return base;
                case SweepSpec::Mode::exhaustive:
                    return space->at(index);
                case SweepSpec::Mode::random: {
                    std::mt19937_64 rng(mix_seed(spec.seed, base_index, index));
                    const OrientationSpace local(base);
                    return local.at(std::uniform_int_distribution<std::uint64_t>(
                        0, local.size() - 1)(rng));
                }
            }
            return base;
        }();
        ++result.graphs;
        const bool connected = g.is_connected();
        if (!connected) ++result.disconnected;
        for (const std::string& name : checks) {
            if (!connected && needs_connected(name)) continue;
            std::mt19937_64 rng(mix_seed(spec.seed ^ 0x5eedULL, base_index, index));
            CheckOutcome outcome;
            check_registry().at(name)(g, rng, spec, outcome);
            auto& stats = result.stats[name];
            stats.checked += outcome.checked;
            stats.failed += outcome.failed;
            stats.passed += outcome.checked - outcome.failed;
            for (nlohmann::json& detail : outcome.failures) {
                detail["seed"] = mix_seed(spec.seed ^ 0x5eedULL, base_index, index);
                result.failures.push_back(
                    SweepFailure{name, g.to_edge_list_text(), std::move(detail)});
            }
        }
    }
    return result;
}

}  // namespace

bool SweepReport::all_passed() const {
    for (const auto& [name, s] : stats)
        if (s.failed != 0) return false;
    return true;
}

nlohmann::json SweepReport::to_json() const {
    nlohmann::json j;
    j["spec"] = spec;
    nlohmann::json stats_json = nlohmann::json::object();
    for (const auto& [name, s] : stats)
        stats_json[name] = {{"checked", s.checked}, {"passed", s.passed}, {"failed", s.failed}};
    j["checks"] = stats_json;
    nlohmann::json fail_json = nlohmann::json::array();
    for (const SweepFailure& f : failures)
        fail_json.push_back({{"check", f.check}, {"graph", f.graph}, {"detail", f.detail}});
    j["failures"] = fail_json;
    j["graphs_processed"] = graphs_processed;
    j["disconnected_skipped"] = disconnected_skipped;
    j["all_passed"] = all_passed();
    return j;
}

std::string SweepReport::summary_text() const {
    std::ostringstream out;
    out << "check                    checked    passed    failed\n";
    for (const auto& [name, s] : stats) {
        out << name << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ');
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%8llu  %8llu  %8llu\n",
                      static_cast<unsigned long long>(s.checked),
                      static_cast<unsigned long long>(s.passed),
                      static_cast<unsigned long long>(s.failed));
        out << buf;
    }
    out << "graphs processed: " << graphs_processed;
    if (disconnected_skipped > 0)
        out << " (" << disconnected_skipped
            << " disconnected: equivalence checks skipped for those)";
    out << "\nwall time: " << wall_seconds << " s\n";
    out << (all_passed() ? "ALL CHECKS PASSED\n" : "FAILURES PRESENT\n");
    return out.str();
}

SweepReport run_sweep(const SweepSpec& spec, unsigned workers) {
    const auto start = std::chrono::steady_clock::now();
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    std::vector<std::string> checks(spec.checks.begin(), spec.checks.end());
    if (checks.empty())
        checks.assign(known_checks().begin(), known_checks().end());

    const std::vector<MixedGraph> bases = base_graphs(spec);

    // Budget gate before any work is done.
    std::vector<std::optional<OrientationSpace>> spaces(bases.size());
    if (spec.mode == SweepSpec::Mode::exhaustive) {
        for (std::size_t i = 0; i < bases.size(); ++i) {
            spaces[i].emplace(bases[i]);
            if (spaces[i]->size() > spec.budget)
                throw budget_error("orientation space of size " +
                                   std::to_string(spaces[i]->size()) +
                                   " exceeds budget " + std::to_string(spec.budget));
        }
    }

    SweepReport report;
    report.spec = spec.to_json();
    for (std::size_t b = 0; b < bases.size(); ++b) {
        const std::uint64_t total = spec.mode == SweepSpec::Mode::fixed ? 1
                                    : spec.mode == SweepSpec::Mode::exhaustive
                                        ? spaces[b]->size()
                                        : spec.sample_count;
        const OrientationSpace* space = spaces[b] ? &*spaces[b] : nullptr;

        const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (workers * 4) + 1);
        std::vector<std::future<PartialResult>> futures;
        for (std::uint64_t lo = 0; lo < total; lo += chunk) {
            const std::uint64_t hi = std::min(total, lo + chunk);
            futures.push_back(std::async(std::launch::async, run_range, std::cref(spec),
                                         std::cref(checks), std::cref(bases[b]), b, space,
                                         lo, hi));
        }
        for (auto& future : futures) {
            PartialResult partial = future.get();
            for (const auto& [name, s] : partial.stats) {
                auto& agg = report.stats[name];
                agg.checked += s.checked;
                agg.passed += s.passed;
                agg.failed += s.failed;
            }
            report.failures.insert(report.failures.end(),
                                   std::make_move_iterator(partial.failures.begin()),
                                   std::make_move_iterator(partial.failures.end()));
            report.graphs_processed += partial.graphs;
            report.disconnected_skipped += partial.disconnected;
        }
    }
    for (const std::string& name : checks)
        report.stats.try_emplace(name);  // show zero rows for unexercised checks

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool replay_fails_again(const SweepFailure& failure, const SweepSpec& spec) {
    const MixedGraph g = MixedGraph::parse(failure.graph);
    std::mt19937_64 rng(failure.detail.value("seed", std::uint64_t{0}));
    CheckOutcome outcome;
    check_registry().at(failure.check)(g, rng, spec, outcome);
    return outcome.failed > 0;
}

}  // namespace mixlap
