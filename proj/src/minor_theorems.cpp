#include "mixlap/minor_theorems.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "mixlap/exact_linalg.hpp"
#include "mixlap/matrix_builder.hpp"

namespace mixlap {

void for_each_subset(int m, int k,
                     const std::function<void(const std::vector<int>&)>& visit) {
    if (k < 0 || k > m) return;
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        visit(subset);
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> set_union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Simple path between two vertices of a tree component, as a MixedWalk.
MixedWalk tree_path(const MixedGraph& g, const Substructure& comp, int from, int to) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge)
    for (int id : comp.edge_ids) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back({e.v, id});
        adj[e.v].push_back({e.u, id});
    }
    std::map<int, std::pair<int, int>> parent;  // vertex -> (previous vertex, edge)
    std::queue<int> bfs;
    bfs.push(from);
    parent[from] = {0, 0};
    while (!bfs.empty()) {
        const int x = bfs.front();
        bfs.pop();
        if (x == to) break;
        for (auto [y, id] : adj[x]) {
            if (!parent.count(y)) {
                parent[y] = {x, id};
                bfs.push(y);
            }
        }
    }
    std::vector<std::pair<int, int>> back;  // (edge, vertex stepped onto)
    for (int x = to; x != from; x = parent[x].first) back.push_back({parent[x].second, x});
    MixedWalk path;
    path.vertices.push_back(from);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
        const Edge& e = g.edge(it->first);
        path.edge_ids.push_back(it->first);
        path.forward.push_back(e.u == path.vertices.back());
        path.vertices.push_back(it->second);
    }
    return path;
}

struct MatchingDecomposition {
    std::vector<MatchingComponent> components;
    int gamma1 = 0, gamma2 = 0;  // valid for the requested side only
};

/**
 * Structural matching test: every component must be either a shared square
 * nonsingular part on V1∩V2 (rootless tree or non-null-class unicyclic) or a
 * full tree bridging V1\V2 to V2\V1. Returns nullopt otherwise. Agreement
 * with the exact nonsingularity test is enforced by the test suite.
 */
std::optional<MatchingDecomposition> decompose_matching(
    const MixedGraph& g, const std::set<int>& v1, const std::set<int>& v2,
    const std::vector<int>& union_vertices, const std::vector<int>& edge_ids,
    MinorSide side) {
    MatchingDecomposition result;
    auto parts = components(Substructure{union_vertices, edge_ids}, g);
    for (Substructure& comp : parts) {
        int diff1 = 0, diff2 = 0;
        int u_vertex = 0, v_vertex = 0;
        for (int x : comp.vertices) {
            const bool in1 = v1.count(x) > 0;
            const bool in2 = v2.count(x) > 0;
            if (in1 && !in2) {
                ++diff1;
                u_vertex = x;
            } else if (in2 && !in1) {
                ++diff2;
                v_vertex = x;
            }
        }
        if (diff1 == 0 && diff2 == 0) {
            if (!comp.square()) return std::nullopt;
            const auto kind = classify_component(comp, g);
            if (std::holds_alternative<OtherPart>(kind)) return std::nullopt;
            if (const auto* uni = std::get_if<UnicyclicPart>(&kind)) {
                const CycleClassReport cls = classify_cycle(uni->cycle, g);
                if (side == MinorSide::laplacian) {
                    if (cls.phi == PhiClass::phi4) return std::nullopt;
                    if (cls.phi == PhiClass::phi2) ++result.gamma1;
                    if (cls.phi == PhiClass::phi3) ++result.gamma2;
                } else {
                    if (cls.psi == PsiClass::psi4) return std::nullopt;
                    if (cls.psi == PsiClass::psi2) ++result.gamma1;
                    if (cls.psi == PsiClass::psi3) ++result.gamma2;
                }
            }
            result.components.push_back({std::move(comp), std::nullopt});
        } else if (diff1 == 1 && diff2 == 1) {
            // Bridging component: must be a tree with every endpoint present.
            if (comp.vertices.size() != comp.edge_ids.size() + 1) return std::nullopt;
            const std::set<int> present(comp.vertices.begin(), comp.vertices.end());
            for (int id : comp.edge_ids) {
                const Edge& e = g.edge(id);
                if (!present.count(e.u) || !present.count(e.v)) return std::nullopt;
            }
            BridgingTree bridge;
            bridge.v1_vertex = u_vertex;
            bridge.v2_vertex = v_vertex;
            bridge.path = tree_path(g, comp, u_vertex, v_vertex);
            result.components.push_back({std::move(comp), std::move(bridge)});
        } else {
            return std::nullopt;
        }
    }
    return result;
}

// Sign of the permutation that stably groups the ascending row labels by the
// component each label belongs to (components in list order).
int grouping_sign(const std::vector<int>& sorted_rows,
                  const std::map<int, int>& component_of) {
    long inversions = 0;
    std::vector<int> seq;
    seq.reserve(sorted_rows.size());
    for (int row : sorted_rows) seq.push_back(component_of.at(row));
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

EisensteinInt int_power(long base, int exp) {
    Int value = 1;
    for (int i = 0; i < exp; ++i) value *= base;
    return EisensteinInt(value, 0);
}

MinorReport principal_minor_impl(const MixedGraph& g, const std::vector<int>& v1_in,
                                 MinorSide side) {
    const std::vector<int> v1 = sorted_unique(v1_in);
    if (v1.empty()) throw std::invalid_argument("principal minor: empty vertex set");
    if (v1.back() > g.vertex_count())
        throw std::invalid_argument("principal minor: unknown vertex");

    MinorReport report;
    report.v1 = v1;
    report.v2 = v1;
    const ExactMatrix full =
        side == MinorSide::laplacian ? build_L(g) : build_Q(g);
    report.algebraic = det(select_submatrix(full, v1, v1));

    EisensteinInt sum(0);
    const int k = static_cast<int>(v1.size());
    for_each_subset(g.edge_count(), k, [&](const std::vector<int>& edge_ids) {
        const auto cls = classify_substructure(Substructure{v1, edge_ids}, g, false);
        if (side == MinorSide::laplacian && cls.si_eligible())
            sum += int_power(3, cls.gamma1) * int_power(4, cls.gamma2);
        if (side == MinorSide::quasi_laplacian && cls.sii_eligible())
            sum += int_power(3, cls.tau1) * int_power(4, cls.tau2);
    });
    report.combinatorial = sum;
    report.exact_match = report.algebraic == report.combinatorial;
    report.norm_match = report.algebraic.norm() == report.combinatorial.norm();
    return report;
}

MinorReport offdiag_minor_impl(const MixedGraph& g, const std::vector<int>& v1_in,
                               const std::vector<int>& v2_in, MinorSide side) {
    const std::vector<int> v1 = sorted_unique(v1_in);
    const std::vector<int> v2 = sorted_unique(v2_in);
    if (v1.size() != v2.size())
        throw std::invalid_argument("offdiag minor: vertex sets differ in size");
    if (v1.empty()) throw std::invalid_argument("offdiag minor: empty vertex sets");
    if (std::max(v1.back(), v2.back()) > g.vertex_count())
        throw std::invalid_argument("offdiag minor: unknown vertex");

    MinorReport report;
    report.v1 = v1;
    report.v2 = v2;
    const ExactMatrix hermitian =
        side == MinorSide::laplacian ? build_L(g) : build_Q(g);
    report.algebraic = det(select_submatrix(hermitian, v1, v2));

    const ExactMatrix incidence =
        side == MinorSide::laplacian ? build_S(g) : build_T(g);
    const std::set<int> set1(v1.begin(), v1.end());
    const std::set<int> set2(v2.begin(), v2.end());
    const std::vector<int> all = set_union_sorted(v1, v2);

    EisensteinInt sum(0);
    const int k = static_cast<int>(v1.size());
    for_each_subset(g.edge_count(), k, [&](const std::vector<int>& edge_ids) {
        auto decomposition = decompose_matching(g, set1, set2, all, edge_ids, side);
        if (!decomposition) return;

        std::map<int, int> component_of;
        for (std::size_t c = 0; c < decomposition->components.size(); ++c)
            for (int x : decomposition->components[c].part.vertices)
                component_of[x] = static_cast<int>(c);
        const int sign = grouping_sign(v1, component_of) * grouping_sign(v2, component_of);

        EisensteinInt term = int_power(3, decomposition->gamma1) *
                             int_power(4, decomposition->gamma2);
        for (const auto& comp : decomposition->components) {
            if (!comp.bridge) continue;
            std::vector<int> rows1, rows2;
            for (int x : comp.part.vertices) {
                if (set1.count(x)) rows1.push_back(x);
                if (set2.count(x)) rows2.push_back(x);
            }
            const EisensteinInt d1 =
                det(select_submatrix(incidence, rows1, comp.part.edge_ids));
            const EisensteinInt d2 =
                det(select_submatrix(incidence, rows2, comp.part.edge_ids));
            term *= d1 * d2.conj();
        }
        sum += sign < 0 ? -term : term;
    });
    report.combinatorial = sum;
    report.exact_match = report.algebraic == report.combinatorial;
    report.norm_match = report.algebraic.norm() == report.combinatorial.norm();
    return report;
}

}  // namespace

std::vector<GeneralizedMatching> enumerate_generalized_matchings(
    const MixedGraph& g, const std::vector<int>& v1_in, const std::vector<int>& v2_in,
    MinorSide side) {
    const std::vector<int> v1 = sorted_unique(v1_in);
    const std::vector<int> v2 = sorted_unique(v2_in);
    if (v1.size() != v2.size())
        throw std::invalid_argument("generalized matchings: vertex sets differ in size");

    const ExactMatrix incidence =
        side == MinorSide::laplacian ? build_S(g) : build_T(g);
    const std::set<int> set1(v1.begin(), v1.end());
    const std::set<int> set2(v2.begin(), v2.end());
    const std::vector<int> all = set_union_sorted(v1, v2);

    std::vector<GeneralizedMatching> out;
    for_each_subset(
        g.edge_count(), static_cast<int>(v1.size()),
        [&](const std::vector<int>& edge_ids) {
            // Defining test: both incidence blocks nonsingular.
            const bool nonsingular =
                !det(select_submatrix(incidence, v1, edge_ids)).is_zero() &&
                !det(select_submatrix(incidence, v2, edge_ids)).is_zero();
            auto decomposition = decompose_matching(g, set1, set2, all, edge_ids, side);
            // The structural characterization (shared nonsingular parts plus
            // bridging trees) must coincide with the determinant test.
            if (nonsingular != decomposition.has_value())
                throw std::logic_error(
                    "generalized matching: structural and determinant tests disagree");
            if (!nonsingular) return;
            GeneralizedMatching matching;
            matching.edge_ids = edge_ids;
            matching.components = std::move(decomposition->components);
            out.push_back(std::move(matching));
        });
    return out;
}

EisensteinInt tree_contribution_L(const MixedGraph& g, const BridgingTree& t) {
    if (!is_valid_walk(t.path, g) || t.path.vertices.front() != t.v1_vertex ||
        t.path.vertices.back() != t.v2_vertex)
        throw std::invalid_argument("tree_contribution_L: malformed bridging tree");
    long away_from_v1 = 0, away_from_v2 = 0, undirected = 0;
    for (std::size_t i = 0; i < t.path.edge_ids.size(); ++i) {
        const Edge& e = g.edge(t.path.edge_ids[i]);
        if (e.orientation == Orientation::undirected)
            ++undirected;
        else if (t.path.forward[i])
            ++away_from_v1;
        else
            ++away_from_v2;
    }
    // −ω = ω⁴ and −1 = ω³, so (−ω)^(a−b)·(−1)^c = ω^(4(a−b)+3c).
    return EisensteinInt::unit_power(4 * (away_from_v1 - away_from_v2) + 3 * undirected);
}

EisensteinInt tree_contribution_Q(const MixedGraph& g, const BridgingTree& t) {
    if (!is_valid_walk(t.path, g) || t.path.vertices.front() != t.v1_vertex ||
        t.path.vertices.back() != t.v2_vertex)
        throw std::invalid_argument("tree_contribution_Q: malformed bridging tree");
    long away_from_v1 = 0, away_from_v2 = 0;
    for (std::size_t i = 0; i < t.path.edge_ids.size(); ++i) {
        const Edge& e = g.edge(t.path.edge_ids[i]);
        if (e.orientation != Orientation::directed) continue;
        if (t.path.forward[i])
            ++away_from_v1;
        else
            ++away_from_v2;
    }
    return EisensteinInt::unit_power(away_from_v1 - away_from_v2);
}

MinorReport principal_minor_L(const MixedGraph& g, const std::vector<int>& v1) {
    return principal_minor_impl(g, v1, MinorSide::laplacian);
}

MinorReport principal_minor_Q(const MixedGraph& g, const std::vector<int>& v1) {
    return principal_minor_impl(g, v1, MinorSide::quasi_laplacian);
}

MinorReport offdiag_minor_L(const MixedGraph& g, const std::vector<int>& v1,
                            const std::vector<int>& v2) {
    return offdiag_minor_impl(g, v1, v2, MinorSide::laplacian);
}

MinorReport offdiag_minor_Q(const MixedGraph& g, const std::vector<int>& v1,
                            const std::vector<int>& v2) {
    return offdiag_minor_impl(g, v1, v2, MinorSide::quasi_laplacian);
}

EisensteinInt cauchy_binet_expand(const ExactMatrix& incidence,
                                  const std::vector<int>& v1_in,
                                  const std::vector<int>& v2_in) {
    const std::vector<int> v1 = sorted_unique(v1_in);
    const std::vector<int> v2 = sorted_unique(v2_in);
    if (v1.size() != v2.size())
        throw std::invalid_argument("cauchy_binet_expand: vertex sets differ in size");
    if (v1.size() > static_cast<std::size_t>(incidence.col_count()))
        throw std::invalid_argument("cauchy_binet_expand: more rows than columns");

    EisensteinInt sum(0);
    for_each_subset(incidence.col_count(), static_cast<int>(v1.size()),
                    [&](const std::vector<int>& cols) {
                        const EisensteinInt d1 = det(select_submatrix(incidence, v1, cols));
                        if (d1.is_zero()) return;
                        const EisensteinInt d2 = det(select_submatrix(incidence, v2, cols));
                        sum += d1 * d2.conj();
                    });
    return sum;
}

Int spanning_trees_kirchhoff(const MixedGraph& g) {
    const MixedGraph plain = g.underlying();
    if (plain.vertex_count() == 0) return 1;
    const ExactMatrix laplacian = build_L(plain);
    const EisensteinInt minor = det(delete_submatrix(laplacian, {1}, {1}));
    return minor.a();  // integer Laplacian: the b component is identically zero
}

namespace {

TreeCountReport tree_count_impl(const MixedGraph& g, MinorSide side) {
    TreeCountReport report;
    report.connected = g.is_connected();
    report.kirchhoff = spanning_trees_kirchhoff(g);
    report.applicable = side == MinorSide::laplacian
                            ? sp_labeling(g).has_value()
                            : quasi_null_labeling(g).has_value();

    const ExactMatrix m = side == MinorSide::laplacian ? build_L(g) : build_Q(g);
    const int n = g.vertex_count();
    Int first_norm;
    int first_i = 0, first_j = 0;
    report.norms_all_equal = true;
    for (int i = 1; i <= n && report.norms_all_equal; ++i) {
        for (int j = 1; j <= n; ++j) {
            const Int norm = cofactor(m, i, j).norm();
            if (i == 1 && j == 1) {
                first_norm = norm;
                first_i = i;
                first_j = j;
            } else if (norm != first_norm) {
                report.norms_all_equal = false;
                report.witness = CofactorWitness{first_i, first_j, first_norm, i, j, norm};
                break;
            }
        }
    }
    if (report.norms_all_equal) {
        report.common_cofactor_norm = first_norm;
        if (mpz_perfect_square_p(first_norm.get_mpz_t())) {
            Int root;
            mpz_sqrt(root.get_mpz_t(), first_norm.get_mpz_t());
            report.tree_count = root;
        }
    }
    report.matches = report.applicable && report.norms_all_equal &&
                     report.tree_count * report.tree_count == report.common_cofactor_norm &&
                     report.tree_count == report.kirchhoff;
    return report;
}

}  // namespace

TreeCountReport tree_count_via_L(const MixedGraph& g) {
    return tree_count_impl(g, MinorSide::laplacian);
}

TreeCountReport tree_count_via_Q(const MixedGraph& g) {
    return tree_count_impl(g, MinorSide::quasi_laplacian);
}

}  // namespace mixlap
