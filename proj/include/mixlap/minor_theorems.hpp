#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mixlap/exact_matrix.hpp"
#include "mixlap/mixed_graph.hpp"
#include "mixlap/structure.hpp"

namespace mixlap {

/// Which factorization a minor computation runs against: S/L or T/Q.
enum class MinorSide { laplacian, quasi_laplacian };

/// A tree component of a generalized matching, joining the two selected
/// vertex sets: exactly one vertex in V1\V2 and one in V2\V1, with the
/// connecting path between them.
struct BridgingTree {
    int v1_vertex = 0;
    int v2_vertex = 0;
    MixedWalk path;  // simple path from v1_vertex to v2_vertex
};

struct MatchingComponent {
    Substructure part;
    std::optional<BridgingTree> bridge;  // absent: shared nonsingular part
};

/// An edge subset E1 with |E1| = |V1| = |V2| making both incidence
/// submatrices X[V1,E1] and X[V2,E1] nonsingular, decomposed into shared
/// components and bridging trees.
struct GeneralizedMatching {
    std::vector<int> edge_ids;
    std::vector<MatchingComponent> components;
};

/// All generalized matchings between v1 and v2, found by the exact
/// nonsingularity test on both incidence submatrices.
std::vector<GeneralizedMatching> enumerate_generalized_matchings(
    const MixedGraph& g, const std::vector<int>& v1, const std::vector<int>& v2,
    MinorSide side);

/**
 * Closed-form unit a bridging tree contributes to det L[V1,V2]:
 * (−ω)^(a−b) · (−1)^c, where a and b count the path's directed edges
 * oriented away from the V1-side and V2-side vertices and c counts its
 * undirected edges. Equals the product
 * det S[V(t)∩V1, E(t)] · conj(det S[V(t)∩V2, E(t)]) up to the block
 * row-ordering sign.
 */
EisensteinInt tree_contribution_L(const MixedGraph& g, const BridgingTree& t);

/// Q analog: ω^(a−b), with no undirected-edge sign factor.
EisensteinInt tree_contribution_Q(const MixedGraph& g, const BridgingTree& t);

struct MinorReport {
    std::vector<int> v1, v2;
    EisensteinInt algebraic;      // exact determinant of the submatrix
    EisensteinInt combinatorial;  // structured sum over substructures/matchings
    bool exact_match = false;
    bool norm_match = false;
};

/**
 * Principal minor of L evaluated two ways: algebraically as det(L[V1]) and
 * combinatorially as the sum of 3^γ₁·4^γ₂ over all SI-eligible square
 * substructures on V1. The two sides agree exactly as nonnegative integers.
 */
MinorReport principal_minor_L(const MixedGraph& g, const std::vector<int>& v1);
MinorReport principal_minor_Q(const MixedGraph& g, const std::vector<int>& v1);

/**
 * Off-diagonal minor evaluated two ways: algebraically as det of the
 * submatrix, and combinatorially as the matching sum
 *   Σ_Γ ε(Γ) · (Π bridging-tree block products) · 3^γ₁·4^γ₂,
 * where ε(Γ) is the sign of the permutations grouping the sorted row sets
 * into component blocks. ε depends on how the two row sets interleave
 * across components; with it included the sum reproduces the determinant
 * exactly (and hence in norm), which the unsigned sum does not.
 */
MinorReport offdiag_minor_L(const MixedGraph& g, const std::vector<int>& v1,
                            const std::vector<int>& v2);
MinorReport offdiag_minor_Q(const MixedGraph& g, const std::vector<int>& v1,
                            const std::vector<int>& v2);

/**
 * Σ over size-|V1| column subsets E1 of det(X[V1,E1]) · conj(det(X[V2,E1])),
 * for an incidence matrix X. Equals det((X·X*)[V1,V2]) identically; this is
 * the sign-exact bridge the combinatorial formulas are tested against.
 */
EisensteinInt cauchy_binet_expand(const ExactMatrix& incidence,
                                  const std::vector<int>& v1,
                                  const std::vector<int>& v2);

/// Classical spanning-tree count: any principal cofactor of the integer
/// Laplacian of the underlying graph.
Int spanning_trees_kirchhoff(const MixedGraph& g);

struct CofactorWitness {
    int row1 = 0, col1 = 0;
    Int norm1;
    int row2 = 0, col2 = 0;
    Int norm2;
};

struct TreeCountReport {
    bool applicable = false;       // the corresponding null labeling exists
    bool norms_all_equal = false;  // all n² cofactor norms agree
    Int common_cofactor_norm = 0;  // valid when norms_all_equal
    Int tree_count = 0;            // √common norm when it is a perfect square
    Int kirchhoff = 0;
    bool matches = false;  // applicable && equal norms && count² = norm = kirchhoff²
    bool connected = true;
    std::optional<CofactorWitness> witness;  // two cofactors with unequal norms
};

/// Matrix-tree evaluation through L: applicable iff an SP labeling exists;
/// verifies all cofactor norms agree and equal the squared Kirchhoff count.
TreeCountReport tree_count_via_L(const MixedGraph& g);

/// Same through Q, applicable iff the quasi null labeling exists.
TreeCountReport tree_count_via_Q(const MixedGraph& g);

/// Visits every k-subset of {1,…,m} in lexicographic order.
void for_each_subset(int m, int k,
                     const std::function<void(const std::vector<int>&)>& visit);

}  // namespace mixlap
