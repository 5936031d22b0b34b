#pragma once

#include <optional>
#include <vector>

#include "mixlap/eisenstein.hpp"
#include "mixlap/mixed_graph.hpp"

namespace mixlap {

class cycle_budget_error : public std::runtime_error {
public:
    explicit cycle_budget_error(std::size_t budget)
        : std::runtime_error("simple-cycle enumeration exceeded budget of " +
                             std::to_string(budget)) {}
};

/**
 * Mixed-cycle classes by the residue of a − b modulo 6, where a and b count
 * directed edges along and against the canonical traversal direction.
 * Phi governs the incidence-matrix determinant norm of the cycle
 * ({1,5}→1, {2,4}→3, {3}→4, {0}→0); Psi does the same for the
 * quasi-incidence matrix, additionally using the parity of the undirected
 * edge count c.
 */
enum class PhiClass { phi1 = 1, phi2 = 2, phi3 = 3, phi4 = 4 };
enum class PsiClass { psi1 = 1, psi2 = 2, psi3 = 3, psi4 = 4 };

/// Squared determinant modulus of a cycle's S-block in its Phi class.
Int phi_norm_value(PhiClass c);
/// Squared determinant modulus of a cycle's T-block in its Psi class.
Int psi_norm_value(PsiClass c);

const char* to_string(PhiClass c);
const char* to_string(PsiClass c);

struct CycleClassReport {
    int a = 0;  // directed edges along the traversal direction
    int b = 0;  // directed edges against it
    int c = 0;  // undirected edges
    PhiClass phi = PhiClass::phi4;
    PsiClass psi = PsiClass::psi4;
};

/// Classifies a simple closed walk. Throws std::invalid_argument when the
/// walk is not a simple cycle of g.
CycleClassReport classify_cycle(const MixedWalk& cycle, const MixedGraph& g);

/// All simple cycles of the underlying graph, each visited once in canonical
/// orientation (smallest vertex first, toward its smaller-indexed neighbor).
/// Throws cycle_budget_error when more than `budget` cycles exist.
std::vector<MixedWalk> enumerate_simple_cycles(const MixedGraph& g,
                                               std::size_t budget = 1000);

/**
 * Closed-form determinant unit of a rootless-tree block of S, under the
 * canonical conventions: (−ω̄)^α · (−1)^β where α counts directed edges
 * oriented away from the root and β counts undirected edges whose canonical
 * direction (smaller endpoint as tail) points away from the root. Always a
 * unit; equals det(S[c.vertices, c.edge_ids]) up to the row/column-ordering
 * sign. Throws std::invalid_argument unless the component is a rootless tree.
 */
EisensteinInt det_unit_rootless_tree_S(const Substructure& c, const MixedGraph& g);

/// T analog: ω^α with α counting directed edges oriented toward the root.
EisensteinInt det_unit_rootless_tree_T(const Substructure& c, const MixedGraph& g);

enum class EligibilityKind { si_only, sii_only, both, neither };

/**
 * Classification of a square substructure per the component taxonomy:
 * SI-eligible when every component is a rootless tree or a unicyclic part
 * outside Phi4 (those are exactly the substructures with nonzero S-block
 * determinant, of norm 3^γ₁·4^γ₂); SII-eligible analogously with Psi4 and
 * τ counts for the T-block. unit_s / unit_t hold the exact product of the
 * per-component block determinants when eligible (zero otherwise); the
 * product equals det of the full block up to the component-grouping
 * permutation sign.
 */
struct SubstructureClass {
    EligibilityKind kind = EligibilityKind::neither;
    int gamma1 = 0, gamma2 = 0;  // Phi2 / Phi3 unicyclic component counts
    int tau1 = 0, tau2 = 0;      // Psi2 / Psi3 unicyclic component counts
    EisensteinInt unit_s;
    EisensteinInt unit_t;

    bool si_eligible() const {
        return kind == EligibilityKind::si_only || kind == EligibilityKind::both;
    }
    bool sii_eligible() const {
        return kind == EligibilityKind::sii_only || kind == EligibilityKind::both;
    }
};

/// Full classification; with_units=false skips the exact block determinants
/// (the hot path for minor sums needs only eligibility and the counts).
SubstructureClass classify_substructure(const Substructure& s, const MixedGraph& g,
                                        bool with_units = true);

/**
 * A vertex → Z₆ labeling. For the null-structure detection of L the rules
 * are: undirected edges join equal labels, directed u→v steps the label by
 * +1 (cyclically). For the quasi null structure of Q: undirected edges step
 * by +3, directed edges by +2 along the arrow.
 */
struct SPLabeling {
    std::vector<int> labels;  // size n, labels[v-1] in 0..5

    int label_of(int vertex) const { return labels[static_cast<std::size_t>(vertex - 1)]; }
};

/// Label propagation per component (start 0, copy across undirected edges,
/// +1 across directed edges). Present iff no conflict, i.e. iff every simple
/// cycle has a − b ≡ 0 (mod 6), iff L is singular on connected graphs.
std::optional<SPLabeling> sp_labeling(const MixedGraph& g);

/// Quasi analog with increments +3 (undirected) and +2/+4 (with/against a
/// directed edge). Present iff every simple cycle is in Psi4, iff Q is
/// singular on connected graphs.
std::optional<SPLabeling> quasi_null_labeling(const MixedGraph& g);

/// Null vector ξ with ξ_v = ω̄^label(v); satisfies ξ*·S = 0 and L·ξ = 0
/// exactly for any labeling produced by sp_labeling.
std::vector<EisensteinInt> null_vector_from_sp(const SPLabeling& labeling);

}  // namespace mixlap
