#pragma once

#include "mixlap/exact_matrix.hpp"
#include "mixlap/mixed_graph.hpp"

namespace mixlap {

/**
 * Matrix constructions for a mixed graph, all exact over Z[ω].
 *
 * N is the Hermitian adjacency matrix of the second kind:
 *   n(i,j) = 1 for i—j, ω for i→j, ω̄ for i←j, 0 otherwise.
 * D is the degree diagonal of the underlying graph, L = D − N and Q = D + N.
 *
 * S and T are the (quasi-)incidence matrices of the second kind, with the
 * entry conventions pinned so that S·S* = L and T·T* = Q hold exactly:
 *   S: directed u→v puts 1 at the tail u and −ω̄ at the head v; an undirected
 *      edge gets 1 at its smaller endpoint and −1 at the larger one.
 *   T: directed u→v puts ω at the tail and 1 at the head; undirected edges
 *      get 1 at both endpoints.
 * Rows are labeled by vertex (1…n) in index order; columns by edge id (1…m)
 * in edge-list order. Both orderings are part of the contract: determinant
 * signs of submatrices depend on them.
 */
ExactMatrix build_N(const MixedGraph& g);
ExactMatrix build_D(const MixedGraph& g);
ExactMatrix build_L(const MixedGraph& g);
ExactMatrix build_Q(const MixedGraph& g);
ExactMatrix build_S(const MixedGraph& g);
ExactMatrix build_T(const MixedGraph& g);

}  // namespace mixlap
