#pragma once

// Constructive hardness reductions: each one a deterministic instance
// transformer emitting a BlockerInstance whose answer matches the source
// problem's.

#include "blocker/graph.hpp"
#include "blocker/io.hpp"

namespace blocker::reductions {

// Red-Blue Dominating Set -> contraction blocker on split graphs.
// Requires the normalized form: every red vertex has a blue neighbour,
// k <= |B|. The alpha variant completes R to a clique; the chi variant takes
// the bipartite complement, completes B and adds a universal vertex.
BlockerInstance reduce_rbds_to_split_alpha(const RbdsInstance& inst);
BlockerInstance reduce_rbds_to_split_chi(const RbdsInstance& inst);

// One-in-three SAT -> 1-contraction blocker(omega), omega = 3 gadget:
// a triangle+square per variable, a triangle per clause, literal matchings.
BlockerInstance reduce_1in3sat_to_omega(const CnfFormula& f);

// layout of the gadget above, for witness construction and tests
struct SatGadgetLayout {
    // variable i: vertices base..base+4; triangle {b,b+1,b+2}, square
    // {b,b+1,b+3,b+4}; positive literal edge (b, b+2), negative (b+1, b+2)
    int var_base(int var_index) const { return 5 * var_index; }
    // clause j: triangle {c, c+1, c+2}; literal t of the clause owns edge
    // (c+t, c+(t+1)%3)
    int num_vars = 0;
    int clause_base(int clause_index) const { return 5 * num_vars + 3 * clause_index; }
    std::pair<Vertex, Vertex> literal_edge(int var_index, bool positive) const;
    std::pair<Vertex, Vertex> clause_edge(int clause_index, int position) const;
};
SatGadgetLayout sat_gadget_layout(const CnfFormula& f);

// the one-in-three witness for a satisfying assignment (tests / CLI)
Witness sat_witness(const CnfFormula& f, const std::vector<bool>& assignment);

// brute-force one-in-three satisfiability (source-problem oracle)
std::optional<std::vector<bool>> one_in_three_assignment(const CnfFormula& f);

// Subdivide every edge of a 1-in-3-SAT gadget once and hang two pendant
// twins on the half closer to the smaller endpoint; the result is C4-free,
// perfect, with omega = 3, and the budget grows by |E|.
BlockerInstance lift_to_c4free_perfect(const Graph& g, int k);

// Vertex Cover -> 1-contraction blocker(omega) on chordal graphs:
// a size-|V| clique per edge, V itself a clique, one universal vertex.
BlockerInstance reduce_vc_to_chordal(const Graph& g, int k);

// 1-contraction blocker(alpha) on cobipartite graphs -> contraction
// blocker(alpha) on bipartite graphs: add three dominating vertices, then
// subdivide every edge once.
BlockerInstance reduce_cobipartite_alpha_to_bipartite(const Graph& g, int k);

// Biclique Vertex-Partition (3 nontrivial parts) on a connected bipartite
// graph -> contraction blocker(chi) on its complement with k = n - 6.
BlockerInstance reduce_biclique_to_cobipartite_chi(const Graph& g);

// brute-force partition of V into exactly 3 nontrivial bicliques
bool has_biclique_3_partition(const Graph& g);

// Double-subdivide every edge until the girth exceeds p; preserves whether
// the graph has a forced vertex.
Graph girth_lift(const Graph& g, int p);

// finite girth of g, or nullopt for forests
std::optional<int> girth(const Graph& g);

// (2G + K_{l+1}, omega, contract, 1, 1); yes iff omega(G) <= l
BlockerInstance clique_proof_lift(const Graph& g, int l);

// a vertex lying in every maximum independent set (the core is non-empty)
bool has_forced_vertex(const Graph& g, int size_guard = 20);

} // namespace blocker::reductions
