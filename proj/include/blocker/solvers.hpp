#pragma once

// Polynomial-time class-specific blocker solvers. Callers name the class
// explicitly; the CLI layers auto-detection on top via the recognize module.

#include "blocker/graph.hpp"
#include "blocker/io.hpp"
#include "blocker/recognize.hpp"

#include <optional>

namespace blocker::solvers {

struct SolverAnswer {
    bool decision = false;
    std::optional<Witness> witness; // present on yes where the proof is constructive
    std::optional<int> min_k;       // present where the algorithm computes it
};

// Contraction blocker for alpha on trees, via n and the matching number:
// infeasible when d >= alpha(T); otherwise the required number of
// contractions is d when d <= n - 2 mu, else 2(d + mu) - n.
SolverAnswer tree_contraction_blocker_alpha(const Graph& t, int d, int k);

// Dynamic program over the binary cotree: for each node x and budgets
// (i, j) with i + j <= k + l, the largest drop d(i,j,x) of pi achievable on
// G_x with at most i contractions and j deletions.
struct CographTable {
    recognize::Cotree tree;
    Param pi = Param::alpha;
    int budget_sum = 0;
    std::vector<std::vector<std::vector<int>>> drop; // node -> i -> j
    std::vector<int> node_pi;                        // pi(G_x) per node
    std::vector<int> node_size;                      // |V(G_x)| per node

    // largest drop at the root with (i, j) operations, i + j <= budget_sum
    int root_drop(int i, int j) const;
};

CographTable cograph_blocker(const Graph& g, Param pi, int k, int l);

// decision wrapper: can G be (k,l)-contracted to drop pi by at least d
SolverAnswer cograph_blocker_decide(const Graph& g, Param pi, int d, int k, int l);

// Fixed-d split graph solver; the k <= d branch enumerates all contraction
// sequences of length at most k (the only exponential-in-d part).
SolverAnswer split_contraction_blocker(const Graph& g, Param pi, int d, int k);

// Greedy over the clique path: repeatedly contract, in the leftmost maximal
// clique still larger than omega - d, the edge whose intervals have the two
// rightmost right endpoints. min_k is the exact optimum.
SolverAnswer interval_contraction_blocker(const IntervalModel& m, Param pi, int d);

// Deletion variant: delete the rightmost-right-endpoint vertex of the
// leftmost oversized clique.
SolverAnswer interval_deletion_blocker(const IntervalModel& m, Param pi, int d);

// omega/chi deletion blocker on bipartite graphs via vertex cover
SolverAnswer bipartite_deletion_blocker(const Graph& g, Param pi, int d, int k);

// alpha deletion blocker on cobipartite graphs: solve omega on the complement
SolverAnswer cobipartite_deletion_blocker_alpha(const Graph& g, int d, int k);

// chi blockers on 3P1-free graphs (alpha <= 2)
SolverAnswer contraction_blocker_chi_3p1free(const Graph& g, int d, int k);
SolverAnswer deletion_blocker_chi_3p1free(const Graph& g, int d, int k);

// split V into A (3P1-free part) and B (P4-free part), complete to each
// other; chi(G) = chi(G[A]) + chi(G[B])
std::pair<std::set<Vertex>, std::set<Vertex>> decompose_p1p3free(const Graph& g);
SolverAnswer deletion_blocker_chi_p1p3free(const Graph& g, int d, int k);

// omega contraction blocker on triangle-free graphs: d = 1 forces every
// component with an edge down to a single vertex; d >= 2 is infeasible
SolverAnswer triangle_free_contraction_blocker_omega(const Graph& g, int d, int k);

} // namespace blocker::solvers
