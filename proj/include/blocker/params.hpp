#pragma once

// Exact computation of alpha, omega, chi, the matching number and vertex
// covers at desk scale. Branch-and-bound throughout; a size guard
// (default n <= 24) refuses instances too large for exact computation.

#include "blocker/graph.hpp"

#include <optional>

namespace blocker::params {

inline constexpr int kDefaultSizeGuard = 24;

// independence / clique / chromatic number; throw blocker::error when
// num_vertices exceeds the guard. All are 0 on the empty graph.
int alpha(const Graph& g, int size_guard = kDefaultSizeGuard);
int omega(const Graph& g, int size_guard = kDefaultSizeGuard);
int chi(const Graph& g, int size_guard = kDefaultSizeGuard);

bool is_k_colorable(const Graph& g, int q, int size_guard = kDefaultSizeGuard);

// one maximum independent set / clique (used by witness checks and the
// forced-vertex search)
std::set<Vertex> max_independent_set(const Graph& g, int size_guard = kDefaultSizeGuard);

struct Matching {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<Vertex> saturated() const;
    int size() const { return static_cast<int>(edges.size()); }
};

// maximum matching on general graphs (augmenting paths with blossom
// contraction)
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

// minimum vertex cover of a bipartite graph via Koenig's theorem;
// throws on non-bipartite input
std::set<Vertex> min_vertex_cover_bipartite(const Graph& g);

// 2-colorability check; the two sides when bipartite
std::optional<std::pair<std::set<Vertex>, std::set<Vertex>>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// all maximal cliques (Bron--Kerbosch with pivoting), n <= 64
std::vector<std::set<Vertex>> maximal_cliques(const Graph& g);

// chi and the number of size-1 colour classes of a 3P1-free graph
// (alpha <= 2, checked): chi = n - mu(complement), and every optimal
// colouring has exactly n - 2 mu(complement) singleton classes.
struct Chi3p1 {
    int chi;
    int singletons;
};
Chi3p1 chi_3p1free(const Graph& g);

} // namespace blocker::params
