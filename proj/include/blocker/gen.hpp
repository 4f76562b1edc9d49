#pragma once

// Seeded random in-class instance generators. Every generated object is
// certified in-class by the recognize module before being returned; a
// certification failure is an internal bug and aborts.

#include "blocker/graph.hpp"
#include "blocker/io.hpp"

#include <cstdint>

namespace blocker::gen {

Graph random_graph(int n, std::uint64_t seed, double p = 0.5);
Graph random_bipartite(int n, std::uint64_t seed, double p = 0.5);

Graph random_tree(int n, std::uint64_t seed);          // Pruefer sequence
Graph random_cograph(int n, std::uint64_t seed);       // random binary cotree
Graph random_split(int n, std::uint64_t seed);
std::pair<Graph, IntervalModel> random_interval(int n, std::uint64_t seed);
Graph random_cobipartite(int n, std::uint64_t seed);
Graph random_triangle_free(int n, std::uint64_t seed);
Graph random_c4_free(int n, std::uint64_t seed);       // no induced C4
Graph random_3p1_free(int n, std::uint64_t seed);
Graph random_p1p3_free(int n, std::uint64_t seed);

// all non-isomorphic trees on exactly n vertices (grown leaf by leaf)
std::vector<Graph> all_trees(int n);

} // namespace blocker::gen
