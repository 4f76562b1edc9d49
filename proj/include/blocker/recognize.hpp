#pragma once

// Class membership tests with certificates: cotrees for cographs, split
// partitions, interval model validation and clique paths, induced-subgraph
// freeness, chordality, small-scale perfectness, and the dichotomy
// classifier over forbidden induced subgraphs.

#include "blocker/graph.hpp"
#include "blocker/io.hpp"

#include <memory>
#include <optional>
#include <variant>

namespace blocker::recognize {

// --- cotree -----------------------------------------------------------

struct Cotree {
    enum class Kind { leaf, cup, join }; // cup = disjoint union
    struct Node {
        Kind kind;
        Vertex vertex = -1; // leaves only
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    bool empty() const { return root < 0; }
    const Node& at(int i) const { return nodes[i]; }
    Graph evaluate() const;              // reproduces the graph, ids intact
    std::set<Vertex> leaves(int node) const;
    std::string dump() const;            // "(u (j 0 1) 2)" style term
};

// binary cotree of G, or an induced P4 as a refusal certificate
using CotreeResult = std::variant<Cotree, std::array<Vertex, 4>>;
CotreeResult cotree(const Graph& g);
bool is_cograph(const Graph& g);

// --- split partitions --------------------------------------------------

enum class SplitFlavor { any, minimal, maximal };

struct SplitPartition {
    std::set<Vertex> clique;       // K
    std::set<Vertex> independent;  // I
};

// a split partition of the requested flavor, or nullopt when G is not split
std::optional<SplitPartition> split_partition(const Graph& g,
                                              SplitFlavor flavor = SplitFlavor::any);
bool is_split(const Graph& g);

// --- interval models ----------------------------------------------------

// intervals intersect iff the endpoints are adjacent in g
bool validate_interval_model(const Graph& g, const IntervalModel& m);

// left-to-right maximal cliques of the model (the clique path)
std::vector<std::set<Vertex>> clique_path(const IntervalModel& m);

// brute-force model finder, for tests and generators only (n <= 10)
std::optional<IntervalModel> find_interval_model(const Graph& g, int size_guard = 10);

// --- freeness / chordality / perfectness --------------------------------

// induced copy of h in g if one exists (|V(h)| <= 8)
std::optional<std::map<Vertex, Vertex>> find_induced(const Graph& g, const Graph& h);
bool is_H_free(const Graph& g, const Graph& h);

bool is_chordal(const Graph& g);

// chi = omega on every induced subgraph, checked exhaustively (n <= guard)
bool is_perfect_small(const Graph& g, int size_guard = 12);

bool is_triangle_free(const Graph& g);
bool is_tree(const Graph& g);
bool is_cobipartite(const Graph& g);
bool is_3p1_free(const Graph& g);    // alpha <= 2
bool is_p1p3_free(const Graph& g);

// named small graphs used by the classifier
Graph small_p(int n);       // P_n
Graph small_paw();
Graph small_3p1();
Graph small_2p2();
Graph small_p1p3();
Graph small_c3p1();         // C3 + P1

// --- dichotomy classifier ------------------------------------------------

enum class Verdict { polynomial, hard, open };

struct Dichotomy {
    Verdict verdict;
    std::string citation; // which classification case fired
};

// complexity of the (pi, kind) blocker problem on H-free graphs
Dichotomy classify(const Graph& h, Param pi, OpKind kind);

std::string to_string(Verdict v);

} // namespace blocker::recognize
