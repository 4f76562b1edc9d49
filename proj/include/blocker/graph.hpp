#pragma once

// Simple undirected graphs with stable vertex identifiers, plus the
// elementary transformations everything else is built on. Graph values are
// treated as immutable after construction: every transformation returns a
// new value.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blocker {

using Vertex = int;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OpKind { contract, vdelete };
enum class Param { alpha, omega, chi };

std::string to_string(OpKind k);
std::string to_string(Param p);

struct Operation {
    OpKind kind;
    Vertex u = -1; // contract: the vertex contracted onto v; vdelete: unused
    Vertex v = -1; // contract: surviving vertex; vdelete: deleted vertex

    static Operation contract(Vertex u, Vertex v) { return {OpKind::contract, u, v}; }
    static Operation vdelete(Vertex v) { return {OpKind::vdelete, -1, v}; }
    bool operator==(const Operation&) const = default;
};

// Ordered list of operations certifying a yes answer. Must be replayable in
// order on the instance graph without precondition violation.
using Witness = std::vector<Operation>;

class Graph {
public:
    Graph() = default;

    // vertices 0..n-1 with the given edge list
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    static Graph path(int n);           // P_n on 0..n-1
    static Graph cycle(int n);          // C_n on 0..n-1, n >= 3
    static Graph complete(int n);       // K_n on 0..n-1
    static Graph edgeless(int n);       // nK_1 on 0..n-1

    void add_vertex(Vertex v);
    void add_edge(Vertex u, Vertex v); // inserts both endpoints

    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::set<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const;
    bool empty() const { return adj_.empty(); }

    std::vector<Vertex> vertices() const;                    // sorted
    std::vector<std::pair<Vertex, Vertex>> edges() const;    // sorted, u < v
    const std::map<Vertex, std::set<Vertex>>& adjacency() const { return adj_; }

    Vertex max_vertex_id() const; // -1 when empty

    bool operator==(const Graph&) const = default;

private:
    std::map<Vertex, std::set<Vertex>> adj_;
};

// --- elementary transformations (each returns a new graph) ---
// Note: contraction and complementation do not commute in general.

// Contract edge uv; u is contracted onto v, the merged vertex keeps id v and
// is adjacent to N(u) u N(v) \ {u,v}. Requires uv in E.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

// Induced subgraph on V \ {v}. Requires v in V.
Graph delete_vertex(const Graph& g, Vertex v);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::set<Vertex>& s);

// Union/join always relabel the second operand's ids by the offset
// max_id(g)+1 so that composition is deterministic; the relabel map
// (old id of h -> new id) is returned alongside.
std::pair<Graph, std::map<Vertex, Vertex>> disjoint_union(const Graph& g, const Graph& h);
std::pair<Graph, std::map<Vertex, Vertex>> join(const Graph& g, const Graph& h);

// Replace edge uv by a path u - w_1 - ... - w_t - v with t >= 1 fresh
// internal vertices (ids max_id+1..). Requires uv in E.
Graph subdivide_edge(const Graph& g, Vertex u, Vertex v, int t);

std::vector<std::set<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g); // true for the empty graph

// Replay a witness. Throws blocker::error naming the index of the first
// operation whose precondition fails.
Graph apply_witness(const Graph& g, const Witness& w);

// --- dense bitmask view for the exact algorithms (n <= 64) ---

struct DenseGraph {
    int n = 0;
    std::vector<std::uint64_t> adj; // adj[i] bit j set iff ij is an edge
    std::vector<Vertex> ids;        // index -> original vertex id

    std::uint64_t full_mask() const { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }
};

DenseGraph densify(const Graph& g);

} // namespace blocker
