#include "blocker/graph.hpp"

#include <algorithm>

namespace blocker {

std::string to_string(OpKind k) {
    return k == OpKind::contract ? "contract" : "delete";
}

std::string to_string(Param p) {
    switch (p) {
    case Param::alpha: return "alpha";
    case Param::omega: return "omega";
    default: return "chi";
    }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    Graph g = edgeless(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw error("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g = edgeless(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::edgeless(int n) {
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    return g;
}

void Graph::add_vertex(Vertex v) {
    if (v < 0) throw error("vertex ids must be non-negative");
    adj_.try_emplace(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw error("self-loops are not allowed");
    add_vertex(u);
    add_vertex(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw error("no such vertex: " + std::to_string(v));
    return it->second;
}

int Graph::num_edges() const {
    int deg_sum = 0;
    for (const auto& [v, nb] : adj_) deg_sum += static_cast<int>(nb.size());
    return deg_sum / 2;
}

std::vector<Vertex> Graph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [v, nb] : adj_)
        for (Vertex w : nb)
            if (v < w) out.emplace_back(v, w);
    return out;
}

Vertex Graph::max_vertex_id() const {
    return adj_.empty() ? -1 : adj_.rbegin()->first;
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v))
        throw error("contract: " + std::to_string(u) + "-" + std::to_string(v) +
                    " is not an edge");
    Graph out;
    for (Vertex w : g.vertices())
        if (w != u) out.add_vertex(w);
    for (auto [a, b] : g.edges()) {
        if (a == u) a = v;
        if (b == u) b = v;
        if (a != b) out.add_edge(a, b);
    }
    return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw error("delete: no such vertex: " + std::to_string(v));
    Graph out;
    for (Vertex w : g.vertices())
        if (w != v) out.add_vertex(w);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(a, b);
    return out;
}

Graph complement(const Graph& g) {
    Graph out;
    auto vs = g.vertices();
    for (Vertex v : vs) out.add_vertex(v);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) out.add_edge(vs[i], vs[j]);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::set<Vertex>& s) {
    Graph out;
    for (Vertex v : s) {
        if (!g.has_vertex(v)) throw error("induced: no such vertex: " + std::to_string(v));
        out.add_vertex(v);
    }
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (v < w && s.count(w)) out.add_edge(v, w);
    return out;
}

static std::pair<Graph, std::map<Vertex, Vertex>> relabel_second(const Graph& g, const Graph& h) {
    Vertex offset = g.max_vertex_id() + 1;
    std::map<Vertex, Vertex> relabel;
    Graph out = g;
    for (Vertex v : h.vertices()) {
        relabel[v] = v + offset;
        out.add_vertex(v + offset);
    }
    for (auto [a, b] : h.edges()) out.add_edge(a + offset, b + offset);
    return {std::move(out), std::move(relabel)};
}

std::pair<Graph, std::map<Vertex, Vertex>> disjoint_union(const Graph& g, const Graph& h) {
    return relabel_second(g, h);
}

std::pair<Graph, std::map<Vertex, Vertex>> join(const Graph& g, const Graph& h) {
    auto [out, relabel] = relabel_second(g, h);
    for (Vertex a : g.vertices())
        for (const auto& [hv, b] : relabel) out.add_edge(a, b);
    return {std::move(out), std::move(relabel)};
}

Graph subdivide_edge(const Graph& g, Vertex u, Vertex v, int t) {
    if (t < 1) throw error("subdivide: need at least one internal vertex");
    if (!g.has_edge(u, v)) throw error("subdivide: not an edge");
    Graph out;
    for (Vertex w : g.vertices()) out.add_vertex(w);
    for (auto [a, b] : g.edges())
        if (!((a == std::min(u, v)) && (b == std::max(u, v)))) out.add_edge(a, b);
    Vertex next = g.max_vertex_id() + 1;
    Vertex prev = u;
    for (int i = 0; i < t; ++i) {
        out.add_edge(prev, next);
        prev = next++;
    }
    out.add_edge(prev, v);
    return out;
}

std::vector<std::set<Vertex>> connected_components(const Graph& g) {
    std::vector<std::set<Vertex>> comps;
    std::set<Vertex> seen;
    for (Vertex start : g.vertices()) {
        if (seen.count(start)) continue;
        std::set<Vertex> comp;
        std::vector<Vertex> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (Vertex w : g.neighbors(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

Graph apply_witness(const Graph& g, const Witness& w) {
    Graph cur = g;
    for (size_t i = 0; i < w.size(); ++i) {
        const Operation& op = w[i];
        try {
            if (op.kind == OpKind::contract)
                cur = contract_edge(cur, op.u, op.v);
            else
                cur = delete_vertex(cur, op.v);
        } catch (const error& e) {
            throw error("witness op " + std::to_string(i) + ": " + e.what());
        }
    }
    return cur;
}

DenseGraph densify(const Graph& g) {
    DenseGraph d;
    d.ids = g.vertices();
    d.n = static_cast<int>(d.ids.size());
    if (d.n > 64) throw error("graph too large for dense view (n > 64)");
    std::map<Vertex, int> index;
    for (int i = 0; i < d.n; ++i) index[d.ids[i]] = i;
    d.adj.assign(d.n, 0);
    for (auto [u, v] : g.edges()) {
        d.adj[index[u]] |= 1ULL << index[v];
        d.adj[index[v]] |= 1ULL << index[u];
    }
    return d;
}

} // namespace blocker
