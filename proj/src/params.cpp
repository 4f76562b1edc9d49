#include "blocker/params.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace blocker::params {

namespace {

void check_guard(const Graph& g, int size_guard, const char* what) {
    if (g.num_vertices() > size_guard)
        throw error(std::string(what) + ": graph too large for exact computation (n = " +
                    std::to_string(g.num_vertices()) + " > guard " +
                    std::to_string(size_guard) + ")");
}

// Tomita-style maximum clique on bitmasks: branch on candidates in reverse
// greedy-colouring order, prune with the colouring bound.
struct MaxClique {
    const std::vector<std::uint64_t>& adj;
    int n;
    int best = 0;

    MaxClique(const std::vector<std::uint64_t>& adj, int n) : adj(adj), n(n) {}

    void expand(std::uint64_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        // greedy colouring of cand; colour[i] is an upper bound for the
        // clique extension using vertices up to i in `order`
        std::vector<int> order, colour;
        std::uint64_t uncoloured = cand;
        int c = 0;
        while (uncoloured) {
            ++c;
            std::uint64_t cls = uncoloured;
            while (cls) {
                int v = std::countr_zero(cls);
                order.push_back(v);
                colour.push_back(c);
                uncoloured &= ~(1ULL << v);
                cls &= ~(adj[v] | (1ULL << v));
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + colour[i] <= best) return;
            int v = order[i];
            cand &= ~(1ULL << v);
            expand(cand & adj[v], size + 1);
        }
    }

    int run() {
        expand(n == 64 ? ~0ULL : (1ULL << n) - 1, 0);
        return best;
    }
};

int omega_dense(const DenseGraph& d) {
    if (d.n == 0) return 0;
    MaxClique mc(d.adj, d.n);
    return mc.run();
}

std::vector<std::uint64_t> complement_masks(const DenseGraph& d) {
    std::vector<std::uint64_t> out(d.n);
    for (int i = 0; i < d.n; ++i)
        out[i] = ~d.adj[i] & d.full_mask() & ~(1ULL << i);
    return out;
}

bool colour_backtrack(const std::vector<std::uint64_t>& adj, const std::vector<int>& order,
                      std::vector<int>& colour_of, size_t pos, int q, int used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    // symmetry break: at most one brand-new colour per step
    int limit = std::min(q, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        std::uint64_t nb = adj[v];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (colour_of[w] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colour_of[v] = c;
        if (colour_backtrack(adj, order, colour_of, pos + 1, q, std::max(used, c + 1)))
            return true;
        colour_of[v] = -1;
    }
    return false;
}

bool k_colorable_dense(const DenseGraph& d, int q) {
    if (d.n == 0) return true;
    if (q <= 0) return false;
    std::vector<int> order(d.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(d.adj[a]) > std::popcount(d.adj[b]);
    });
    std::vector<int> colour_of(d.n, -1);
    return colour_backtrack(d.adj, order, colour_of, 0, q, 0);
}

} // namespace

int omega(const Graph& g, int size_guard) {
    check_guard(g, size_guard, "omega");
    return omega_dense(densify(g));
}

int alpha(const Graph& g, int size_guard) {
    check_guard(g, size_guard, "alpha");
    DenseGraph d = densify(g);
    d.adj = complement_masks(d);
    return omega_dense(d);
}

int chi(const Graph& g, int size_guard) {
    check_guard(g, size_guard, "chi");
    if (g.empty()) return 0;
    DenseGraph d = densify(g);
    int lb = omega_dense(d);
    for (int q = lb;; ++q)
        if (k_colorable_dense(d, q)) return q;
}

bool is_k_colorable(const Graph& g, int q, int size_guard) {
    if (q < 0) throw error("is_k_colorable: q must be >= 0");
    check_guard(g, size_guard, "is_k_colorable");
    return k_colorable_dense(densify(g), q);
}

std::set<Vertex> max_independent_set(const Graph& g, int size_guard) {
    check_guard(g, size_guard, "max_independent_set");
    // peel greedily against alpha: v is in some maximum independent set iff
    // alpha(G - N[v]) = alpha(G) - 1
    std::set<Vertex> out;
    Graph cur = g;
    int a = alpha(cur, size_guard);
    while (a > 0) {
        for (Vertex v : cur.vertices()) {
            std::set<Vertex> rest;
            for (Vertex w : cur.vertices())
                if (w != v && !cur.has_edge(v, w)) rest.insert(w);
            Graph next = induced_subgraph(cur, rest);
            if (alpha(next, size_guard) == a - 1) {
                out.insert(v);
                cur = std::move(next);
                --a;
                break;
            }
        }
    }
    return out;
}

std::set<Vertex> Matching::saturated() const {
    std::set<Vertex> s;
    for (auto [u, v] : edges) {
        s.insert(u);
        s.insert(v);
    }
    return s;
}

namespace {

// classic O(V^3) blossom algorithm on indices 0..n-1
struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, p, base;
    std::vector<bool> used, blossom;

    explicit Blossom(int n) : n(n), adj(n), match(n, -1) {}

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    int lca(int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        used.assign(n, false);
        p.assign(n, -1);
        base.resize(n);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    blossom.assign(n, false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    int solve() {
        int res = 0;
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            if (u == -1) continue;
            ++res;
            while (u != -1) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
        return res;
    }
};

} // namespace

Matching maximum_matching(const Graph& g) {
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    std::map<Vertex, int> index;
    for (int i = 0; i < n; ++i) index[vs[i]] = i;
    Blossom bl(n);
    for (auto [u, v] : g.edges()) bl.add_edge(index[u], index[v]);
    bl.solve();
    Matching m;
    for (int i = 0; i < n; ++i)
        if (bl.match[i] > i) m.edges.emplace_back(vs[i], vs[bl.match[i]]);
    return m;
}

int matching_number(const Graph& g) {
    return maximum_matching(g).size();
}

std::optional<std::pair<std::set<Vertex>, std::set<Vertex>>> bipartition(const Graph& g) {
    std::map<Vertex, int> side;
    std::set<Vertex> left, right;
    for (Vertex start : g.vertices()) {
        if (side.count(start)) continue;
        side[start] = 0;
        std::vector<Vertex> stack{start};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                auto it = side.find(w);
                if (it == side.end()) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (it->second == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (const auto& [v, s] : side) (s == 0 ? left : right).insert(v);
    return std::make_pair(std::move(left), std::move(right));
}

bool is_bipartite(const Graph& g) {
    return bipartition(g).has_value();
}

std::set<Vertex> min_vertex_cover_bipartite(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) throw error("min_vertex_cover_bipartite: graph is not bipartite");
    const auto& [left, right] = *parts;

    // Kuhn's augmenting paths from the left side
    std::map<Vertex, Vertex> match; // for both sides; missing = unmatched
    std::map<Vertex, bool> visited;
    auto try_kuhn = [&](auto&& self, Vertex v) -> bool {
        for (Vertex w : g.neighbors(v)) {
            if (visited[w]) continue;
            visited[w] = true;
            auto it = match.find(w);
            if (it == match.end() || self(self, it->second)) {
                match[w] = v;
                match[v] = w;
                return true;
            }
        }
        return false;
    };
    for (Vertex v : left) {
        visited.clear();
        try_kuhn(try_kuhn, v);
    }

    // Koenig: Z = unmatched left vertices plus everything reachable by
    // alternating paths; cover = (L \ Z) u (R n Z)
    std::set<Vertex> z;
    std::vector<Vertex> stack;
    for (Vertex v : left)
        if (!match.count(v)) {
            z.insert(v);
            stack.push_back(v);
        }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (left.count(v)) {
            for (Vertex w : g.neighbors(v)) {
                auto it = match.find(v);
                if (it != match.end() && it->second == w) continue; // only non-matching edges
                if (z.insert(w).second) stack.push_back(w);
            }
        } else {
            auto it = match.find(v);
            if (it != match.end() && z.insert(it->second).second) stack.push_back(it->second);
        }
    }
    std::set<Vertex> cover;
    for (Vertex v : left)
        if (!z.count(v)) cover.insert(v);
    for (Vertex v : right)
        if (z.count(v)) cover.insert(v);
    return cover;
}

namespace {

void bron_kerbosch(const DenseGraph& d, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = std::countr_zero(px);
    std::uint64_t best = p & ~d.adj[pivot];
    std::uint64_t scan = px;
    while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        std::uint64_t cand = p & ~d.adj[u];
        if (std::popcount(cand) < std::popcount(best)) {
            best = cand;
            pivot = u;
        }
    }
    std::uint64_t ext = p & ~d.adj[pivot];
    while (ext) {
        int v = std::countr_zero(ext);
        ext &= ext - 1;
        std::uint64_t bit = 1ULL << v;
        bron_kerbosch(d, r | bit, p & d.adj[v], x & d.adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<std::set<Vertex>> maximal_cliques(const Graph& g) {
    if (g.empty()) return {};
    DenseGraph d = densify(g);
    std::vector<std::uint64_t> masks;
    bron_kerbosch(d, 0, d.full_mask(), 0, masks);
    std::vector<std::set<Vertex>> out;
    for (std::uint64_t m : masks) {
        std::set<Vertex> c;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            c.insert(d.ids[i]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Chi3p1 chi_3p1free(const Graph& g) {
    Graph co = complement(g);
    // alpha(G) <= 2 iff the complement is triangle-free
    for (auto [u, v] : co.edges())
        for (Vertex w : co.neighbors(u))
            if (w != v && co.has_edge(v, w))
                throw error("chi_3p1free: graph is not 3P1-free");
    int n = g.num_vertices();
    int mu = matching_number(co);
    return Chi3p1{n - mu, n - 2 * mu};
}

} // namespace blocker::params
