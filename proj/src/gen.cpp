#include "blocker/gen.hpp"

#include "blocker/canonical.hpp"
#include "blocker/params.hpp"
#include "blocker/recognize.hpp"

#include <algorithm>
#include <random>

namespace blocker::gen {

namespace {

using Rng = std::mt19937_64;

void certify(bool ok, const char* what) {
    if (!ok) throw error(std::string("generator certification failed: ") + what);
}

std::vector<std::pair<Vertex, Vertex>> shuffled_pairs(int n, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    return pairs;
}

} // namespace

Graph random_graph(int n, std::uint64_t seed, double p) {
    Rng rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g = Graph::edgeless(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_bipartite(int n, std::uint64_t seed, double p) {
    Rng rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g = Graph::edgeless(n);
    if (n >= 2) {
        std::uniform_int_distribution<int> split(1, n - 1);
        int left = split(rng);
        for (int u = 0; u < left; ++u)
            for (int v = left; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
    }
    certify(params::is_bipartite(g), "bipartite");
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n <= 0) throw error("random_tree: need n >= 1");
    Rng rng(seed);
    Graph g = Graph::edgeless(n);
    if (n >= 2) {
        // Pruefer decode
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> pruefer(n - 2);
        for (int& x : pruefer) x = pick(rng);
        std::vector<int> degree(n, 1);
        for (int x : pruefer) ++degree[x];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.insert(v);
        for (int x : pruefer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            g.add_edge(leaf, x);
            if (--degree[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        g.add_edge(a, b);
    }
    certify(recognize::is_tree(g), "tree");
    return g;
}

namespace {

Graph random_cotree_graph(std::vector<Vertex> verts, Rng& rng) {
    if (verts.size() == 1) {
        Graph g;
        g.add_vertex(verts[0]);
        return g;
    }
    std::uniform_int_distribution<size_t> cut(1, verts.size() - 1);
    size_t c = cut(rng);
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<Vertex> left(verts.begin(), verts.begin() + c);
    std::vector<Vertex> right(verts.begin() + c, verts.end());
    Graph gl = random_cotree_graph(std::move(left), rng);
    Graph gr = random_cotree_graph(std::move(right), rng);
    Graph g = gl;
    for (Vertex v : gr.vertices()) g.add_vertex(v);
    for (auto [a, b] : gr.edges()) g.add_edge(a, b);
    if (std::bernoulli_distribution(0.5)(rng))
        for (Vertex a : gl.vertices())
            for (Vertex b : gr.vertices()) g.add_edge(a, b);
    return g;
}

} // namespace

Graph random_cograph(int n, std::uint64_t seed) {
    if (n <= 0) throw error("random_cograph: need n >= 1");
    Rng rng(seed);
    std::vector<Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    Graph g = random_cotree_graph(std::move(verts), rng);
    certify(recognize::is_cograph(g), "cograph");
    return g;
}

Graph random_split(int n, std::uint64_t seed) {
    if (n <= 0) throw error("random_split: need n >= 1");
    Rng rng(seed);
    std::uniform_int_distribution<int> ksize(0, n);
    std::bernoulli_distribution coin(0.5);
    int kk = ksize(rng);
    Graph g = Graph::edgeless(n);
    for (int u = 0; u < kk; ++u)
        for (int v = u + 1; v < kk; ++v) g.add_edge(u, v);
    for (int u = 0; u < kk; ++u)
        for (int v = kk; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    certify(recognize::is_split(g), "split");
    return g;
}

std::pair<Graph, IntervalModel> random_interval(int n, std::uint64_t seed) {
    if (n <= 0) throw error("random_interval: need n >= 1");
    Rng rng(seed);
    std::uniform_int_distribution<int> start(0, 2 * n);
    std::uniform_int_distribution<int> len(0, n);
    IntervalModel m;
    for (int v = 0; v < n; ++v) {
        int l = start(rng);
        m.interval[v] = {l, l + len(rng)};
    }
    Graph g = Graph::edgeless(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::max(m.interval[u].first, m.interval[v].first) <=
                std::min(m.interval[u].second, m.interval[v].second))
                g.add_edge(u, v);
    certify(recognize::validate_interval_model(g, m), "interval");
    return {std::move(g), std::move(m)};
}

Graph random_cobipartite(int n, std::uint64_t seed) {
    Graph g = complement(random_bipartite(n, seed));
    certify(recognize::is_cobipartite(g), "cobipartite");
    return g;
}

Graph random_triangle_free(int n, std::uint64_t seed) {
    Rng rng(seed);
    Graph g = Graph::edgeless(n);
    for (auto [u, v] : shuffled_pairs(n, rng)) {
        bool closes_triangle = false;
        for (Vertex w : g.neighbors(u))
            if (g.has_edge(v, w)) {
                closes_triangle = true;
                break;
            }
        if (!closes_triangle && std::bernoulli_distribution(0.7)(rng)) g.add_edge(u, v);
    }
    certify(recognize::is_triangle_free(g), "triangle-free");
    return g;
}

Graph random_c4_free(int n, std::uint64_t seed) {
    Rng rng(seed);
    Graph g = Graph::edgeless(n);
    Graph c4 = Graph::cycle(4);
    for (auto [u, v] : shuffled_pairs(n, rng)) {
        if (!std::bernoulli_distribution(0.6)(rng)) continue;
        Graph trial = g;
        trial.add_edge(u, v);
        // an induced C4 created by uv must pass through uv
        bool creates = false;
        for (Vertex w : trial.neighbors(u)) {
            if (w == v || trial.has_edge(w, v)) continue;
            for (Vertex x : trial.neighbors(v)) {
                if (x == u || x == w || trial.has_edge(x, u)) continue;
                if (trial.has_edge(w, x)) {
                    creates = true;
                    break;
                }
            }
            if (creates) break;
        }
        if (!creates) g = std::move(trial);
    }
    certify(recognize::is_H_free(g, c4), "C4-free");
    return g;
}

Graph random_3p1_free(int n, std::uint64_t seed) {
    Graph g = complement(random_triangle_free(n, seed));
    certify(recognize::is_3p1_free(g), "3P1-free");
    return g;
}

Graph random_p1p3_free(int n, std::uint64_t seed) {
    Rng rng(seed);
    const double densities[] = {0.75, 0.6, 0.85, 0.5};
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g = random_graph(n, rng(), densities[attempt % 4]);
        if (recognize::is_p1p3_free(g)) return g;
    }
    throw error("random_p1p3_free: rejection sampling did not converge");
}

std::vector<Graph> all_trees(int n) {
    if (n <= 0) return {};
    std::vector<Graph> cur;
    cur.push_back(Graph::edgeless(1));
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        canonical::IsoMap<char> seen;
        for (const Graph& t : cur)
            for (Vertex v : t.vertices()) {
                Graph grown = t;
                grown.add_edge(v, size - 1);
                DenseGraph d = densify(grown);
                if (seen.find(d, 0)) continue;
                seen.insert(d, 0, 1);
                next.push_back(std::move(grown));
            }
        cur = std::move(next);
    }
    return cur;
}

} // namespace blocker::gen
