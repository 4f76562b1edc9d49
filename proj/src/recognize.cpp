#include "blocker/recognize.hpp"

#include "blocker/canonical.hpp"
#include "blocker/params.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace blocker::recognize {

// --- cotree -----------------------------------------------------------

Graph Cotree::evaluate() const {
    if (empty()) return Graph{};
    // bottom-up: vertex sets are disjoint, ids are kept verbatim
    std::vector<Graph> value(nodes.size());
    // nodes are stored so children precede parents (built bottom-up)
    for (size_t i = 0; i < nodes.size(); ++i) {
        const Node& nd = nodes[i];
        if (nd.kind == Kind::leaf) {
            Graph g;
            g.add_vertex(nd.vertex);
            value[i] = std::move(g);
            continue;
        }
        Graph g = value[nd.left];
        const Graph& h = value[nd.right];
        for (Vertex v : h.vertices()) g.add_vertex(v);
        for (auto [a, b] : h.edges()) g.add_edge(a, b);
        if (nd.kind == Kind::join)
            for (Vertex a : value[nd.left].vertices())
                for (Vertex b : h.vertices()) g.add_edge(a, b);
        value[i] = std::move(g);
    }
    return value[root];
}

std::set<Vertex> Cotree::leaves(int node) const {
    std::set<Vertex> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        const Node& nd = nodes[stack.back()];
        stack.pop_back();
        if (nd.kind == Kind::leaf)
            out.insert(nd.vertex);
        else {
            stack.push_back(nd.left);
            stack.push_back(nd.right);
        }
    }
    return out;
}

std::string Cotree::dump() const {
    if (empty()) return "()";
    std::string out;
    auto rec = [&](auto&& self, int i) -> void {
        const Node& nd = nodes[i];
        if (nd.kind == Kind::leaf) {
            out += std::to_string(nd.vertex);
            return;
        }
        out += nd.kind == Kind::cup ? "(u " : "(j ";
        self(self, nd.left);
        out += " ";
        self(self, nd.right);
        out += ")";
    };
    rec(rec, root);
    return out;
}

namespace {

// right-fold parts (ordered by smallest contained vertex) into a binary
// spine of `kind` nodes
int fold_parts(Cotree& t, Cotree::Kind kind, std::vector<int>& part_roots) {
    int acc = part_roots.back();
    for (int i = static_cast<int>(part_roots.size()) - 2; i >= 0; --i) {
        t.nodes.push_back({kind, -1, part_roots[i], acc});
        acc = static_cast<int>(t.nodes.size()) - 1;
    }
    return acc;
}

std::optional<int> build_cotree(Cotree& t, const Graph& g) {
    if (g.num_vertices() == 1) {
        t.nodes.push_back({Cotree::Kind::leaf, g.vertices()[0], -1, -1});
        return static_cast<int>(t.nodes.size()) - 1;
    }
    auto comps = connected_components(g);
    Cotree::Kind kind;
    std::vector<std::set<Vertex>> parts;
    if (comps.size() >= 2) {
        kind = Cotree::Kind::cup;
        parts = std::move(comps);
    } else {
        auto co_comps = connected_components(complement(g));
        if (co_comps.size() < 2) return std::nullopt; // not a cograph
        kind = Cotree::Kind::join;
        parts = std::move(co_comps);
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    std::vector<int> part_roots;
    for (const auto& p : parts) {
        auto sub = build_cotree(t, induced_subgraph(g, p));
        if (!sub) return std::nullopt;
        part_roots.push_back(*sub);
    }
    return fold_parts(t, kind, part_roots);
}

std::array<Vertex, 4> find_p4(const Graph& g) {
    auto vs = g.vertices();
    size_t n = vs.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                for (size_t d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    Vertex va = vs[a], vb = vs[b], vc = vs[c], vd = vs[d];
                    if (g.has_edge(va, vb) && g.has_edge(vb, vc) && g.has_edge(vc, vd) &&
                        !g.has_edge(va, vc) && !g.has_edge(va, vd) && !g.has_edge(vb, vd))
                        return {va, vb, vc, vd};
                }
    throw error("find_p4: graph is a cograph");
}

} // namespace

CotreeResult cotree(const Graph& g) {
    Cotree t;
    if (g.empty()) return t;
    auto root = build_cotree(t, g);
    if (!root) return find_p4(g);
    t.root = *root;
    return t;
}

bool is_cograph(const Graph& g) {
    return std::holds_alternative<Cotree>(cotree(g));
}

// --- split partitions --------------------------------------------------

namespace {

std::optional<SplitPartition> split_any(const Graph& g) {
    // Hammer--Simeone: sort degrees descending; K = top-m vertices where
    // m = max{ i : d_i >= i-1 }, then verify
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(vs[i - 1]) >= i - 1) m = i;
    SplitPartition p;
    for (int i = 0; i < n; ++i) (i < m ? p.clique : p.independent).insert(vs[i]);
    for (Vertex a : p.clique)
        for (Vertex b : p.clique)
            if (a < b && !g.has_edge(a, b)) return std::nullopt;
    for (Vertex a : p.independent)
        for (Vertex b : p.independent)
            if (a < b && g.has_edge(a, b)) return std::nullopt;
    return p;
}

} // namespace

std::optional<SplitPartition> split_partition(const Graph& g, SplitFlavor flavor) {
    auto p = split_any(g);
    if (!p) return std::nullopt;
    if (flavor == SplitFlavor::minimal) {
        // move K-vertices with no neighbour in I over to I; after one move
        // every remaining K-vertex is adjacent to it
        for (;;) {
            Vertex move = -1;
            for (Vertex v : p->clique) {
                bool has_i_neighbor = false;
                for (Vertex u : g.neighbors(v))
                    if (p->independent.count(u)) {
                        has_i_neighbor = true;
                        break;
                    }
                if (!has_i_neighbor) {
                    move = v;
                    break;
                }
            }
            if (move < 0) break;
            p->clique.erase(move);
            p->independent.insert(move);
        }
    } else if (flavor == SplitFlavor::maximal) {
        for (;;) {
            Vertex move = -1;
            for (Vertex v : p->independent) {
                bool adjacent_to_all = true;
                for (Vertex u : p->clique)
                    if (!g.has_edge(v, u)) {
                        adjacent_to_all = false;
                        break;
                    }
                if (adjacent_to_all) {
                    move = v;
                    break;
                }
            }
            if (move < 0) break;
            p->independent.erase(move);
            p->clique.insert(move);
        }
    }
    return p;
}

bool is_split(const Graph& g) {
    return split_any(g).has_value();
}

// --- interval models ----------------------------------------------------

bool validate_interval_model(const Graph& g, const IntervalModel& m) {
    auto vs = g.vertices();
    if (m.interval.size() != vs.size()) return false;
    for (Vertex v : vs)
        if (!m.interval.count(v)) return false;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            auto [la, ra] = m.interval.at(vs[i]);
            auto [lb, rb] = m.interval.at(vs[j]);
            bool intersect = std::max(la, lb) <= std::min(ra, rb);
            if (intersect != g.has_edge(vs[i], vs[j])) return false;
        }
    return true;
}

std::vector<std::set<Vertex>> clique_path(const IntervalModel& m) {
    // candidate cliques are the stabbed sets at interval left endpoints,
    // swept left to right; keep the maximal ones
    std::vector<std::pair<int, Vertex>> starts;
    for (const auto& [v, lr] : m.interval) starts.emplace_back(lr.first, v);
    std::sort(starts.begin(), starts.end());
    std::vector<std::set<Vertex>> cliques;
    for (auto [p, v] : starts) {
        std::set<Vertex> stabbed;
        for (const auto& [u, lr] : m.interval)
            if (lr.first <= p && p <= lr.second) stabbed.insert(u);
        bool dominated = false;
        for (auto& c : cliques)
            if (std::includes(c.begin(), c.end(), stabbed.begin(), stabbed.end())) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        // drop earlier candidates the new set dominates
        std::erase_if(cliques, [&](const std::set<Vertex>& c) {
            return std::includes(stabbed.begin(), stabbed.end(), c.begin(), c.end());
        });
        cliques.push_back(std::move(stabbed));
    }
    return cliques;
}

std::optional<IntervalModel> find_interval_model(const Graph& g, int size_guard) {
    int n = g.num_vertices();
    if (n > size_guard) throw error("find_interval_model: size guard exceeded");
    if (n == 0) return IntervalModel{};
    // search over left-endpoint orderings; each vertex gets l = position and
    // the least r >= l making required intersections work, then validate
    auto vs = g.vertices();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        IntervalModel m;
        std::map<Vertex, int> pos;
        for (int i = 0; i < n; ++i) pos[vs[perm[i]]] = i;
        for (Vertex v : vs) {
            int r = pos[v];
            for (Vertex w : g.neighbors(v)) r = std::max(r, pos[w]);
            m.interval[v] = {pos[v], r};
        }
        if (validate_interval_model(g, m)) return m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// --- freeness / chordality / perfectness --------------------------------

namespace {

bool embed(const Graph& g, const Graph& h, const std::vector<Vertex>& hv,
           std::vector<Vertex>& image, std::set<Vertex>& used, size_t i) {
    if (i == hv.size()) return true;
    for (Vertex cand : g.vertices()) {
        if (used.count(cand)) continue;
        bool ok = true;
        for (size_t q = 0; q < i && ok; ++q)
            ok = (h.has_edge(hv[i], hv[q]) == g.has_edge(cand, image[q]));
        if (!ok) continue;
        image[i] = cand;
        used.insert(cand);
        if (embed(g, h, hv, image, used, i + 1)) return true;
        used.erase(cand);
    }
    return false;
}

} // namespace

std::optional<std::map<Vertex, Vertex>> find_induced(const Graph& g, const Graph& h) {
    if (h.num_vertices() > 8) throw error("find_induced: pattern too large (> 8 vertices)");
    if (h.num_vertices() > g.num_vertices()) return std::nullopt;
    auto hv = h.vertices();
    // most-constrained-first: order pattern vertices by degree
    std::sort(hv.begin(), hv.end(),
              [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    std::vector<Vertex> image(hv.size(), -1);
    std::set<Vertex> used;
    if (!embed(g, h, hv, image, used, 0)) return std::nullopt;
    std::map<Vertex, Vertex> out;
    for (size_t i = 0; i < hv.size(); ++i) out[hv[i]] = image[i];
    return out;
}

bool is_H_free(const Graph& g, const Graph& h) {
    return !find_induced(g, h).has_value();
}

bool is_chordal(const Graph& g) {
    // maximum cardinality search + perfect elimination ordering check
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n == 0) return true;
    std::map<Vertex, int> weight, order;
    for (Vertex v : vs) weight[v] = 0;
    std::vector<Vertex> by_order;
    for (int step = n - 1; step >= 0; --step) {
        Vertex best = -1;
        for (Vertex v : vs)
            if (!order.count(v) && (best < 0 || weight[v] > weight[best])) best = v;
        order[best] = step;
        by_order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!order.count(w)) ++weight[w];
    }
    // by_order holds positions n-1 .. 0; check each vertex against its
    // earliest-later neighbour
    for (Vertex v : vs) {
        Vertex pivot = -1;
        for (Vertex w : g.neighbors(v))
            if (order[w] > order[v] && (pivot < 0 || order[w] < order[pivot])) pivot = w;
        if (pivot < 0) continue;
        for (Vertex w : g.neighbors(v))
            if (order[w] > order[v] && w != pivot && !g.has_edge(pivot, w)) return false;
    }
    return true;
}

bool is_perfect_small(const Graph& g, int size_guard) {
    if (g.num_vertices() > size_guard)
        throw error("is_perfect_small: size guard exceeded");
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::set<Vertex> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1ULL << i)) s.insert(vs[i]);
        Graph sub = induced_subgraph(g, s);
        if (params::chi(sub) != params::omega(sub)) return false;
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbors(u))
            if (w != v && g.has_edge(v, w)) return false;
    return true;
}

bool is_tree(const Graph& g) {
    return !g.empty() && is_connected(g) && g.num_edges() == g.num_vertices() - 1;
}

bool is_cobipartite(const Graph& g) {
    return params::is_bipartite(complement(g));
}

bool is_3p1_free(const Graph& g) {
    return is_triangle_free(complement(g)); // alpha <= 2
}

bool is_p1p3_free(const Graph& g) {
    return is_H_free(g, small_p1p3());
}

Graph small_p(int n) {
    return Graph::path(n);
}

Graph small_paw() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

Graph small_3p1() {
    return Graph::edgeless(3);
}

Graph small_2p2() {
    return Graph::from_edges(4, {{0, 1}, {2, 3}});
}

Graph small_p1p3() {
    return Graph::from_edges(4, {{1, 2}, {2, 3}});
}

Graph small_c3p1() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}});
}

// --- dichotomy classifier ------------------------------------------------

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::polynomial: return "polynomial";
    case Verdict::hard: return "hard";
    default: return "open";
    }
}

Dichotomy classify(const Graph& h, Param pi, OpKind kind) {
    if (h.num_vertices() > 8) throw error("classify: H too large (> 8 vertices)");
    auto sub_of = [&](const Graph& host) { return find_induced(host, h).has_value(); };
    bool in_p4 = sub_of(small_p(4));
    bool in_paw = sub_of(small_paw());
    bool in_p1p3 = sub_of(small_p1p3());

    if (pi == Param::alpha) {
        const char* cs = kind == OpKind::vdelete ? "case (i)" : "case (ii)";
        if (in_p4) return {Verdict::polynomial, std::string(cs) + ": H induced in P4"};
        return {Verdict::hard, std::string(cs) + ": H not induced in P4"};
    }
    if (pi == Param::omega) {
        if (kind == OpKind::vdelete) {
            if (in_p4) return {Verdict::polynomial, "case (iii): H induced in P4"};
            return {Verdict::hard, "case (iii): H not induced in P4"};
        }
        if (canonical::are_isomorphic(h, small_c3p1()))
            return {Verdict::open, "case (iv): H = C3+P1, excluded case"};
        if (in_p4) return {Verdict::polynomial, "case (iv): H induced in P4"};
        if (in_paw) return {Verdict::polynomial, "case (iv): H induced in the paw"};
        return {Verdict::hard, "case (iv): H induced in neither P4 nor the paw"};
    }
    // pi == chi
    if (kind == OpKind::vdelete) {
        if (in_p1p3) return {Verdict::polynomial, "case (v): H induced in P1+P3"};
        if (in_p4) return {Verdict::polynomial, "case (v): H induced in P4"};
        return {Verdict::hard, "case (v): H induced in neither P1+P3 nor P4"};
    }
    if (in_p4) return {Verdict::polynomial, "case (vi): H induced in P4"};
    return {Verdict::hard, "case (vi): H not induced in P4"};
}

} // namespace blocker::recognize
