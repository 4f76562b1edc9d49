#include "blocker/reductions.hpp"

#include "blocker/params.hpp"
#include "blocker/recognize.hpp"

#include <algorithm>
#include <functional>

namespace blocker::reductions {

namespace {

void check_rbds(const RbdsInstance& inst) {
    if (inst.red.empty() || inst.blue.empty())
        throw error("rbds: B and R must be non-empty");
    if (inst.k < 0 || inst.k > static_cast<int>(inst.blue.size()))
        throw error("rbds: need 0 <= k <= |B|");
    for (Vertex b : inst.blue)
        if (inst.red.count(b)) throw error("rbds: B and R must be disjoint");
    std::set<Vertex> dominated, covering;
    for (auto [b, r] : inst.edges) {
        dominated.insert(r);
        covering.insert(b);
    }
    if (dominated.size() != inst.red.size())
        throw error("rbds: every red vertex needs a blue neighbour (normalization)");
    // the forward construction contracts each unused blue vertex onto a red
    // neighbour, so blue vertices must not be isolated either
    if (covering.size() != inst.blue.size())
        throw error("rbds: every blue vertex needs a red neighbour (normalization)");
}

} // namespace

BlockerInstance reduce_rbds_to_split_alpha(const RbdsInstance& inst) {
    check_rbds(inst);
    Graph g = inst.graph();
    // complete R to a clique: (R, B) becomes a minimal split partition
    for (Vertex a : inst.red)
        for (Vertex b : inst.red)
            if (a < b) g.add_edge(a, b);
    int budget = static_cast<int>(inst.blue.size()) - inst.k;
    return {std::move(g), Param::alpha, OpKind::contract, budget, budget};
}

BlockerInstance reduce_rbds_to_split_chi(const RbdsInstance& inst) {
    check_rbds(inst);
    Graph g;
    for (Vertex b : inst.blue) g.add_vertex(b);
    for (Vertex r : inst.red) g.add_vertex(r);
    // bipartite complement across (B, R)
    std::set<std::pair<Vertex, Vertex>> orig(inst.edges.begin(), inst.edges.end());
    for (Vertex b : inst.blue)
        for (Vertex r : inst.red)
            if (!orig.count({b, r})) g.add_edge(b, r);
    for (Vertex a : inst.blue)
        for (Vertex b : inst.blue)
            if (a < b) g.add_edge(a, b);
    Vertex x = g.max_vertex_id() + 1; // universal vertex
    for (Vertex v : g.vertices())
        if (v != x) g.add_edge(x, v);
    int budget = static_cast<int>(inst.blue.size()) - inst.k;
    return {std::move(g), Param::chi, OpKind::contract, budget, budget};
}

std::pair<Vertex, Vertex> SatGadgetLayout::literal_edge(int var_index, bool positive) const {
    int b = var_base(var_index);
    return positive ? std::make_pair(b, b + 2) : std::make_pair(b + 1, b + 2);
}

std::pair<Vertex, Vertex> SatGadgetLayout::clause_edge(int clause_index, int position) const {
    int c = clause_base(clause_index);
    return {c + position, c + (position + 1) % 3};
}

SatGadgetLayout sat_gadget_layout(const CnfFormula& f) {
    return SatGadgetLayout{f.num_vars};
}

BlockerInstance reduce_1in3sat_to_omega(const CnfFormula& f) {
    if (f.num_vars <= 0) throw error("1in3sat: formula has no variables");
    for (const auto& cl : f.clauses) {
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw error("1in3sat: malformed clause");
        // clauses are 3-element literal sets; a repeated literal would merge
        // matching links and create stray triangles in the gadget
        if (cl[0] == cl[1] || cl[1] == cl[2] || cl[0] == cl[2])
            throw error("1in3sat: clause literals must be distinct");
    }
    SatGadgetLayout lay = sat_gadget_layout(f);
    int n = f.num_vars, m = static_cast<int>(f.clauses.size());
    Graph g = Graph::edgeless(5 * n + 3 * m);
    for (int i = 0; i < n; ++i) {
        int b = lay.var_base(i);
        // triangle b, b+1, b+2 and square b, b+1, b+3, b+4 sharing edge (b, b+1)
        g.add_edge(b, b + 1);
        g.add_edge(b + 1, b + 2);
        g.add_edge(b, b + 2);
        g.add_edge(b, b + 3);
        g.add_edge(b + 3, b + 4);
        g.add_edge(b + 4, b + 1);
    }
    for (int j = 0; j < m; ++j) {
        for (int t = 0; t < 3; ++t) {
            auto [e1, e2] = lay.clause_edge(j, t);
            g.add_edge(e1, e2);
            int lit = f.clauses[j][t];
            auto [f1, f2] = lay.literal_edge(std::abs(lit) - 1, lit > 0);
            g.add_edge(e1, f1);
            g.add_edge(e2, f2);
        }
    }
    return {std::move(g), Param::omega, OpKind::contract, 1, n + m};
}

Witness sat_witness(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw error("sat_witness: assignment size mismatch");
    SatGadgetLayout lay = sat_gadget_layout(f);
    Witness w;
    for (int i = 0; i < f.num_vars; ++i) {
        auto [a, b] = lay.literal_edge(i, assignment[i]);
        w.push_back(Operation::contract(a, b));
    }
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        int true_pos = -1;
        for (int t = 0; t < 3; ++t) {
            int lit = f.clauses[j][t];
            bool val = lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
            if (val) {
                if (true_pos >= 0) throw error("sat_witness: clause has two true literals");
                true_pos = t;
            }
        }
        if (true_pos < 0) throw error("sat_witness: clause has no true literal");
        auto [a, b] = lay.clause_edge(static_cast<int>(j), true_pos);
        w.push_back(Operation::contract(a, b));
    }
    return w;
}

std::optional<std::vector<bool>> one_in_three_assignment(const CnfFormula& f) {
    for (std::uint64_t mask = 0; mask < (1ULL << f.num_vars); ++mask) {
        std::vector<bool> assignment(f.num_vars);
        for (int i = 0; i < f.num_vars; ++i) assignment[i] = (mask >> i) & 1;
        bool ok = true;
        for (const auto& cl : f.clauses) {
            int true_count = 0;
            for (int lit : cl) {
                bool val = lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
                true_count += val ? 1 : 0;
            }
            if (true_count != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return assignment;
    }
    return std::nullopt;
}

BlockerInstance lift_to_c4free_perfect(const Graph& g, int k) {
    Graph out;
    for (Vertex v : g.vertices()) out.add_vertex(v);
    Vertex next = g.max_vertex_id() + 1;
    for (auto [u, v] : g.edges()) {
        Vertex mid = next++;
        Vertex twin1 = next++;
        Vertex twin2 = next++;
        out.add_edge(u, mid);
        out.add_edge(mid, v);
        // pendant twins on the half e1 = (u, mid)
        out.add_edge(twin1, u);
        out.add_edge(twin1, mid);
        out.add_edge(twin2, u);
        out.add_edge(twin2, mid);
    }
    return {std::move(out), Param::omega, OpKind::contract, 1, k + g.num_edges()};
}

BlockerInstance reduce_vc_to_chordal(const Graph& g, int k) {
    if (g.num_edges() == 0) throw error("vc reduction: input graph has no edges");
    Graph out;
    int nv = g.num_vertices();
    for (Vertex v : g.vertices()) out.add_vertex(v);
    for (Vertex a : g.vertices())
        for (Vertex b : g.vertices())
            if (a < b) out.add_edge(a, b); // V is a clique in G'
    Vertex next = g.max_vertex_id() + 1;
    for (auto [u, v] : g.edges()) {
        std::vector<Vertex> ke;
        for (int i = 0; i < nv; ++i) ke.push_back(next++);
        for (size_t i = 0; i < ke.size(); ++i)
            for (size_t j = i + 1; j < ke.size(); ++j) out.add_edge(ke[i], ke[j]);
        for (Vertex w : ke) {
            out.add_edge(w, u);
            out.add_edge(w, v);
        }
    }
    Vertex y = next++;
    for (Vertex v : out.vertices())
        if (v != y) out.add_edge(y, v);
    return {std::move(out), Param::omega, OpKind::contract, 1, k};
}

BlockerInstance reduce_cobipartite_alpha_to_bipartite(const Graph& g, int k) {
    if (g.empty()) throw error("cobipartite reduction: empty input");
    if (!recognize::is_cobipartite(g))
        throw error("cobipartite reduction: input is not cobipartite");
    // normalize with three dominating vertices, then subdivide every edge
    Graph aug = g;
    Vertex next = g.max_vertex_id() + 1;
    std::vector<Vertex> dom;
    for (int i = 0; i < 3; ++i) dom.push_back(next++);
    for (Vertex d : dom)
        for (Vertex v : aug.vertices())
            if (v != d) aug.add_edge(d, v);
    int m = aug.num_edges();
    Graph out = aug;
    for (auto [u, v] : aug.edges()) out = subdivide_edge(out, u, v, 1);
    int d = params::alpha(out, 64) - 1;
    return {std::move(out), Param::alpha, OpKind::contract, d, k + m};
}

BlockerInstance reduce_biclique_to_cobipartite_chi(const Graph& g) {
    int n = g.num_vertices();
    if (n < 6) throw error("biclique reduction: need at least 6 vertices");
    if (!is_connected(g) || !params::is_bipartite(g))
        throw error("biclique reduction: input must be connected and bipartite");
    Graph co = complement(g);
    int d = params::chi(co) - 3;
    return {std::move(co), Param::chi, OpKind::contract, d, n - 6};
}

bool has_biclique_3_partition(const Graph& g) {
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n < 6) return false; // three nontrivial bicliques need 6 vertices
    auto part_is_nontrivial_biclique = [&](const std::set<Vertex>& s) {
        Graph sub = induced_subgraph(g, s);
        if (sub.num_edges() == 0 || !is_connected(sub)) return false;
        auto sides = params::bipartition(sub);
        if (!sides) return false;
        return sub.num_edges() ==
               static_cast<int>(sides->first.size() * sides->second.size());
    };
    std::vector<int> assign(n, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) {
            std::array<std::set<Vertex>, 3> parts;
            for (int q = 0; q < n; ++q) parts[assign[q]].insert(vs[q]);
            for (const auto& p : parts)
                if (!part_is_nontrivial_biclique(p)) return false;
            return true;
        }
        // first vertex pinned to part 0, second distinct part to 1 (symmetry)
        int limit = i == 0 ? 1 : 3;
        for (int c = 0; c < limit; ++c) {
            assign[i] = c;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    for (auto [u, v] : g.edges()) {
        // shortest u-v path avoiding the edge itself
        std::map<Vertex, int> dist;
        dist[u] = 0;
        std::vector<Vertex> queue{u};
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (Vertex y : g.neighbors(x)) {
                if (x == u && y == v) continue;
                if (x == v && y == u) continue;
                if (!dist.count(y)) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist.count(v)) {
            int cycle = dist[v] + 1;
            if (!best || cycle < *best) best = cycle;
        }
    }
    return best;
}

Graph girth_lift(const Graph& g, int p) {
    Graph cur = g;
    while (true) {
        auto gi = girth(cur);
        if (!gi || *gi > p) return cur;
        for (auto [u, v] : cur.edges()) cur = subdivide_edge(cur, u, v, 2);
    }
}

BlockerInstance clique_proof_lift(const Graph& g, int l) {
    if (l < 1) throw error("clique proof lift: need l >= 1");
    auto [two_g, map1] = disjoint_union(g, g);
    auto [out, map2] = disjoint_union(two_g, Graph::complete(l + 1));
    return {std::move(out), Param::omega, OpKind::contract, 1, 1};
}

bool has_forced_vertex(const Graph& g, int size_guard) {
    if (g.num_vertices() > size_guard)
        throw error("has_forced_vertex: size guard exceeded");
    if (g.empty()) return false;
    int a = params::alpha(g, size_guard);
    for (Vertex v : g.vertices())
        if (params::alpha(delete_vertex(g, v), size_guard) < a) return true;
    return false;
}

} // namespace blocker::reductions
