#include "blocker/solvers.hpp"

#include "blocker/canonical.hpp"
#include "blocker/params.hpp"

#include <algorithm>
#include <functional>

namespace blocker::solvers {

using recognize::Cotree;

// --- trees ----------------------------------------------------------------

SolverAnswer tree_contraction_blocker_alpha(const Graph& t, int d, int k) {
    if (!recognize::is_tree(t)) throw error("tree solver: input is not a tree");
    if (d < 0 || k < 0) throw error("tree solver: d, k must be >= 0");
    int n = t.num_vertices();
    auto matching = params::maximum_matching(t);
    int mu = matching.size();
    int a = n - mu; // alpha(T) by Koenig on trees

    SolverAnswer ans;
    if (d == 0) {
        ans.decision = true;
        ans.min_k = 0;
        ans.witness = Witness{};
        return ans;
    }
    if (d >= a) return ans; // alpha of a non-empty tree cannot reach 0

    int sigma = n - 2 * mu; // unsaturated vertices
    int required = d <= sigma ? d : 2 * (d + mu) - n;
    ans.min_k = required;
    ans.decision = k >= required;
    if (!ans.decision) return ans;

    // witness: contract edges with an unsaturated endpoint first, then
    // matched-edge pairs
    Witness w;
    Graph cur = t;
    auto saturated = matching.saturated();
    std::vector<Vertex> unsat;
    for (Vertex v : t.vertices())
        if (!saturated.count(v)) unsat.push_back(v);
    int singles = std::min(d, sigma);
    for (int i = 0; i < singles; ++i) {
        Vertex u = unsat[i];
        Vertex onto = *cur.neighbors(u).begin(); // neighbours of unsaturated are saturated
        w.push_back(Operation::contract(u, onto));
        cur = contract_edge(cur, u, onto);
    }
    auto remaining_matching = matching.edges;
    for (int i = 0; i < d - singles; ++i) {
        auto [x, y] = remaining_matching.back();
        remaining_matching.pop_back();
        w.push_back(Operation::contract(x, y));
        cur = contract_edge(cur, x, y);
        // y is now unsaturated; contract it onto a neighbour saturated by the
        // rest of the matching
        std::set<Vertex> sat;
        for (auto [p, q] : remaining_matching) {
            sat.insert(p);
            sat.insert(q);
        }
        Vertex onto = -1;
        for (Vertex z : cur.neighbors(y))
            if (sat.count(z)) {
                onto = z;
                break;
            }
        if (onto < 0) throw error("tree solver: internal witness construction failure");
        w.push_back(Operation::contract(y, onto));
        cur = contract_edge(cur, y, onto);
    }
    ans.witness = std::move(w);
    return ans;
}

// --- cographs ---------------------------------------------------------------

int CographTable::root_drop(int i, int j) const {
    if (i < 0 || j < 0 || i + j > budget_sum)
        throw error("cograph table: budgets out of range");
    if (tree.empty()) return 0;
    return drop[tree.root][i][j];
}

CographTable cograph_blocker(const Graph& g, Param pi, int k, int l) {
    if (k < 0 || l < 0) throw error("cograph solver: budgets must be >= 0");
    auto ct = recognize::cotree(g);
    if (!std::holds_alternative<Cotree>(ct))
        throw error("cograph solver: input is not a cograph");

    CographTable out;
    out.tree = std::get<Cotree>(std::move(ct));
    out.pi = pi;
    out.budget_sum = k + l;
    if (out.tree.empty()) return out;

    // omega equals chi on every graph reachable from a cograph
    bool chi_mode = (pi != Param::alpha);
    const int K = out.budget_sum;
    const auto& nodes = out.tree.nodes;
    size_t nn = nodes.size();
    out.node_pi.assign(nn, 0);
    out.node_size.assign(nn, 0);
    out.drop.assign(nn, std::vector<std::vector<int>>(K + 1, std::vector<int>(K + 1, 0)));

    // nodes are stored children-before-parents
    for (size_t x = 0; x < nn; ++x) {
        const auto& nd = nodes[x];
        if (nd.kind == Cotree::Kind::leaf) {
            out.node_size[x] = 1;
            out.node_pi[x] = 1;
            for (int i = 0; i <= K; ++i)
                for (int j = 0; i + j <= K; ++j) out.drop[x][i][j] = j >= 1 ? 1 : 0;
            continue;
        }
        int y = nd.left, z = nd.right;
        int ny = out.node_size[y], nz = out.node_size[z];
        int py = out.node_pi[y], pz = out.node_pi[z];
        out.node_size[x] = ny + nz;
        bool sum_node = chi_mode ? (nd.kind == Cotree::Kind::join)
                                 : (nd.kind == Cotree::Kind::cup);
        out.node_pi[x] = sum_node ? py + pz : std::max(py, pz);
        int px = out.node_pi[x];
        auto dy = [&](int a, int b) { return out.drop[y][a][b]; };
        auto dz = [&](int a, int b) { return out.drop[z][a][b]; };
        bool join_node = nd.kind == Cotree::Kind::join;

        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j) {
                // a join node is connected: spanning-tree contractions plus
                // deletions can empty it outright
                if (join_node && i + j >= out.node_size[x] && j >= 1) {
                    out.drop[x][i][j] = px;
                    continue;
                }
                if (!join_node && !sum_node) {
                    // chi at a union node: components are handled
                    // independently, chi is the max over them
                    int best = px;
                    for (int a = 0; a <= i; ++a)
                        for (int b = 0; b <= j; ++b)
                            best = std::min(best, std::max(py - dy(a, b),
                                                           pz - dz(i - a, j - b)));
                    out.drop[x][i][j] = px - best;
                    continue;
                }
                if (!join_node && sum_node) {
                    // alpha at a union node: drops add over the components
                    int best = 0;
                    for (int a = 0; a <= i; ++a)
                        for (int b = 0; b <= j; ++b)
                            best = std::max(best, dy(a, b) + dz(i - a, j - b));
                    out.drop[x][i][j] = best;
                    continue;
                }
                if (join_node && !sum_node) {
                    // alpha at a join node: split the budgets, or contract a
                    // matching of cross edges (each one deletes a vertex on
                    // both sides and leaves a universal vertex)
                    int best = px;
                    for (int a = 0; a <= i; ++a)
                        for (int b = 0; b <= j; ++b)
                            best = std::min(best, std::max(py - dy(a, b),
                                                           pz - dz(i - a, j - b)));
                    for (int ay = 0; ay < i; ++ay)
                        for (int az = 0; ay + az < i; ++az) {
                            int c = i - ay - az; // c >= 1 cross contractions
                            for (int b = 0; b <= j; ++b) {
                                int vy = py - dy(ay, b + c);
                                int vz = pz - dz(az, (j - b) + c);
                                best = std::min(best, std::max({1, vy, vz}));
                            }
                        }
                    out.drop[x][i][j] = px - best;
                    continue;
                }
                // chi at a join node: budgets split and drops add; cross
                // contractions merge q kept and r deleted "bags" spanning
                // both sides, absorbing m_y / m_z vertices, each kept bag
                // surviving as one universal vertex costing a colour
                int best = px;
                for (int a = 0; a <= i; ++a)
                    for (int b = 0; b <= j; ++b)
                        best = std::min(best, (py - dy(a, b)) + (pz - dz(i - a, j - b)));
                for (int q = 0; q <= i; ++q)
                    for (int r = 0; q + r <= i && r <= j; ++r) {
                        if (q + r < 1) continue;
                        for (int my = q + r; my <= i; ++my)
                            for (int mz = q + r; my + mz - q - r <= i && mz <= i; ++mz)
                                for (int ay = 0; ay + my + mz - q - r <= i; ++ay)
                                    for (int az = 0;
                                         ay + az + my + mz - q - r <= i; ++az)
                                        for (int by = 0; by + r <= j; ++by) {
                                            int bz = j - r - by;
                                            int vy = py - dy(ay, by + my);
                                            int vz = pz - dz(az, bz + mz);
                                            best = std::min(best, vy + vz + q);
                                        }
                    }
                out.drop[x][i][j] = px - best;
            }
    }
    return out;
}

SolverAnswer cograph_blocker_decide(const Graph& g, Param pi, int d, int k, int l) {
    CographTable t = cograph_blocker(g, pi, k, l);
    SolverAnswer ans;
    ans.decision = t.root_drop(k, l) >= d;
    return ans;
}

// --- split graphs -----------------------------------------------------------

namespace {

// plain enumeration of contraction sequences of length <= k, accepting when
// `done` holds; isomorphic intermediate graphs are skipped within the search
bool enumerate_contractions(const Graph& g, int k, const std::function<bool(const Graph&)>& done,
                            Witness& acc) {
    if (done(g)) return true;
    if (k == 0) return false;
    for (auto [u, v] : g.edges()) {
        acc.push_back(Operation::contract(u, v));
        if (enumerate_contractions(contract_edge(g, u, v), k - 1, done, acc)) return true;
        acc.pop_back();
    }
    return false;
}

// contract a connected vertex set down to a single vertex, deepest-first
// along a BFS tree; appends to w and returns the evolved graph
Graph collapse_component(const Graph& g, const std::set<Vertex>& comp, Witness& w) {
    Vertex root = *comp.begin();
    std::map<Vertex, Vertex> parent;
    std::vector<Vertex> order{root};
    parent[root] = -1;
    for (size_t head = 0; head < order.size(); ++head)
        for (Vertex nb : g.neighbors(order[head]))
            if (comp.count(nb) && !parent.count(nb)) {
                parent[nb] = order[head];
                order.push_back(nb);
            }
    Graph cur = g;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) {
            w.push_back(Operation::contract(*it, parent[*it]));
            cur = contract_edge(cur, *it, parent[*it]);
        }
    return cur;
}

} // namespace

SolverAnswer split_contraction_blocker(const Graph& g, Param pi, int d, int k) {
    if (d < 0 || k < 0) throw error("split solver: d, k must be >= 0");
    if (!recognize::is_split(g)) throw error("split solver: input is not split");

    SolverAnswer ans;
    if (d == 0) {
        ans.decision = true;
        ans.witness = Witness{};
        return ans;
    }

    if (pi == Param::alpha) {
        auto part = recognize::split_partition(g, recognize::SplitFlavor::minimal);
        int alpha0 = static_cast<int>(part->independent.size());
        std::vector<Vertex> iprime; // I-vertices with a neighbour in K
        for (Vertex v : part->independent)
            if (!g.neighbors(v).empty()) iprime.push_back(v);
        if (static_cast<int>(iprime.size()) <= d) return ans; // component D cannot vanish
        if (k >= d + 1) {
            ans.decision = true;
            Witness w;
            Graph cur = g;
            int j = std::min<int>(static_cast<int>(iprime.size()), d + 1);
            for (int i = 0; i < j; ++i) {
                Vertex v = iprime[i];
                Vertex onto = -1;
                for (Vertex u : cur.neighbors(v))
                    if (part->clique.count(u)) {
                        onto = u;
                        break;
                    }
                w.push_back(Operation::contract(v, onto));
                cur = contract_edge(cur, v, onto);
            }
            if (params::alpha(cur) > alpha0 - d)
                throw error("split solver: internal witness construction failure");
            ans.witness = std::move(w);
            return ans;
        }
        // k <= d: exhaustive over all sequences of at most k contractions
        Witness acc;
        ans.decision = enumerate_contractions(
            g, k, [&](const Graph& h) { return params::alpha(h) <= alpha0 - d; }, acc);
        if (ans.decision) ans.witness = std::move(acc);
        return ans;
    }

    // pi in {chi, omega}: identical on split graphs and their contractions
    auto part = recognize::split_partition(g, recognize::SplitFlavor::maximal);
    int chi0 = static_cast<int>(part->clique.size()); // omega = chi = |K| (maximal)

    if (chi0 <= d) return ans; // cannot reach chi <= 0 by contracting

    if (chi0 == d + 1) {
        // need every component to shrink to a single vertex; a split graph
        // has at most one component with edges
        std::set<Vertex> edged;
        for (const auto& comp : connected_components(g))
            if (induced_subgraph(g, comp).num_edges() > 0) edged = comp;
        if (edged.empty()) {
            ans.decision = true;
            ans.min_k = 0;
            ans.witness = Witness{};
            return ans;
        }
        int need = static_cast<int>(edged.size()) - 1;
        ans.min_k = need;
        ans.decision = k >= need;
        if (ans.decision) {
            Witness w;
            collapse_component(g, edged, w);
            ans.witness = std::move(w);
        }
        return ans;
    }

    // chi0 >= d + 2
    if (k < d) return ans;
    if (k == d) {
        Witness acc;
        ans.decision = enumerate_contractions(
            g, k, [&](const Graph& h) { return params::chi(h) <= chi0 - d; }, acc);
        if (ans.decision) ans.witness = std::move(acc);
        return ans;
    }
    // k > d: contract d+1 clique edges (or collapse K entirely when smaller)
    ans.decision = true;
    Witness w;
    std::vector<Vertex> kv(part->clique.begin(), part->clique.end());
    int j = std::min(d + 1, static_cast<int>(kv.size()) - 1);
    Graph cur = g;
    for (int i = 0; i < j; ++i) {
        w.push_back(Operation::contract(kv[i + 1], kv[0]));
        cur = contract_edge(cur, kv[i + 1], kv[0]);
    }
    if (params::chi(cur, 30) > chi0 - d)
        throw error("split solver: internal witness construction failure");
    ans.witness = std::move(w);
    return ans;
}

// --- interval graphs ---------------------------------------------------------

namespace {

int model_omega(const IntervalModel& m) {
    int best = 0;
    for (const auto& c : recognize::clique_path(m))
        best = std::max(best, static_cast<int>(c.size()));
    return best;
}

// leftmost maximal clique of size > target, or nullopt
std::optional<std::set<Vertex>> leftmost_oversized(const IntervalModel& m, int target) {
    for (const auto& c : recognize::clique_path(m))
        if (static_cast<int>(c.size()) > target) return c;
    return std::nullopt;
}

// vertices of `clique` ordered by right endpoint descending (ties by id)
std::vector<Vertex> by_right_endpoint(const IntervalModel& m, const std::set<Vertex>& clique) {
    std::vector<Vertex> vs(clique.begin(), clique.end());
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
        if (m.interval.at(a).second != m.interval.at(b).second)
            return m.interval.at(a).second > m.interval.at(b).second;
        return a > b;
    });
    return vs;
}

} // namespace

SolverAnswer interval_contraction_blocker(const IntervalModel& m, Param pi, int d) {
    if (pi == Param::alpha) throw error("interval solver: pi must be omega or chi");
    if (d < 0) throw error("interval solver: d must be >= 0");
    SolverAnswer ans;
    int w0 = model_omega(m);
    if (d == 0) {
        ans.decision = true;
        ans.min_k = 0;
        ans.witness = Witness{};
        return ans;
    }
    if (w0 - d <= 0) return ans; // would need the empty graph
    int target = w0 - d;
    IntervalModel cur = m;
    Witness w;
    int guard = static_cast<int>(m.interval.size()) * (d + 1) + 8;
    while (auto clique = leftmost_oversized(cur, target)) {
        if (--guard < 0) throw error("interval solver: did not converge");
        auto vs = by_right_endpoint(cur, *clique);
        Vertex y = vs[0], x = vs[1]; // the two rightmost right endpoints
        w.push_back(Operation::contract(x, y));
        auto [lx, rx] = cur.interval.at(x);
        auto& [ly, ry] = cur.interval.at(y);
        ly = std::min(ly, lx); // contraction = interval union
        ry = std::max(ry, rx);
        cur.interval.erase(x);
    }
    ans.decision = true;
    ans.min_k = static_cast<int>(w.size());
    ans.witness = std::move(w);
    return ans;
}

SolverAnswer interval_deletion_blocker(const IntervalModel& m, Param pi, int d) {
    if (pi == Param::alpha) throw error("interval solver: pi must be omega or chi");
    if (d < 0) throw error("interval solver: d must be >= 0");
    SolverAnswer ans;
    int w0 = model_omega(m);
    if (d == 0) {
        ans.decision = true;
        ans.min_k = 0;
        ans.witness = Witness{};
        return ans;
    }
    if (w0 - d < 0) return ans; // omega cannot go below 0
    int target = w0 - d;
    IntervalModel cur = m;
    Witness w;
    while (auto clique = leftmost_oversized(cur, target)) {
        Vertex victim = by_right_endpoint(cur, *clique)[0];
        w.push_back(Operation::vdelete(victim));
        cur.interval.erase(victim);
    }
    ans.decision = true;
    ans.min_k = static_cast<int>(w.size());
    ans.witness = std::move(w);
    return ans;
}

// --- bipartite / cobipartite deletion ----------------------------------------

SolverAnswer bipartite_deletion_blocker(const Graph& g, Param pi, int d, int k) {
    if (pi == Param::alpha) throw error("bipartite deletion solver: pi must be omega or chi");
    if (!params::is_bipartite(g)) throw error("bipartite deletion solver: input not bipartite");
    SolverAnswer ans;
    int n = g.num_vertices();
    int w0 = g.num_edges() > 0 ? 2 : (n > 0 ? 1 : 0);
    if (d == 0) {
        ans.decision = true;
        ans.min_k = 0;
        ans.witness = Witness{};
        return ans;
    }
    if (d > w0) return ans; // even the empty graph has omega = 0
    Witness w;
    if (w0 == 2 && d == 1) {
        // reach omega <= 1: delete a minimum vertex cover
        auto cover = params::min_vertex_cover_bipartite(g);
        ans.min_k = static_cast<int>(cover.size());
        for (Vertex v : cover) w.push_back(Operation::vdelete(v));
    } else {
        // target omega <= 0: delete everything
        ans.min_k = n;
        for (Vertex v : g.vertices()) w.push_back(Operation::vdelete(v));
    }
    ans.decision = k >= *ans.min_k;
    if (ans.decision) ans.witness = std::move(w);
    return ans;
}

SolverAnswer cobipartite_deletion_blocker_alpha(const Graph& g, int d, int k) {
    Graph co = complement(g);
    if (!params::is_bipartite(co))
        throw error("cobipartite deletion solver: input not cobipartite");
    // deleting v commutes with complementation and alpha(G) = omega(co G)
    return bipartite_deletion_blocker(co, Param::omega, d, k);
}

// --- 3P1-free ------------------------------------------------------------------

SolverAnswer contraction_blocker_chi_3p1free(const Graph& g, int d, int k) {
    if (d < 0 || k < 0) throw error("3P1-free solver: d, k must be >= 0");
    int chi0 = params::chi_3p1free(g).chi; // also checks the class
    SolverAnswer ans;
    if (d == 0) {
        ans.decision = true;
        ans.witness = Witness{};
        return ans;
    }
    int target = chi0 - d;
    if (target <= 0) return ans;

    // guess up to 3 contractions per unit of drop, descending d levels;
    // isomorphic (graph, budgets) states are explored once
    canonical::IsoMap<char> failed;
    Witness acc;
    auto chi_of = [](const Graph& h) { return params::chi_3p1free(h).chi; };

    std::function<bool(const Graph&, int, int, int)> explore =
        [&](const Graph& h, int levels, int ops_left, int slots) -> bool {
        if (slots == 0 || ops_left == 0 || levels == 0) return false;
        // at most 3 contractions fit in each remaining level, so larger
        // budgets behave identically and may share a memo entry
        int ops_eff = std::min(ops_left, 3 * levels);
        std::uint64_t salt =
            (static_cast<std::uint64_t>(levels) * 200 + ops_eff) * 4 + slots;
        DenseGraph dh = densify(h);
        if (failed.find(dh, salt)) return false;
        for (auto [u, v] : h.edges()) {
            Graph child = contract_edge(h, u, v);
            acc.push_back(Operation::contract(u, v));
            if (chi_of(child) <= target) return true;
            if (explore(child, levels - 1, ops_left - 1, 3)) return true;
            if (explore(child, levels, ops_left - 1, slots - 1)) return true;
            acc.pop_back();
        }
        failed.insert(dh, salt, 1);
        return false;
    };

    if (chi_of(g) <= target) {
        ans.decision = true;
        ans.witness = Witness{};
        return ans;
    }
    ans.decision = explore(g, d, k, 3);
    if (ans.decision) ans.witness = std::move(acc);
    return ans;
}

SolverAnswer deletion_blocker_chi_3p1free(const Graph& g, int d, int k) {
    if (d < 0 || k < 0) throw error("3P1-free solver: d, k must be >= 0");
    auto [chi0, singles] = params::chi_3p1free(g);
    SolverAnswer ans;
    if (d == 0) {
        ans.decision = true;
        ans.min_k = 0;
        ans.witness = Witness{};
        return ans;
    }
    if (d > chi0) return ans;
    // n + ell - 2d vertices is the size cap after the drop, so at least
    // 2d - ell deletions are needed; each deletion drops chi by at most one,
    // so at least d as well. Both bounds are attained.
    int need = std::max(d, 2 * d - singles);
    ans.min_k = need;
    ans.decision = k >= need;
    if (!ans.decision) return ans;

    // delete singleton-class vertices (unsaturated in the complement
    // matching) first, then whole pairs
    auto matching = params::maximum_matching(complement(g));
    auto saturated = matching.saturated();
    Witness w;
    int taken = 0;
    for (Vertex v : g.vertices()) {
        if (taken == std::min(d, singles)) break;
        if (!saturated.count(v)) {
            w.push_back(Operation::vdelete(v));
            ++taken;
        }
    }
    for (int i = 0; i < d - std::min(d, singles); ++i) {
        auto [x, y] = matching.edges[i];
        w.push_back(Operation::vdelete(x));
        w.push_back(Operation::vdelete(y));
    }
    ans.witness = std::move(w);
    return ans;
}

// --- (P1+P3)-free -----------------------------------------------------------------

std::pair<std::set<Vertex>, std::set<Vertex>> decompose_p1p3free(const Graph& g) {
    if (!recognize::is_p1p3_free(g))
        throw error("p1p3 solver: input is not (P1+P3)-free");
    Graph co = complement(g);
    std::set<Vertex> a, b;
    for (const auto& comp : connected_components(co)) {
        if (recognize::is_triangle_free(induced_subgraph(co, comp)))
            a.insert(comp.begin(), comp.end());
        else
            b.insert(comp.begin(), comp.end());
    }
    return {a, b};
}

SolverAnswer deletion_blocker_chi_p1p3free(const Graph& g, int d, int k) {
    if (d < 0 || k < 0) throw error("p1p3 solver: d, k must be >= 0");
    auto [a, b] = decompose_p1p3free(g);
    Graph ga = induced_subgraph(g, a);
    Graph gb = induced_subgraph(g, b);
    auto [chi_a, singles_a] = params::chi_3p1free(ga);
    CographTable tb = cograph_blocker(gb, Param::chi, 0, k);

    // max chi drop on the 3P1-free part with k1 deletions
    auto drop_a = [&](int k1) {
        return std::min({chi_a, k1, (k1 + singles_a) / 2});
    };
    SolverAnswer ans;
    int best = 0;
    for (int k1 = 0; k1 <= k; ++k1)
        best = std::max(best, drop_a(k1) + tb.root_drop(0, k - k1));
    ans.decision = best >= d;
    return ans;
}

// --- triangle-free ------------------------------------------------------------------

SolverAnswer triangle_free_contraction_blocker_omega(const Graph& g, int d, int k) {
    if (d < 0 || k < 0) throw error("triangle-free solver: d, k must be >= 0");
    if (!recognize::is_triangle_free(g)) throw error("triangle-free solver: triangle found");
    SolverAnswer ans;
    if (d == 0) {
        ans.decision = true;
        ans.min_k = 0;
        ans.witness = Witness{};
        return ans;
    }
    int w0 = g.num_edges() > 0 ? 2 : (g.num_vertices() > 0 ? 1 : 0);
    if (d >= 2 || w0 - d <= 0) return ans; // omega stays >= 1 on non-empty graphs
    // d == 1 on a graph with edges: every component with an edge must be
    // contracted down to a single vertex
    Witness w;
    Graph cur = g;
    int need = 0;
    for (const auto& comp : connected_components(g))
        if (induced_subgraph(g, comp).num_edges() > 0) {
            need += static_cast<int>(comp.size()) - 1;
            cur = collapse_component(cur, comp, w);
        }
    ans.min_k = need;
    ans.decision = k >= need;
    if (ans.decision) ans.witness = std::move(w);
    return ans;
}

} // namespace blocker::solvers
