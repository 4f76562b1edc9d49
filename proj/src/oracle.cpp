#include "blocker/oracle.hpp"

#include "blocker/canonical.hpp"
#include "blocker/params.hpp"

#include <cstdlib>

namespace blocker::oracle {

namespace {

constexpr int kParamGuard = 32; // pi evaluations inside the search

int eval_pi(const Graph& g, Param pi) {
    switch (pi) {
    case Param::alpha: return params::alpha(g, kParamGuard);
    case Param::omega: return params::omega(g, kParamGuard);
    default: return params::chi(g, kParamGuard);
    }
}

// Minimal pi reachable with the given budgets. In decision mode (target >= 0)
// the search may stop early once a value <= target is found and may prune
// subtrees that provably cannot reach the target (one operation changes pi
// by at most one); the returned value X still satisfies
//   X >= true minimum, and X <= target iff true minimum <= target.
// With target < 0 the search is exhaustive and X is exact.
struct Search {
    Param pi = Param::alpha;
    int target = -1;
    canonical::IsoMap<int> memo;

    static std::uint64_t salt(int bc, int bd) {
        return static_cast<std::uint64_t>(bc) * 65 + static_cast<std::uint64_t>(bd);
    }

    int run(const Graph& g, int bc, int bd) {
        DenseGraph dg = densify(g);
        if (int* hit = memo.find(dg, salt(bc, bd))) return *hit;
        int cur = eval_pi(g, pi);
        int best = cur;
        bool skip = best <= target;                               // early exit
        if (target >= 0 && cur - (bc + bd) > target) skip = true; // unreachable
        if (!skip && bc + bd > 0) {
            canonical::IsoMap<char> seen; // sibling dedupe up to isomorphism
            auto visit = [&](const Graph& child, int nbc, int nbd) {
                if (best <= target && target >= 0) return;
                DenseGraph dc = densify(child);
                if (seen.find(dc, 0)) return;
                seen.insert(dc, 0, 1);
                best = std::min(best, run(child, nbc, nbd));
            };
            if (bc > 0)
                for (auto [u, v] : g.edges()) visit(contract_edge(g, u, v), bc - 1, bd);
            if (bd > 0)
                for (Vertex v : g.vertices()) visit(delete_vertex(g, v), bc, bd - 1);
        }
        memo.insert(dg, salt(bc, bd), best);
        return best;
    }
};

int guard_for(const Options& opt, OpKind kind) {
    return kind == OpKind::contract ? opt.contract_guard : opt.delete_guard;
}

} // namespace

Options Options::from_env() {
    Options opt;
    if (const char* env = std::getenv("BLOCKER_SIZE_GUARD")) {
        int v = std::atoi(env);
        if (v > 0) {
            opt.contract_guard = v;
            opt.delete_guard = v;
        }
    }
    return opt;
}

OracleResult oracle_min_k(const Graph& g, Param pi, OpKind kind, int d, const Options& opt) {
    if (d < 0) throw error("oracle: d must be >= 0");
    if (g.num_vertices() > guard_for(opt, kind))
        throw error("oracle: size guard exceeded (n = " + std::to_string(g.num_vertices()) +
                    ")");
    OracleResult res;
    if (d == 0) {
        res.feasible = true;
        res.min_k = 0;
        res.witness = Witness{};
        return res;
    }
    int pi0 = eval_pi(g, pi);
    int target = pi0 - d;
    int exhaustive = kind == OpKind::contract ? std::max(0, g.num_vertices() - 1)
                                              : g.num_vertices();
    int budget = opt.budget ? std::min(*opt.budget, exhaustive) : exhaustive;
    // a non-empty graph cannot be contracted to an empty one, so pi stays >= 1
    if (kind == OpKind::contract && target <= 0) return res;
    if (target < 0) return res;

    Search search;
    search.pi = pi;
    search.target = target;
    for (int k = 0; k <= budget; ++k) {
        int bc = kind == OpKind::contract ? k : 0;
        int bd = kind == OpKind::vdelete ? k : 0;
        if (search.run(g, bc, bd) > target) continue;
        res.feasible = true;
        res.min_k = k;
        // greedy descent along memoized values to extract a witness
        Witness w;
        Graph cur = g;
        int remaining = k;
        while (eval_pi(cur, pi) > target) {
            bool stepped = false;
            auto try_step = [&](const Graph& child, const Operation& op) {
                if (stepped) return;
                int nbc = kind == OpKind::contract ? remaining - 1 : 0;
                int nbd = kind == OpKind::vdelete ? remaining - 1 : 0;
                if (search.run(child, nbc, nbd) <= target) {
                    w.push_back(op);
                    cur = child;
                    --remaining;
                    stepped = true;
                }
            };
            if (kind == OpKind::contract) {
                for (auto [u, v] : cur.edges()) {
                    try_step(contract_edge(cur, u, v), Operation::contract(u, v));
                    if (stepped) break;
                }
            } else {
                for (Vertex v : cur.vertices()) {
                    try_step(delete_vertex(cur, v), Operation::vdelete(v));
                    if (stepped) break;
                }
            }
            if (!stepped) throw error("oracle: witness reconstruction failed");
        }
        res.witness = std::move(w);
        return res;
    }
    return res;
}

std::pair<bool, std::optional<Witness>> oracle_decide(const BlockerInstance& inst,
                                                      const Options& opt) {
    Options capped = opt;
    capped.budget = opt.budget ? std::min(*opt.budget, inst.k) : inst.k;
    OracleResult r = oracle_min_k(inst.g, inst.pi, inst.kind, inst.d, capped);
    if (r.feasible && *r.min_k <= inst.k) return {true, r.witness};
    return {false, std::nullopt};
}

bool verify_witness(const BlockerInstance& inst, const Witness& w) {
    if (static_cast<int>(w.size()) > inst.k) return false;
    for (const auto& op : w)
        if ((op.kind == OpKind::contract) != (inst.kind == OpKind::contract)) return false;
    Graph final_g;
    try {
        final_g = apply_witness(inst.g, w);
    } catch (const error&) {
        return false;
    }
    return eval_pi(final_g, inst.pi) <= eval_pi(inst.g, inst.pi) - inst.d;
}

int max_drop_mixed(const Graph& g, Param pi, int i, int j, const Options& opt) {
    int guard = std::max(opt.contract_guard, opt.delete_guard);
    if (g.num_vertices() > guard) throw error("oracle: size guard exceeded");
    if (g.empty()) return 0;
    Search search; // exact mode: target stays -1
    search.pi = pi;
    return eval_pi(g, pi) - search.run(g, i, j);
}

} // namespace blocker::oracle
