#pragma once

// Exhaustive ground-truth solver for blocker instances at small scale:
// iterative deepening over operation sequences with canonical-form
// memoization of intermediate graphs.

#include "blocker/graph.hpp"
#include "blocker/io.hpp"

#include <optional>

namespace blocker::oracle {

struct Options {
    // graphs larger than the guard are refused
    int contract_guard = 10;
    int delete_guard = 14;
    // sequence-length cap; default is exhaustive (|V|-1 contractions, |V| deletions)
    std::optional<int> budget;

    // guards after applying the BLOCKER_SIZE_GUARD environment override
    static Options from_env();
};

struct OracleResult {
    bool feasible = false;
    std::optional<int> min_k;     // exact minimum number of operations
    std::optional<Witness> witness;
};

// Exact minimum number of `kind` operations reducing pi by at least d, or
// infeasible when no sequence within the budget achieves it.
OracleResult oracle_min_k(const Graph& g, Param pi, OpKind kind, int d,
                          const Options& opt = Options::from_env());

// yes iff oracle_min_k <= k; carries a witness on yes
std::pair<bool, std::optional<Witness>> oracle_decide(const BlockerInstance& inst,
                                                      const Options& opt = Options::from_env());

// replay w (|w| <= k required) and check pi(final) <= pi(G) - d
bool verify_witness(const BlockerInstance& inst, const Witness& w);

// Largest achievable drop of pi using at most i contractions and at most j
// deletions (mixed sequences); exhaustive with memoization.
int max_drop_mixed(const Graph& g, Param pi, int i, int j,
                   const Options& opt = Options::from_env());

} // namespace blocker::oracle
