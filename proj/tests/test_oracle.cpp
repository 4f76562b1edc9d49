#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocker/gen.hpp"
#include "blocker/oracle.hpp"
#include "blocker/params.hpp"

#include <random>

using namespace blocker;
using namespace blocker::oracle;

namespace {

int pi_of(const Graph& g, Param pi) {
    switch (pi) {
    case Param::alpha: return params::alpha(g);
    case Param::omega: return params::omega(g);
    default: return params::chi(g);
    }
}

// plain unmemoized search over all operation sequences, the reference for
// the memoized oracle
int plain_min_pi(const Graph& g, Param pi, OpKind kind, int budget) {
    int best = pi_of(g, pi);
    if (budget == 0) return best;
    if (kind == OpKind::contract) {
        for (auto [u, v] : g.edges())
            best = std::min(best, plain_min_pi(contract_edge(g, u, v), pi, kind, budget - 1));
    } else {
        for (Vertex v : g.vertices())
            best = std::min(best, plain_min_pi(delete_vertex(g, v), pi, kind, budget - 1));
    }
    return best;
}

std::optional<int> plain_min_k(const Graph& g, Param pi, OpKind kind, int d) {
    int base = pi_of(g, pi);
    int budget = kind == OpKind::contract ? std::max(0, g.num_vertices() - 1)
                                          : g.num_vertices();
    for (int k = 0; k <= budget; ++k)
        if (base - plain_min_pi(g, pi, kind, k) >= d) return k;
    return std::nullopt;
}

Graph relabeled(const Graph& g, std::mt19937_64& rng) {
    auto vs = g.vertices();
    std::vector<Vertex> perm = vs;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h;
    std::map<Vertex, Vertex> m;
    for (size_t i = 0; i < vs.size(); ++i) m[vs[i]] = perm[i];
    for (Vertex v : vs) h.add_vertex(m[v]);
    for (auto [u, v] : g.edges()) h.add_edge(m[u], m[v]);
    return h;
}

} // namespace

TEST_CASE("oracle_min_k on the worked examples") {
    auto r = oracle_min_k(Graph::path(4), Param::alpha, OpKind::contract, 1);
    REQUIRE(r.feasible);
    CHECK(*r.min_k == 2);

    r = oracle_min_k(Graph::cycle(4), Param::chi, OpKind::contract, 1);
    REQUIRE(r.feasible);
    CHECK(*r.min_k == 3);

    r = oracle_min_k(Graph::cycle(6), Param::omega, OpKind::vdelete, 0);
    REQUIRE(r.feasible);
    CHECK(*r.min_k == 0);
    CHECK(r.witness->empty());
}

TEST_CASE("oracle_decide on the worked examples") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto [yes1, w1] = oracle_decide({two_k2, Param::alpha, OpKind::contract, 1, 4});
    CHECK(!yes1); // components never merge, alpha stays 2

    auto [yes2, w2] = oracle_decide({Graph::complete(3), Param::omega, OpKind::contract, 1, 1});
    REQUIRE(yes2);
    REQUIRE(w2.has_value());
    CHECK(verify_witness({Graph::complete(3), Param::omega, OpKind::contract, 1, 1}, *w2));

    auto [yes3, w3] = oracle_decide({Graph::cycle(5), Param::chi, OpKind::contract, 2, 3});
    CHECK(!yes3);
    auto [yes4, w4] = oracle_decide({Graph::cycle(5), Param::chi, OpKind::contract, 2, 4});
    CHECK(yes4); // contract C5 all the way to K1
}

TEST_CASE("verify_witness") {
    Graph k3 = Graph::complete(3);
    BlockerInstance inst{k3, Param::omega, OpKind::contract, 1, 1};
    CHECK(verify_witness(inst, {Operation::contract(1, 2)}));
    CHECK(!verify_witness(inst, {}));

    BlockerInstance c4inst{Graph::cycle(4), Param::chi, OpKind::contract, 1, 3};
    Witness to_k1{Operation::contract(0, 1), Operation::contract(1, 2),
                  Operation::contract(2, 3)};
    CHECK(verify_witness(c4inst, to_k1));
    // too many operations is a refusal
    BlockerInstance tight{Graph::cycle(4), Param::chi, OpKind::contract, 1, 2};
    CHECK(!verify_witness(tight, to_k1));
    // wrong kind is a refusal
    CHECK(!verify_witness(c4inst, {Operation::vdelete(0)}));
}

TEST_CASE("memoized oracle equals plain exhaustive search") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int it = 0; checked < 120; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = gen::random_graph(n, 7000 + it, 0.5);
        for (Param pi : {Param::alpha, Param::omega, Param::chi})
            for (OpKind kind : {OpKind::contract, OpKind::vdelete})
                for (int d = 1; d <= 2; ++d) {
                    auto expect = plain_min_k(g, pi, kind, d);
                    auto got = oracle_min_k(g, pi, kind, d);
                    CHECK(got.feasible == expect.has_value());
                    if (expect) CHECK(*got.min_k == *expect);
                    ++checked;
                }
    }
}

TEST_CASE("oracle witnesses verify and drop alpha stepwise") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = gen::random_graph(n, 8000 + it, 0.45);
        for (OpKind kind : {OpKind::contract, OpKind::vdelete}) {
            auto r = oracle_min_k(g, Param::alpha, kind, 1);
            if (!r.feasible) continue;
            REQUIRE(r.witness.has_value());
            CHECK(static_cast<int>(r.witness->size()) == *r.min_k);
            BlockerInstance inst{g, Param::alpha, kind, 1, *r.min_k};
            CHECK(verify_witness(inst, *r.witness));
            // along the replay, alpha never drops by more than one per step
            Graph cur = g;
            int prev = params::alpha(cur);
            for (const auto& op : *r.witness) {
                cur = apply_witness(cur, {op});
                int now = params::alpha(cur);
                CHECK(prev - now <= 1);
                prev = now;
            }
        }
    }
}

TEST_CASE("oracle monotonicity in d and k") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 40; ++it) {
        Graph g = gen::random_graph(6, 9000 + it, 0.5);
        for (Param pi : {Param::alpha, Param::chi}) {
            std::optional<int> prev;
            for (int d = 0; d <= 3; ++d) {
                auto r = oracle_min_k(g, pi, OpKind::contract, d);
                if (!r.feasible) break; // stays infeasible for larger d
                if (prev) CHECK(*r.min_k >= *prev);
                prev = *r.min_k;
            }
        }
    }
}

TEST_CASE("min_k is invariant under relabeling") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 40; ++it) {
        Graph g = gen::random_graph(6, 9500 + it, 0.5);
        Graph h = relabeled(g, rng);
        for (OpKind kind : {OpKind::contract, OpKind::vdelete}) {
            auto a = oracle_min_k(g, Param::omega, kind, 1);
            auto b = oracle_min_k(h, Param::omega, kind, 1);
            CHECK(a.feasible == b.feasible);
            if (a.feasible) CHECK(*a.min_k == *b.min_k);
        }
    }
}

TEST_CASE("alpha contraction to zero is infeasible") {
    Graph g = Graph::complete(3);
    auto r = oracle_min_k(g, Param::alpha, OpKind::contract, 1); // target alpha 0
    CHECK(!r.feasible);
    auto del = oracle_min_k(g, Param::alpha, OpKind::vdelete, 1);
    REQUIRE(del.feasible);
    CHECK(*del.min_k == 3); // delete everything
}

TEST_CASE("max_drop_mixed agrees with plain mixed search") {
    // plain exhaustive mixed search
    std::function<int(const Graph&, Param, int, int)> plain =
        [&](const Graph& g, Param pi, int bc, int bd) -> int {
        int best = pi_of(g, pi);
        if (bc > 0)
            for (auto [u, v] : g.edges())
                best = std::min(best, plain(contract_edge(g, u, v), pi, bc - 1, bd));
        if (bd > 0)
            for (Vertex v : g.vertices())
                best = std::min(best, plain(delete_vertex(g, v), pi, bc, bd - 1));
        return best;
    };
    std::mt19937_64 rng(59);
    for (int it = 0; it < 25; ++it) {
        Graph g = gen::random_graph(2 + static_cast<int>(rng() % 4), 9900 + it, 0.5);
        for (Param pi : {Param::alpha, Param::chi})
            for (int bc = 0; bc <= 2; ++bc)
                for (int bd = 0; bd + bc <= 3; ++bd) {
                    int expect = pi_of(g, pi) - plain(g, pi, bc, bd);
                    CHECK(max_drop_mixed(g, pi, bc, bd) == expect);
                }
    }
}

TEST_CASE("size guard and environment override") {
    Options opt;
    opt.contract_guard = 5;
    CHECK_THROWS_WITH_AS(oracle_min_k(Graph::cycle(6), Param::alpha, OpKind::contract, 1, opt),
                         doctest::Contains("size guard"), error);
}
