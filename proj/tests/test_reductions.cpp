#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocker/gen.hpp"
#include "blocker/oracle.hpp"
#include "blocker/params.hpp"
#include "blocker/recognize.hpp"
#include "blocker/reductions.hpp"

#include <random>

using namespace blocker;
using namespace blocker::reductions;

namespace {

// brute-force red-blue dominating set
bool rbds_yes(const RbdsInstance& inst) {
    std::vector<Vertex> blue(inst.blue.begin(), inst.blue.end());
    int nb = static_cast<int>(blue.size());
    for (std::uint64_t mask = 0; mask < (1ULL << nb); ++mask) {
        if (std::popcount(mask) > inst.k) continue;
        std::set<Vertex> dominated;
        for (auto [b, r] : inst.edges) {
            size_t i = std::lower_bound(blue.begin(), blue.end(), b) - blue.begin();
            if ((mask >> i) & 1) dominated.insert(r);
        }
        if (dominated.size() == inst.red.size()) return true;
    }
    return false;
}

RbdsInstance worked_rbds(int k) {
    // B={0,1}, R={2,3}, edges 0-2, 0-3, 1-3
    RbdsInstance inst;
    inst.blue = {0, 1};
    inst.red = {2, 3};
    inst.edges = {{0, 2}, {0, 3}, {1, 3}};
    inst.k = k;
    return inst;
}

// largest number of pairwise vertex-disjoint triangles
int max_disjoint_triangles(const Graph& g) {
    std::vector<std::array<Vertex, 3>> tris;
    auto vs = g.vertices();
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
            for (size_t c = b + 1; c < vs.size(); ++c)
                if (g.has_edge(vs[a], vs[b]) && g.has_edge(vs[b], vs[c]) &&
                    g.has_edge(vs[a], vs[c]))
                    tris.push_back({vs[a], vs[b], vs[c]});
    std::function<int(size_t, std::set<Vertex>&)> rec = [&](size_t i,
                                                            std::set<Vertex>& used) -> int {
        if (i == tris.size()) return 0;
        int best = rec(i + 1, used);
        auto& t = tris[i];
        if (!used.count(t[0]) && !used.count(t[1]) && !used.count(t[2])) {
            used.insert(t.begin(), t.end());
            best = std::max(best, 1 + rec(i + 1, used));
            for (Vertex v : t) used.erase(v);
        }
        return best;
    };
    std::set<Vertex> used;
    return rec(0, used);
}

bool oracle_yes(const BlockerInstance& inst, int guard = 24) {
    oracle::Options opt;
    opt.contract_guard = guard;
    opt.delete_guard = guard;
    return oracle::oracle_decide(inst, opt).first;
}

// literal enumeration of all maximum independent sets, as the independent
// route for the forced-vertex check
bool forced_vertex_by_enumeration(const Graph& g) {
    if (g.empty()) return false;
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    int best = 0;
    std::vector<std::uint64_t> maxima;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        bool indep = true;
        for (int i = 0; i < n && indep; ++i)
            for (int j = i + 1; j < n && indep; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && g.has_edge(vs[i], vs[j]))
                    indep = false;
        if (!indep) continue;
        int size = std::popcount(mask);
        if (size > best) {
            best = size;
            maxima.clear();
        }
        if (size == best) maxima.push_back(mask);
    }
    std::uint64_t common = ~0ULL;
    for (std::uint64_t m : maxima) common &= m;
    return best > 0 && common != 0;
}

} // namespace

TEST_CASE("rbds to split alpha") {
    auto inst = reduce_rbds_to_split_alpha(worked_rbds(1));
    CHECK(inst.pi == Param::alpha);
    CHECK(inst.d == 1);
    CHECK(inst.k == 1);
    CHECK(recognize::is_split(inst.g));
    CHECK(rbds_yes(worked_rbds(1)));
    CHECK(oracle_yes(inst));

    auto inst0 = reduce_rbds_to_split_alpha(worked_rbds(0));
    CHECK(inst0.d == 2);
    CHECK(!rbds_yes(worked_rbds(0)));
    CHECK(!oracle_yes(inst0));

    auto inst2 = reduce_rbds_to_split_alpha(worked_rbds(2));
    CHECK(inst2.d == 0); // k = |B|: trivially yes
    CHECK(oracle_yes(inst2));

    RbdsInstance bad = worked_rbds(1);
    bad.edges = {{0, 2}}; // red vertex 3 undominated
    CHECK_THROWS_AS(reduce_rbds_to_split_alpha(bad), error);
}

TEST_CASE("rbds to split chi") {
    auto inst = reduce_rbds_to_split_chi(worked_rbds(1));
    CHECK(inst.pi == Param::chi);
    CHECK(inst.g.num_vertices() == 5);
    CHECK(recognize::is_split(inst.g));
    CHECK(oracle_yes(inst));

    auto inst0 = reduce_rbds_to_split_chi(worked_rbds(0));
    CHECK(!oracle_yes(inst0));

    RbdsInstance empty_r;
    empty_r.blue = {0};
    empty_r.k = 0;
    CHECK_THROWS_AS(reduce_rbds_to_split_chi(empty_r), error);
}

TEST_CASE("rbds equivalence on random instances") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 40; ++it) {
        RbdsInstance inst;
        int nb = 1 + static_cast<int>(rng() % 3);
        int nr = 1 + static_cast<int>(rng() % 3);
        for (int b = 0; b < nb; ++b) inst.blue.insert(b);
        for (int r = 0; r < nr; ++r) inst.red.insert(nb + r);
        for (int r = 0; r < nr; ++r) {
            // at least one blue neighbour each (normalization)
            int deg = 1 + static_cast<int>(rng() % nb);
            std::vector<int> bs(nb);
            std::iota(bs.begin(), bs.end(), 0);
            std::shuffle(bs.begin(), bs.end(), rng);
            for (int i = 0; i < deg; ++i) inst.edges.emplace_back(bs[i], nb + r);
        }
        // blue vertices must not be isolated either
        std::set<Vertex> covered;
        for (auto [b, r] : inst.edges) covered.insert(b);
        for (int b = 0; b < nb; ++b)
            if (!covered.count(b))
                inst.edges.emplace_back(b, nb + static_cast<int>(rng() % nr));
        inst.k = static_cast<int>(rng() % (nb + 1));
        bool expect = rbds_yes(inst);
        CHECK(oracle_yes(reduce_rbds_to_split_alpha(inst)) == expect);
        CHECK(oracle_yes(reduce_rbds_to_split_chi(inst)) == expect);
    }
}

TEST_CASE("one-in-three gadget: the two-clause worked example") {
    CnfFormula f;
    f.num_vars = 3;
    f.clauses = {{1, 2, -3}, {-1, 2, 3}}; // (x, y, !z) and (!x, y, z)
    auto inst = reduce_1in3sat_to_omega(f);
    CHECK(inst.g.num_vertices() == 21);
    CHECK(inst.g.num_edges() == 36);
    CHECK(inst.d == 1);
    CHECK(inst.k == 5);
    CHECK(params::omega(inst.g) == 3);
    CHECK(max_disjoint_triangles(inst.g) == 5);

    // x = true, y = false, z = true is a one-in-three assignment
    auto assignment = one_in_three_assignment(f);
    REQUIRE(assignment.has_value());
    Witness w = sat_witness(f, {true, false, true});
    CHECK(w.size() == 5);
    CHECK(oracle::verify_witness(inst, w));
    Graph after = apply_witness(inst.g, w);
    CHECK(params::omega(after) == 2);
}

TEST_CASE("one-in-three gadget equivalence") {
    CnfFormula single;
    single.num_vars = 3;
    single.clauses = {{1, 2, 3}};
    auto inst = reduce_1in3sat_to_omega(single);
    CHECK(inst.g.num_vertices() == 18);
    CHECK(inst.k == 4);
    REQUIRE(one_in_three_assignment(single).has_value());
    CHECK(oracle::verify_witness(inst, sat_witness(single, *one_in_three_assignment(single))));

    // unsatisfiable: (x, y, !x) forces y false, (x, !y, !x) then counts two
    CnfFormula unsat;
    unsat.num_vars = 2;
    unsat.clauses = {{1, 2, -1}, {1, -2, -1}};
    CHECK(!one_in_three_assignment(unsat).has_value());
    auto bad = reduce_1in3sat_to_omega(unsat);
    CHECK(!oracle_yes(bad, 25));

    // repeated literals are refused: clauses are 3-element sets
    CnfFormula degenerate;
    degenerate.num_vars = 2;
    degenerate.clauses = {{1, 1, 2}};
    CHECK_THROWS_AS(reduce_1in3sat_to_omega(degenerate), error);
}

TEST_CASE("C4-free perfect lift") {
    // degenerate input: K3 alone
    auto lifted = lift_to_c4free_perfect(Graph::complete(3), 1);
    CHECK(lifted.g.num_vertices() == 12);
    CHECK(recognize::is_H_free(lifted.g, Graph::cycle(4)));
    CHECK(params::omega(lifted.g) == 3);
    CHECK(lifted.k == 1 + 3);
    CHECK(recognize::is_perfect_small(lifted.g));
    // answer preservation: omega(K3) drops with 1 contraction, so the lift
    // with budget 4 is a yes; with budget 3 (k = 0) it is a no
    CHECK(oracle_yes(lifted, 12));
    auto tight = lift_to_c4free_perfect(Graph::complete(3), 0);
    CHECK(!oracle_yes(tight, 12));

    CnfFormula single;
    single.num_vars = 1;
    single.clauses = {};
    auto gadget = reduce_1in3sat_to_omega(single);
    auto big = lift_to_c4free_perfect(gadget.g, gadget.k);
    CHECK(recognize::is_H_free(big.g, Graph::cycle(4)));
    CHECK(params::omega(big.g) == 3);
}

TEST_CASE("vertex cover to chordal") {
    auto inst = reduce_vc_to_chordal(Graph::complete(2), 1);
    CHECK(inst.g.num_vertices() == 5);
    CHECK(params::omega(inst.g) == 5);
    CHECK(recognize::is_chordal(inst.g));
    CHECK(oracle_yes(inst));

    auto p3 = reduce_vc_to_chordal(Graph::path(3), 1);
    CHECK(recognize::is_chordal(p3.g));
    CHECK(params::omega(p3.g) == 3 + 3);
    CHECK(oracle_yes(p3, 24));

    auto c4 = reduce_vc_to_chordal(Graph::cycle(4), 1);
    CHECK(!oracle_yes(c4, 24)); // VC(C4) = 2

    CHECK_THROWS_AS(reduce_vc_to_chordal(Graph::edgeless(3), 1), error);
}

TEST_CASE("cobipartite alpha to bipartite: structure") {
    auto inst = reduce_cobipartite_alpha_to_bipartite(Graph::complete(3), 2);
    CHECK(params::is_bipartite(inst.g));
    CHECK(inst.pi == Param::alpha);
    // K3 + three dominating vertices = K6, 15 edges, each subdivided once
    CHECK(inst.g.num_vertices() == 6 + 15);
    CHECK(inst.k == 2 + 15);
    CHECK(inst.d == params::alpha(inst.g, 32) - 1);

    auto two_k2 = reduce_cobipartite_alpha_to_bipartite(
        Graph::from_edges(4, {{0, 1}, {2, 3}}), 0);
    CHECK(params::is_bipartite(two_k2.g));

    CHECK_THROWS_AS(reduce_cobipartite_alpha_to_bipartite(Graph{}, 1), error);
    CHECK_THROWS_AS(reduce_cobipartite_alpha_to_bipartite(Graph::cycle(5), 1), error);
}

TEST_CASE("biclique partition to cobipartite chi") {
    auto c6 = reduce_biclique_to_cobipartite_chi(Graph::cycle(6));
    CHECK(c6.k == 0);
    CHECK(c6.d == 0); // chi(complement C6) = 3 already
    CHECK(has_biclique_3_partition(Graph::cycle(6)));
    CHECK(oracle_yes(c6));

    Graph p6 = Graph::path(6);
    CHECK(has_biclique_3_partition(p6));
    CHECK(oracle_yes(reduce_biclique_to_cobipartite_chi(p6)));

    CHECK_THROWS_AS(reduce_biclique_to_cobipartite_chi(Graph::path(5)), error);
    CHECK_THROWS_AS(reduce_biclique_to_cobipartite_chi(Graph::cycle(5)), error);

    // equivalence sweep on connected bipartite graphs
    std::mt19937_64 rng(73);
    int done = 0;
    for (int it = 0; done < 25; ++it) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = gen::random_bipartite(n, 30000 + it, 0.6);
        if (!is_connected(g)) continue;
        ++done;
        bool expect = has_biclique_3_partition(g);
        CHECK(oracle_yes(reduce_biclique_to_cobipartite_chi(g), 12) == expect);
    }
}

TEST_CASE("girth lift") {
    Graph c9 = girth_lift(Graph::cycle(3), 3);
    CHECK(c9.num_vertices() == 9);
    CHECK(girth(c9) == 9);
    CHECK(has_forced_vertex(Graph::cycle(3)) == has_forced_vertex(c9));

    // forests are already of unbounded girth
    Graph p2 = Graph::path(2);
    CHECK(girth_lift(p2, 5) == p2);
    CHECK(!girth(p2).has_value());

    std::mt19937_64 rng(79);
    for (int it = 0; it < 15; ++it) {
        Graph g = gen::random_graph(5 + static_cast<int>(rng() % 3), 31000 + it, 0.4);
        int p = 3 + static_cast<int>(rng() % 4);
        Graph lifted = girth_lift(g, p);
        auto gi = girth(lifted);
        CHECK((!gi || *gi > p));
        if (lifted.num_vertices() <= 20)
            CHECK(has_forced_vertex(g, 10) == has_forced_vertex(lifted));
    }
}

TEST_CASE("clique proof lift") {
    auto yes_inst = clique_proof_lift(Graph::complete(3), 3); // omega [=3] <= 3
    CHECK(yes_inst.g.num_vertices() == 2 * 3 + 4);
    CHECK(oracle_yes(yes_inst, 12));
    auto no_inst = clique_proof_lift(Graph::complete(3), 2); // omega > 2
    CHECK(!oracle_yes(no_inst, 12));
    CHECK_THROWS_AS(clique_proof_lift(Graph::complete(3), 0), error);

    std::mt19937_64 rng(83);
    for (int it = 0; it < 25; ++it) {
        Graph g = gen::random_graph(3 + static_cast<int>(rng() % 3), 32000 + it, 0.5);
        if (g.num_edges() == 0) continue;
        int l = 1 + static_cast<int>(rng() % 4);
        bool expect = params::omega(g) <= l;
        CHECK(oracle_yes(clique_proof_lift(g, l), 18) == expect);
    }
}

TEST_CASE("forced vertices") {
    CHECK(has_forced_vertex(Graph::path(3)));
    CHECK(!has_forced_vertex(Graph::cycle(4)));
    CHECK(has_forced_vertex(Graph::edgeless(1)));
    std::mt19937_64 rng(89);
    for (int it = 0; it < 80; ++it) {
        Graph g = gen::random_graph(1 + static_cast<int>(rng() % 8), 33000 + it, 0.4);
        CHECK(has_forced_vertex(g) == forced_vertex_by_enumeration(g));
    }
}
