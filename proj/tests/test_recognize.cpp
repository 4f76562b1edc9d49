#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocker/canonical.hpp"
#include "blocker/gen.hpp"
#include "blocker/params.hpp"
#include "blocker/recognize.hpp"

#include <random>

using namespace blocker;
using namespace blocker::recognize;

namespace {

// alpha / chi by direct cotree recursion, as an independent check
std::pair<int, int> cotree_alpha_chi(const Cotree& t, int node) {
    const auto& nd = t.at(node);
    if (nd.kind == Cotree::Kind::leaf) return {1, 1};
    auto [al, cl] = cotree_alpha_chi(t, nd.left);
    auto [ar, cr] = cotree_alpha_chi(t, nd.right);
    if (nd.kind == Cotree::Kind::cup) return {al + ar, std::max(cl, cr)};
    return {std::max(al, ar), cl + cr};
}

} // namespace

TEST_CASE("cotree on tiny graphs") {
    auto r = cotree(Graph::complete(2));
    REQUIRE(std::holds_alternative<Cotree>(r));
    Cotree t = std::get<Cotree>(r);
    CHECK(t.dump() == "(j 0 1)");
    CHECK(t.evaluate() == Graph::complete(2));

    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    r = cotree(two_k2);
    REQUIRE(std::holds_alternative<Cotree>(r));
    CHECK(std::get<Cotree>(r).dump() == "(u (j 0 1) (j 2 3))");
    CHECK(std::get<Cotree>(r).evaluate() == two_k2);

    auto refusal = cotree(Graph::path(4));
    REQUIRE(std::holds_alternative<std::array<Vertex, 4>>(refusal));
    auto p4 = std::get<std::array<Vertex, 4>>(refusal);
    Graph g = Graph::path(4);
    CHECK(g.has_edge(p4[0], p4[1]));
    CHECK(g.has_edge(p4[1], p4[2]));
    CHECK(g.has_edge(p4[2], p4[3]));
    CHECK(!g.has_edge(p4[0], p4[2]));
    CHECK(!g.has_edge(p4[0], p4[3]));
    CHECK(!g.has_edge(p4[1], p4[3]));
}

TEST_CASE("cotree round trip on random cographs") {
    for (int it = 0; it < 500; ++it) {
        Graph g = gen::random_cograph(1 + (it % 8), 1000 + it);
        auto r = cotree(g);
        REQUIRE(std::holds_alternative<Cotree>(r));
        const Cotree& t = std::get<Cotree>(r);
        CHECK(t.evaluate() == g);
        // binary form: every internal node has exactly two children
        int leaf_count = 0;
        for (const auto& nd : t.nodes) {
            if (nd.kind == Cotree::Kind::leaf)
                ++leaf_count;
            else {
                CHECK(nd.left >= 0);
                CHECK(nd.right >= 0);
            }
        }
        CHECK(leaf_count == g.num_vertices());
        auto [a, c] = cotree_alpha_chi(t, t.root);
        CHECK(a == params::alpha(g));
        CHECK(c == params::chi(g));
    }
}

TEST_CASE("split partitions") {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}}); // K={0,1}, I={2,3}
    auto p = split_partition(g, SplitFlavor::minimal);
    REQUIRE(p.has_value());
    CHECK(static_cast<int>(p->independent.size()) == params::alpha(g));

    CHECK(!split_partition(Graph::cycle(4)).has_value()); // split graphs are C4-free

    auto k3 = split_partition(Graph::complete(3), SplitFlavor::minimal);
    REQUIRE(k3.has_value());
    CHECK(k3->clique.size() == 2);
    CHECK(k3->independent.size() == 1);

    for (int it = 0; it < 100; ++it) {
        Graph s = gen::random_split(1 + (it % 8), 2000 + it);
        auto mx = split_partition(s, SplitFlavor::maximal);
        REQUIRE(mx.has_value());
        CHECK(static_cast<int>(mx->clique.size()) == params::omega(s));
        auto mn = split_partition(s, SplitFlavor::minimal);
        REQUIRE(mn.has_value());
        CHECK(static_cast<int>(mn->independent.size()) == params::alpha(s));
        for (Vertex v : mn->clique) {
            bool has_i_neighbor = false;
            for (Vertex u : s.neighbors(v)) has_i_neighbor |= mn->independent.count(u) > 0;
            CHECK(has_i_neighbor);
        }
    }
}

TEST_CASE("interval model validation and clique path") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    IntervalModel m;
    m.interval[0] = {0, 2};
    m.interval[1] = {1, 4};
    m.interval[2] = {3, 6};
    CHECK(validate_interval_model(g, m));
    auto cp = clique_path(m);
    REQUIRE(cp.size() == 2);
    CHECK(cp[0] == std::set<Vertex>{0, 1});
    CHECK(cp[1] == std::set<Vertex>{1, 2});

    CHECK(!validate_interval_model(Graph::cycle(3), m));

    IntervalModel single;
    single.interval[0] = {0, 0};
    auto cp1 = clique_path(single);
    REQUIRE(cp1.size() == 1);
    CHECK(cp1[0] == std::set<Vertex>{0});
}

TEST_CASE("clique path consecutiveness on random models") {
    for (int it = 0; it < 200; ++it) {
        auto [g, m] = gen::random_interval(1 + (it % 8), 3000 + it);
        auto cp = clique_path(m);
        // every vertex occupies a contiguous run of the ordering
        for (Vertex v : g.vertices()) {
            std::vector<int> hits;
            for (size_t i = 0; i < cp.size(); ++i)
                if (cp[i].count(v)) hits.push_back(static_cast<int>(i));
            REQUIRE(!hits.empty());
            CHECK(hits.back() - hits.front() + 1 == static_cast<int>(hits.size()));
        }
        int biggest = 0;
        for (const auto& c : cp) {
            biggest = std::max(biggest, static_cast<int>(c.size()));
            for (Vertex u : c)
                for (Vertex v : c)
                    if (u < v) CHECK(g.has_edge(u, v));
        }
        CHECK(biggest == params::omega(g));
    }
}

TEST_CASE("find_interval_model for small graphs") {
    auto m = find_interval_model(Graph::path(5));
    REQUIRE(m.has_value());
    CHECK(validate_interval_model(Graph::path(5), *m));
    CHECK(!find_interval_model(Graph::cycle(4)).has_value());
    CHECK(!find_interval_model(Graph::cycle(5)).has_value());
    // complete on every graph that does have a model
    for (int it = 0; it < 60; ++it) {
        auto [g, m2] = gen::random_interval(1 + (it % 6), 4600 + it);
        auto found = find_interval_model(g);
        REQUIRE(found.has_value());
        CHECK(validate_interval_model(g, *found));
    }
}

TEST_CASE("generators are deterministic in the seed") {
    CHECK(gen::random_cograph(8, 42) == gen::random_cograph(8, 42));
    CHECK(gen::random_split(8, 42) == gen::random_split(8, 42));
    CHECK(gen::random_tree(8, 42) == gen::random_tree(8, 42));
    auto [g1, m1] = gen::random_interval(8, 42);
    auto [g2, m2] = gen::random_interval(8, 42);
    CHECK(g1 == g2);
    CHECK(m1.interval == m2.interval);
    CHECK(!(gen::random_cograph(8, 42) == gen::random_cograph(8, 43)));
}

TEST_CASE("H-freeness") {
    CHECK(!is_H_free(Graph::cycle(5), small_p(4)));
    auto emb = find_induced(Graph::cycle(5), small_p(4));
    REQUIRE(emb.has_value());
    Graph c5 = Graph::cycle(5);
    for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}})
        CHECK(c5.has_edge(emb->at(a), emb->at(b)));
    CHECK(!c5.has_edge(emb->at(0), emb->at(2)));
    CHECK(is_H_free(Graph::complete(4), small_p(3)));
    CHECK(!is_H_free(Graph::path(6), small_2p2()));
}

TEST_CASE("chordal and perfect checks") {
    CHECK(!is_chordal(Graph::cycle(4)));
    CHECK(is_chordal(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(is_chordal(Graph::complete(5)));
    CHECK(!is_chordal(Graph::cycle(5)));
    CHECK(is_perfect_small(Graph::cycle(4)));
    CHECK(!is_perfect_small(Graph::cycle(5))); // odd hole
    CHECK(is_perfect_small(Graph::complete(4)));
}

TEST_CASE("class predicates") {
    CHECK(is_tree(Graph::path(4)));
    CHECK(!is_tree(Graph::cycle(4)));
    CHECK(!is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_cobipartite(complement(Graph::cycle(6))));
    CHECK(is_3p1_free(Graph::cycle(5)));
    CHECK(!is_3p1_free(Graph::edgeless(3)));
    CHECK(is_triangle_free(Graph::cycle(6)));
    CHECK(!is_triangle_free(Graph::complete(3)));
    CHECK(is_p1p3_free(Graph::complete(4)));
    CHECK(!is_p1p3_free(Graph::from_edges(4, {{1, 2}, {2, 3}})));
}

TEST_CASE("generators certify and all_trees counts are right") {
    // OEIS A000055: non-isomorphic trees on n = 1..9 vertices
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) {
        auto trees = gen::all_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
        for (const auto& t : trees) CHECK(is_tree(t));
    }
    for (int it = 0; it < 30; ++it) {
        CHECK(is_tree(gen::random_tree(2 + it % 9, it)));
        CHECK(is_3p1_free(gen::random_3p1_free(1 + it % 8, it)));
        CHECK(is_p1p3_free(gen::random_p1p3_free(1 + it % 8, it)));
        CHECK(is_H_free(gen::random_c4_free(2 + it % 9, it), Graph::cycle(4)));
        CHECK(is_cobipartite(gen::random_cobipartite(2 + it % 8, it)));
    }
}

TEST_CASE("canonical forms and isomorphism") {
    Graph a = Graph::cycle(5);
    Graph b; // relabeled C5
    b.add_edge(10, 20);
    b.add_edge(20, 30);
    b.add_edge(30, 40);
    b.add_edge(40, 50);
    b.add_edge(50, 10);
    CHECK(canonical::are_isomorphic(a, b));
    CHECK(canonical::canonical_key(densify(a)) == canonical::canonical_key(densify(b)));
    CHECK(!canonical::are_isomorphic(Graph::path(5), b));
    CHECK(canonical::canonical_key(densify(Graph::path(4))) !=
          canonical::canonical_key(densify(Graph::cycle(4))));
    // canonical key is invariant under random relabelings
    std::mt19937_64 rng(13);
    for (int it = 0; it < 100; ++it) {
        Graph g = gen::random_graph(1 + (it % 8), 4000 + it);
        std::vector<Vertex> vs = g.vertices();
        std::vector<Vertex> perm = vs;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h;
        std::map<Vertex, Vertex> relab;
        for (size_t i = 0; i < vs.size(); ++i) relab[vs[i]] = perm[i] + 100;
        for (Vertex v : vs) h.add_vertex(relab[v]);
        for (auto [u, v] : g.edges()) h.add_edge(relab[u], relab[v]);
        CHECK(canonical::canonical_key(densify(g)) == canonical::canonical_key(densify(h)));
    }
}

TEST_CASE("classifier dichotomy") {
    struct Probe {
        const char* name;
        Graph h;
        // verdicts in order: (alpha,del) (alpha,con) (omega,del) (omega,con)
        // (chi,del) (chi,con); p = polynomial, h = hard, o = open
        const char* expect;
    };
    std::vector<Probe> probes = {
        {"P1", small_p(1), "pppppp"},
        {"P2", small_p(2), "pppppp"},
        {"P3", small_p(3), "pppppp"},
        {"P4", small_p(4), "pppppp"},
        {"P5", small_p(5), "hhhhhh"},
        {"3P1", small_3p1(), "hhhhph"},
        {"2P2", small_2p2(), "hhhhhh"},
        {"P1+P3", small_p1p3(), "hhhhph"},
        {"paw", small_paw(), "hhhphh"},
        {"C3", Graph::cycle(3), "hhhphh"},
        {"C4", Graph::cycle(4), "hhhhhh"},
        {"C5", Graph::cycle(5), "hhhhhh"},
        {"K13", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), "hhhhhh"},
        {"C3+P1", small_c3p1(), "hhhohh"},
    };
    auto verdict_char = [](Verdict v) {
        return v == Verdict::polynomial ? 'p' : (v == Verdict::hard ? 'h' : 'o');
    };
    const std::pair<Param, OpKind> grid[6] = {
        {Param::alpha, OpKind::vdelete}, {Param::alpha, OpKind::contract},
        {Param::omega, OpKind::vdelete}, {Param::omega, OpKind::contract},
        {Param::chi, OpKind::vdelete},   {Param::chi, OpKind::contract},
    };
    for (const auto& probe : probes)
        for (int i = 0; i < 6; ++i) {
            auto dich = classify(probe.h, grid[i].first, grid[i].second);
            INFO(probe.name << " grid cell " << i << " -> " << dich.citation);
            CHECK(verdict_char(dich.verdict) == probe.expect[i]);
        }
}
