#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "phenylo/families.hpp"
#include "phenylo/isomorphism.hpp"
#include "phenylo/molecular_graph.hpp"
#include "phenylo/phenylene.hpp"
#include "phenylo/verify.hpp"

using namespace phenylo;

namespace {

MolecularGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return MolecularGraph::from_edges(n, e);
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("from_edges rejects malformed input") {
    CHECK_THROWS_AS(MolecularGraph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(MolecularGraph::from_edges(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MolecularGraph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("bfs distances") {
    CHECK(bfs_distances(cycle(6), 0) == std::vector<int>{0, 1, 2, 3, 2, 1});
    CHECK(bfs_distances(MolecularGraph::from_edges(2, {{0, 1}}), 1) == std::vector<int>{1, 0});

    // In two fused hexagons every 3-degree vertex has eccentricity 4 (the
    // far hexagon's remotest corner), checked by brute force.
    MolecularGraph g = expand(linear(2));
    for (int v = 0; v < g.vertex_count; ++v) {
        if (g.adjacency[v].size() != 3) continue;
        std::vector<int> d = bfs_distances(g, v);
        CHECK(*std::max_element(d.begin(), d.end()) == 4);
    }
}

TEST_CASE("edge_split") {
    EdgeSplit s = edge_split(cycle(6), {0, 1});
    CHECK(s.n_u == 3);
    CHECK(s.n_v == 3);
    CHECK(s.phi == 0);

    s = edge_split(MolecularGraph::from_edges(3, {{0, 1}, {1, 2}}), {0, 1});
    CHECK(s.n_u == 1);
    CHECK(s.n_v == 2);
    CHECK(s.phi == 1);

    // Both connecting (quadrilateral) edges of two fused hexagons split 6/6.
    PhenyleneTree t = linear(2);
    MolecularGraph g = expand(t);
    const Junction& j = t.junctions[0];
    for (auto e : {std::pair{expanded_vertex(j.a, j.slot_a), expanded_vertex(j.b, j.slot_b + 1)},
                   std::pair{expanded_vertex(j.a, j.slot_a + 1), expanded_vertex(j.b, j.slot_b)}})
        CHECK(edge_split(g, e).phi == 0);

    CHECK_THROWS_AS(edge_split(cycle(6), {0, 3}), std::invalid_argument);
}

TEST_CASE("mostar_direct known values") {
    CHECK(mostar_direct(expand(linear(1))) == 0);
    CHECK(mostar_direct(expand(linear(2))) == 48);
    CHECK(mostar_direct(expand(pl(1, 1, 1))) == 288);
}

TEST_CASE("mostar_direct relabel invariance") {
    std::mt19937_64 rng(11);
    for (int h : {3, 5, 7}) {
        MolecularGraph g = expand(random_tree(h, rng));
        long long base = mostar_direct(g);
        for (int trial = 0; trial < 5; ++trial)
            CHECK(mostar_direct(relabel(g, random_perm(g.vertex_count, rng))) == base);
    }
}

TEST_CASE("phenylene edge splits: bipartite partition and phi mod 6") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        PhenyleneTree t = random_tree(1 + trial % 7, rng);
        MolecularGraph g = expand(t);
        CHECK(g.is_bipartite());
        DistanceOracle dist(g);
        for (auto e : g.edges) {
            EdgeSplit s = edge_split(g, e, dist);
            CHECK(s.n_u + s.n_v == g.vertex_count);  // bipartite: no ties
            CHECK(s.phi % 6 == 0);
        }
    }
}

TEST_CASE("are_isomorphic") {
    std::mt19937_64 rng(13);
    MolecularGraph g = expand(cl({1, 2}));
    CHECK(are_isomorphic(g, relabel(g, random_perm(g.vertex_count, rng))));
    CHECK_FALSE(are_isomorphic(expand(cl({1, 2})), expand(linear(4))));
    CHECK(are_isomorphic(expand(chain_from_turns("LR")), expand(chain_from_turns("RL"))));
}

TEST_CASE("certificate is label-invariant and separates h=4 classes") {
    std::mt19937_64 rng(14);
    for (int h : {2, 4, 6}) {
        MolecularGraph g = expand(random_tree(h, rng));
        std::string base = certificate(g);
        for (int trial = 0; trial < 5; ++trial)
            CHECK(certificate(relabel(g, random_perm(g.vertex_count, rng))) == base);
    }
    CHECK(certificate(expand(linear(4))) != certificate(expand(cl({1, 2}))));

    std::vector<PhenyleneTree> h4 = {linear(4), cl({1, 2}), chain_from_turns("LR"),
                                     chain_from_turns("LL"), pl(1, 1, 1)};
    for (size_t i = 0; i < h4.size(); ++i)
        for (size_t k = i + 1; k < h4.size(); ++k) {
            CHECK(certificate(expand(h4[i])) != certificate(expand(h4[k])));
            CHECK_FALSE(are_isomorphic(expand(h4[i]), expand(h4[k])));
        }
}

TEST_CASE("certificate agrees with are_isomorphic across small classes") {
    std::vector<MolecularGraph> graphs;
    for (int h = 1; h <= 5; ++h)
        for (const CatalogEntry& e : enumerate_phenylenes(h).entries) graphs.push_back(expand(e.tree));
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t k = i + 1; k < graphs.size(); ++k) {
            bool same_cert = certificate(graphs[i]) == certificate(graphs[k]);
            CHECK(same_cert == are_isomorphic(graphs[i], graphs[k]));
        }
}

}  // TEST_SUITE
