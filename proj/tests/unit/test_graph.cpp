#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "support/bruteforce.hpp"
#include "support/generators.hpp"
#include "tempnet/errors.hpp"
#include "tempnet/graph.hpp"
#include "tempnet/model.hpp"
#include "tempnet/rng.hpp"

using namespace tempnet;

namespace {

Digraph chain(int k) {
    Digraph g;
    for (int i = 0; i < k; ++i)
        g.add_vertex(VertexTag{});
    for (int i = 0; i + 1 < k; ++i)
        g.add_edge(i, i + 1);
    return g;
}

// Validity of a linking against the graph it came from.
void check_linking(const Digraph& g, const Linking& l, const std::set<int>& sources,
                   const std::set<int>& sinks) {
    std::set<int> used;
    for (const auto& path : l.paths) {
        REQUIRE_FALSE(path.empty());
        CHECK(sources.count(path.front()) != 0);
        CHECK(sinks.count(path.back()) != 0);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(g.has_edge(path[i], path[i + 1]));
        for (int v : path)
            CHECK(used.insert(v).second);
    }
}

} // namespace

TEST_CASE("digraph stores edges uniquely and validates ids") {
    Digraph g = chain(3);
    g.add_edge(0, 1); // duplicate collapses
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
    CHECK(g.successors(0) == std::vector<int>{1});
    CHECK_THROWS_AS(g.add_edge(0, 9), UnknownVertex);
}

TEST_CASE("reachable_from walks forward edges only") {
    Digraph g = chain(4);
    const std::set<int> r = reachable_from(g, {1});
    CHECK(r == std::set<int>{1, 2, 3});
}

TEST_CASE("max_matching finds a perfect matching when one exists") {
    BipartiteGraph g(3, 3);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.add_edge(1, 1);
    g.add_edge(2, 2);
    const MatchingResult m = max_matching(g);
    CHECK(m.size == 3);
    std::set<int> left, right;
    for (const auto& e : m.edges) {
        CHECK(left.insert(e.first).second);
        CHECK(right.insert(e.second).second);
    }
}

TEST_CASE("generic_rank equals the numeric rank of random realizations") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = rng.uniform_int(1, 6);
        const int cols = rng.uniform_int(1, 6);
        const SparsityPattern p = corpus::random_pattern(rng, rows, cols, 0.35);

        int numeric = 0;
        for (int rep = 0; rep < 3; ++rep) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
            for (const auto& rc : p.nonzeros)
                m(rc.first, rc.second) = rng.uniform(0.1, 1.0) * (rng.coin() ? 1.0 : -1.0);
            numeric = std::max(numeric, bruteforce::svd_rank(m));
        }
        CHECK(generic_rank(p) == numeric);
    }
}

TEST_CASE("max_weighted_matching picks the heavier assignment") {
    BipartiteGraph g(2, 2);
    g.add_edge(0, 0, 1.0);
    g.add_edge(0, 1, 5.0);
    g.add_edge(1, 0, 5.0);
    g.add_edge(1, 1, 1.0);
    const WeightedMatchingResult w = max_weighted_matching(g);
    CHECK(w.weight == doctest::Approx(10.0));
    CHECK(w.edges.size() == 2);
}

TEST_CASE("max_weighted_matching may leave vertices unmatched for profit") {
    // Pairing both rows forces the two cheap edges (weight 7); taking the
    // heavy edge alone is worth more.
    BipartiteGraph g(2, 2);
    g.add_edge(0, 0, 3.0);
    g.add_edge(1, 1, 4.0);
    g.add_edge(0, 1, 10.0);
    const WeightedMatchingResult w = max_weighted_matching(g);
    CHECK(w.weight == doctest::Approx(10.0));
}

TEST_CASE("max_weighted_matching rejects negative weights") {
    BipartiteGraph g(1, 1);
    g.add_edge(0, 0, -2.0);
    CHECK_THROWS_AS(max_weighted_matching(g), NegativeWeight);
}

TEST_CASE("max_weighted_matching with unit weights tracks max_matching") {
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const int l = rng.uniform_int(1, 5);
        const int r = rng.uniform_int(1, 5);
        BipartiteGraph g(l, r);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < r; ++j)
                if (rng.unit() < 0.4)
                    g.add_edge(i, j, 1.0);
        const int unweighted = max_matching(g).size;
        const double weighted = max_weighted_matching(g).weight;
        CHECK(weighted == doctest::Approx(static_cast<double>(unweighted)));
    }
}

TEST_CASE("max_disjoint_linking matches the exhaustive search on random digraphs") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int v = rng.uniform_int(2, 8);
        Digraph g;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < v; ++i)
            g.add_vertex(VertexTag{});
        for (int a = 0; a < v; ++a)
            for (int b = 0; b < v; ++b)
                if (a != b && rng.unit() < 0.25) {
                    g.add_edge(a, b);
                    edges.push_back({a, b});
                }
        std::set<int> sources, sinks;
        for (int i = 0; i < v; ++i) {
            if (rng.unit() < 0.4)
                sources.insert(i);
            if (rng.unit() < 0.4)
                sinks.insert(i);
        }

        const LinkingResult got = max_disjoint_linking(g, sources, sinks);
        const auto want = bruteforce::max_linking_brute(v, edges, sources, sinks);
        REQUIRE(want.has_value());
        CHECK(got.size == *want);
        CHECK(got.witness.size() == got.size);
        check_linking(g, got.witness, sources, sinks);
    }
}

TEST_CASE("a vertex in both source and sink sets yields a zero-length path") {
    Digraph g = chain(2);
    const LinkingResult r = max_disjoint_linking(g, {0}, {0, 1});
    CHECK(r.size == 1);
}

TEST_CASE("linking size is independent of edge insertion order") {
    std::vector<std::pair<int, int>> edges{{0, 2}, {1, 2}, {2, 3}, {0, 3}, {1, 3}};
    std::vector<int> order{0, 1, 2, 3, 4};
    int reference = -1;
    for (int perm = 0; perm < 6; ++perm) {
        std::next_permutation(order.begin(), order.end());
        Digraph g;
        for (int i = 0; i < 4; ++i)
            g.add_vertex(VertexTag{});
        for (int k : order)
            g.add_edge(edges[static_cast<std::size_t>(k)].first,
                       edges[static_cast<std::size_t>(k)].second);
        const int size = max_disjoint_linking(g, {0, 1}, {2, 3}).size;
        if (reference < 0)
            reference = size;
        CHECK(size == reference);
    }
}

TEST_CASE("tag_label encodes kind, subsystem, node, and layer") {
    CHECK(tag_label(VertexTag{VertexKind::state, 2, 2, -1}) == "v^2_2");
    CHECK(tag_label(VertexTag{VertexKind::input, 0, 1, 3}) == "u_1[3]");
}

TEST_CASE("to_dot output is stable and uses the expected dialect") {
    Digraph g = chain(3);
    DotOptions opts;
    opts.name = "chain";
    const std::string dot1 = to_dot(g, opts);
    const std::string dot2 = to_dot(g, opts);
    CHECK(dot1 == dot2);
    CHECK(dot1.find("digraph chain {") != std::string::npos);
    CHECK(dot1.find("->") != std::string::npos);

    opts.dashed_edges.insert({0, 1});
    CHECK(to_dot(g, opts).find("dashed") != std::string::npos);
}
