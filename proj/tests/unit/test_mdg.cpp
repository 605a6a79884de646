#include <doctest.h>

#include <set>
#include <string>

#include "support/generators.hpp"
#include "tempnet/cactus.hpp"
#include "tempnet/mdg.hpp"
#include "tempnet/oracle.hpp"
#include "tempnet/rng.hpp"

using namespace tempnet;

TEST_CASE("mdg layer shapes follow the copy and input layout") {
    // n = 4, N = 2, m = (1, 1): merged layer 0 holds 4 states + 2 inputs;
    // every later layer holds 8 state copies + 3 input copies.
    const TemporalNetwork fig2 = corpus::load_fixture("fig2");
    const Mdg mdg = build_mdg(fig2);
    CHECK(mdg.l0 == 2 * (4 - 1));
    CHECK(mdg.g.vertex_count() == (4 + 2) + mdg.l0 * (2 * 4 + 3));
    CHECK(mdg.sinks.size() == 4);
    // Inputs: 2 at layer 0 plus 3 per upper layer.
    CHECK(mdg.sources.size() == 2 + static_cast<std::size_t>(mdg.l0) * 3);
}

TEST_CASE("mdg accessors address distinct vertices") {
    const TemporalNetwork ex1 = corpus::load_fixture("ex1");
    const Mdg mdg = build_mdg(ex1);
    std::set<int> ids;
    for (int p = 0; p < 3; ++p)
        CHECK(ids.insert(mdg.state_vertex_l0(p)).second);
    CHECK(ids.insert(mdg.input_vertex_l0(1, 0)).second);
    CHECK(ids.insert(mdg.input_vertex_l0(2, 0)).second);
    for (int layer = 1; layer <= mdg.l0; ++layer)
        for (int copy = 1; copy <= 2; ++copy)
            for (int p = 0; p < 3; ++p)
                CHECK(ids.insert(mdg.state_vertex(copy, p, layer)).second);
    CHECK(ids.insert(mdg.input_vertex(1, 1, 0, 1)).second);
    CHECK(ids.insert(mdg.input_vertex(2, 1, 0, 1)).second);
    CHECK(ids.insert(mdg.input_vertex(2, 2, 0, 1)).second);
}

TEST_CASE("between-layer edges fan out to later copies only") {
    const TemporalNetwork ex1 = corpus::load_fixture("ex1");
    const Mdg mdg = build_mdg(ex1);
    // A_1 contains (2,1): copy-1 state v1 at layer 2 reaches v2 of copies
    // 1 and 2 at layer 1.
    CHECK(mdg.g.has_edge(mdg.state_vertex(1, 0, 2), mdg.state_vertex(1, 1, 1)));
    CHECK(mdg.g.has_edge(mdg.state_vertex(1, 0, 2), mdg.state_vertex(2, 1, 1)));
    // A_2 contains (3,2): copy-2 traffic never lands on copy 1.
    CHECK(mdg.g.has_edge(mdg.state_vertex(2, 1, 2), mdg.state_vertex(2, 2, 1)));
    CHECK_FALSE(mdg.g.has_edge(mdg.state_vertex(2, 1, 2), mdg.state_vertex(1, 2, 1)));
    // Layer 1 collapses onto the merged layer 0.
    CHECK(mdg.g.has_edge(mdg.state_vertex(1, 0, 1), mdg.state_vertex_l0(1)));
    for (const auto& e : mdg.between_layer_edges)
        CHECK(mdg.g.has_edge(e.first, e.second));
}

TEST_CASE("mdg bound on the bundled fixtures") {
    CHECK(mdg_upper_bound(corpus::load_fixture("ex1")).bound == 3);
    CHECK(mdg_upper_bound(corpus::load_fixture("eh3")).bound == 3);
    CHECK(mdg_upper_bound(corpus::load_fixture("fig2")).bound == 4);
    CHECK(mdg_upper_bound(corpus::load_fixture("fig3")).bound == 4);
}

TEST_CASE("mdg witness linking is a valid disjoint path family") {
    const TemporalNetwork net = corpus::load_fixture("eh3");
    const Mdg mdg = build_mdg(net);
    const MdgBound b = mdg_upper_bound(net);
    CHECK(b.witness.size() == b.bound);
    std::set<int> used;
    for (const auto& path : b.witness.paths) {
        REQUIRE_FALSE(path.empty());
        CHECK(mdg.sources.count(path.front()) != 0);
        CHECK(mdg.sinks.count(path.back()) != 0);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(mdg.g.has_edge(path[i], path[i + 1]));
        for (int v : path)
            CHECK(used.insert(v).second);
    }
}

TEST_CASE("mdg bound dominates the temporal cactus bound") {
    Rng rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(2, 4);
        const int N = rng.uniform_int(1, 3);
        const TemporalNetwork net = corpus::random_network(rng, n, N, 2, 0.4, 0.5);
        CHECK(temporal_cactus_lower_bound(net).bound <= mdg_upper_bound(net).bound);
    }
}

TEST_CASE("necessary check mirrors the pruned concatenated pattern rank") {
    const NecessaryCheck ex1 = full_dim_necessary_check(corpus::load_fixture("ex1"));
    CHECK(ex1.passes);
    CHECK(ex1.grank == 3);

    const NecessaryCheck fig3 = full_dim_necessary_check(corpus::load_fixture("fig3"));
    CHECK(fig3.passes);
    CHECK(fig3.grank == 4);

    // A state no subsystem can reach sinks the rank below n.
    TemporalNetwork stranded = corpus::load_fixture("ex1");
    stranded.pairs[1].a = SparsityPattern(3, 3);
    const NecessaryCheck bad = full_dim_necessary_check(stranded);
    CHECK_FALSE(bad.passes);
    CHECK(bad.grank < 3);
}

TEST_CASE("full overall dimension implies the necessary check passes") {
    Rng rng(101);
    int full_cases = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(2, 3);
        const int N = rng.uniform_int(1, 3);
        const TemporalNetwork net = corpus::random_network(rng, n, N, 2, 0.5, 0.6);
        if (oracle_gdim_omegabar(net).value == n) {
            ++full_cases;
            CHECK(full_dim_necessary_check(net).passes);
        }
    }
    CHECK(full_cases > 0);
}

TEST_CASE("mdg dot export is stable and layered") {
    const TemporalNetwork ex1 = corpus::load_fixture("ex1");
    const Mdg mdg = build_mdg(ex1);
    const std::string dot = mdg_to_dot(mdg);
    CHECK(dot == mdg_to_dot(mdg));
    CHECK(dot.find("rank=same") != std::string::npos);
}
