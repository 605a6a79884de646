#include <doctest.h>

#include <string>

#include <nlohmann/json.hpp>

#include "support/generators.hpp"
#include "tempnet/errors.hpp"
#include "tempnet/json_io.hpp"
#include "tempnet/model.hpp"
#include "tempnet/rng.hpp"

using namespace tempnet;
using nlohmann::json;

TEST_CASE("network_from_json reads 1-based entries and explicit widths") {
    const json j = json::parse(R"({
        "n": 3,
        "subsystems": [
            { "A": [[2, 1]], "B": [[1, 1]] },
            { "A": [[3, 2]], "B": [], "m": 1 }
        ]
    })");
    const TemporalNetwork net = network_from_json(j);
    CHECK(net.n == 3);
    REQUIRE(net.N() == 2);
    CHECK(net.pairs[0].a.has(1, 0));
    CHECK(net.pairs[0].b.has(0, 0));
    CHECK(net.pairs[0].m() == 1);
    CHECK(net.pairs[1].a.has(2, 1));
    CHECK(net.pairs[1].b.nonzeros.empty());
    CHECK(net.pairs[1].m() == 1);
}

TEST_CASE("an empty B without an explicit width has zero inputs") {
    const json j = json::parse(R"({
        "n": 2,
        "subsystems": [ { "A": [[1, 2]], "B": [] } ]
    })");
    CHECK(network_from_json(j).pairs[0].m() == 0);
}

TEST_CASE("round trip preserves patterns and labels") {
    Rng rng(113);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.uniform_int(1, 5);
        const int N = rng.uniform_int(1, 4);
        TemporalNetwork net = corpus::random_network(rng, n, N, 3, 0.4, 0.4);
        if (trial % 2 == 0)
            for (int i = 0; i < N; ++i)
                net.labels.push_back("sub" + std::to_string(i + 1));

        const TemporalNetwork back = network_from_json(network_to_json(net));
        CHECK(back.n == net.n);
        REQUIRE(back.N() == net.N());
        for (int i = 0; i < net.N(); ++i) {
            CHECK(back.pairs[static_cast<std::size_t>(i)].a.nonzeros ==
                  net.pairs[static_cast<std::size_t>(i)].a.nonzeros);
            CHECK(back.pairs[static_cast<std::size_t>(i)].b.nonzeros ==
                  net.pairs[static_cast<std::size_t>(i)].b.nonzeros);
            CHECK(back.pairs[static_cast<std::size_t>(i)].m() ==
                  net.pairs[static_cast<std::size_t>(i)].m());
        }
        CHECK(back.labels == net.labels);
    }
}

TEST_CASE("schema violations raise ParseError with the subsystem named") {
    CHECK_THROWS_AS(network_from_json(json::parse(R"({"subsystems": []})")), ParseError);
    CHECK_THROWS_AS(network_from_json(json::parse(R"({"n": 0, "subsystems": [{}]})")), ParseError);
    CHECK_THROWS_AS(network_from_json(json::parse(R"({"n": 2, "subsystems": []})")), ParseError);
    CHECK_THROWS_AS(
        network_from_json(json::parse(R"({"n": 2, "subsystems": [{"A": [[0, 1]], "B": []}]})")),
        ParseError);
    CHECK_THROWS_AS(
        network_from_json(json::parse(R"({"n": 2, "subsystems": [{"A": [[3, 1]], "B": []}]})")),
        ParseError);
    CHECK_THROWS_AS(
        network_from_json(json::parse(R"({"n": 2, "subsystems": [{"A": [[1]], "B": []}]})")),
        ParseError);

    try {
        network_from_json(json::parse(R"({"n": 2, "subsystems": [{"A": [[3, 1]], "B": []}]})"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("subsystem 1") != std::string::npos);
    }
}

TEST_CASE("load_network reads every bundled fixture") {
    CHECK(corpus::load_fixture("ex1").n == 3);
    CHECK(corpus::load_fixture("eh3").N() == 3);
    CHECK(corpus::load_fixture("sw").n == 3);
    CHECK(corpus::load_fixture("fig2").n == 4);
    CHECK(corpus::load_fixture("fig3").n == 4);
    for (const char* name : {"ex1", "eh3", "sw", "fig2", "fig3"})
        CHECK(validate_network(corpus::load_fixture(name)).ok);
}

TEST_CASE("load_network reports missing files as ParseError") {
    CHECK_THROWS_AS(load_network("/nonexistent/net.json"), ParseError);
}
