#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "raagobs/clique_color.hpp"
#include "raagobs/errors.hpp"
#include "raagobs/search.hpp"

using namespace raagobs;

namespace {

ColorToken set(std::vector<std::int64_t> s) { return s; }

}  // namespace

TEST_CASE("lift of the K2 colouring") {
    auto g = testing::labelled(2, {{0, 1}}, {"a", "b"});
    auto gk = clique_graph(g);
    auto f = Coloring::from_ints({1, 2});
    auto lifted = lift_coloring(g, gk, f);
    CHECK(lifted.tokens == std::vector<ColorToken>{set({1}), set({2}), set({1, 2})});
    CHECK(is_valid_coloring(gk.graph, lifted));
    CHECK(verify_lift(g, gk, f, lifted).ok);
}

TEST_CASE("lift of a constant colouring on an edgeless graph") {
    auto g = edgeless_graph(4);
    auto gk = clique_graph(g);
    auto lifted = lift_coloring(g, gk, Coloring::from_ints({1, 1, 1, 1}));
    for (const auto& t : lifted.tokens) CHECK(t == set({1}));
    CHECK(is_valid_coloring(gk.graph, lifted));
}

TEST_CASE("lift on P3") {
    auto g = path_graph(3);
    auto gk = clique_graph(g);
    auto lifted = lift_coloring(g, gk, Coloring::from_ints({1, 2, 1}));
    CHECK(lifted.tokens ==
          std::vector<ColorToken>{set({1}), set({2}), set({1}), set({1, 2}), set({1, 2})});
    CHECK(is_valid_coloring(gk.graph, lifted));
}

TEST_CASE("lift rejects invalid input") {
    auto g = complete_graph(2);
    auto gk = clique_graph(g);
    CHECK_THROWS_WITH_AS(lift_coloring(g, gk, Coloring::from_ints({1, 1})), doctest::Contains("0"), GraphError);
    CHECK_THROWS_AS(lift_coloring(g, gk, Coloring::from_ints({1})), GraphError);
    Coloring sets{{set({1}), set({2})}};
    CHECK_THROWS_AS(lift_coloring(g, gk, sets), GraphError);
    CHECK_THROWS_AS(lift_coloring(g, clique_graph(path_graph(3)), Coloring::from_ints({1, 2})), GraphError);
}

TEST_CASE("verify_lift reports the offending edge") {
    auto g = testing::labelled(2, {{0, 1}}, {"a", "b"});
    auto gk = clique_graph(g);
    auto f = Coloring::from_ints({1, 2});
    Coloring bad{{set({1}), set({2}), set({1})}};
    auto check = verify_lift(g, gk, f, bad);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostic.find("({a},{a,b})") != std::string::npos);

    Coloring wrong{{set({1}), set({2}), set({7})}};
    auto w = verify_lift(g, gk, f, wrong);
    CHECK_FALSE(w.ok);
    CHECK(w.diagnostic.find("{a,b}") != std::string::npos);
}

TEST_CASE("lift of DSATUR colourings on random graphs") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        auto g = oracle::random_graph(8, 0.4, rng);
        auto gk = clique_graph(g);
        auto f = dsatur_coloring(g);
        auto lifted = lift_coloring(g, gk, f);
        CHECK(verify_lift(g, gk, f, lifted).ok);
        CHECK(is_valid_coloring(gk.graph, lifted));
        CHECK(lifted.palette().size() < clique_chromatic_upper_bound(static_cast<std::uint32_t>(f.palette().size())));
    }
}

TEST_CASE("clique graph colour bound") {
    CHECK(clique_chromatic_upper_bound(0) == 1);
    CHECK(clique_chromatic_upper_bound(1) == 2);
    CHECK(clique_chromatic_upper_bound(5) == 32);
    CHECK(clique_chromatic_upper_bound(63) == std::uint64_t{1} << 63);
    CHECK_THROWS_AS(clique_chromatic_upper_bound(64), Error);
}
