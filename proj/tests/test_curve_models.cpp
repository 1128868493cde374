#include <doctest.h>

#include "oracles.hpp"
#include "raagobs/curve_models.hpp"
#include "raagobs/errors.hpp"
#include "raagobs/search.hpp"

using namespace raagobs;

TEST_CASE("surfaces") {
    CHECK(surface_rank(SurfaceType(1, 1)) == 1);
    CHECK(surface_rank(SurfaceType(2, 0)) == 3);
    CHECK(surface_rank(SurfaceType(0, 5)) == 2);
    CHECK(surface_rank(SurfaceType(0, 4)) == 1);
    CHECK(surface_rank(SurfaceType(0, 3)) == 0);
    CHECK(SurfaceType(1, 1).euler_characteristic() == -1);
    CHECK(SurfaceType(2, 0).name() == "S(2,0)");
    CHECK_THROWS_AS(SurfaceType(1, 0), Error);
    CHECK_THROWS_AS(SurfaceType(0, 2), Error);
}

TEST_CASE("Farey vertices") {
    CHECK(FareyVertex(2, 4) == FareyVertex(1, 2));
    CHECK(FareyVertex(1, -1) == FareyVertex(-1, 1));
    CHECK(FareyVertex(-3, 0) == FareyVertex(1, 0));
    CHECK(FareyVertex(1, 0).name() == "1/0");
    CHECK(determinant(FareyVertex(0, 1), FareyVertex(1, 0)) == 1);
    CHECK(determinant(FareyVertex(1, 1), FareyVertex(-1, 1)) == 2);
    CHECK(FareyVertex(-1, 1) < FareyVertex(0, 1));
    CHECK(FareyVertex(5, 1) < FareyVertex(1, 0));
    CHECK_THROWS_AS(FareyVertex(0, 0), Error);
}

TEST_CASE("Farey truncations") {
    auto f1 = farey_truncation(1);
    CHECK(f1.order() == 4);
    CHECK(f1.size() == 5);
    CHECK(f1.labels() == std::vector<std::string>{"-1/1", "0/1", "1/1", "1/0"});
    CHECK_FALSE(f1.adjacent(*f1.find_label("1/1"), *f1.find_label("-1/1")));
    CHECK(chromatic_number(f1).value() == 3);
    CHECK(oracle::chromatic_number(f1) == 3);

    for (std::uint32_t d = 1; d <= 6; ++d) {
        auto fd = farey_truncation(d);
        auto a = fd.find_label("0/1"), b = fd.find_label("1/1"), c = fd.find_label("1/0");
        REQUIRE((a && b && c));
        CHECK(fd.adjacent(*a, *b));
        CHECK(fd.adjacent(*b, *c));
        CHECK(fd.adjacent(*a, *c));
    }
    CHECK_THROWS_AS(farey_truncation(0), Error);
}

TEST_CASE("disjointness models") {
    auto g = disjointness_graph_small(SurfaceType(1, 1), 10);
    CHECK(g == edgeless_graph(10));
    CHECK(without_labels(clique_graph(g).graph) == g);
    CHECK(disjointness_graph_small(SurfaceType(0, 4), 3) == edgeless_graph(3));
    CHECK_THROWS_AS(disjointness_graph_small(SurfaceType(0, 5), 3), Error);
}

TEST_CASE("curve graph ingestion") {
    CurveGraphModel f1{farey_truncation(1), {std::nullopt, "farey", true}};
    auto text = dump_json(curve_graph_to_json(f1));
    auto back = ingest_curve_graph(text);
    CHECK(back.graph == f1.graph);
    CHECK(back.info.model == "farey");
    CHECK(back.info.verified);

    auto s05 = ingest_curve_graph("3 2\n0 1\n1 2\n");
    CHECK(s05.info.model == "external");
    CHECK_FALSE(s05.info.verified);
    CHECK_FALSE(s05.info.surface);

    CHECK_THROWS_AS(ingest_curve_graph("2 1\n1 1\n"), GraphError);
    CHECK_THROWS_AS(ingest_curve_graph(R"({"n": 1, "edges": [], "metadata": {"model": "mystery"}})"), ParseError);

    CurveModelInfo info{SurfaceType(0, 5), "external", false};
    auto j = curve_model_to_json(info);
    auto info_back = curve_model_from_json(j);
    CHECK(info_back.surface == info.surface);
    CHECK(info_back.model == "external");
}

TEST_CASE("chromatic lower bounds from models") {
    CHECK(chromatic_lower_bound_from_model(farey_truncation(1)) == 3);
    CHECK(chromatic_lower_bound_from_model(edgeless_graph(6)) == 1);
    CHECK_THROWS_AS(chromatic_lower_bound_from_model(farey_truncation(3), SearchBudget{1}), BudgetExhausted);
}
