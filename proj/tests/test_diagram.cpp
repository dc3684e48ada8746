#include <doctest.h>

#include <json.hpp>

#include "gabdyn/diagram.hpp"
#include "gabdyn/resolution.hpp"
#include "gabdyn/verify.hpp"
#include "test_util.hpp"

using namespace gabdyn;
using namespace testutil;

TEST_CASE("T(2,3,7) tree: 10 vertices, 9 edges, all weight 1, all self -2") {
    const MilnorLattice lat = build_milnor_lattice(t237());
    const DynkinGraph g = to_graph(*milnor_quotient_space(lat));
    CHECK(g.vertices.size() == 10);
    CHECK(g.edges.size() == 9);
    for (const auto& v : g.vertices) CHECK(v.self_intersection == -2);
    for (const auto& e : g.edges) CHECK(e.weight == 1);
}

TEST_CASE("orbit diagram for (4,4,4), <(1/4,3/4,0)>: weighted path of 4") {
    const OrbitSpace os = build_orbit_space(build_milnor_lattice(t444()), group_b());
    const DynkinGraph g = to_graph(*os.space, {BasisLabel::delta0_bar()});
    REQUIRE(g.vertices.size() == 4);
    CHECK(g.edges.size() == 3);
    std::vector<Rat> selfs;
    for (const auto& v : g.vertices) selfs.push_back(v.self_intersection);
    CHECK(selfs == std::vector<Rat>{-2, -8, -8, -8});
    for (const auto& e : g.edges) CHECK(e.weight == 4);
}

TEST_CASE("resolution diagram for (4,4,4), <(1/4,3/4,0)>: star with 4 arms of 3") {
    const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b());
    const HatBasis hb = build_hat_basis(zm);
    const DynkinGraph g = to_graph(*hat_space(zm, hb), {BasisLabel::delta0_bar()});
    CHECK(g.vertices.size() == 13);
    CHECK(g.edges.size() == 12);  // 4 arms x (1 center link + 2 chain links)
    for (const auto& e : g.edges) CHECK(e.weight == 1);
    int center_degree = 0;
    for (const auto& e : g.edges)
        if (e.source == "hdelta_1" || e.target == "hdelta_1") ++center_degree;
    CHECK(center_degree == 4);
}

TEST_CASE("drop filter removes the requested labels") {
    const MilnorLattice lat = build_milnor_lattice(t237());
    const DynkinGraph full = to_graph(*lat.space);
    const DynkinGraph dropped = to_graph(*lat.space, {BasisLabel::mu_prime()});
    CHECK(full.vertices.size() == 11);
    CHECK(dropped.vertices.size() == 10);
    for (const auto& v : dropped.vertices) CHECK(v.id != "delta_mu");
}

TEST_CASE("DOT output") {
    SUBCASE("single vertex graph") {
        auto space = std::make_shared<const BilinearSpace>(
            "one", LabelStyle::Milnor, std::vector<BasisLabel>{BasisLabel::center()}, [] {
                Mat m(1, 1);
                m(0, 0) = -2;
                return m;
            }());
        const std::string dot = emit_dot(to_graph(*space));
        CHECK(dot == "graph \"one\" {\n  \"delta_1\" [label=\"delta_1 (-2)\"];\n}\n");
    }
    SUBCASE("milnor (2,3,7) has exactly one dashed edge: delta_mu -- delta_1, weight -2") {
        const MilnorLattice lat = build_milnor_lattice(t237());
        const std::string dot = emit_dot(to_graph(*lat.space));
        std::size_t dashed = 0, pos = 0;
        while ((pos = dot.find("style=dashed", pos)) != std::string::npos) {
            ++dashed;
            ++pos;
        }
        CHECK(dashed == 1);
        CHECK(dot.find("\"delta_1\" -- \"delta_mu\" [label=\"-2\", style=dashed]") != std::string::npos);
    }
    SUBCASE("deterministic across calls") {
        const MilnorLattice lat = build_milnor_lattice(t444());
        CHECK(emit_dot(to_graph(*lat.space)) == emit_dot(to_graph(*lat.space)));
    }
}

TEST_CASE("JSON output round-trips and stays stable") {
    const ZModel zm = build_z_model(build_milnor_lattice(t666()), group_c());
    const DynkinGraph g = to_graph(*hat_space(zm, build_hat_basis(zm)), {BasisLabel::delta0_bar()});
    const std::string text = emit_json(g);
    CHECK(text == emit_json(g));

    const nlohmann::json parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.contains("vertices"));
    REQUIRE(parsed.contains("edges"));
    CHECK(parsed["vertices"].size() == g.vertices.size());
    CHECK(parsed["edges"].size() == g.edges.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        CHECK(parsed["vertices"][i]["id"] == g.vertices[i].id);
        CHECK(parsed["vertices"][i]["self_intersection"] == g.vertices[i].self_intersection.get_str());
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(parsed["edges"][i]["source"] == g.edges[i].source);
        CHECK(parsed["edges"][i]["target"] == g.edges[i].target);
        CHECK(parsed["edges"][i]["weight"] == g.edges[i].weight.get_str());
    }
}

TEST_CASE("trivial group: resolution, orbit and milnor-quotient diagrams agree") {
    const MilnorLattice lat = build_milnor_lattice(t334());
    const SymmetryGroup G = trivial_group(t334());

    const DynkinGraph quotient = to_graph(*milnor_quotient_space(lat));
    const DynkinGraph orbit = to_graph(*build_orbit_space(lat, G).space, {BasisLabel::delta0_bar()});
    const ZModel zm = build_z_model(lat, G);
    const DynkinGraph resolution =
        to_graph(*hat_space(zm, build_hat_basis(zm)), {BasisLabel::delta0_bar()});

    // Same shape: vertex self-intersections and edge weights in order.
    REQUIRE(quotient.vertices.size() == orbit.vertices.size());
    REQUIRE(quotient.vertices.size() == resolution.vertices.size());
    REQUIRE(quotient.edges.size() == orbit.edges.size());
    REQUIRE(quotient.edges.size() == resolution.edges.size());
    for (std::size_t i = 0; i < quotient.vertices.size(); ++i) {
        CHECK(quotient.vertices[i].self_intersection == orbit.vertices[i].self_intersection);
        CHECK(quotient.vertices[i].self_intersection == resolution.vertices[i].self_intersection);
    }
    for (std::size_t i = 0; i < quotient.edges.size(); ++i) {
        CHECK(quotient.edges[i].weight == orbit.edges[i].weight);
        CHECK(quotient.edges[i].weight == resolution.edges[i].weight);
    }
}

TEST_CASE("resolution diagram vertices: center 2j_G-2, everything else -2") {
    for (const auto& [t, G] : {std::pair{t444(), group_b()}, {t444(), group_b2()}, {t666(), group_c()}}) {
        const ZModel zm = build_z_model(build_milnor_lattice(t), G);
        const DynkinGraph g = to_graph(*hat_space(zm, build_hat_basis(zm)), {BasisLabel::delta0_bar()});
        for (const auto& v : g.vertices) {
            if (v.id == "hdelta_1")
                CHECK(v.self_intersection == 2 * zm.orbit.j_g - 2);
            else
                CHECK(v.self_intersection == -2);
        }
    }
}
