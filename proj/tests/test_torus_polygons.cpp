#include "doctest.h"

#include <map>

#include "torusfk/torus_polygons.hpp"

using namespace torusfk;

TEST_CASE("preset curves pair to +1 and bound a hexagon around the basepoint")
{
    auto s = preset_scene();
    const int g0 = s.curve_index("g0"), g1 = s.curve_index("g1"), g2 = s.curve_index("g2");
    CHECK(s.pairing(g0, g1) == 1);
    CHECK(s.pairing(g1, g2) == 1);
    CHECK(s.pairing(g2, g0) == 1);
    CHECK(region_corner_count(s, s.z) == 6);
    CHECK(region_corner_count(s, {mpq_class(7, 8), mpq_class(1, 8)}) == 3);
    CHECK(s.intersections(g0, g1).size() == 1);
    CHECK(s.intersections(g1, g2).size() == 1);
    CHECK(s.intersections(g2, g0).size() == 1);
}

TEST_CASE("push-off meets its curve in one point of each degree")
{
    auto s = preset_scene();
    auto pts = s.intersections(s.curve_index("g1p"), s.curve_index("g1"));
    REQUIRE(pts.size() == 2);
    std::map<int, mpq_class> height;
    for (const auto& x : pts) {
        mpq_class y = x.where.y;
        while (y >= 1)
            y -= 1;
        height[x.degree] = y;
    }
    CHECK(height.at(0) == mpq_class(1, 8));
    CHECK(height.at(1) == mpq_class(5, 8));
    // degrees of opposite orders add to one
    for (const auto& x : s.intersections(s.curve_index("g1"), s.curve_index("g1p")))
        CHECK((x.where.y == mpq_class(1, 8) ? x.degree == 1 : x.degree == 0));
}

TEST_CASE("two triangles per wrap band with opposite signs")
{
    auto s = preset_scene();
    const int P = 4;
    auto ws = triangle_witnesses(s, P);
    std::map<int, std::vector<PolygonWitness>> bands;
    for (const auto& w : ws)
        bands[w.wrap].push_back(w);
    REQUIRE(bands.size() == P + 1);
    for (auto& [p, list] : bands) {
        REQUIRE(list.size() == 2);
        CHECK(list[0].sign() + list[1].sign() == 0);
        for (const auto& w : list) {
            CHECK(w.multiplicity == p * (p + 1) / 2);
            CHECK(w.degree_relation());
            CHECK(polygon_sign(w) == w.sign());
        }
    }
    CHECK(mu2_series(s, P).is_zero());
}

TEST_CASE("the smallest triangle of one orientation carries one star")
{
    auto s = preset_scene();
    int with_one_star = 0;
    for (const auto& w : triangle_witnesses(s, 0))
        if (w.s == 1 && w.sign() == -1)
            ++with_one_star;
    CHECK(with_one_star == 1);
}

TEST_CASE("quadrilateral counts are p + 1 and p in band p")
{
    auto s = preset_scene();
    const int P = 4;
    std::map<int, std::map<bool, int>> count; // band -> (last edge positive) -> number
    for (const auto& w : quadrilateral_witnesses(s, P)) {
        CHECK(w.degrees[0] == 0);
        CHECK(w.degree_relation());
        CHECK(w.multiplicity == w.wrap * (w.wrap + 1) / 2);
        CHECK(w.sign() == (w.wrap % 2 ? 1 : -1));
        ++count[w.wrap][w.edge_positive.back()];
    }
    for (int p = 0; p <= P; ++p) {
        const int a = count[p][true], b = count[p][false];
        CHECK(std::max(a, b) == p + 1);
        CHECK(std::min(a, b) == p);
    }
}

TEST_CASE("mu3 series equals -v and satisfies the Jacobi identity")
{
    auto s = preset_scene();
    const int P = 4;
    auto m3 = mu3_series(s, P);
    CHECK(m3.order() == 10);
    CHECK(m3 == series_scale(theta_v(10), mpz_class(-1)));
    auto u = partition_series(10);
    CHECK(series_mul(series_scale(series_pow(u, 3), mpz_class(-1)), m3) == IntSeries::constant(1, 10));
}

TEST_CASE("enumeration rejects non-convex corners and respects the wrap bound")
{
    auto s = preset_scene();
    auto any_corner = enumerate_polygons(
        s, {s.curve_index("g1p"), s.curve_index("g2"), s.curve_index("g0"), s.curve_index("g1")}, 3);
    // degree-one crossings of the push-off never give convex corners
    for (const auto& w : any_corner)
        CHECK(w.degrees[0] == 0);
    for (const auto& w : triangle_witnesses(s, 2))
        for (const auto& span : w.edge_span)
            CHECK(span < 3);
    CHECK_THROWS_AS(enumerate_polygons(s, {0}, 2), Error);
    CHECK_THROWS_AS(enumerate_polygons(s, {0, 1, 2}, -1), Error);
}

TEST_CASE("scene text round trip and validation")
{
    auto s = preset_scene();
    auto back = load_scene(dump_scene(s));
    CHECK(dump_scene(back) == dump_scene(s));
    CHECK(mu3_series(back, 3) == mu3_series(s, 3));
    CHECK_THROWS_AS(load_scene("curve a shift 0 0 phase 0 grading 0 star 1/2\nvertex 0 0\nz 1/2 1/2\n"), Error);
    CHECK_THROWS_AS(load_scene("curve a shift 1 0 phase 0 grading 0 star 2\nvertex 0 0\nz 1/2 1/2\n"), Error);
    CHECK_THROWS_AS(load_scene("curve a shift 1 0 phase x grading 0 star 1/2\nvertex 0 0\n"), Error);
    CHECK_THROWS_AS(load_scene("curve a shift 1 0 phase 0 grading 0 star 1/2\nvertex 0 0\n"), Error);
}

TEST_CASE("grading shift moves degrees but keeps the degree relation")
{
    auto s = preset_scene();
    s.curves[s.curve_index("g2")].grading = 2;
    for (const auto& w : triangle_witnesses(s, 2))
        CHECK(w.degree_relation());
    for (const auto& w : quadrilateral_witnesses(s, 2))
        CHECK(w.degree_relation());
}

TEST_CASE("svg figure lists one polygon per witness")
{
    auto s = preset_scene();
    auto ws = triangle_witnesses(s, 1);
    auto svg = witnesses_svg(s, ws);
    std::size_t n = 0, pos = 0;
    while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
        ++n;
        ++pos;
    }
    CHECK(n == ws.size());
    CHECK(svg.rfind("<svg", 0) == 0);
}
