#include <doctest.h>

#include <set>

#include "ehrhart/constructions.hpp"
#include "ehrhart/enumerate.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/polytope.hpp"
#include "test_support.hpp"

using namespace ehrhart;

TEST_CASE("construction normalizes the vertex list") {
    // redundant midpoint and duplicate are dropped
    LatticePolytope p = LatticePolytope::from_points(
        1, {Point{0}, Point{2}, Point{1}, Point{2}});
    CHECK(p.vertices() == std::vector<Point>{Point{0}, Point{2}});
    CHECK(p.dim() == 1);

    LatticePolytope sq = LatticePolytope::from_points(
        2, {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}, Point{0, 0}});
    CHECK(sq.vertices().size() == 4);
    CHECK_THROWS_AS(LatticePolytope::from_points(1, {}), DegeneratePolytope);
}

TEST_CASE("facets: unit square") {
    LatticePolytope sq = unit_cube(2);
    REQUIRE(sq.facets().size() == 4);
    std::multiset<Int> offsets;
    for (const auto& f : sq.facets()) {
        Int g = 0;
        for (const auto& c : f.normal) g = gcd(g, c);
        CHECK(g == 1);
        offsets.insert(f.offset);
    }
    CHECK(offsets == std::multiset<Int>{0, 0, 1, 1});
}

TEST_CASE("facets: standard simplex has x_i >= 0 and sum <= 1") {
    for (int d = 1; d <= 4; ++d) {
        LatticePolytope s = standard_simplex(d);
        CHECK(s.facets().size() == static_cast<std::size_t>(d + 1));
        int sum_facets = 0;
        for (const auto& f : s.facets()) {
            Int coefsum = 0;
            for (const auto& c : f.normal) coefsum += c;
            if (f.offset == 1) {
                ++sum_facets;
                CHECK(coefsum == d);
            } else {
                CHECK(f.offset == 0);
                CHECK(coefsum == -1);
            }
        }
        CHECK(sum_facets == 1);
    }
}

TEST_CASE("facets: reflexive simplex offsets are all 1") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& f : standard_reflexive_simplex(d).facets()) CHECK(f.offset == 1);
}

TEST_CASE("facets: the Henk-Tagami simplex has 6 facets, all valid") {
    LatticePolytope p = henk_tagami_example();
    CHECK(p.vertices().size() == 6);
    // a 5-dimensional simplex on 6 affinely independent vertices
    CHECK(p.facets().size() == 6);
    for (const auto& f : p.facets()) {
        int tight = 0;
        for (const auto& v : p.vertices()) {
            Int s = 0;
            for (int j = 0; j < 5; ++j) s += f.normal[j] * v[j];
            CHECK(s <= f.offset);
            if (s == f.offset) ++tight;
        }
        CHECK(tight == 5);
    }
}

TEST_CASE("locate") {
    LatticePolytope sq = unit_cube(2);
    CHECK(locate(sq, {1, 1}, 1) == PointLocation::Boundary);
    CHECK(locate(sq, {1, 1}, 2) == PointLocation::Interior);
    CHECK(locate(standard_simplex(2), {1, 1}, 1) == PointLocation::Outside);
}

TEST_CASE("locate is homogeneous") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (const auto& p : testing::random_corpus(6)) {
        LatticePolytope p3 = p.dilated(3);
        for (int rep = 0; rep < 10; ++rep) {
            Point x(p.rank());
            for (auto& c : x) c = coord(rng);
            CHECK(locate(p, x, 3) == locate(p3, x, 1));
        }
    }
}

TEST_CASE("normalize: already full-dimensional is the identity") {
    LatticePolytope sq = unit_cube(2);
    auto [p, chart] = normalize_full_dimensional(sq);
    CHECK(chart.is_identity());
    CHECK(p.vertices() == sq.vertices());
}

TEST_CASE("normalize: axis segment in rank 2") {
    LatticePolytope seg = LatticePolytope::from_points(2, {Point{0, 0}, Point{2, 0}});
    auto [p, chart] = normalize_full_dimensional(seg);
    CHECK(p.rank() == 1);
    CHECK(p.vertices() == std::vector<Point>{Point{0}, Point{2}});
}

TEST_CASE("normalize: skew segment hits every lattice point of the hull") {
    LatticePolytope seg = LatticePolytope::from_points(2, {Point{0, 0}, Point{1, 2}});
    auto [p, chart] = normalize_full_dimensional(seg);
    CHECK(p.rank() == 1);
    CHECK(p.vertices() == std::vector<Point>{Point{0}, Point{1}});
    CHECK(lattice_points(p, 1, PointFilter::All).size() == 2);
    // round trip
    CHECK(chart.lift(chart.project(Point{1, 2})) == Point{1, 2});
}

TEST_CASE("normalize preserves dilate counts") {
    std::vector<LatticePolytope> lower;
    lower.push_back(LatticePolytope::from_points(2, {Point{0, 0}, Point{1, 2}}));
    lower.push_back(LatticePolytope::from_points(3, {Point{1, 0, 1}, Point{2, 2, 0}, Point{0, 1, 3}}));
    lower.push_back(LatticePolytope::from_points(3, {Point{0, 0, 0}, Point{2, 0, 2}}));
    for (const auto& raw : lower) {
        auto [p, chart] = normalize_full_dimensional(raw);
        for (int m = 1; m <= p.dim() + 1; ++m)
            CHECK(testing::ambient_count(raw, m) == count_lattice_points(p, m).all);
    }
}

TEST_CASE("rank-0 polytope") {
    LatticePolytope pt = LatticePolytope::from_points(0, {Point{}});
    CHECK(pt.dim() == 0);
    CHECK(pt.facets().empty());
    CHECK(count_lattice_points(pt, 5).all == 1);
}
