#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fplab/distance.hpp"
#include "fplab/rng.hpp"
#include "test_util.hpp"

using namespace fplab;
using namespace fplab::testutil;

namespace {

FpSet make(std::uint32_t p, std::vector<std::uint32_t> elems) {
    return FpSet::from_elements(PrimeField(p), elems);
}

PointSet2D pts(std::uint32_t p, std::vector<Point2> v) {
    return PointSet2D::from_points(PrimeField(p), std::move(v));
}

// Quadruple oracle for bisector energy in a class: ordered (a,b,a',b') with
// a != b, a' != b', equal bisector lines of the requested kind.
long long bisector_energy_oracle(const PointSet2D& e, BisectorClass cls) {
    const auto& f = e.field;
    std::vector<Line2> lines;
    for (auto a : e.points)
        for (auto b : e.points) {
            if (a == b) continue;
            auto bl = bisector(f, a, b);
            if (cls == BisectorClass::NonIsotropic && bl.isotropic) continue;
            if (cls == BisectorClass::Isotropic && !bl.isotropic) continue;
            lines.push_back(bl.line);
        }
    long long total = 0;
    for (const auto& l1 : lines)
        for (const auto& l2 : lines)
            if (l1 == l2) ++total;
    return total;
}

}  // namespace

TEST_CASE("algdist examples") {
    PrimeField f7(7);
    std::vector<std::uint32_t> x{1, 2, 3, 4, 5}, zero{0, 0, 0, 0, 0};
    CHECK(algdist(f7, x, zero) == 6);  // 55 mod 7
    CHECK(algdist(f7, x, x) == 0);
    CHECK(algdist(f7, Point2{3, 1}, Point2{0, 0}, QuadraticForm::Minkowski) == 1);  // 9-1
    std::vector<std::uint32_t> y{1, 2};
    CHECK_THROWS_AS(algdist(f7, x, y), std::invalid_argument);
    CHECK_THROWS_AS(algdist(f7, x, x, QuadraticForm::Minkowski), std::invalid_argument);
}

TEST_CASE("distance_set_explicit examples") {
    CHECK(distance_set_explicit(pts(5, {{0, 0}, {1, 0}})) == make(5, {0, 1}));
    auto e = PointSetND::product_power(make(7, {0, 1}), 2);
    CHECK(distance_set_explicit(e) == make(7, {0, 1, 2}));
    CHECK(distance_set_explicit(pts(7, {{3, 4}})) == make(7, {0}));
}

TEST_CASE("distance_set_product examples and product identity") {
    CHECK(distance_set_product(make(7, {0, 1}), 5) == make(7, {0, 1, 2, 3, 4, 5}));
    auto full = FpSet::full(PrimeField(11));
    CHECK(distance_set_product(full, 3) == full);
    CHECK(distance_set_product(make(7, {0, 1}), 2) == make(7, {0, 1, 2}));

    SplitMix64 rng(101);
    for (std::uint32_t p : {11u, 31u, 101u}) {
        PrimeField f(p);
        for (int i = 0; i < 8; ++i) {
            auto a = random_set(f, 2 + rng.next_below(10), rng);
            CHECK(distance_set_product(a, 2) ==
                  distance_set_explicit(PointSetND::product_power(a, 2)));
        }
    }
    PrimeField f31(31);
    for (int i = 0; i < 5; ++i) {
        auto a = random_set(f31, 2 + rng.next_below(4), rng);
        CHECK(distance_set_product(a, 3) ==
              distance_set_explicit(PointSetND::product_power(a, 3)));
    }
}

TEST_CASE("sr_histogram examples") {
    auto h = sr_histogram(pts(5, {{0, 0}, {1, 0}}));
    CHECK(h.counts[0] == 2);
    CHECK(h.counts[1] == 2);
    CHECK(h.counts[2] == 0);

    auto single = sr_histogram(pts(5, {{2, 3}}));
    CHECK(single.counts[0] == 1);

    auto grid = sr_histogram(PointSet2D::product(make(5, {0, 1, 2})));
    CHECK(grid.total_mass() == 81);
}

TEST_CASE("distance_energy equals quadruple oracle") {
    CHECK(distance_energy(pts(5, {{0, 0}, {1, 0}})) == 4);
    CHECK(distance_energy(pts(5, {{2, 2}})) == 0);

    SplitMix64 rng(103);
    PrimeField f(11);
    for (int i = 0; i < 5; ++i) {
        auto e = PointSet2D::from_points(f, random_points2(f, 20, rng));
        // brute force over quadruples
        long long oracle = 0;
        for (auto x : e.points)
            for (auto y : e.points)
                for (auto z : e.points)
                    for (auto t : e.points) {
                        auto d1 = algdist(f, x, y);
                        if (d1 != 0 && d1 == algdist(f, z, t)) ++oracle;
                    }
        CHECK(distance_energy(e) == oracle);
    }
}

TEST_CASE("bisector examples") {
    PrimeField f(5);
    auto b1 = bisector(f, Point2{0, 0}, Point2{2, 0});
    CHECK(b1.line == Line2::from_coeffs(f, 1, 0, 1));  // X = 1
    CHECK(!b1.isotropic);

    auto b2 = bisector(f, Point2{0, 0}, Point2{1, 2});
    CHECK(b2.isotropic);  // 1 + 4 = 0 mod 5

    auto ab = bisector(f, Point2{1, 3}, Point2{4, 0});
    auto ba = bisector(f, Point2{4, 0}, Point2{1, 3});
    CHECK(ab.line == ba.line);

    CHECK_THROWS_AS(bisector(f, Point2{1, 1}, Point2{1, 1}), std::invalid_argument);
}

TEST_CASE("bisector is the locus of equidistant points") {
    PrimeField f(13);
    SplitMix64 rng(107);
    for (int i = 0; i < 30; ++i) {
        Point2 a{(std::uint32_t)rng.next_below(13), (std::uint32_t)rng.next_below(13)};
        Point2 b{(std::uint32_t)rng.next_below(13), (std::uint32_t)rng.next_below(13)};
        if (a == b) continue;
        auto bl = bisector(f, a, b);
        for (std::uint32_t x = 0; x < 13; ++x)
            for (std::uint32_t y = 0; y < 13; ++y) {
                Point2 u{x, y};
                CHECK(bl.line.contains(f, u) == (algdist(f, u, a) == algdist(f, u, b)));
            }
    }
}

TEST_CASE("bisector_census examples and oracle") {
    auto e = pts(5, {{0, 0}, {2, 0}});
    auto census = bisector_census(e, BisectorClass::NonIsotropic);
    CHECK(census.lines.support_size() == 1);
    CHECK(census.lines.mass() == 2);
    CHECK(census.energy_nonisotropic == 4);
    CHECK(census.energy_isotropic == 0);

    auto empty = bisector_census(pts(5, {{1, 1}}), BisectorClass::All);
    CHECK(empty.lines.mass() == 0);

    SplitMix64 rng(109);
    PrimeField f(11);
    for (int i = 0; i < 5; ++i) {
        auto ee = PointSet2D::from_points(f, random_points2(f, 15, rng));
        for (auto cls :
             {BisectorClass::NonIsotropic, BisectorClass::Isotropic, BisectorClass::All}) {
            auto c = bisector_census(ee, cls);
            long long energy = c.energy_nonisotropic + c.energy_isotropic;
            CHECK(energy == bisector_energy_oracle(ee, cls));
        }
        // mass over all classes = |E|^2 - |E|
        auto all = bisector_census(ee, BisectorClass::All);
        CHECK(all.lines.mass() ==
              (long long)ee.size() * (long long)ee.size() - (long long)ee.size());
    }
}

TEST_CASE("bisector energy invariant under common translation") {
    PrimeField f(13);
    SplitMix64 rng(113);
    auto base = random_points2(f, 12, rng);
    auto e = PointSet2D::from_points(f, base);
    auto c0 = bisector_census(e, BisectorClass::All);
    std::uint32_t tx = 5, ty = 9;
    std::vector<Point2> shifted;
    for (auto u : base) shifted.push_back(Point2{f.add(u.x, tx), f.add(u.y, ty)});
    auto c1 = bisector_census(PointSet2D::from_points(f, shifted), BisectorClass::All);
    CHECK(c0.energy_nonisotropic == c1.energy_nonisotropic);
    CHECK(c0.energy_isotropic == c1.energy_isotropic);
}

TEST_CASE("translation and dilation behavior of distance sets") {
    PrimeField f(13);
    SplitMix64 rng(127);
    auto base = random_points2(f, 10, rng);
    auto e = PointSet2D::from_points(f, base);
    auto delta = distance_set_explicit(e);

    std::vector<Point2> shifted;
    for (auto u : base) shifted.push_back(Point2{f.add(u.x, 7), f.add(u.y, 3)});
    CHECK(distance_set_explicit(PointSet2D::from_points(f, shifted)) == delta);

    std::uint32_t c = 4;
    std::vector<Point2> scaled;
    for (auto u : base) scaled.push_back(Point2{f.mul(u.x, c), f.mul(u.y, c)});
    auto scaled_delta = distance_set_explicit(PointSet2D::from_points(f, scaled));
    FpSet expected(f);
    for (auto r : delta.elements()) expected.insert(f.mul(r, f.sq(c)));
    CHECK(scaled_delta == expected);
}

TEST_CASE("isosceles_census examples") {
    auto apexes = pts(5, {{0, 0}});
    auto bases = pts(5, {{1, 0}, {0, 1}});
    auto c = isosceles_census(apexes, bases);
    CHECK(c.t1 == 2);
    CHECK(c.t2_degenerate == 2);
    CHECK(c.t2_isotropic == 0);

    auto c2 = isosceles_census(apexes, pts(5, {{1, 0}}));
    CHECK(c2.t1 == 0);
    CHECK(c2.t2_isotropic == 0);

    // T2_degenerate counts apex-base pairs at nonzero distance
    SplitMix64 rng(131);
    PrimeField f(11);
    auto ap = PointSet2D::from_points(f, random_points2(f, 8, rng));
    auto bs = PointSet2D::from_points(f, random_points2(f, 8, rng));
    long long nonzero_pairs = 0;
    for (auto x : ap.points)
        for (auto y : bs.points)
            if (algdist(f, x, y) != 0) ++nonzero_pairs;
    CHECK(isosceles_census(ap, bs).t2_degenerate == nonzero_pairs);
}

TEST_CASE("isosceles census agrees with direct triple enumeration") {
    SplitMix64 rng(137);
    for (std::uint32_t p : {5u, 13u}) {  // 13 = 1 mod 4 exercises isotropic pairs
        PrimeField f(p);
        for (int i = 0; i < 5; ++i) {
            auto ap = PointSet2D::from_points(f, random_points2(f, 10, rng));
            auto bs = PointSet2D::from_points(f, random_points2(f, 10, rng));
            IsoscelesCensus oracle;
            for (auto x : ap.points)
                for (auto y : bs.points)
                    for (auto z : bs.points) {
                        auto d1 = algdist(f, x, y);
                        if (d1 == 0 || d1 != algdist(f, x, z)) continue;
                        if (y == z)
                            ++oracle.t2_degenerate;
                        else if (algdist(f, y, z) == 0)
                            ++oracle.t2_isotropic;
                        else
                            ++oracle.t1;
                    }
            auto c = isosceles_census(ap, bs);
            CHECK(c.t1 == oracle.t1);
            CHECK(c.t2_degenerate == oracle.t2_degenerate);
            CHECK(c.t2_isotropic == oracle.t2_isotropic);
        }
    }
}

TEST_CASE("isosceles_via_incidence equals census T1") {
    auto apexes = pts(5, {{0, 0}});
    auto bases = pts(5, {{1, 0}, {0, 1}});
    CHECK(isosceles_via_incidence(apexes, bases) == 2);

    CHECK(isosceles_via_incidence(pts(5, {{0, 0}}), pts(5, {{1, 0}})) == 0);

    SplitMix64 rng(139);
    for (std::uint32_t p : {11u, 13u, 101u}) {  // include p = 1 mod 4
        PrimeField f(p);
        for (int i = 0; i < 6; ++i) {
            auto ap = PointSet2D::from_points(f, random_points2(f, 16, rng));
            auto bs = PointSet2D::from_points(f, random_points2(f, 16, rng));
            CHECK(isosceles_via_incidence(ap, bs) == isosceles_census(ap, bs).t1);
        }
    }
}

TEST_CASE("max_line_circle_occupancy examples") {
    auto grid = PointSet2D::product(make(7, {0, 1, 2}));
    // rows give 3; the circle of radius 2 about (1,1) picks up all 4 corners
    CHECK(max_line_circle_occupancy(grid) == 4);

    CHECK(max_line_circle_occupancy(pts(7, {{1, 2}, {4, 5}})) == 2);

    // product grids always reach at least |A| on an axis-parallel row
    auto g2 = PointSet2D::product(make(11, {0, 2, 5, 6}));
    CHECK(max_line_circle_occupancy(g2) >= 4);
}

TEST_CASE("budget guards throw BudgetError") {
    PrimeField f(11);
    std::vector<Point2> many;
    for (std::uint32_t x = 0; x < 11; ++x)
        for (std::uint32_t y = 0; y < 11; ++y) many.push_back(Point2{x, y});
    auto e = PointSet2D::from_points(f, many);  // 121 points
    CHECK_THROWS_AS(
        isosceles_census(PointSet2D::product(FpSet::full(PrimeField(101))),
                         PointSet2D::product(FpSet::full(PrimeField(101)))),
        BudgetError);
    (void)e;
}
