#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "kdisp/decision.hpp"
#include "kdisp/distances.hpp"
#include "kdisp/oracle.hpp"
#include "support.hpp"

using namespace kdisp;
using kdisp::test::near;
using kdisp::test::pick;

TEST_SUITE("oracle") {

TEST_CASE("unit square") {
    const auto pts = test::square_points();
    const Packing p = oracle::brute_force_kdispersion(pts, 3);
    CHECK(p.radius_sq4 == 1.0);
    CHECK(p.centers == std::vector<std::size_t>{0, 1, 2});
    CHECK(oracle::brute_force_decide(pts, 3, 1.0));
    CHECK_FALSE(oracle::brute_force_decide(pts, 3, 2.0));
    CHECK(oracle::brute_force_kdispersion(pts, 2).radius_sq4 == 2.0);
}

TEST_CASE("regular hexagon") {
    const auto pts = generate_regular(6);
    const Packing p = oracle::brute_force_kdispersion(pts, 3);
    CHECK(near(p.radius_sq4, 3.0));
    REQUIRE(p.centers.size() == 3);
    CHECK(p.centers[1] - p.centers[0] == 2);
    CHECK(p.centers[2] - p.centers[1] == 2);
}

TEST_CASE("k = n takes every point") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto pts = generate_valtr(3 + seed, seed);
        const Packing p = oracle::brute_force_kdispersion(pts, pts.size());
        CHECK(p.centers.size() == pts.size());
        double m = 1e300;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) m = std::min(m, squared_distance(pts[i], pts[j]));
        CHECK(p.radius_sq4 == m);
    }
}

TEST_CASE("k = 1 is always feasible") {
    const auto pts = test::square_points();
    CHECK(oracle::brute_force_decide(pts, 1, 1e9));
    CHECK(oracle::brute_force_kdispersion(pts, 1).centers.size() == 1);
}

TEST_CASE("optimum ignores point order") {
    std::mt19937_64 rng(20);
    for (int inst = 0; inst < 30; ++inst) {
        auto pts = generate_valtr(pick(rng, 4, 12), rng());
        const std::size_t k = pick(rng, 2, std::min<std::size_t>(6, pts.size()));
        const double value = oracle::brute_force_kdispersion(pts, k).radius_sq4;
        for (int t = 0; t < 3; ++t) {
            std::shuffle(pts.begin(), pts.end(), rng);
            CHECK(oracle::brute_force_kdispersion(pts, k).radius_sq4 == value);
        }
    }
}

TEST_CASE("points need not be convex") {
    const std::vector<Point> pts{{0, 0}, {4, 0}, {2, 1}, {0, 4}, {4, 4}};
    CHECK(oracle::brute_force_kdispersion(pts, 4).radius_sq4 == 16.0);
    CHECK(oracle::brute_force_kdispersion(pts, 5).radius_sq4 == 5.0);
}

TEST_CASE("decide is monotone in the threshold") {
    std::mt19937_64 rng(21);
    for (int inst = 0; inst < 30; ++inst) {
        const ConvexPolygon p = test::valtr(pick(rng, 4, 12), rng());
        const std::vector<Point> pts(p.vertices().begin(), p.vertices().end());
        const std::size_t k = pick(rng, 2, std::min<std::size_t>(6, pts.size()));
        bool prev = true;
        for (double t : build_ladder(p).values()) {
            const bool ok = oracle::brute_force_decide(pts, k, t);
            if (!prev) CHECK_FALSE(ok);
            prev = ok;
        }
    }
}

TEST_CASE("scans") {
    const ConvexPolygon sq = test::unit_square();
    const ExtremeQuad q = oracle::scan_extreme_points(sq);
    CHECK(q.c == 2);
    CHECK(q.a == 0);
    CHECK(oracle::scan_diameter(sq).d_sq == 2.0);

    const ConvexPolygon hex = test::hexagon();
    const std::size_t e = oracle::scan_farthest_from_chord(hex, 0, 3);
    CHECK((e == 1 || e == 2 || e == 4 || e == 5));
    CHECK(oracle::scan_nearest_to_bisector(sq, 0, 3) == 1);
}

TEST_CASE("limits and parameters") {
    const auto pts = generate_valtr(40, 1);
    CHECK_THROWS_AS(oracle::brute_force_kdispersion(pts, 20), TooLarge);
    CHECK_THROWS_AS(oracle::brute_force_decide(pts, 20, 0.1), TooLarge);
    CHECK_THROWS_AS(oracle::brute_force_kdispersion(pts, 3, 100), TooLarge);
    CHECK_NOTHROW(oracle::brute_force_kdispersion(pts, 3));
    CHECK_THROWS_AS(oracle::brute_force_kdispersion(pts, 0), InvalidK);
    CHECK_THROWS_AS(oracle::brute_force_kdispersion(pts, 41), InvalidK);
    CHECK_THROWS_AS(oracle::brute_force_decide(pts, 41, 0.1), InvalidK);
}

} // TEST_SUITE
