#ifndef KDISP_TESTS_SUPPORT_HPP
#define KDISP_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "kdisp/generators.hpp"
#include "kdisp/geometry.hpp"

namespace kdisp::test {

inline std::vector<Point> square_points() { return {{0, 0}, {0, 1}, {1, 1}, {1, 0}}; }

inline ConvexPolygon unit_square() { return validate_convex(square_points()); }

inline ConvexPolygon regular(std::size_t n) { return validate_convex(generate_regular(n)); }

inline ConvexPolygon hexagon() { return regular(6); }

inline ConvexPolygon valtr(std::size_t n, std::uint64_t seed) { return validate_convex(generate_valtr(n, seed)); }

inline bool near(double a, double b, double tol = 1e-12) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

/// Seeded integer in [lo, hi].
inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

} // namespace kdisp::test

#endif
