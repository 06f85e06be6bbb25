#ifndef KDISP_PACKING_HPP
#define KDISP_PACKING_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "kdisp/geometry.hpp"

namespace kdisp {

/// k disk centers (vertex indices, ascending) and the packed radius, stored as
/// (2r)^2.
struct Packing {
    std::vector<std::size_t> centers;
    double radius_sq4 = 0.0;

    double radius() const { return std::sqrt(radius_sq4) / 2.0; }
};

/// Smallest squared distance among the given points; +inf for fewer than two.
double min_pairwise_sq(std::span<const Point> points, std::span<const std::size_t> indices);

inline double min_pairwise_sq(const ConvexPolygon& polygon, std::span<const std::size_t> indices) {
    return min_pairwise_sq(polygon.vertices(), indices);
}

} // namespace kdisp

#endif
