#ifndef KDISP_ORACLE_HPP
#define KDISP_ORACLE_HPP

// Exhaustive and linear-scan references. Deliberately naive: these are the
// ground truth the fast paths are tested against.

#include <cstddef>
#include <span>

#include "kdisp/approx3.hpp"
#include "kdisp/geometry.hpp"
#include "kdisp/packing.hpp"

namespace kdisp::oracle {

inline constexpr double kDefaultSubsetLimit = 1e7;

/// Best k-subset by enumerating all of them in lexicographic order; the first
/// subset reaching the optimum wins. Works for any point set, convex or not.
Packing brute_force_kdispersion(std::span<const Point> points, std::size_t k,
                                double subset_limit = kDefaultSubsetLimit);

bool brute_force_decide(std::span<const Point> points, std::size_t k, double four_r_sq,
                        double subset_limit = kDefaultSubsetLimit);

DiameterPair scan_diameter(const ConvexPolygon& polygon);
ExtremeQuad scan_extreme_points(const ConvexPolygon& polygon);
std::size_t scan_farthest_from_chord(const ConvexPolygon& polygon, std::size_t u, std::size_t v);
/// Vertex other than u and v closest to the perpendicular bisector of uv.
std::size_t scan_nearest_to_bisector(const ConvexPolygon& polygon, std::size_t u, std::size_t v);

} // namespace kdisp::oracle

#endif
