#ifndef KDISP_GENERATORS_HPP
#define KDISP_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kdisp/geometry.hpp"

namespace kdisp {

enum class Shape { Valtr, Regular, Circle };

std::optional<Shape> parse_shape(std::string_view name);
const char* to_string(Shape shape);

/// Uniformly random convex polygon in the unit square (Valtr's method).
std::vector<Point> generate_valtr(std::size_t n, std::uint64_t seed);

/// Regular n-gon on the unit circle, vertex 0 at the top, clockwise.
std::vector<Point> generate_regular(std::size_t n);

/// n points on the unit circle, one per equal angular sector with seeded
/// jitter inside the middle half of the sector, clockwise.
std::vector<Point> generate_circle(std::size_t n, std::uint64_t seed);

/// Dispatch; output is deterministic in (shape, n, seed) and always passes
/// validate_convex. Throws std::invalid_argument for n < 3.
std::vector<Point> generate(Shape shape, std::size_t n, std::uint64_t seed);

} // namespace kdisp

#endif
