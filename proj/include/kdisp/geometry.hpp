#ifndef KDISP_GEOMETRY_HPP
#define KDISP_GEOMETRY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "kdisp/errors.hpp"

namespace kdisp {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Squared Euclidean distance. Every distance comparison in the library goes
/// through this one formula.
inline double squared_distance(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

/// (b - a) x (c - a)
inline double cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

enum class Orientation { Clockwise, Counterclockwise, Collinear };

inline Orientation orientation(const Point& a, const Point& b, const Point& c) {
    const double v = cross(a, b, c);
    if (v > 0.0) return Orientation::Counterclockwise;
    if (v < 0.0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

/// Strictly convex polygon with vertices stored in clockwise order:
/// clockwise along the boundary means increasing index (mod n).
class ConvexPolygon {
public:
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    std::span<const Point> vertices() const { return vertices_; }

    std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
    std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

    /// Index of vertex `i` in the point list that was validated. Differs from
    /// `i` only when counter-clockwise input was reversed.
    std::size_t source_index(std::size_t i) const;
    /// Inverse of source_index.
    std::size_t from_source_index(std::size_t s) const;
    bool reversed() const { return reversed_; }

private:
    friend ConvexPolygon validate_convex(std::span<const Point> points);
    ConvexPolygon(std::vector<Point> vertices, bool reversed)
        : vertices_(std::move(vertices)), reversed_(reversed) {}

    std::vector<Point> vertices_;
    bool reversed_ = false;
};

/// Accepts a strictly convex cycle in either orientation. Counter-clockwise
/// input is normalized to clockwise by reversing around vertex 0; vertex 0
/// keeps its index. Throws RejectedInput naming the first offending index.
ConvexPolygon validate_convex(std::span<const Point> points);

/// Infinite line through `anchor` along `direction` (nonzero).
struct Line {
    Point anchor;
    Point direction;

    static Line through(const Point& p, const Point& q);
};

/// Perpendicular distance of `p` from `line`. The sign does not depend on the
/// direction the line was built with: the side with larger y is positive, and
/// for vertical lines the side with larger x is positive.
double signed_distance_to_line(const Line& line, const Point& p);

struct DiameterPair {
    std::size_t i = 0;
    std::size_t j = 0;
    double d_sq = 0.0;
};

/// Farthest vertex pair by rotating calipers, O(n).
DiameterPair diameter(const ConvexPolygon& polygon);

} // namespace kdisp

#endif
