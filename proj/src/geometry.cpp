#include "kdisp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace kdisp {

const char* to_string(RejectReason reason) {
    switch (reason) {
    case RejectReason::NotConvex: return "NotConvex";
    case RejectReason::Collinear: return "Collinear";
    case RejectReason::Duplicate: return "Duplicate";
    case RejectReason::TooFew: return "TooFew";
    case RejectReason::NonFinite: return "NonFinite";
    }
    return "Unknown";
}

RejectedInput::RejectedInput(RejectReason reason, std::size_t index)
    : Error(std::string("rejected input: ") + to_string(reason) + " at index " +
            std::to_string(index)),
      reason_(reason), index_(index) {}

InvalidK::InvalidK(std::size_t k, std::size_t lo, std::size_t hi)
    : Error("invalid k = " + std::to_string(k) + ", expected " + std::to_string(lo) +
            " <= k <= " + std::to_string(hi)) {}

DegeneratePair::DegeneratePair(std::size_t index)
    : Error("degenerate pair: both endpoints are vertex " + std::to_string(index)) {}

std::size_t ConvexPolygon::source_index(std::size_t i) const {
    if (!reversed_ || i == 0) return i;
    return size() - i;
}

std::size_t ConvexPolygon::from_source_index(std::size_t s) const {
    // the reversal map is an involution
    return source_index(s);
}

namespace {

void check_duplicates(std::span<const Point> points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Point& p = points[a];
        const Point& q = points[b];
        if (p.x != q.x) return p.x < q.x;
        if (p.y != q.y) return p.y < q.y;
        return a < b;
    });
    std::size_t offender = points.size();
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (points[order[i]] == points[order[i - 1]] &&
            !(i >= 2 && points[order[i - 1]] == points[order[i - 2]])) {
            offender = std::min(offender, order[i]);
        }
    }
    if (offender != points.size()) throw RejectedInput(RejectReason::Duplicate, offender);
}

} // namespace

ConvexPolygon validate_convex(std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n < 3) throw RejectedInput(RejectReason::TooFew, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y))
            throw RejectedInput(RejectReason::NonFinite, i);
    }
    check_duplicates(points);

    // Triple (i, i+1, i+2) is charged to its middle vertex.
    Orientation reference = Orientation::Collinear;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t mid = (i + 1) % n;
        const Orientation o = orientation(points[i], points[mid], points[(i + 2) % n]);
        if (o == Orientation::Collinear) throw RejectedInput(RejectReason::Collinear, mid);
        if (reference == Orientation::Collinear) reference = o;
        if (o != reference) throw RejectedInput(RejectReason::NotConvex, mid);
    }

    // Consistent turns can still wind around more than once (a star polygon).
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = points[i];
        const Point& b = points[(i + 1) % n];
        const Point& c = points[(i + 2) % n];
        const double ux = b.x - a.x, uy = b.y - a.y;
        const double vx = c.x - b.x, vy = c.y - b.y;
        turning += std::abs(std::atan2(ux * vy - uy * vx, ux * vx + uy * vy));
        if (turning > 3.0 * std::numbers::pi) {
            throw RejectedInput(RejectReason::NotConvex, (i + 1) % n);
        }
    }

    std::vector<Point> vertices(points.begin(), points.end());
    const bool reversed = reference == Orientation::Counterclockwise;
    if (reversed) std::reverse(vertices.begin() + 1, vertices.end());
    return ConvexPolygon(std::move(vertices), reversed);
}

Line Line::through(const Point& p, const Point& q) {
    if (p == q) throw Error("line through two identical points");
    return Line{p, Point{q.x - p.x, q.y - p.y}};
}

double signed_distance_to_line(const Line& line, const Point& p) {
    double nx = -line.direction.y;
    double ny = line.direction.x;
    if (ny < 0.0 || (ny == 0.0 && nx < 0.0)) {
        nx = -nx;
        ny = -ny;
    }
    const double dot = nx * (p.x - line.anchor.x) + ny * (p.y - line.anchor.y);
    return dot / std::hypot(nx, ny);
}

DiameterPair diameter(const ConvexPolygon& polygon) {
    const std::size_t n = polygon.size();
    DiameterPair best{0, 1, squared_distance(polygon[0], polygon[1])};
    auto consider = [&](std::size_t a, std::size_t b) {
        const double d = squared_distance(polygon[a], polygon[b]);
        if (d > best.d_sq) best = DiameterPair{std::min(a, b), std::max(a, b), d};
    };

    // For each edge (i, i+1) advance j to the vertex farthest from the edge's
    // supporting line; the farthest pair is among the antipodal pairs visited.
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ni = polygon.next(i);
        auto height = [&](std::size_t v) {
            return std::abs(cross(polygon[i], polygon[ni], polygon[v]));
        };
        if (j == i) j = ni;
        while (height(polygon.next(j)) > height(j)) j = polygon.next(j);
        consider(i, j);
        consider(ni, j);
        consider(i, polygon.next(j));
        consider(ni, polygon.next(j));
    }
    return best;
}

} // namespace kdisp
