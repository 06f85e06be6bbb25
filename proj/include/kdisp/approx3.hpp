#ifndef KDISP_APPROX3_HPP
#define KDISP_APPROX3_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kdisp/geometry.hpp"
#include "kdisp/packing.hpp"

namespace kdisp {

/// Read-through view of a polygon that remembers which vertices were looked
/// at. `accesses()` is the number of distinct vertices read so far; a vertex
/// read twice is served from the cache and counted once.
class VertexProbe {
public:
    explicit VertexProbe(const ConvexPolygon& polygon) : polygon_(polygon) {}

    const Point& operator()(std::size_t i);
    std::size_t accesses() const { return seen_.size(); }
    const std::map<std::size_t, Point>& seen() const { return seen_; }
    const ConvexPolygon& polygon() const { return polygon_; }
    std::size_t size() const { return polygon_.size(); }

private:
    const ConvexPolygon& polygon_;
    std::map<std::size_t, Point> seen_;
};

/// Vertices of minimum x, maximum y, maximum x and minimum y (ties: smallest index).
struct ExtremeQuad {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    std::size_t d = 0;
    std::size_t distinct_count = 0;

    /// Distinct indices in a, b, c, d order of first appearance.
    std::vector<std::size_t> distinct() const;
};

ExtremeQuad extreme_points(const ConvexPolygon& polygon);
ExtremeQuad extreme_points(VertexProbe& probe);

/// Vertex farthest from the line through vertices u and v, by one unimodal
/// search per boundary chain between them. Throws DegeneratePair if u == v.
std::size_t farthest_from_chord(const ConvexPolygon& polygon, std::size_t u, std::size_t v);
std::size_t farthest_from_chord(VertexProbe& probe, std::size_t u, std::size_t v);

/// The at most four vertices other than u and v adjacent to the two places
/// where the boundary crosses the perpendicular bisector of uv. The vertex
/// nearest to the bisector (u, v excluded) is always among them.
std::vector<std::size_t> nearest_to_bisector(const ConvexPolygon& polygon, std::size_t u, std::size_t v);
std::vector<std::size_t> nearest_to_bisector(VertexProbe& probe, std::size_t u, std::size_t v);

/// Twice the signed distance of p from the perpendicular bisector of uv,
/// scaled by |uv|: negative on u's side.
double bisector_offset(const Point& u, const Point& v, const Point& p);

/// Candidate list member closest to the bisector, ties by smallest index.
std::size_t nearest_of(const ConvexPolygon& polygon, std::size_t u, std::size_t v,
                       const std::vector<std::size_t>& candidates);

struct Triple {
    std::array<std::size_t, 3> centers{};
    double min_sq = 0.0; // smallest pairwise squared distance, i.e. (2r)^2
};

struct PairCases {
    std::size_t u = 0;
    std::size_t v = 0;
    bool evaluated = false; // false when skipped because |uv|^2 could not beat the best
    std::optional<Triple> farthest;  // u, v and the vertex farthest from line uv
    std::optional<Triple> bisector;  // u, v and the best vertex near the bisector of uv
};

struct CaseRadii {
    std::optional<Triple> extremes; // best triple of extreme points (needs 3 distinct)
    std::vector<PairCases> pairs;
};

struct Approx3Options {
    /// Skip a pair whose own distance cannot beat the best radius found so
    /// far. Never changes the returned packing.
    bool prune_pairs = true;
};

struct Approx3Result {
    Packing packing;
    ExtremeQuad extremes;
    CaseRadii cases;
    std::size_t vertex_accesses = 0;
};

/// Three disks on polygon vertices whose radius is at least 1/(2 sqrt 2) of
/// the optimum, from O(log n) vertex reads.
Approx3Result approx_3(const ConvexPolygon& polygon, const Approx3Options& options = {});

} // namespace kdisp

#endif
