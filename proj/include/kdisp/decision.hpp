#ifndef KDISP_DECISION_HPP
#define KDISP_DECISION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kdisp/geometry.hpp"
#include "kdisp/packing.hpp"

namespace kdisp {

/// For one threshold t = (2r)^2: per vertex s, the vertices u with
/// squared_distance(s, u) >= t, as maximal runs along the clockwise walk
/// starting just after s.
class CandidateTable {
public:
    /// Inclusive run of clockwise offsets from the owning vertex, 1 <= from <= to <= n-1.
    struct Interval {
        std::uint32_t from;
        std::uint32_t to;
    };

    CandidateTable(const ConvexPolygon& polygon, double four_r_sq);

    std::size_t size() const { return offsets_.size() - 1; }
    double threshold() const { return four_r_sq_; }
    std::span<const Interval> intervals(std::size_t s) const {
        return {intervals_.data() + offsets_[s], intervals_.data() + offsets_[s + 1]};
    }
    bool contains(std::size_t s, std::size_t u) const;

private:
    double four_r_sq_;
    std::vector<std::size_t> offsets_;
    std::vector<Interval> intervals_;
};

inline CandidateTable precompute_candidates(const ConvexPolygon& polygon, double four_r_sq) {
    return CandidateTable(polygon, four_r_sq);
}

enum class Direction { Clockwise, Counterclockwise };

/// A node of the 2-way search tree. `cw` and `ccw` are the frontier centers;
/// every placed center lies on the closed arc from `ccw` clockwise to `cw`.
struct SearchState {
    std::size_t start = 0;
    std::size_t cw = 0;
    std::size_t ccw = 0;
    std::vector<std::size_t> placed;

    static SearchState root(std::size_t start) { return SearchState{start, start, start, {start}}; }
    SearchState extended(std::size_t center, Direction dir) const;
};

/// First vertex beyond the `dir` frontier, inside the open arc between the
/// frontiers that avoids `start`, at squared distance >= four_r_sq from every
/// placed center. Skips ahead through the candidate runs of the placed centers.
std::optional<std::size_t> next_center(const ConvexPolygon& polygon, const SearchState& state,
                                       Direction dir, double four_r_sq, const CandidateTable& table);

/// Same contract as next_center, by a plain boundary walk.
std::optional<std::size_t> next_center_naive(const ConvexPolygon& polygon, const SearchState& state,
                                             Direction dir, double four_r_sq);

enum class Engine { Fast, Naive };

struct DecideOptions {
    Engine engine = Engine::Fast;
    bool parallel = false;
    unsigned threads = 0; // 0: hardware concurrency
};

struct DecideResult {
    std::optional<Packing> packing;
    std::uint64_t nodes = 0; // search-tree nodes visited, roots included

    bool feasible() const { return packing.has_value(); }
};

/// Can k vertices be chosen with pairwise squared distance >= four_r_sq?
/// Roots are tried in index order, each explored depth first with the
/// clockwise child before the counter-clockwise one; the witness is the first
/// success in that order, also when roots are searched in parallel.
DecideResult decide(const ConvexPolygon& polygon, std::size_t k, double four_r_sq,
                    const DecideOptions& options = {});

/// Fast-engine decide against a table already built for four_r_sq.
DecideResult decide(const ConvexPolygon& polygon, std::size_t k, const CandidateTable& table,
                    const DecideOptions& options = {});

} // namespace kdisp

#endif
