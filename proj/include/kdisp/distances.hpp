#ifndef KDISP_DISTANCES_HPP
#define KDISP_DISTANCES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kdisp/geometry.hpp"

namespace kdisp {

/// Sorted distinct squared pairwise distances of a polygon's vertices. The
/// optimal (2 r_max)^2 is always one of these values.
class DistanceLadder {
public:
    struct Witness {
        std::uint32_t i;
        std::uint32_t j;
    };

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t idx) const { return values_[idx]; }
    const std::vector<double>& values() const { return values_; }
    Witness witness(std::size_t idx) const { return witnesses_[idx]; }

    /// Position of `value` in the ladder, or size() if absent.
    std::size_t find(double value) const;
    bool contains(double value) const { return find(value) != size(); }

    // Binary-search cursors: the answer lies in [lo, hi).
    std::size_t lo = 0;
    std::size_t hi = 0;

private:
    friend DistanceLadder build_ladder(const ConvexPolygon& polygon);
    std::vector<double> values_;
    std::vector<Witness> witnesses_;
};

/// All unordered vertex pairs, sorted and deduplicated by exact equality.
/// O(n^2 log n) time, O(n^2) transient memory.
DistanceLadder build_ladder(const ConvexPolygon& polygon);

} // namespace kdisp

#endif
