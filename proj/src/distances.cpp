#include "kdisp/distances.hpp"

#include <algorithm>
#include <limits>

namespace kdisp {

std::size_t DistanceLadder::find(double value) const {
    const auto it = std::lower_bound(values_.begin(), values_.end(), value);
    if (it == values_.end() || *it != value) return size();
    return static_cast<std::size_t>(it - values_.begin());
}

DistanceLadder build_ladder(const ConvexPolygon& polygon) {
    const std::size_t n = polygon.size();
    if (n > std::numeric_limits<std::uint32_t>::max()) throw Error("polygon too large for a ladder");

    struct Entry {
        double value;
        std::uint32_t i;
        std::uint32_t j;
    };
    std::vector<Entry> entries;
    entries.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            entries.push_back(Entry{squared_distance(polygon[i], polygon[j]),
                                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    DistanceLadder ladder;
    for (const Entry& e : entries) {
        if (!ladder.values_.empty() && ladder.values_.back() == e.value) continue;
        ladder.values_.push_back(e.value);
        ladder.witnesses_.push_back({e.i, e.j});
    }
    ladder.values_.shrink_to_fit();
    ladder.witnesses_.shrink_to_fit();
    ladder.lo = 0;
    ladder.hi = ladder.values_.size();
    return ladder;
}

} // namespace kdisp
