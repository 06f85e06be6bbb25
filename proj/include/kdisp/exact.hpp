#ifndef KDISP_EXACT_HPP
#define KDISP_EXACT_HPP

#include <cstddef>
#include <cstdint>

#include "kdisp/decision.hpp"
#include "kdisp/distances.hpp"
#include "kdisp/geometry.hpp"
#include "kdisp/packing.hpp"

namespace kdisp {

struct ExactResult {
    Packing packing;
    std::size_t ladder_size = 0;
    std::size_t decide_calls = 0;
    std::uint64_t total_nodes = 0;
    std::uint64_t max_nodes_per_decide = 0;
};

/// Optimal k-dispersion by binary search over the distance ladder. Keeps the
/// cursors so that ladder[lo] is feasible and ladder[hi] (if any) is not;
/// the candidate table is rebuilt for every probed threshold.
ExactResult solve_exact(const ConvexPolygon& polygon, std::size_t k, const DecideOptions& options = {});

/// Same, on a ladder the caller already built (its cursors are reset).
ExactResult solve_exact(const ConvexPolygon& polygon, std::size_t k, DistanceLadder& ladder,
                        const DecideOptions& options = {});

} // namespace kdisp

#endif
