#include "kdisp/exact.hpp"

#include <algorithm>

namespace kdisp {

ExactResult solve_exact(const ConvexPolygon& polygon, std::size_t k, const DecideOptions& options) {
    if (k < 2 || k > polygon.size()) throw InvalidK(k, 2, polygon.size());
    DistanceLadder ladder = build_ladder(polygon);
    return solve_exact(polygon, k, ladder, options);
}

ExactResult solve_exact(const ConvexPolygon& polygon, std::size_t k, DistanceLadder& ladder,
                        const DecideOptions& options) {
    if (k < 2 || k > polygon.size()) throw InvalidK(k, 2, polygon.size());

    ExactResult result;
    result.ladder_size = ladder.size();
    auto probe = [&](std::size_t idx) {
        const double threshold = ladder[idx];
        DecideResult d = options.engine == Engine::Fast
                             ? decide(polygon, k, CandidateTable(polygon, threshold), options)
                             : decide(polygon, k, threshold, options);
        ++result.decide_calls;
        result.total_nodes += d.nodes;
        result.max_nodes_per_decide = std::max(result.max_nodes_per_decide, d.nodes);
        return d;
    };

    // ladder[0] is feasible for any k <= n; hi starts one past the end.
    ladder.lo = 0;
    ladder.hi = ladder.size();
    std::optional<Packing> witness;
    while (ladder.hi - ladder.lo > 1) {
        const std::size_t mid = ladder.lo + (ladder.hi - ladder.lo) / 2;
        DecideResult d = probe(mid);
        if (d.feasible()) {
            ladder.lo = mid;
            witness = std::move(d.packing);
        } else {
            ladder.hi = mid;
        }
    }
    if (!witness) {
        DecideResult d = probe(ladder.lo);
        if (!d.feasible()) throw Error("smallest ladder value reported infeasible");
        witness = std::move(d.packing);
    }
    result.packing = std::move(*witness);
    return result;
}

} // namespace kdisp
