#include "kdisp/decision.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace kdisp {

double min_pairwise_sq(std::span<const Point> points, std::span<const std::size_t> indices) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            best = std::min(best, squared_distance(points[indices[a]], points[indices[b]]));
        }
    }
    return best;
}

CandidateTable::CandidateTable(const ConvexPolygon& polygon, double four_r_sq)
    : four_r_sq_(four_r_sq) {
    const std::size_t n = polygon.size();
    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    for (std::size_t s = 0; s < n; ++s) {
        bool open = false;
        for (std::size_t o = 1; o < n; ++o) {
            std::size_t u = s + o;
            if (u >= n) u -= n;
            const bool far = squared_distance(polygon[s], polygon[u]) >= four_r_sq;
            if (far && !open) {
                intervals_.push_back({static_cast<std::uint32_t>(o), static_cast<std::uint32_t>(o)});
                open = true;
            } else if (far) {
                intervals_.back().to = static_cast<std::uint32_t>(o);
            } else {
                open = false;
            }
        }
        offsets_.push_back(intervals_.size());
    }
}

bool CandidateTable::contains(std::size_t s, std::size_t u) const {
    const std::size_t n = size();
    if (u == s) return false;
    const auto o = static_cast<std::uint32_t>((u + n - s) % n);
    const auto runs = intervals(s);
    const auto it = std::lower_bound(runs.begin(), runs.end(), o,
                                     [](const Interval& iv, std::uint32_t v) { return iv.to < v; });
    return it != runs.end() && it->from <= o;
}

SearchState SearchState::extended(std::size_t center, Direction dir) const {
    SearchState next = *this;
    next.placed.push_back(center);
    if (dir == Direction::Clockwise) {
        next.cw = center;
    } else {
        next.ccw = center;
    }
    return next;
}

namespace {

bool clears_all(const ConvexPolygon& polygon, std::span<const std::size_t> placed, std::size_t u,
                double four_r_sq) {
    for (std::size_t p : placed) {
        if (squared_distance(polygon[u], polygon[p]) < four_r_sq) return false;
    }
    return true;
}

// Number of vertices strictly between the frontiers, plus one, measured from
// `from` in the walking direction. Equal frontiers leave the whole cycle open.
std::size_t arc_limit(std::size_t n, std::size_t from, std::size_t to, Direction dir) {
    const std::size_t d = dir == Direction::Clockwise ? (to + n - from) % n : (from + n - to) % n;
    return d == 0 ? n : d;
}

} // namespace

namespace {

// First clockwise offset >= q (measured from s) inside a run of A_s, if any.
std::optional<std::size_t> first_at_or_after(const CandidateTable& table, std::size_t s, std::size_t q) {
    const auto runs = table.intervals(s);
    const auto it = std::lower_bound(runs.begin(), runs.end(), q,
                                     [](const CandidateTable::Interval& iv, std::size_t v) { return iv.to < v; });
    if (it == runs.end()) return std::nullopt;
    return std::max<std::size_t>(it->from, q);
}

// Last clockwise offset <= q (measured from s) inside a run of A_s, if any.
std::optional<std::size_t> last_at_or_before(const CandidateTable& table, std::size_t s, std::size_t q) {
    const auto runs = table.intervals(s);
    const auto it = std::upper_bound(runs.begin(), runs.end(), q,
                                     [](std::size_t v, const CandidateTable::Interval& iv) { return v < iv.from; });
    if (it == runs.begin()) return std::nullopt;
    return std::min<std::size_t>(std::prev(it)->to, q);
}

} // namespace

std::optional<std::size_t> next_center(const ConvexPolygon& polygon, const SearchState& state,
                                       Direction dir, double four_r_sq, const CandidateTable& table) {
    (void)four_r_sq;
    const std::size_t n = polygon.size();
    const bool cw = dir == Direction::Clockwise;
    const std::size_t f = cw ? state.cw : state.ccw;
    const std::size_t limit = arc_limit(n, f, cw ? state.ccw : state.cw, dir);
    // Position = steps from f in the walking direction, valid in [1, limit - 1].
    // Placed centers lie outside the open arc: their offsets never wrap.
    std::size_t pos = 1;
    if (pos >= limit) return std::nullopt;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t p : state.placed) {
            const std::size_t u = cw ? (f + pos) % n : (f + n - pos) % n;
            const std::size_t q = (u + n - p) % n;
            const auto hit = cw ? first_at_or_after(table, p, q) : last_at_or_before(table, p, q);
            if (!hit) return std::nullopt;
            const std::size_t step = cw ? *hit - q : q - *hit;
            if (step == 0) continue;
            pos += step;
            if (pos >= limit) return std::nullopt;
            moved = true;
        }
    }
    return cw ? (f + pos) % n : (f + n - pos) % n;
}

std::optional<std::size_t> next_center_naive(const ConvexPolygon& polygon, const SearchState& state,
                                             Direction dir, double four_r_sq) {
    if (dir == Direction::Clockwise) {
        for (std::size_t u = polygon.next(state.cw); u != state.ccw; u = polygon.next(u)) {
            if (clears_all(polygon, state.placed, u, four_r_sq)) return u;
        }
    } else {
        for (std::size_t u = polygon.prev(state.ccw); u != state.cw; u = polygon.prev(u)) {
            if (clears_all(polygon, state.placed, u, four_r_sq)) return u;
        }
    }
    return std::nullopt;
}

namespace {

class RootSearch {
public:
    RootSearch(const ConvexPolygon& polygon, std::size_t k, double four_r_sq,
               const CandidateTable* table)
        : polygon_(polygon), k_(k), four_r_sq_(four_r_sq), table_(table) {}

    bool run(std::size_t start) {
        state_ = SearchState::root(start);
        return expand();
    }

    const std::vector<std::size_t>& placed() const { return state_.placed; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::optional<std::size_t> child(Direction dir) const {
        if (table_ != nullptr) return next_center(polygon_, state_, dir, four_r_sq_, *table_);
        return next_center_naive(polygon_, state_, dir, four_r_sq_);
    }

    bool expand() {
        ++nodes_;
        if (state_.placed.size() == k_) return true;
        for (Direction dir : {Direction::Clockwise, Direction::Counterclockwise}) {
            const auto u = child(dir);
            if (!u) continue;
            const std::size_t saved_cw = state_.cw;
            const std::size_t saved_ccw = state_.ccw;
            state_.placed.push_back(*u);
            (dir == Direction::Clockwise ? state_.cw : state_.ccw) = *u;
            if (expand()) return true;
            state_.placed.pop_back();
            state_.cw = saved_cw;
            state_.ccw = saved_ccw;
        }
        return false;
    }

    const ConvexPolygon& polygon_;
    std::size_t k_;
    double four_r_sq_;
    const CandidateTable* table_;
    SearchState state_;
    std::uint64_t nodes_ = 0;
};

Packing make_packing(std::vector<std::size_t> centers, double four_r_sq) {
    std::sort(centers.begin(), centers.end());
    return Packing{std::move(centers), four_r_sq};
}

DecideResult decide_impl(const ConvexPolygon& polygon, std::size_t k, double four_r_sq,
                         const CandidateTable* table, const DecideOptions& options) {
    const std::size_t n = polygon.size();
    if (k < 1 || k > n) throw InvalidK(k, 1, n);
    if (!(four_r_sq >= 0.0)) throw Error("decision threshold must be a non-negative number");

    DecideResult result;
    if (k == 1) {
        result.nodes = 1;
        result.packing = make_packing({0}, four_r_sq);
        return result;
    }

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    if (!options.parallel || threads <= 1) {
        RootSearch search(polygon, k, four_r_sq, table);
        for (std::size_t s = 0; s < n; ++s) {
            if (search.run(s)) {
                result.packing = make_packing(search.placed(), four_r_sq);
                break;
            }
        }
        result.nodes = search.nodes();
        return result;
    }

    // Parallel roots: any success at root s cancels roots > s, and the
    // smallest successful root wins, matching the sequential witness.
    std::atomic<std::size_t> next_root{0};
    std::atomic<std::size_t> best_root{n};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex mutex;
    std::vector<std::size_t> witness;
    auto worker = [&] {
        RootSearch search(polygon, k, four_r_sq, table);
        for (;;) {
            const std::size_t s = next_root.fetch_add(1);
            if (s >= n || s > best_root.load()) break;
            if (search.run(s)) {
                std::lock_guard lock(mutex);
                if (s < best_root.load()) {
                    best_root.store(s);
                    witness = search.placed();
                }
            }
        }
        nodes.fetch_add(search.nodes());
    };
    std::vector<std::jthread> pool;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();

    result.nodes = nodes.load();
    if (best_root.load() < n) result.packing = make_packing(std::move(witness), four_r_sq);
    return result;
}

} // namespace

DecideResult decide(const ConvexPolygon& polygon, std::size_t k, double four_r_sq,
                    const DecideOptions& options) {
    if (options.engine == Engine::Naive) return decide_impl(polygon, k, four_r_sq, nullptr, options);
    if (k < 1 || k > polygon.size()) throw InvalidK(k, 1, polygon.size());
    const CandidateTable table(polygon, four_r_sq);
    return decide_impl(polygon, k, four_r_sq, &table, options);
}

DecideResult decide(const ConvexPolygon& polygon, std::size_t k, const CandidateTable& table,
                    const DecideOptions& options) {
    if (table.size() != polygon.size()) throw Error("candidate table built for another polygon");
    return decide_impl(polygon, k, table.threshold(), &table, options);
}

} // namespace kdisp
