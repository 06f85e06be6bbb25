#include "kdisp/approx3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kdisp {

const Point& VertexProbe::operator()(std::size_t i) {
    auto it = seen_.find(i);
    if (it == seen_.end()) it = seen_.emplace(i, polygon_[i]).first;
    return it->second;
}

std::vector<std::size_t> ExtremeQuad::distinct() const {
    std::vector<std::size_t> out;
    for (std::size_t i : {a, b, c, d}) {
        if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
    }
    return out;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.3819660112501051; // 2 - phi

/// Positions along the boundary counted clockwise from `base`.
struct Walk {
    std::size_t base;
    std::size_t n;

    std::size_t index(long long pos) const { return (base + static_cast<std::size_t>(pos)) % n; }
    long long position(std::size_t idx) const {
        return static_cast<long long>((idx + n - base) % n);
    }
};

/// Maximum of f over a bracket (l, x, r) of positions with f(x) > f(l),
/// f(x) >= f(r) and the maximizer in (l, r]. Needs only that f is bitonic
/// along the cycle, not that the bracket avoids the minimum. Golden-section
/// refinement; vertices already in the probe's cache tighten the bracket
/// before any new read.
template <class F>
std::size_t bracketed_max(VertexProbe& probe, const Walk& walk, long long l, double fl, long long x,
                          double fx, long long r, double fr, F&& f) {
    auto update = [&](long long y, double fy) {
        if (y <= l || y >= r || y == x) return;
        if (y > x) {
            if (fy > fx) {
                l = x, fl = fx;
                x = y, fx = fy;
            } else {
                r = y, fr = fy;
            }
        } else {
            if (fy >= fx) {
                r = x, fr = fx;
                x = y, fx = fy;
            } else {
                l = y, fl = fy;
            }
        }
    };

    for (const auto& [idx, pt] : probe.seen()) {
        const long long pos = walk.position(idx);
        if (pos > l && pos < r) update(pos, f(pt));
    }

    while (r - l > 2) {
        long long y;
        if (x - l >= r - x) {
            y = x - std::max<long long>(1, std::llround(static_cast<double>(x - l) * kGolden));
        } else {
            y = x + std::max<long long>(1, std::llround(static_cast<double>(r - x) * kGolden));
        }
        update(y, f(probe(walk.index(y))));
    }

    std::size_t best = walk.index(x);
    if (fr == fx) best = std::min(best, walk.index(r));
    return best;
}

/// Argmax of f over interior chain positions 1..len, f unimodal there.
template <class F>
std::size_t chain_max(VertexProbe& probe, const Walk& walk, long long len, F&& f) {
    const long long r = len + 1;
    long long x = -1;
    double fx = kNegInf;
    for (const auto& [idx, pt] : probe.seen()) {
        const long long pos = walk.position(idx);
        if (pos > 0 && pos < r) {
            const double v = f(pt);
            if (x < 0 || v > fx) x = pos, fx = v;
        }
    }
    if (x < 0) {
        x = 1 + std::llround(static_cast<double>(len - 1) * (1.0 - kGolden));
        fx = f(probe(walk.index(x)));
    }
    return bracketed_max(probe, walk, 0, kNegInf, x, fx, r, kNegInf, f);
}

/// Argmax of f around the whole cycle, f cyclically bitonic.
template <class F>
std::size_t cyclic_max(VertexProbe& probe, F&& f) {
    const std::size_t n = probe.size();
    const std::array<std::size_t, 3> sample{0, n / 3, 2 * n / 3};
    std::array<double, 3> value{};
    for (std::size_t s = 0; s < 3; ++s) value[s] = f(probe(sample[s]));

    // Best sample whose clockwise predecessor sample is strictly smaller.
    std::size_t x = 0;
    for (std::size_t s = 1; s < 3; ++s) {
        if (value[s] > value[x]) x = s;
    }
    if (value[(x + 2) % 3] == value[x]) x = (x + 2) % 3;
    const std::size_t l = (x + 2) % 3;
    const std::size_t r = (x + 1) % 3;

    const Walk walk{sample[l], n};
    return bracketed_max(probe, walk, 0, value[l], walk.position(sample[x]), value[x],
                         walk.position(sample[r]) == 0 ? static_cast<long long>(n)
                                                        : walk.position(sample[r]),
                         value[r], f);
}

/// First position in (lo, hi] where pred holds, given !pred(lo) and pred(hi)
/// and pred monotone on the range.
template <class Pred>
long long first_true(VertexProbe& probe, const Walk& walk, long long lo, long long hi, Pred&& pred) {
    for (const auto& [idx, pt] : probe.seen()) {
        const long long pos = walk.position(idx);
        if (pos > lo && pos < hi) {
            if (pred(pt)) {
                hi = pos;
            } else {
                lo = pos;
            }
        }
    }
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (pred(probe(walk.index(mid)))) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace

ExtremeQuad extreme_points(VertexProbe& probe) {
    ExtremeQuad q;
    q.a = cyclic_max(probe, [](const Point& p) { return -p.x; });
    q.b = cyclic_max(probe, [](const Point& p) { return p.y; });
    q.c = cyclic_max(probe, [](const Point& p) { return p.x; });
    q.d = cyclic_max(probe, [](const Point& p) { return -p.y; });
    q.distinct_count = q.distinct().size();
    return q;
}

ExtremeQuad extreme_points(const ConvexPolygon& polygon) {
    VertexProbe probe(polygon);
    return extreme_points(probe);
}

std::size_t farthest_from_chord(VertexProbe& probe, std::size_t u, std::size_t v) {
    if (u == v) throw DegeneratePair(u);
    const std::size_t n = probe.size();
    const Point pu = probe(u);
    const Point pv = probe(v);
    auto height = [&](const Point& p) { return std::abs(cross(pu, pv, p)); };

    std::optional<std::size_t> best;
    double best_h = kNegInf;
    for (const auto& [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
        const long long len = static_cast<long long>((to + n - from) % n) - 1;
        if (len < 1) continue;
        const std::size_t e = chain_max(probe, Walk{from, n}, len, height);
        const double h = height(probe(e));
        if (!best || h > best_h || (h == best_h && e < *best)) {
            best = e;
            best_h = h;
        }
    }
    return *best;
}

std::size_t farthest_from_chord(const ConvexPolygon& polygon, std::size_t u, std::size_t v) {
    VertexProbe probe(polygon);
    return farthest_from_chord(probe, u, v);
}

double bisector_offset(const Point& u, const Point& v, const Point& p) {
    return (2.0 * p.x - u.x - v.x) * (v.x - u.x) + (2.0 * p.y - u.y - v.y) * (v.y - u.y);
}

std::vector<std::size_t> nearest_to_bisector(VertexProbe& probe, std::size_t u, std::size_t v) {
    if (u == v) throw DegeneratePair(u);
    const std::size_t n = probe.size();
    const Point pu = probe(u);
    const Point pv = probe(v);
    auto positive = [&](const Point& p) { return bisector_offset(pu, pv, p) >= 0.0; };
    auto negative = [&](const Point& p) { return !positive(p); };

    // Positions clockwise from u; u sits at 0 and n, v at t. The offset is
    // negative at u and positive at v, and crosses zero once on each chain.
    const Walk walk{u, n};
    const auto nn = static_cast<long long>(n);
    const long long t = walk.position(v);
    const long long p1 = first_true(probe, walk, 0, t, positive);
    const long long p2 = first_true(probe, walk, t, nn, negative);

    std::vector<long long> positions{p1 - 1, p1, p2 - 1, p2};
    // u or v bracketing a crossing is replaced by its neighbour on the same side.
    if (p1 - 1 == 0 && p2 <= nn - 1 && nn - 1 != t) positions.push_back(nn - 1);
    if (p2 == nn && p1 > 1) positions.push_back(1);
    if (p1 == t && p2 > t + 1) positions.push_back(t + 1);
    if (p2 - 1 == t && p1 <= t - 1) positions.push_back(t - 1);

    std::vector<std::size_t> out;
    for (long long pos : positions) {
        const std::size_t idx = walk.index(pos % nn);
        if (idx == u || idx == v) continue;
        if (std::find(out.begin(), out.end(), idx) != out.end()) continue;
        probe(idx);
        out.push_back(idx);
    }
    return out;
}

std::vector<std::size_t> nearest_to_bisector(const ConvexPolygon& polygon, std::size_t u, std::size_t v) {
    VertexProbe probe(polygon);
    return nearest_to_bisector(probe, u, v);
}

std::size_t nearest_of(const ConvexPolygon& polygon, std::size_t u, std::size_t v,
                       const std::vector<std::size_t>& candidates) {
    if (candidates.empty()) throw Error("no bisector candidates");
    std::size_t best = candidates.front();
    double best_off = std::abs(bisector_offset(polygon[u], polygon[v], polygon[best]));
    for (std::size_t c : candidates) {
        const double off = std::abs(bisector_offset(polygon[u], polygon[v], polygon[c]));
        if (off < best_off || (off == best_off && c < best)) {
            best = c;
            best_off = off;
        }
    }
    return best;
}

namespace {

Triple make_triple(VertexProbe& probe, std::size_t a, std::size_t b, std::size_t c) {
    const Point pa = probe(a), pb = probe(b), pc = probe(c);
    Triple t;
    t.centers = {a, b, c};
    std::sort(t.centers.begin(), t.centers.end());
    t.min_sq = std::min({squared_distance(pa, pb), squared_distance(pb, pc), squared_distance(pa, pc)});
    return t;
}

} // namespace

Approx3Result approx_3(const ConvexPolygon& polygon, const Approx3Options& options) {
    const std::size_t n = polygon.size();
    if (n < 3) throw RejectedInput(RejectReason::TooFew, n);

    VertexProbe probe(polygon);
    Approx3Result result;
    std::optional<Triple> best;
    auto offer = [&](const Triple& t) {
        if (!best || t.min_sq > best->min_sq) best = t;
    };

    if (n == 3) {
        offer(make_triple(probe, 0, 1, 2));
    } else {
        result.extremes = extreme_points(probe);
        const std::vector<std::size_t> ext = result.extremes.distinct();

        if (ext.size() >= 3) {
            for (std::size_t i = 0; i < ext.size(); ++i)
                for (std::size_t j = i + 1; j < ext.size(); ++j)
                    for (std::size_t l = j + 1; l < ext.size(); ++l) {
                        const Triple t = make_triple(probe, ext[i], ext[j], ext[l]);
                        if (!result.cases.extremes || t.min_sq > result.cases.extremes->min_sq)
                            result.cases.extremes = t;
                    }
            offer(*result.cases.extremes);
        }

        for (std::size_t i = 0; i < ext.size(); ++i) {
            for (std::size_t j = i + 1; j < ext.size(); ++j) {
                PairCases pc;
                pc.u = ext[i];
                pc.v = ext[j];
                const double uv = squared_distance(probe(pc.u), probe(pc.v));
                // Every triple through u and v has min distance <= |uv|.
                if (options.prune_pairs && best && uv <= best->min_sq) {
                    result.cases.pairs.push_back(pc);
                    continue;
                }
                pc.evaluated = true;
                pc.farthest = make_triple(probe, pc.u, pc.v, farthest_from_chord(probe, pc.u, pc.v));
                offer(*pc.farthest);
                for (std::size_t f : nearest_to_bisector(probe, pc.u, pc.v)) {
                    const Triple t = make_triple(probe, pc.u, pc.v, f);
                    if (!pc.bisector || t.min_sq > pc.bisector->min_sq) pc.bisector = t;
                }
                if (pc.bisector) offer(*pc.bisector);
                result.cases.pairs.push_back(pc);
            }
        }
    }

    result.packing.centers.assign(best->centers.begin(), best->centers.end());
    result.packing.radius_sq4 = best->min_sq;
    result.vertex_accesses = probe.accesses();
    return result;
}

} // namespace kdisp
