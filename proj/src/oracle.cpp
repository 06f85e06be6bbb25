#include "kdisp/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace kdisp::oracle {

namespace {

void check_size(std::size_t n, std::size_t k, double limit) {
    if (k < 1 || k > n) throw InvalidK(k, 1, n);
    double subsets = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        subsets = subsets * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    if (subsets > limit) {
        throw TooLarge("C(" + std::to_string(n) + ", " + std::to_string(k) +
                       ") subsets exceed the enumeration limit");
    }
}

} // namespace

Packing brute_force_kdispersion(std::span<const Point> points, std::size_t k, double subset_limit) {
    const std::size_t n = points.size();
    check_size(n, k, subset_limit);

    std::vector<std::size_t> chosen;
    std::vector<double> prefix_min{std::numeric_limits<double>::infinity()};
    Packing best{{}, -1.0};

    // Lexicographic enumeration; prefix_min[j] is the min over the first j picks.
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == k) {
            if (prefix_min.back() > best.radius_sq4) {
                best.centers = chosen;
                best.radius_sq4 = prefix_min.back();
            }
            return;
        }
        for (std::size_t i = from; i + (k - chosen.size()) <= n; ++i) {
            double m = prefix_min.back();
            for (std::size_t c : chosen) m = std::min(m, squared_distance(points[c], points[i]));
            chosen.push_back(i);
            prefix_min.push_back(m);
            self(self, i + 1);
            prefix_min.pop_back();
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    return best;
}

bool brute_force_decide(std::span<const Point> points, std::size_t k, double four_r_sq,
                        double subset_limit) {
    const std::size_t n = points.size();
    check_size(n, k, subset_limit);

    std::vector<std::size_t> chosen;
    auto recurse = [&](auto&& self, std::size_t from) -> bool {
        if (chosen.size() == k) return true;
        for (std::size_t i = from; i + (k - chosen.size()) <= n; ++i) {
            bool ok = true;
            for (std::size_t c : chosen) {
                if (squared_distance(points[c], points[i]) < four_r_sq) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return recurse(recurse, 0);
}

DiameterPair scan_diameter(const ConvexPolygon& polygon) {
    DiameterPair best{0, 0, -1.0};
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        for (std::size_t j = i + 1; j < polygon.size(); ++j) {
            const double d = squared_distance(polygon[i], polygon[j]);
            if (d > best.d_sq) best = DiameterPair{i, j, d};
        }
    }
    return best;
}

ExtremeQuad scan_extreme_points(const ConvexPolygon& polygon) {
    ExtremeQuad q;
    for (std::size_t i = 1; i < polygon.size(); ++i) {
        const Point& p = polygon[i];
        if (p.x < polygon[q.a].x) q.a = i;
        if (p.y > polygon[q.b].y) q.b = i;
        if (p.x > polygon[q.c].x) q.c = i;
        if (p.y < polygon[q.d].y) q.d = i;
    }
    q.distinct_count = q.distinct().size();
    return q;
}

std::size_t scan_farthest_from_chord(const ConvexPolygon& polygon, std::size_t u, std::size_t v) {
    if (u == v) throw DegeneratePair(u);
    std::size_t best = polygon.size();
    double best_h = -1.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        if (i == u || i == v) continue;
        const double h = std::abs(cross(polygon[u], polygon[v], polygon[i]));
        if (h > best_h) {
            best = i;
            best_h = h;
        }
    }
    return best;
}

std::size_t scan_nearest_to_bisector(const ConvexPolygon& polygon, std::size_t u, std::size_t v) {
    if (u == v) throw DegeneratePair(u);
    std::size_t best = polygon.size();
    double best_off = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        if (i == u || i == v) continue;
        const double off = std::abs(bisector_offset(polygon[u], polygon[v], polygon[i]));
        if (off < best_off) {
            best = i;
            best_off = off;
        }
    }
    return best;
}

} // namespace kdisp::oracle
