#include "kdisp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace kdisp {

std::optional<Shape> parse_shape(std::string_view name) {
    if (name == "valtr") return Shape::Valtr;
    if (name == "regular") return Shape::Regular;
    if (name == "circle") return Shape::Circle;
    return std::nullopt;
}

const char* to_string(Shape shape) {
    switch (shape) {
    case Shape::Valtr: return "valtr";
    case Shape::Regular: return "regular";
    case Shape::Circle: return "circle";
    }
    return "unknown";
}

namespace {

// Hand-rolled draws on std::mt19937_64, identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool coin() { return (engine_() >> 63) != 0; }
    std::size_t below(std::size_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

private:
    std::mt19937_64 engine_;
};

// Splits sorted coordinates into two monotone chains and returns the n
// component increments, which sum to zero.
std::vector<double> chain_increments(const std::vector<double>& sorted, Rng& rng) {
    const std::size_t n = sorted.size();
    std::vector<double> out;
    out.reserve(n);
    double last_a = sorted.front();
    double last_b = sorted.front();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (rng.coin()) {
            out.push_back(sorted[i] - last_a);
            last_a = sorted[i];
        } else {
            out.push_back(last_b - sorted[i]);
            last_b = sorted[i];
        }
    }
    out.push_back(sorted.back() - last_a);
    out.push_back(last_b - sorted.back());
    return out;
}

std::vector<Point> valtr_attempt(std::size_t n, Rng& rng) {
    std::vector<double> xs(n), ys(n);
    for (double& x : xs) x = rng.uniform();
    for (double& y : ys) y = rng.uniform();
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());

    const std::vector<double> dx = chain_increments(xs, rng);
    std::vector<double> dy = chain_increments(ys, rng);
    for (std::size_t i = n; i > 1; --i) std::swap(dy[i - 1], dy[rng.below(i)]);

    struct Step {
        double x, y, angle;
    };
    std::vector<Step> steps(n);
    for (std::size_t i = 0; i < n; ++i) steps[i] = {dx[i], dy[i], std::atan2(dy[i], dx[i])};
    // Decreasing angle walks the boundary clockwise.
    std::sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) { return a.angle > b.angle; });

    std::vector<Point> pts(n);
    double x = 0.0, y = 0.0, min_x = 0.0, min_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = {x, y};
        min_x = std::min(min_x, x);
        min_y = std::min(min_y, y);
        x += steps[i].x;
        y += steps[i].y;
    }
    for (Point& p : pts) {
        p.x = p.x - min_x + xs.front();
        p.y = p.y - min_y + ys.front();
    }
    return pts;
}

bool is_valid(const std::vector<Point>& pts) {
    try {
        const ConvexPolygon poly = validate_convex(pts);
        return !poly.reversed();
    } catch (const RejectedInput&) {
        return false;
    }
}

void require_n(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a polygon needs n >= 3, got " + std::to_string(n));
}

} // namespace

std::vector<Point> generate_valtr(std::size_t n, std::uint64_t seed) {
    require_n(n);
    Rng rng(seed);
    for (;;) {
        // Rounding can, very rarely, flatten a turn; draw again from the same stream.
        std::vector<Point> pts = valtr_attempt(n, rng);
        if (is_valid(pts)) return pts;
    }
}

std::vector<Point> generate_regular(std::size_t n) {
    require_n(n);
    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        pts[i] = {std::cos(theta), std::sin(theta)};
    }
    return pts;
}

std::vector<Point> generate_circle(std::size_t n, std::uint64_t seed) {
    require_n(n);
    Rng rng(seed);
    const double phase = 2 * std::numbers::pi * rng.uniform();
    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double slot = static_cast<double>(i) + 0.25 + 0.5 * rng.uniform();
        const double theta = phase - 2 * std::numbers::pi * slot / static_cast<double>(n);
        pts[i] = {std::cos(theta), std::sin(theta)};
    }
    return pts;
}

std::vector<Point> generate(Shape shape, std::size_t n, std::uint64_t seed) {
    switch (shape) {
    case Shape::Valtr: return generate_valtr(n, seed);
    case Shape::Regular: return generate_regular(n);
    case Shape::Circle: return generate_circle(n, seed);
    }
    throw std::invalid_argument("unknown shape");
}

} // namespace kdisp
