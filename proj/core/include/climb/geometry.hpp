#pragma once
/**
 * @file geometry.hpp
 * @brief Minimal 2D vector / AABB toolkit used by movement, collision,
 *        grounding and trigger detection.
 *
 * World units: 1 unit = 1 tile, y grows upward. Cell (col,row) covers
 * [col,col+1] x [row,row+1].
 *
 * Determinism: everything here uses IEEE-754 doubles with only + - * /,
 * comparisons and std::sqrt, evaluated in the order written. The build
 * disables FP contraction so results are bit-reproducible.
 */

#include <cmath>
#include <functional>
#include <span>

namespace climb {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2& operator+=(const Vec2& r) {
        x += r.x;
        y += r.y;
        return *this;
    }
    constexpr bool operator==(const Vec2&) const = default;
};

/// Axis-aligned box. half_extents must be strictly positive.
struct Aabb {
    Vec2 center;
    Vec2 half_extents{0.5, 0.5};

    constexpr double min_x() const { return center.x - half_extents.x; }
    constexpr double max_x() const { return center.x + half_extents.x; }
    constexpr double min_y() const { return center.y - half_extents.y; }
    constexpr double max_y() const { return center.y + half_extents.y; }

    constexpr bool operator==(const Aabb&) const = default;
};

/// Unit box of a grid cell.
constexpr Aabb cell_box(int col, int row) {
    return Aabb{{col + 0.5, row + 0.5}, {0.5, 0.5}};
}

/// Overlap below this width counts as touching, not penetrating.
inline constexpr double kContactEpsilon = 1e-9;

/// Solid geometry seen by the mover: a cell predicate plus free boxes
/// (moving platforms).
struct Solids {
    std::function<bool(int col, int row)> cell;
    std::span<const Aabb> boxes;
};

double distance(Vec2 a, Vec2 b);

/// Steps from current toward target by at most max_delta; never overshoots.
Vec2 move_towards(Vec2 current, Vec2 target, double max_delta);

/// Closed-interval overlap: touching edges count.
bool aabb_overlap(const Aabb& a, const Aabb& b);

/// True iff translating body down by some t in (0, depth] makes it overlap
/// the interior of `other`. Side contact does not count (x overlap must be
/// wider than kContactEpsilon).
bool probe_down(const Aabb& body, double depth, const Aabb& other);

/// Same probe against every solid cell and box.
bool probe_down(const Aabb& body, double depth, const Solids& solids);

struct SlideResult {
    Vec2 center;
    bool hit_x{false};
    bool hit_y{false};
};

/// Axis-separated move: x first, then y, each clamped at the first solid
/// contact ahead of the body. |displacement| must be <= 1 per axis.
/// Solids the body already penetrates are ignored so it can escape them.
SlideResult slide_move(const Aabb& body, Vec2 displacement, const Solids& solids);

}  // namespace climb
