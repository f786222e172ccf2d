#include "climb/geometry.hpp"

#include <algorithm>
#include <limits>

namespace climb {

namespace {

int floor_int(double v) { return static_cast<int>(std::floor(v)); }
int ceil_int(double v) { return static_cast<int>(std::ceil(v)); }

double span_overlap(double a0, double a1, double b0, double b1) {
    return std::min(a1, b1) - std::max(a0, b0);
}

bool cell_solid(const Solids& solids, int col, int row) {
    return solids.cell && solids.cell(col, row);
}

// Allowed displacement along one axis. `lo`/`hi` are the body's extent on the
// moving axis, `perp_lo`/`perp_hi` its extent on the other axis.
struct AxisClamp {
    double contact;
    bool hit;
};

AxisClamp clamp_axis(bool along_x, double lo, double hi, double perp_lo, double perp_hi,
                     double delta, const Solids& solids) {
    const double inf = std::numeric_limits<double>::infinity();
    if (delta == 0.0) return {0.0, false};

    // Perpendicular cell range with real (non-touching) overlap.
    const int p0 = floor_int(perp_lo);
    const int p1 = floor_int(perp_hi);

    if (delta > 0.0) {
        double contact = inf;
        const int c0 = ceil_int(hi - kContactEpsilon);
        const int c1 = floor_int(hi + delta);
        for (int p = p0; p <= p1; ++p) {
            if (span_overlap(perp_lo, perp_hi, p, p + 1.0) <= kContactEpsilon) continue;
            for (int c = c0; c <= c1 && c < contact; ++c) {
                const bool solid = along_x ? cell_solid(solids, c, p) : cell_solid(solids, p, c);
                if (solid) {
                    contact = std::min(contact, static_cast<double>(c));
                    break;
                }
            }
        }
        for (const Aabb& b : solids.boxes) {
            const double b_lo = along_x ? b.min_x() : b.min_y();
            const double bp_lo = along_x ? b.min_y() : b.min_x();
            const double bp_hi = along_x ? b.max_y() : b.max_x();
            if (span_overlap(perp_lo, perp_hi, bp_lo, bp_hi) <= kContactEpsilon) continue;
            if (b_lo >= hi - kContactEpsilon && b_lo <= hi + delta) contact = std::min(contact, b_lo);
        }
        if (contact == inf) return {0.0, false};
        return {contact, true};
    }

    double contact = -inf;
    const int c0 = floor_int(lo + kContactEpsilon) - 1;
    const int c1 = ceil_int(lo + delta) - 1;
    for (int p = p0; p <= p1; ++p) {
        if (span_overlap(perp_lo, perp_hi, p, p + 1.0) <= kContactEpsilon) continue;
        for (int c = c0; c >= c1 && c + 1.0 > contact; --c) {
            const bool solid = along_x ? cell_solid(solids, c, p) : cell_solid(solids, p, c);
            if (solid) {
                contact = std::max(contact, c + 1.0);
                break;
            }
        }
    }
    for (const Aabb& b : solids.boxes) {
        const double b_hi = along_x ? b.max_x() : b.max_y();
        const double bp_lo = along_x ? b.min_y() : b.min_x();
        const double bp_hi = along_x ? b.max_y() : b.max_x();
        if (span_overlap(perp_lo, perp_hi, bp_lo, bp_hi) <= kContactEpsilon) continue;
        if (b_hi <= lo + kContactEpsilon && b_hi >= lo + delta) contact = std::max(contact, b_hi);
    }
    if (contact == -inf) return {0.0, false};
    return {contact, true};
}

}  // namespace

double distance(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

Vec2 move_towards(Vec2 current, Vec2 target, double max_delta) {
    const double dx = target.x - current.x;
    const double dy = target.y - current.y;
    const double dist = std::sqrt(dx * dx + dy * dy);
    if (dist <= max_delta || dist == 0.0) return target;
    return {current.x + dx / dist * max_delta, current.y + dy / dist * max_delta};
}

bool aabb_overlap(const Aabb& a, const Aabb& b) {
    return a.min_x() <= b.max_x() && b.min_x() <= a.max_x() && a.min_y() <= b.max_y() &&
           b.min_y() <= a.max_y();
}

bool probe_down(const Aabb& body, double depth, const Aabb& other) {
    if (span_overlap(body.min_x(), body.max_x(), other.min_x(), other.max_x()) <= kContactEpsilon)
        return false;
    // Translations t with (min_y - t, max_y - t) intersecting (o.min_y, o.max_y).
    const double lo = std::max(0.0, body.min_y() - other.max_y());
    const double hi = std::min(depth, body.max_y() - other.min_y());
    return lo < hi;
}

bool probe_down(const Aabb& body, double depth, const Solids& solids) {
    const int row0 = floor_int(body.min_y() - depth);
    const int row1 = floor_int(body.max_y());
    const int col0 = floor_int(body.min_x());
    const int col1 = floor_int(body.max_x());
    for (int row = row0; row <= row1; ++row) {
        for (int col = col0; col <= col1; ++col) {
            if (cell_solid(solids, col, row) && probe_down(body, depth, cell_box(col, row))) return true;
        }
    }
    for (const Aabb& b : solids.boxes) {
        if (probe_down(body, depth, b)) return true;
    }
    return false;
}

SlideResult slide_move(const Aabb& body, Vec2 displacement, const Solids& solids) {
    SlideResult out;
    Vec2 c = body.center;
    const Vec2 h = body.half_extents;

    const AxisClamp cx = clamp_axis(true, c.x - h.x, c.x + h.x, c.y - h.y, c.y + h.y, displacement.x, solids);
    if (cx.hit) {
        out.hit_x = true;
        c.x = displacement.x > 0.0 ? cx.contact - h.x : cx.contact + h.x;
    } else {
        c.x = c.x + displacement.x;
    }

    const AxisClamp cy = clamp_axis(false, c.y - h.y, c.y + h.y, c.x - h.x, c.x + h.x, displacement.y, solids);
    if (cy.hit) {
        out.hit_y = true;
        c.y = displacement.y > 0.0 ? cy.contact - h.y : cy.contact + h.y;
    } else {
        c.y = c.y + displacement.y;
    }

    out.center = c;
    return out;
}

}  // namespace climb
