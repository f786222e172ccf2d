#include "climb/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

using namespace climb;

namespace {

Solids cells(const std::set<std::pair<int, int>>& solid) {
    return Solids{[solid](int c, int r) { return solid.count({c, r}) > 0; }, {}};
}

Solids nothing() {
    return Solids{[](int, int) { return false; }, {}};
}

// Overlap of open interiors; used to check that no move ends inside a solid.
bool interiors_overlap(const Aabb& a, const Aabb& b) {
    return a.min_x() < b.max_x() - kContactEpsilon && b.min_x() < a.max_x() - kContactEpsilon &&
           a.min_y() < b.max_y() - kContactEpsilon && b.min_y() < a.max_y() - kContactEpsilon;
}

}  // namespace

TEST(Distance, Examples) {
    EXPECT_EQ(distance({0, 0}, {0, 0}), 0.0);
    EXPECT_EQ(distance({0, 0}, {3, 4}), 5.0);
    EXPECT_EQ(distance({1.5, 2}, {1.5, 6}), 4.0);
    EXPECT_EQ(distance({3, 4}, {0, 0}), distance({0, 0}, {3, 4}));
}

TEST(MoveTowards, Examples) {
    EXPECT_EQ(move_towards({0, 0}, {0, 4}, 1), Vec2(0, 1));
    EXPECT_EQ(move_towards({2, 2}, {2, 2}, 5), Vec2(2, 2));
    EXPECT_EQ(move_towards({0, 0}, {3, 4}, 10), Vec2(3, 4));
}

TEST(MoveTowards, NeverOvershootsAndStaysOnSegment) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    std::uniform_real_distribution<double> step(0.0, 20.0);
    for (int i = 0; i < 20000; ++i) {
        const Vec2 a{coord(rng), coord(rng)};
        const Vec2 b{coord(rng), coord(rng)};
        const double d = step(rng);
        const Vec2 r = move_towards(a, b, d);
        const double before = std::hypot(b.x - a.x, b.y - a.y);
        const double after = std::hypot(b.x - r.x, b.y - r.y);
        EXPECT_LE(after, std::max(0.0, before - d) + 1e-12);
        const double cross = (b.x - a.x) * (r.y - a.y) - (b.y - a.y) * (r.x - a.x);
        EXPECT_LT(std::abs(cross) / std::max(1.0, before), 1e-9);
    }
}

TEST(AabbOverlap, ClosedIntervals) {
    const Aabb a{{0, 0}, {0.5, 0.5}};
    EXPECT_FALSE(aabb_overlap(a, Aabb{{2, 0}, {0.5, 0.5}}));
    EXPECT_TRUE(aabb_overlap(a, Aabb{{1, 0}, {0.5, 0.5}}));
    EXPECT_TRUE(aabb_overlap(a, a));
    EXPECT_TRUE(aabb_overlap(a, Aabb{{1, 1}, {0.5, 0.5}}));  // corner touch
}

TEST(ProbeDown, GapAgainstDepth) {
    const auto floor = cells({{0, 0}});
    const Vec2 half{0.4, 0.75};
    EXPECT_TRUE(probe_down(Aabb{{0.5, 1.75}, half}, 0.1, floor));
    EXPECT_TRUE(probe_down(Aabb{{0.5, 1.80}, half}, 0.1, floor));
    EXPECT_FALSE(probe_down(Aabb{{0.5, 1.95}, half}, 0.1, floor));
}

TEST(ProbeDown, SideContactIsNotGround) {
    // Body beside a tile, sharing only its vertical face.
    const Aabb body{{1.4, 0.75}, {0.4, 0.75}};
    EXPECT_FALSE(probe_down(body, 0.1, cells({{0, 0}})));
    EXPECT_TRUE(probe_down(body, 0.1, cells({{1, -1}})));
}

TEST(ProbeDown, MonotoneInDepth) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> gap(-0.2, 1.0);
    std::uniform_real_distribution<double> x(-1.0, 2.0);
    std::uniform_real_distribution<double> depth(0.001, 1.0);
    const auto floor = cells({{0, 0}, {1, 0}});
    for (int i = 0; i < 5000; ++i) {
        const Aabb body{{x(rng), 1.0 + gap(rng) + 0.75}, {0.4, 0.75}};
        double d1 = depth(rng), d2 = depth(rng);
        if (d1 > d2) std::swap(d1, d2);
        if (probe_down(body, d1, floor)) EXPECT_TRUE(probe_down(body, d2, floor));
    }
}

TEST(ProbeDown, AgainstFreeBox) {
    const Aabb plat{{0, 0}, {1, 0.25}};
    EXPECT_TRUE(probe_down(Aabb{{0, 1.0}, {0.4, 0.75}}, 0.1, plat));
    EXPECT_FALSE(probe_down(Aabb{{0, 1.2}, {0.4, 0.75}}, 0.1, plat));
    EXPECT_FALSE(probe_down(Aabb{{1.4, 1.0}, {0.4, 0.75}}, 0.1, plat));
}

TEST(SlideMove, FreeSpaceIsPureTranslation) {
    const Aabb body{{3.3, 7.1}, {0.4, 0.75}};
    const auto r = slide_move(body, {0.1, -0.1}, nothing());
    EXPECT_EQ(r.center.x, 3.3 + 0.1);
    EXPECT_EQ(r.center.y, 7.1 + -0.1);
    EXPECT_FALSE(r.hit_x);
    EXPECT_FALSE(r.hit_y);
}

TEST(SlideMove, ClampsOntoFloor) {
    // Floor cell (0,0) has its top at y=1; the body's bottom sits 0.05 above it.
    const Aabb body{{0.5, 1.05 + 0.75}, {0.4, 0.75}};
    const auto r = slide_move(body, {0, -0.2}, cells({{0, 0}}));
    const double oracle_dy = 1.0 - body.min_y();  // 1D interval clamp
    EXPECT_NEAR(r.center.y - body.center.y, oracle_dy, 1e-12);
    EXPECT_NEAR(r.center.y - body.center.y, -0.05, 1e-12);
    EXPECT_TRUE(r.hit_y);
    EXPECT_FALSE(r.hit_x);
}

TEST(SlideMove, ClampsIntoWall) {
    // Wall cell (2,0) has its left face at x=2; the body's right edge is 0.03 short of it.
    const Aabb body{{2.0 - 0.03 - 0.4, 0.75}, {0.4, 0.75}};
    const auto r = slide_move(body, {0.1, 0}, cells({{2, 0}, {2, 1}}));
    const double oracle_dx = 2.0 - body.max_x();
    EXPECT_NEAR(r.center.x - body.center.x, oracle_dx, 1e-12);
    EXPECT_NEAR(r.center.x - body.center.x, 0.03, 1e-12);
    EXPECT_TRUE(r.hit_x);
    EXPECT_FALSE(r.hit_y);
}

TEST(SlideMove, BlockedByFreeBoxes) {
    const std::vector<Aabb> boxes{Aabb{{0, 0}, {1, 0.25}}};
    const Solids s{[](int, int) { return false; }, boxes};
    const auto r = slide_move(Aabb{{0, 1.1}, {0.4, 0.75}}, {0, -0.5}, s);
    EXPECT_NEAR(r.center.y, 1.0, 1e-12);
    EXPECT_TRUE(r.hit_y);
}

TEST(SlideMove, NeverEndsInsideSolid) {
    std::mt19937_64 rng(99);
    std::bernoulli_distribution fill(0.3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(2.0, 8.0);
    for (int world = 0; world < 200; ++world) {
        std::set<std::pair<int, int>> solid;
        for (int c = 0; c < 10; ++c)
            for (int r = 0; r < 10; ++r)
                if (fill(rng)) solid.insert({c, r});
        const auto s = cells(solid);
        for (int i = 0; i < 50; ++i) {
            const Aabb body{{pos(rng), pos(rng)}, {0.4, 0.75}};
            bool inside = false;
            for (auto [c, r] : solid) inside = inside || interiors_overlap(body, cell_box(c, r));
            if (inside) continue;
            const auto res = slide_move(body, {d(rng), d(rng)}, s);
            const Aabb after{res.center, body.half_extents};
            for (int c = -1; c <= 11; ++c)
                for (int r = -1; r <= 11; ++r)
                    if (solid.count({c, r})) ASSERT_FALSE(interiors_overlap(after, cell_box(c, r)));
        }
    }
}
