#include "climb/error.hpp"
#include "climb/level.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace climb;
using climb::testing::shipped;

namespace {

std::string validation_code(const std::string& doc) {
    try {
        parse_level(doc);
    } catch (const ValidationError& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST(ParseLevel, MinimalGrid) {
    const LevelDef l = parse_level(".S.\n###\n---\n");
    EXPECT_EQ(l.width, 3);
    EXPECT_EQ(l.height, 2);
    int terrain = 0;
    for (int c = 0; c < 3; ++c) terrain += l.tile(c, 0) == TileKind::Terrain;
    EXPECT_EQ(terrain, 3);
    EXPECT_EQ(l.tile(1, 1), TileKind::Empty);
    EXPECT_EQ(l.spawn, Vec2(1.5, 1.5));
    EXPECT_EQ(l.timer_seconds, 60.0);
}

TEST(ParseLevel, FileCellCenterMapping) {
    // File cell (col,row) maps to (col+0.5, rows-row-0.5).
    const LevelDef l = parse_level("....\n.S..\n####\n---\n");
    EXPECT_EQ(l.spawn, Vec2(1 + 0.5, 3 - 1 - 0.5));
}

TEST(ParseLevel, Directives) {
    const LevelDef l = parse_level(
        "......\n.S....\n######\n---\n"
        "# comment\n"
        "platform lift 1 0.25 2 (1.5,1.25) (4.5,1.25)\n"
        "trigger t1 timer_start 3 hello rect 2 1.5 0.5 0.5\n"
        "trigger fin end_game always bye rect 5 2 0.5 1\n"
        "timer 90\n");
    ASSERT_EQ(l.platforms.size(), 1u);
    EXPECT_EQ(l.platforms[0].waypoints.size(), 2u);
    EXPECT_EQ(l.platforms[0].speed, 2.0);
    ASSERT_EQ(l.triggers.size(), 2u);
    EXPECT_EQ(l.triggers[0].kind, TriggerKind::DialogueTimerStart);
    EXPECT_EQ(l.triggers[0].group, 3);
    EXPECT_EQ(l.triggers[1].group, kAlwaysGroup);
    EXPECT_EQ(l.timer_seconds, 90.0);
}

TEST(ParseLevel, ValidationCodes) {
    EXPECT_EQ(validation_code(".#.\n.S.\n###\n---\n"), "spawn-in-solid");
    EXPECT_EQ(validation_code("...\n###\n---\n"), "no-spawn");
    EXPECT_EQ(validation_code("S.S\n###\n---\n"), "multiple-spawn");
    EXPECT_EQ(validation_code(".S.\n##\n---\n"), "ragged-grid");
    EXPECT_EQ(validation_code(".S.\n###\n---\nplatform p 1 1 2 (0,0)\n"), "platform-waypoints");
    EXPECT_EQ(validation_code(".S.\n###\n---\nplatform p 1 1 2 (0,0) (0,0)\n"), "platform-waypoints");
    EXPECT_EQ(validation_code(".S.\n###\n---\nplatform p 1 1 0 (0,0) (1,0)\n"), "platform-speed");
    EXPECT_EQ(validation_code(".S.\n###\n---\ntrigger a dialogue 7 d rect 1 1 1 1\n"), "trigger-group");
    EXPECT_EQ(validation_code(".S.\n###\n---\ntrigger a end_game 2 d rect 1 1 1 1\n"), "trigger-group");
    EXPECT_EQ(validation_code(".S.\n###\n---\ntrigger a dialogue 1 d rect 40 1 1 1\n"), "trigger-out-of-bounds");
    EXPECT_EQ(validation_code(".S.\n###\n---\ntrigger a dialogue 1 d rect 1 1 1 1\ntrigger a dialogue 2 e rect 1 1 1 1\n"),
              "duplicate-id");
    EXPECT_EQ(validation_code(".S.\n###\n---\ntimer 0\n"), "timer");
}

TEST(ParseLevel, SyntaxErrorsCarryLine) {
    try {
        parse_level(".S.\n###\n---\nplatform p 1 1 2 (0,0) (1,0)\nbogus 1 2\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5);
    }
    EXPECT_THROW(parse_level(".S.\n#x#\n---\n"), ParseError);
    EXPECT_THROW(parse_level(".S.\n###\n---\ntrigger a nope 1 d rect 1 1 1 1\n"), ParseError);
    EXPECT_THROW(parse_level(".S.\n###\n---\ntrigger a dialogue 1 d rect 1 1 1 x\n"), ParseError);
}

TEST(SolidAt, BoundaryRules) {
    const LevelDef l = parse_level(".S^\n#,#\n---\n");
    EXPECT_TRUE(solid_at(l, {0, 0}));
    EXPECT_FALSE(solid_at(l, {1, 0}));  // decoration
    EXPECT_FALSE(solid_at(l, {2, 1}));  // hazard
    EXPECT_TRUE(solid_at(l, {-1, 0}));
    EXPECT_TRUE(solid_at(l, {3, 1}));
    EXPECT_FALSE(solid_at(l, {1, -1}));
    EXPECT_FALSE(solid_at(l, {1, 5}));
}

TEST(HazardCells, MatchesBruteForceScan) {
    const LevelDef l = parse_level("......\n.S^^..\n######\n---\n");
    EXPECT_TRUE(hazard_cells_overlapping(l, Aabb{{0.5, 2.5}, {0.4, 0.4}}).empty());
    const auto one = hazard_cells_overlapping(l, Aabb{{2.5, 1.5}, {0.3, 0.3}});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], (Cell{2, 1}));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> p(-1.0, 7.0), h(0.05, 1.5);
    for (int i = 0; i < 5000; ++i) {
        const Aabb body{{p(rng), p(rng) / 2.0}, {h(rng), h(rng)}};
        std::vector<Cell> brute;
        for (int c = 0; c < l.width; ++c)
            for (int r = 0; r < l.height; ++r)
                if (l.tile(c, r) == TileKind::Hazard && aabb_overlap(body, cell_box(c, r))) brute.push_back({c, r});
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(hazard_cells_overlapping(l, body), brute);
    }
    EXPECT_EQ(hazard_cells_overlapping(l, Aabb{{3.0, 1.5}, {0.4, 0.4}}).size(), 2u);
}

TEST(SerializeLevel, RoundTrip) {
    const std::string doc =
        "..,...\n.S^#..\n######\n---\n"
        "platform lift 1 0.25 2.5 (1.5,1.25) (4.5,1.25) (4.5,2.1)\n"
        "trigger t1 dialogue 1 hello rect 2 1.5 0.5 0.5\n"
        "trigger fin end_game always bye rect 5 2 0.5 1\n"
        "timer 0.1\n";
    const LevelDef a = parse_level(doc);
    const LevelDef b = parse_level(serialize_level(a));
    EXPECT_EQ(a, b);
    EXPECT_EQ(serialize_level(a), serialize_level(b));
    const LevelDef tower = shipped()->level;
    EXPECT_EQ(parse_level(serialize_level(tower)), tower);
}

TEST(ShippedTower, Counts) {
    const LevelDef& l = shipped()->level;
    std::set<int> groups;
    int always_end = 0;
    for (const auto& t : l.triggers) {
        groups.insert(t.group);
        if (t.group == kAlwaysGroup && t.kind == TriggerKind::EndGame) ++always_end;
    }
    EXPECT_EQ(groups, (std::set<int>{0, 1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(always_end, 1);
    EXPECT_GE(l.platforms.size(), 2u);
    EXPECT_EQ(l.timer_seconds, 60.0);
    EXPECT_NO_THROW(validate_level(l));
}

TEST(ShippedTower, EveryGroupHasAReachableTrigger) {
    const LevelDef& l = shipped()->level;
    for (int g = 1; g <= kNumberedGroups; ++g) {
        bool found = false;
        for (const auto& t : l.triggers) {
            if (t.group != g) continue;
            for (int c = 0; c < l.width && !found; ++c)
                for (int r = 1; r < l.height && !found; ++r)
                    found = l.tile(c, r) != TileKind::Terrain && l.tile(c, r - 1) == TileKind::Terrain &&
                            aabb_overlap(t.region, cell_box(c, r));
        }
        EXPECT_TRUE(found) << "group " << g;
    }
}

TEST(ShippedTower, CrossoverInEveryBand) {
    // A crossover is a floor row whose standable run spans both halves of the
    // tower, with two open rows of headroom above it.
    const LevelDef& l = shipped()->level;
    const double mid = l.width / 2.0;
    auto standable = [&](int c, int r) {
        return solid_at(l, {c, r}) && !solid_at(l, {c, r + 1}) && !solid_at(l, {c, r + 2});
    };
    // The shared lift (highest starting waypoint) ends the two-sided part.
    int shared_start = 0;
    for (const auto& p : l.platforms) shared_start = std::max(shared_start, static_cast<int>(p.waypoints.front().y));
    for (int band = 0; band + 10 <= shared_start; band += 10) {
        bool crossing = false;
        for (int r = band; r < band + 10 && !crossing; ++r) {
            int run_start = -1;
            for (int c = 0; c <= l.width && !crossing; ++c) {
                if (c < l.width && standable(c, r)) {
                    if (run_start < 0) run_start = c;
                } else if (run_start >= 0) {
                    crossing = run_start < mid && c > mid;
                    run_start = -1;
                }
            }
        }
        EXPECT_TRUE(crossing) << "rows " << band << ".." << band + 9;
    }
}
