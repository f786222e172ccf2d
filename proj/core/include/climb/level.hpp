#pragma once
/**
 * @file level.hpp
 * @brief Level data model, text loader/serializer and tile queries.
 *
 * Level file layout (UTF-8):
 *
 *     <grid rows, top row first>      . empty  # terrain  ^ hazard  , decoration  S spawn
 *     ---
 *     platform <id> <hx> <hy> <speed> (<x>,<y>) (<x>,<y>) ...
 *     trigger <id> <kind> <group|always> <dialogue_id> rect <cx> <cy> <hx> <hy>
 *     timer <seconds>
 *
 * `#` at the start of a directive line is a comment. Trigger kinds are
 * `dialogue`, `timer_start`, `timer_stop` and `end_game`.
 *
 * Internally rows are stored bottom-up: world row 0 is the last grid line of
 * the file, so file cell (col,row) has center (col+0.5, rows-row-0.5).
 */

#include "climb/geometry.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace climb {

enum class TileKind : std::uint8_t { Empty = 0, Terrain = 1, Hazard = 2, Decoration = 3 };

struct Cell {
    int col{0};
    int row{0};
    auto operator<=>(const Cell&) const = default;
};

struct PlatformDef {
    std::string id;
    Vec2 half_extents{1.0, 0.25};
    std::vector<Vec2> waypoints;
    double speed{2.0};

    bool operator==(const PlatformDef&) const = default;
};

enum class TriggerKind : std::uint8_t { Dialogue = 0, DialogueTimerStart = 1, DialogueTimerStop = 2, EndGame = 3 };

/// Trigger group 0 is "always"; 1..6 bind a trigger to that attempt.
inline constexpr int kAlwaysGroup = 0;
inline constexpr int kNumberedGroups = 6;

struct TriggerDef {
    std::string id;
    Aabb region;
    TriggerKind kind{TriggerKind::Dialogue};
    int group{kAlwaysGroup};
    std::string dialogue_id;

    bool operator==(const TriggerDef&) const = default;
};

struct LevelDef {
    int width{0};
    int height{0};
    std::vector<TileKind> grid;  // row-major, row 0 at the bottom
    Vec2 spawn;                  // center of the spawn cell
    std::vector<PlatformDef> platforms;
    std::vector<TriggerDef> triggers;
    double timer_seconds{60.0};

    bool in_bounds(int col, int row) const { return col >= 0 && col < width && row >= 0 && row < height; }
    TileKind tile(int col, int row) const {
        return in_bounds(col, row) ? grid[static_cast<std::size_t>(row) * width + col] : TileKind::Empty;
    }
    Cell spawn_cell() const;

    bool operator==(const LevelDef&) const = default;
};

std::string_view to_string(TriggerKind kind);

/// Throws ParseError (with line/column) or ValidationError (named code).
LevelDef parse_level(std::string_view document);

/// Inverse of parse_level; numbers are written in shortest round-trip form.
std::string serialize_level(const LevelDef& level);

/// Checks every LevelDef invariant; throws ValidationError.
void validate_level(const LevelDef& level);

/// Terrain in bounds; walls beyond the left/right edges; open below and above.
bool solid_at(const LevelDef& level, Cell cell);

/// Hazard cells whose unit box touches or overlaps body, sorted by (col, row).
std::vector<Cell> hazard_cells_overlapping(const LevelDef& level, const Aabb& body);

/// Collision view of the level plus extra solid boxes. The level must outlive it.
Solids level_solids(const LevelDef& level, std::span<const Aabb> boxes = {});

}  // namespace climb
