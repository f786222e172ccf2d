#include "climb/level.hpp"

#include "climb/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace climb {

namespace {

TileKind tile_from_char(char c, bool& is_spawn, bool& ok) {
    is_spawn = false;
    ok = true;
    switch (c) {
        case '.': return TileKind::Empty;
        case '#': return TileKind::Terrain;
        case '^': return TileKind::Hazard;
        case ',': return TileKind::Decoration;
        case 'S': is_spawn = true; return TileKind::Empty;
        default: ok = false; return TileKind::Empty;
    }
}

char char_from_tile(TileKind k) {
    switch (k) {
        case TileKind::Empty: return '.';
        case TileKind::Terrain: return '#';
        case TileKind::Hazard: return '^';
        case TileKind::Decoration: return ',';
    }
    return '.';
}

TriggerKind trigger_kind_from(const text::Token& t, int line) {
    if (t.text == "dialogue") return TriggerKind::Dialogue;
    if (t.text == "timer_start") return TriggerKind::DialogueTimerStart;
    if (t.text == "timer_stop") return TriggerKind::DialogueTimerStop;
    if (t.text == "end_game") return TriggerKind::EndGame;
    throw ParseError(line, t.column, "unknown trigger kind '" + std::string(t.text) + "'");
}

Vec2 parse_point(const text::Token& t, int line) {
    std::string_view s = t.text;
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError(line, t.column, "expected (x,y), got '" + std::string(s) + "'");
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError(line, t.column, "expected (x,y)");
    auto x = text::to_double(s.substr(0, comma));
    auto y = text::to_double(s.substr(comma + 1));
    if (!x || !y) throw ParseError(line, t.column, "bad coordinate in '" + std::string(t.text) + "'");
    return {*x, *y};
}

void expect_count(const std::vector<text::Token>& toks, std::size_t n, int line, const char* usage) {
    if (toks.size() != n) {
        const int col = toks.size() > n ? toks[n].column : 0;
        throw ParseError(line, col, std::string("expected: ") + usage);
    }
}

}  // namespace

std::string_view to_string(TriggerKind kind) {
    switch (kind) {
        case TriggerKind::Dialogue: return "dialogue";
        case TriggerKind::DialogueTimerStart: return "timer_start";
        case TriggerKind::DialogueTimerStop: return "timer_stop";
        case TriggerKind::EndGame: return "end_game";
    }
    return "dialogue";
}

Cell LevelDef::spawn_cell() const {
    return {static_cast<int>(std::floor(spawn.x)), static_cast<int>(std::floor(spawn.y))};
}

LevelDef parse_level(std::string_view document) {
    const auto lines = text::split_lines(document);
    LevelDef level;

    std::size_t sep = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i] == "---") {
            sep = i;
            break;
        }
    }
    if (sep == lines.size()) throw ParseError(static_cast<int>(lines.size()) + 1, 0, "missing '---' separator");
    if (sep == 0) throw ValidationError("empty-grid", "level has no grid rows");

    level.height = static_cast<int>(sep);
    level.width = static_cast<int>(lines[0].size());
    if (level.width == 0) throw ValidationError("empty-grid", "first grid row is empty");
    level.grid.assign(static_cast<std::size_t>(level.width) * level.height, TileKind::Empty);

    int spawns = 0;
    for (std::size_t r = 0; r < sep; ++r) {
        const int line_no = static_cast<int>(r) + 1;
        const std::string_view row = lines[r];
        if (static_cast<int>(row.size()) != level.width)
            throw ValidationError("ragged-grid", "row at line " + std::to_string(line_no) + " has width " +
                                                     std::to_string(row.size()) + ", expected " +
                                                     std::to_string(level.width));
        const int world_row = level.height - 1 - static_cast<int>(r);
        for (int c = 0; c < level.width; ++c) {
            bool spawn = false;
            bool ok = false;
            const TileKind k = tile_from_char(row[static_cast<std::size_t>(c)], spawn, ok);
            if (!ok)
                throw ParseError(line_no, c + 1, std::string("unknown tile '") + row[static_cast<std::size_t>(c)] + "'");
            level.grid[static_cast<std::size_t>(world_row) * level.width + c] = k;
            if (spawn) {
                ++spawns;
                level.spawn = {c + 0.5, level.height - static_cast<double>(r) - 0.5};
            }
        }
    }
    if (spawns == 0) throw ValidationError("no-spawn", "grid has no 'S' cell");
    if (spawns > 1) throw ValidationError("multiple-spawn", "grid has more than one 'S' cell");

    for (std::size_t i = sep + 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view line = text::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const auto toks = text::tokenize(lines[i]);
        const auto& head = toks.front();

        if (head.text == "platform") {
            if (toks.size() < 6)
                throw ParseError(line_no, 0, "expected: platform <id> <hx> <hy> <speed> (<x>,<y>) ...");
            PlatformDef p;
            p.id = std::string(toks[1].text);
            p.half_extents = {text::require_double(toks[2], line_no), text::require_double(toks[3], line_no)};
            p.speed = text::require_double(toks[4], line_no);
            for (std::size_t k = 5; k < toks.size(); ++k) p.waypoints.push_back(parse_point(toks[k], line_no));
            level.platforms.push_back(std::move(p));
        } else if (head.text == "trigger") {
            expect_count(toks, 10, line_no, "trigger <id> <kind> <group|always> <dialogue_id> rect <cx> <cy> <hx> <hy>");
            TriggerDef t;
            t.id = std::string(toks[1].text);
            t.kind = trigger_kind_from(toks[2], line_no);
            if (toks[3].text == "always") {
                t.group = kAlwaysGroup;
            } else {
                const long long g = text::require_int(toks[3], line_no);
                if (g < 1 || g > kNumberedGroups)
                    throw ValidationError("trigger-group", "trigger '" + t.id + "' group must be 1..6 or always");
                t.group = static_cast<int>(g);
            }
            t.dialogue_id = std::string(toks[4].text);
            if (toks[5].text != "rect") throw ParseError(line_no, toks[5].column, "expected 'rect'");
            t.region.center = {text::require_double(toks[6], line_no), text::require_double(toks[7], line_no)};
            t.region.half_extents = {text::require_double(toks[8], line_no), text::require_double(toks[9], line_no)};
            level.triggers.push_back(std::move(t));
        } else if (head.text == "timer") {
            expect_count(toks, 2, line_no, "timer <seconds>");
            level.timer_seconds = text::require_double(toks[1], line_no);
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
        }
    }

    validate_level(level);
    return level;
}

void validate_level(const LevelDef& level) {
    if (level.width <= 0 || level.height <= 0 ||
        level.grid.size() != static_cast<std::size_t>(level.width) * level.height)
        throw ValidationError("empty-grid", "grid dimensions do not match its contents");

    const Cell sc = level.spawn_cell();
    if (!level.in_bounds(sc.col, sc.row)) throw ValidationError("spawn-out-of-bounds", "spawn lies outside the grid");
    // The player is two cells tall, so the cell above the spawn must be free too.
    if (level.tile(sc.col, sc.row) == TileKind::Terrain || level.tile(sc.col, sc.row + 1) == TileKind::Terrain)
        throw ValidationError("spawn-in-solid", "spawn overlaps terrain");

    std::set<std::string> ids;
    for (const auto& p : level.platforms) {
        if (!ids.insert(p.id).second) throw ValidationError("duplicate-id", "id '" + p.id + "' is used twice");
        if (p.waypoints.size() < 2)
            throw ValidationError("platform-waypoints", "platform '" + p.id + "' needs at least two waypoints");
        for (std::size_t a = 0; a < p.waypoints.size(); ++a)
            for (std::size_t b = a + 1; b < p.waypoints.size(); ++b)
                if (p.waypoints[a] == p.waypoints[b])
                    throw ValidationError("platform-waypoints", "platform '" + p.id + "' repeats a waypoint");
        if (!(p.speed > 0.0)) throw ValidationError("platform-speed", "platform '" + p.id + "' speed must be > 0");
        if (!(p.half_extents.x > 0.0) || !(p.half_extents.y > 0.0))
            throw ValidationError("platform-extent", "platform '" + p.id + "' half extents must be > 0");
    }

    const Aabb bounds{{level.width / 2.0, level.height / 2.0}, {level.width / 2.0, level.height / 2.0}};
    for (const auto& t : level.triggers) {
        if (!ids.insert(t.id).second) throw ValidationError("duplicate-id", "id '" + t.id + "' is used twice");
        if (!(t.region.half_extents.x > 0.0) || !(t.region.half_extents.y > 0.0))
            throw ValidationError("trigger-extent", "trigger '" + t.id + "' half extents must be > 0");
        if (t.group < kAlwaysGroup || t.group > kNumberedGroups)
            throw ValidationError("trigger-group", "trigger '" + t.id + "' group must be 1..6 or always");
        if (t.kind == TriggerKind::EndGame && t.group != kAlwaysGroup)
            throw ValidationError("trigger-group", "end_game trigger '" + t.id + "' must be in group always");
        if (!aabb_overlap(t.region, bounds))
            throw ValidationError("trigger-out-of-bounds", "trigger '" + t.id + "' lies outside the level");
        if (t.dialogue_id.empty()) throw ValidationError("unknown-dialogue", "trigger '" + t.id + "' has no dialogue");
    }

    if (!(level.timer_seconds > 0.0)) throw ValidationError("timer", "timer must be > 0 seconds");
}

std::string serialize_level(const LevelDef& level) {
    using text::format_double;
    std::ostringstream out;
    const Cell sc = level.spawn_cell();
    for (int row = level.height - 1; row >= 0; --row) {
        for (int col = 0; col < level.width; ++col) {
            if (col == sc.col && row == sc.row)
                out << 'S';
            else
                out << char_from_tile(level.tile(col, row));
        }
        out << '\n';
    }
    out << "---\n";
    for (const auto& p : level.platforms) {
        out << "platform " << p.id << ' ' << format_double(p.half_extents.x) << ' ' << format_double(p.half_extents.y)
            << ' ' << format_double(p.speed);
        for (const auto& w : p.waypoints) out << " (" << format_double(w.x) << ',' << format_double(w.y) << ')';
        out << '\n';
    }
    for (const auto& t : level.triggers) {
        out << "trigger " << t.id << ' ' << to_string(t.kind) << ' '
            << (t.group == kAlwaysGroup ? std::string("always") : std::to_string(t.group)) << ' ' << t.dialogue_id
            << " rect " << format_double(t.region.center.x) << ' ' << format_double(t.region.center.y) << ' '
            << format_double(t.region.half_extents.x) << ' ' << format_double(t.region.half_extents.y) << '\n';
    }
    out << "timer " << format_double(level.timer_seconds) << '\n';
    return out.str();
}

bool solid_at(const LevelDef& level, Cell cell) {
    if (cell.col < 0 || cell.col >= level.width) return true;
    if (cell.row < 0 || cell.row >= level.height) return false;
    return level.tile(cell.col, cell.row) == TileKind::Terrain;
}

std::vector<Cell> hazard_cells_overlapping(const LevelDef& level, const Aabb& body) {
    std::vector<Cell> out;
    // Closed intervals: a cell whose edge the body touches is included.
    const int col0 = std::max(0, static_cast<int>(std::floor(body.min_x())) - 1);
    const int col1 = std::min(level.width - 1, static_cast<int>(std::floor(body.max_x())));
    const int row0 = std::max(0, static_cast<int>(std::floor(body.min_y())) - 1);
    const int row1 = std::min(level.height - 1, static_cast<int>(std::floor(body.max_y())));
    for (int col = col0; col <= col1; ++col)
        for (int row = row0; row <= row1; ++row)
            if (level.tile(col, row) == TileKind::Hazard && aabb_overlap(cell_box(col, row), body))
                out.push_back({col, row});
    return out;
}

Solids level_solids(const LevelDef& level, std::span<const Aabb> boxes) {
    return Solids{[&level](int col, int row) { return solid_at(level, {col, row}); }, boxes};
}

}  // namespace climb
