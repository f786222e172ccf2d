#include "climb/player.hpp"

#include "climb/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace climb {

Tunables parse_tunables(std::string_view document) {
    Tunables t;
    std::set<std::string, std::less<>> seen;
    const auto lines = text::split_lines(document);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view line = text::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, 0, "expected 'key = value'");
        const std::string_view key = text::trim(line.substr(0, eq));
        const std::string_view value = text::trim(line.substr(eq + 1));
        const text::Token vt{value, static_cast<int>(lines[i].find(value)) + 1};
        if (!seen.insert(std::string(key)).second)
            throw ParseError(line_no, 1, "duplicate key '" + std::string(key) + "'");

        if (key == "gravity") t.gravity = text::require_double(vt, line_no);
        else if (key == "move_speed") t.move_speed = text::require_double(vt, line_no);
        else if (key == "jump_force") t.jump_force = text::require_double(vt, line_no);
        else if (key == "fall_speed") t.fall_speed = text::require_double(vt, line_no);
        else if (key == "fall_threshold") t.fall_threshold = text::require_double(vt, line_no);
        else if (key == "probe_depth") t.probe_depth = text::require_double(vt, line_no);
        else if (key == "damage_kick_x") t.damage_kick.x = text::require_double(vt, line_no);
        else if (key == "damage_kick_y") t.damage_kick.y = text::require_double(vt, line_no);
        else if (key == "max_health") t.max_health = static_cast<int>(text::require_int(vt, line_no));
        else if (key == "tick_rate") t.tick_rate = static_cast<int>(text::require_int(vt, line_no));
        else throw ParseError(line_no, 1, "unknown key '" + std::string(key) + "'");
    }
    validate_tunables(t);
    return t;
}

void validate_tunables(const Tunables& t) {
    auto fail = [](const std::string& what) { throw ValidationError("tunables", what); };
    if (!(t.gravity < 0.0)) fail("gravity must be negative");
    if (!(t.fall_threshold < 0.0)) fail("fall_threshold must be negative");
    if (!(t.move_speed > 0.0)) fail("move_speed must be positive");
    if (!(t.jump_force > 0.0)) fail("jump_force must be positive");
    if (!(t.fall_speed > 1.0)) fail("fall_speed must be > 1");
    if (!(t.probe_depth > 0.0)) fail("probe_depth must be positive");
    if (!(t.damage_kick.y > 0.0) || !std::isfinite(t.damage_kick.x)) fail("damage_kick_y must be positive");
    if (t.max_health <= 0) fail("max_health must be positive");
    if (t.tick_rate <= 0) fail("tick_rate must be positive");
}

std::string serialize_tunables(const Tunables& t) {
    using text::format_double;
    std::ostringstream out;
    out << "gravity = " << format_double(t.gravity) << '\n'
        << "move_speed = " << format_double(t.move_speed) << '\n'
        << "jump_force = " << format_double(t.jump_force) << '\n'
        << "fall_speed = " << format_double(t.fall_speed) << '\n'
        << "fall_threshold = " << format_double(t.fall_threshold) << '\n'
        << "probe_depth = " << format_double(t.probe_depth) << '\n'
        << "damage_kick_x = " << format_double(t.damage_kick.x) << '\n'
        << "damage_kick_y = " << format_double(t.damage_kick.y) << '\n'
        << "max_health = " << t.max_health << '\n'
        << "tick_rate = " << t.tick_rate << '\n';
    return out.str();
}

InputFrame clamped(InputFrame in) {
    in.move_x = std::clamp(in.move_x, -1.0, 1.0);
    in.move_y = std::clamp(in.move_y, -1.0, 1.0);
    return in;
}

std::string_view to_string(MovementState s) {
    switch (s) {
        case MovementState::Idle: return "idle";
        case MovementState::Running: return "running";
        case MovementState::Jumping: return "jumping";
        case MovementState::Falling: return "falling";
    }
    return "idle";
}

std::string_view to_string(AudioEvent e) {
    switch (e) {
        case AudioEvent::Jump: return "jump";
        case AudioEvent::Land: return "land";
        case AudioEvent::FootstepLoop: return "footstep";
    }
    return "jump";
}

PlayerState spawn_player(const LevelDef& level, const Tunables& t) {
    PlayerState p;
    const Cell sc = level.spawn_cell();
    p.body.center = {level.spawn.x, sc.row + kPlayerHalfExtents.y};
    p.health = t.max_health;
    p.grounded = probe_down(p.body, t.probe_depth, level_solids(level));
    return p;
}

AnimResult derive_anim(const PlayerState& p, const InputFrame& input, const Tunables& t) {
    const double speed = std::clamp(std::abs(input.move_x) + std::abs(input.move_y), 0.0, 1.0);
    if (p.velocity.y > -t.fall_threshold) return {MovementState::Jumping, speed};
    if (p.velocity.y < t.fall_threshold) return {MovementState::Falling, speed};
    if (p.grounded && input.move_x != 0.0) return {MovementState::Running, speed};
    return {MovementState::Idle, speed};
}

PlayerStepResult player_step(const PlayerState& p, const InputFrame& raw_input, const Solids& solids, bool paused,
                             const Tunables& t) {
    PlayerStepResult out{p, {}};
    if (paused || !p.alive) return out;

    const InputFrame input = clamped(raw_input);
    PlayerState& s = out.state;
    const double dt = t.dt();

    // (1) horizontal intent
    s.velocity.x = input.move_x * t.move_speed;
    if (input.move_x > 0.0) s.facing = Facing::Right;
    else if (input.move_x < 0.0) s.facing = Facing::Left;

    // (2)-(3) grounding gate for the jump
    const bool grounded_now = probe_down(s.body, t.probe_depth, solids);
    if (input.jump_pressed && grounded_now) {
        s.velocity.y = t.jump_force;
        out.events.push_back(AudioEvent::Jump);
    }

    // (4) gravity, then the extra fall term. The descent test reads the
    // velocity this phase started with, before plain gravity is added.
    const bool descending = s.velocity.y < t.fall_threshold;
    s.velocity.y += t.gravity * dt;
    if (descending) s.velocity.y += t.gravity * (t.fall_speed - 1.0) * dt;

    // (5) substepped slide
    const Vec2 disp = s.velocity * dt;
    const double biggest = std::max(std::abs(disp.x), std::abs(disp.y));
    const int steps = std::max(1, static_cast<int>(std::ceil(biggest / kMaxSubstep)));
    const Vec2 part = steps == 1 ? disp : Vec2{disp.x / steps, disp.y / steps};
    bool hit_x = false;
    bool hit_y = false;
    for (int i = 0; i < steps; ++i) {
        const SlideResult r = slide_move(s.body, part, solids);
        s.body.center = r.center;
        hit_x = hit_x || r.hit_x;
        hit_y = hit_y || r.hit_y;
    }
    if (hit_x) s.velocity.x = 0.0;
    if (hit_y) s.velocity.y = 0.0;

    // (6) landing / footsteps
    const bool was_grounded = p.grounded;
    s.grounded = probe_down(s.body, t.probe_depth, solids);
    if (!was_grounded && s.grounded && s.velocity.y <= 0.0) out.events.push_back(AudioEvent::Land);

    // (7) animation
    const AnimResult anim = derive_anim(s, input, t);
    s.anim = anim.state;
    s.anim_speed = anim.speed;
    if (s.anim == MovementState::Running) out.events.push_back(AudioEvent::FootstepLoop);
    return out;
}

DamageResult take_damage(const PlayerState& p, int amount, const Tunables& t) {
    DamageResult out{p, false};
    PlayerState& s = out.state;
    s.health = std::clamp(s.health - amount, 0, t.max_health);
    s.velocity = t.damage_kick;
    s.take_hit = true;
    if (s.health <= 0) {
        out.died = true;
        s.alive = false;
        s.velocity = {};
        s.kill_player = true;
    }
    return out;
}

HazardContact hazard_contact_check(const PlayerState& p, const LevelDef& level,
                                   const std::vector<Cell>& prev_contacts) {
    HazardContact out;
    out.contacts = hazard_cells_overlapping(level, p.body);
    for (const Cell& c : out.contacts)
        if (!std::binary_search(prev_contacts.begin(), prev_contacts.end(), c)) ++out.damage_events;
    return out;
}

}  // namespace climb
