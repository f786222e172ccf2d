#pragma once
/**
 * @file player.hpp
 * @brief Player avatar mechanics: input application, grounding, jump/fall
 *        integration, damage and animation state.
 */

#include "climb/geometry.hpp"
#include "climb/level.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace climb {

/// Movement constants. Loaded from a `key = value` file; see parse_tunables.
struct Tunables {
    double gravity{-25.0};        // units/s^2
    double move_speed{7.0};       // units/s
    double jump_force{12.0};      // units/s
    double fall_speed{2.5};       // gravity multiplier while descending
    double fall_threshold{-0.1};  // units/s
    double probe_depth{0.1};      // units
    Vec2 damage_kick{0.0, 8.0};   // units/s
    int max_health{3};
    int tick_rate{60};  // Hz

    double dt() const { return 1.0 / tick_rate; }
    bool operator==(const Tunables&) const = default;
};

/// Keys: gravity, move_speed, jump_force, fall_speed, fall_threshold,
/// probe_depth, damage_kick_x, damage_kick_y, max_health, tick_rate.
/// Unknown keys are a ParseError; broken invariants a ValidationError.
Tunables parse_tunables(std::string_view document);
std::string serialize_tunables(const Tunables& t);
void validate_tunables(const Tunables& t);

struct InputFrame {
    double move_x{0.0};  // [-1, 1]
    double move_y{0.0};  // [-1, 1], animation magnitude only
    bool jump_pressed{false};
    bool advance_pressed{false};
    bool pause_pressed{false};

    bool operator==(const InputFrame&) const = default;
};

/// Clamps both axes into [-1, 1].
InputFrame clamped(InputFrame in);

enum class MovementState : std::uint8_t { Idle = 0, Running = 1, Jumping = 2, Falling = 3 };
enum class Facing : std::uint8_t { Left = 0, Right = 1 };
enum class AudioEvent : std::uint8_t { Jump = 0, Land = 1, FootstepLoop = 2 };

std::string_view to_string(MovementState s);
std::string_view to_string(AudioEvent e);

inline constexpr Vec2 kPlayerHalfExtents{0.4, 0.75};
/// Largest per-axis displacement handed to one slide_move call.
inline constexpr double kMaxSubstep = 0.5;

struct PlayerState {
    Aabb body{{0.0, 0.0}, kPlayerHalfExtents};
    Vec2 velocity;
    int health{3};
    bool grounded{false};
    MovementState anim{MovementState::Idle};
    double anim_speed{0.0};
    Facing facing{Facing::Right};
    bool alive{true};
    bool take_hit{false};     // one-tick pulse
    bool kill_player{false};  // set on death, cleared by restart

    bool operator==(const PlayerState&) const = default;
};

/// Player standing on the floor of the spawn cell, full health.
PlayerState spawn_player(const LevelDef& level, const Tunables& t);

struct PlayerStepResult {
    PlayerState state;
    std::vector<AudioEvent> events;
};

/// One fixed tick of player physics. Paused or dead players are returned
/// unchanged. Order: horizontal input, grounding probe, jump, gravity (+fall
/// boost), substepped slide, landing event, animation.
PlayerStepResult player_step(const PlayerState& p, const InputFrame& input, const Solids& solids, bool paused,
                             const Tunables& t);

struct AnimResult {
    MovementState state;
    double speed;
};

AnimResult derive_anim(const PlayerState& p, const InputFrame& input, const Tunables& t = {});

struct DamageResult {
    PlayerState state;
    bool died{false};
};

DamageResult take_damage(const PlayerState& p, int amount, const Tunables& t);

struct HazardContact {
    int damage_events{0};
    std::vector<Cell> contacts;
};

/// Contact-enter damage: one event per hazard cell overlapping now that was
/// not in prev_contacts (sorted).
HazardContact hazard_contact_check(const PlayerState& p, const LevelDef& level, const std::vector<Cell>& prev_contacts);

}  // namespace climb
