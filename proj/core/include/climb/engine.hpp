#pragma once
/**
 * @file engine.hpp
 * @brief Fixed-timestep orchestrator: world assembly, the per-tick update
 *        order, triggers, moving platforms with sticky carry, camera and
 *        snapshots.
 *
 * Two clocks run side by side. The ui clock counts every step() call. The
 * sim clock only advances when no conversation is open and the user has not
 * paused; player physics, platforms, the level timer and the credits delay
 * all live on the sim clock, while the typewriter runs on the ui clock.
 *
 * Update order of one step():
 *   1. ui_tick += 1
 *   2. open conversation: typewriter tick, advance on advance_pressed; skip to 9
 *   3. pause_pressed toggles the user pause; while paused skip to 9
 *   4. sim_tick += 1, level timer tick (expiry marks a restart, skip to 9)
 *   5. platforms: waypoint check, then move; a standing player is carried
 *   6. player physics
 *   7. hazard contact-enter damage (death restarts on the following tick)
 *   8. trigger scan: first enabled, unfired trigger overlapping the player fires
 *   9. camera follows the player unless frozen
 *  10. pending credits / pending restart
 */

#include "climb/geometry.hpp"
#include "climb/level.hpp"
#include "climb/narrative.hpp"
#include "climb/player.hpp"
#include "climb/session.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace climb {

/// Immutable inputs shared by every world built from them.
struct Assets {
    LevelDef level;
    DialogueScript script;
    Tunables tunables;
};

/// Throws ValidationError("unresolved-dialogue") if a trigger names a
/// conversation the script lacks.
void validate_assets(const LevelDef& level, const DialogueScript& script);

std::shared_ptr<const Assets> make_assets(LevelDef level, DialogueScript script, Tunables tunables = {});

enum class EventKind : std::uint8_t {
    Jump = 0,
    Land,
    Damage,
    Death,
    Trigger,
    TimerStart,
    TimerStop,
    TimerExpire,
    Restart,
    DialogueStart,
    DialogueEnd,
    Credits,
};

std::string_view to_string(EventKind k);

/// One event-log entry. `tick` is the sim tick it happened on.
struct GameEvent {
    std::int64_t tick{0};
    EventKind kind{EventKind::Jump};
    std::string arg;  // trigger id, dialogue id or attempt number

    /// "<tick> <EVENT>[ <arg>]"
    std::string to_line() const;
    bool operator==(const GameEvent&) const = default;
};

struct PlatformState {
    std::uint32_t def_index{0};
    Vec2 position;
    int waypoint_index{0};
    bool carrying_player{false};

    bool operator==(const PlatformState&) const = default;
};

struct TriggerState {
    bool active{false};
    bool fired{false};

    bool operator==(const TriggerState&) const = default;
};

struct CameraState {
    Vec2 position;
    bool frozen{false};

    bool operator==(const CameraState&) const = default;
};

struct WorldState {
    std::shared_ptr<const Assets> assets;

    Scene scene{Scene::Game};
    GameSession session;
    bool user_paused{false};
    std::int64_t sim_tick{0};
    std::int64_t ui_tick{0};
    PlayerState player;
    std::vector<PlatformState> platforms;
    std::vector<TriggerState> triggers;  // parallel to assets->level.triggers
    ConversationState conversation;
    std::string conversation_id;
    TimerState timer;
    CameraState camera;
    std::vector<Cell> hazard_contacts;
    std::optional<std::int64_t> pending_credits_at;
    bool restart_pending{false};

    // Outputs of the last step only.
    std::vector<AudioEvent> audio_events;
    std::vector<GameEvent> events;

    const LevelDef& level() const { return assets->level; }
    const Tunables& tunables() const { return assets->tunables; }
    Aabb platform_box(const PlatformState& p) const;
    std::vector<Aabb> platform_boxes() const;
    bool sim_frozen() const { return conversation.active || user_paused; }
};

/// Fresh Game-scene world for the given attempt (>= 1).
WorldState world_init(std::shared_ptr<const Assets> assets, int attempt = 1);

/// World parked on the main menu; jump or advance starts the game.
WorldState menu_world(std::shared_ptr<const Assets> assets);

/// Advances one tick in place (see the update order above).
void step_in_place(WorldState& world, const InputFrame& input);

/// Value-returning form of step_in_place.
WorldState step(WorldState world, const InputFrame& input);

/// Phase 5 on its own: moves every platform one tick and carries a player
/// standing on one. Exposed for tests that need the pre-physics body.
void step_platforms(WorldState& world);

struct PlatformPose {
    std::string id;
    Vec2 position;
    Vec2 half_extents;
};

struct DialogueView {
    bool active{false};
    std::string speaker;
    std::string revealed_text;
    std::size_t revealed_chars{0};
    bool continue_available{false};
};

/// Read-only projection of a world for rendering.
struct Snapshot {
    Scene scene{Scene::Game};
    std::int64_t sim_tick{0};
    std::int64_t ui_tick{0};
    int attempt{1};
    int health{0};
    int max_health{0};
    double timer_fraction{1.0};
    bool timer_running{false};
    Vec2 player_position;
    Vec2 player_half_extents;
    int anim_code{0};
    double anim_speed{0.0};
    Facing facing{Facing::Right};
    bool alive{true};
    bool take_hit{false};
    bool kill_player{false};
    std::vector<PlatformPose> platforms;
    DialogueView dialogue;
    bool sim_frozen{false};
    bool user_paused{false};
    Vec2 camera;
    bool camera_frozen{false};
    std::vector<AudioEvent> audio;
    std::vector<std::string> events;
};

Snapshot snapshot(const WorldState& world);

}  // namespace climb
