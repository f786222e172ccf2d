#pragma once
/**
 * @file session.hpp
 * @brief Cross-restart state (attempt counter), the level timer and scene flow.
 */

#include <cstdint>
#include <string_view>

namespace climb {

struct WorldState;

enum class Scene : std::uint8_t { MainMenu = 0, Game = 1, Credits = 2 };

std::string_view to_string(Scene s);

/// Allowed: MainMenu->Game, Game->Game (restart), Game->Credits.
bool scene_transition_allowed(Scene from, Scene to);

struct GameSession {
    int current_attempt{1};
    bool is_paused{false};  // dialogue or user pause

    bool operator==(const GameSession&) const = default;
};

GameSession next_attempt(GameSession s);

struct TimerState {
    bool running{false};
    double remaining{60.0};
    double duration{60.0};

    double fraction() const { return duration > 0.0 ? remaining / duration : 0.0; }
    bool operator==(const TimerState&) const = default;
};

/// A countdown closer to zero than this after a tick snaps to zero, so
/// N ticks of 1/N seconds expire on exactly the N-th tick.
inline constexpr double kTimerSnap = 1e-9;

TimerState make_timer(double duration);

struct TimerTick {
    TimerState state;
    bool expired{false};
};

/// Counts down while running; expired is true only on the tick it hits zero.
TimerTick timer_tick(const TimerState& t, double dt);

/// Delay between the end trigger and the credits scene, in seconds of sim time.
inline constexpr double kCreditsDelaySeconds = 2.0;

/// Advances the attempt and rebuilds every level-owned part of the world from
/// its assets. Session fields and both clocks carry over.
void restart_level(WorldState& world);

/// End-of-level side effects: stop and reset the timer, freeze the camera and
/// schedule Credits two seconds of sim time ahead.
void schedule_credits(WorldState& world);

}  // namespace climb
