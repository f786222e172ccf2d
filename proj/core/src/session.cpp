#include "climb/session.hpp"

#include "climb/engine.hpp"

#include <cmath>

namespace climb {

std::string_view to_string(Scene s) {
    switch (s) {
        case Scene::MainMenu: return "MainMenu";
        case Scene::Game: return "Game";
        case Scene::Credits: return "Credits";
    }
    return "Game";
}

bool scene_transition_allowed(Scene from, Scene to) {
    return (from == Scene::MainMenu && to == Scene::Game) || (from == Scene::Game && to == Scene::Game) ||
           (from == Scene::Game && to == Scene::Credits);
}

GameSession next_attempt(GameSession s) {
    ++s.current_attempt;
    return s;
}

TimerState make_timer(double duration) { return TimerState{false, duration, duration}; }

TimerTick timer_tick(const TimerState& t, double dt) {
    TimerTick out{t, false};
    if (!t.running || t.remaining <= 0.0) return out;
    double r = t.remaining - dt;
    if (r <= kTimerSnap) {
        r = 0.0;
        out.expired = true;
    }
    out.state.remaining = r;
    return out;
}

void restart_level(WorldState& world) {
    const GameSession session = next_attempt(world.session);
    WorldState fresh = world_init(world.assets, session.current_attempt);
    fresh.session = session;
    fresh.user_paused = world.user_paused;
    fresh.session.is_paused = world.user_paused;
    fresh.sim_tick = world.sim_tick;
    fresh.ui_tick = world.ui_tick;
    fresh.events = std::move(world.events);
    fresh.audio_events = std::move(world.audio_events);
    fresh.events.push_back({fresh.sim_tick, EventKind::Restart, std::to_string(session.current_attempt)});
    world = std::move(fresh);
}

void schedule_credits(WorldState& world) {
    world.timer = make_timer(world.timer.duration);
    world.events.push_back({world.sim_tick, EventKind::TimerStop, {}});
    world.camera.frozen = true;
    const auto delay = static_cast<std::int64_t>(std::llround(kCreditsDelaySeconds * world.tunables().tick_rate));
    world.pending_credits_at = world.sim_tick + delay;
}

}  // namespace climb
