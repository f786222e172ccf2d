#include "climb/engine.hpp"

#include "climb/error.hpp"

#include <algorithm>

namespace climb {

namespace {

constexpr double kWaypointArrival = 0.1;

void emit(WorldState& w, EventKind kind, std::string arg = {}) {
    w.events.push_back({w.sim_tick, kind, std::move(arg)});
}

void kill(WorldState& w) {
    w.player.health = 0;
    w.player.alive = false;
    w.player.velocity = {};
    w.player.kill_player = true;
    emit(w, EventKind::Death);
    w.restart_pending = true;
}

void apply_hazards(WorldState& w) {
    const HazardContact hc = hazard_contact_check(w.player, w.level(), w.hazard_contacts);
    w.hazard_contacts = hc.contacts;
    for (int i = 0; i < hc.damage_events && w.player.alive; ++i) {
        const DamageResult r = take_damage(w.player, 1, w.tunables());
        w.player = r.state;
        emit(w, EventKind::Damage);
        if (r.died) {
            emit(w, EventKind::Death);
            w.restart_pending = true;
        }
    }
}

void fire_trigger(WorldState& w, std::size_t index) {
    const TriggerDef& def = w.level().triggers[index];
    w.triggers[index] = {false, true};
    emit(w, EventKind::Trigger, def.id);

    const auto* content = w.assets->script.find(def.dialogue_id);
    w.conversation = start_conversation(w.conversation, *content);
    w.conversation_id = def.dialogue_id;
    w.session.is_paused = true;
    emit(w, EventKind::DialogueStart, def.dialogue_id);

    switch (def.kind) {
        case TriggerKind::Dialogue: break;
        case TriggerKind::DialogueTimerStart:
            w.timer.running = true;
            emit(w, EventKind::TimerStart);
            break;
        case TriggerKind::DialogueTimerStop:
            w.timer.running = false;
            emit(w, EventKind::TimerStop);
            break;
        case TriggerKind::EndGame: schedule_credits(w); break;
    }
}

void scan_triggers(WorldState& w) {
    const auto& defs = w.level().triggers;
    for (std::size_t i = 0; i < defs.size(); ++i) {
        const TriggerState& ts = w.triggers[i];
        if (!ts.active || ts.fired) continue;
        if (aabb_overlap(defs[i].region, w.player.body)) {
            fire_trigger(w, i);
            return;  // one conversation at a time
        }
    }
}

void simulate(WorldState& w, const InputFrame& in, bool& restart_now) {
    const Tunables& t = w.tunables();
    ++w.sim_tick;
    // take_hit is a one-sim-tick pulse; a dead player keeps its final pose.
    if (w.player.alive) w.player.take_hit = false;

    const TimerTick tt = timer_tick(w.timer, t.dt());
    w.timer = tt.state;
    if (tt.expired) {
        emit(w, EventKind::TimerExpire);
        restart_now = true;
        return;
    }

    step_platforms(w);
    if (!w.player.alive) return;

    const std::vector<Aabb> boxes = w.platform_boxes();
    const PlayerStepResult pr = player_step(w.player, in, level_solids(w.level(), boxes), false, t);
    w.player = pr.state;
    for (AudioEvent e : pr.events) {
        w.audio_events.push_back(e);
        if (e == AudioEvent::Jump) emit(w, EventKind::Jump);
        if (e == AudioEvent::Land) emit(w, EventKind::Land);
    }

    // Falling out of the open bottom of the level ends the attempt.
    if (w.player.body.max_y() < -1.0) {
        kill(w);
        return;
    }

    apply_hazards(w);
    if (!w.player.alive) return;
    scan_triggers(w);
}

}  // namespace

std::string_view to_string(EventKind k) {
    switch (k) {
        case EventKind::Jump: return "JUMP";
        case EventKind::Land: return "LAND";
        case EventKind::Damage: return "DAMAGE";
        case EventKind::Death: return "DEATH";
        case EventKind::Trigger: return "TRIGGER";
        case EventKind::TimerStart: return "TIMER_START";
        case EventKind::TimerStop: return "TIMER_STOP";
        case EventKind::TimerExpire: return "TIMER_EXPIRE";
        case EventKind::Restart: return "RESTART";
        case EventKind::DialogueStart: return "DIALOGUE_START";
        case EventKind::DialogueEnd: return "DIALOGUE_END";
        case EventKind::Credits: return "CREDITS";
    }
    return "?";
}

std::string GameEvent::to_line() const {
    std::string s = std::to_string(tick);
    s += ' ';
    s += to_string(kind);
    if (!arg.empty()) {
        s += ' ';
        s += arg;
    }
    return s;
}

void validate_assets(const LevelDef& level, const DialogueScript& script) {
    for (const auto& t : level.triggers)
        if (!script.find(t.dialogue_id))
            throw ValidationError("unresolved-dialogue",
                                  "trigger '" + t.id + "' references unknown conversation '" + t.dialogue_id + "'");
}

std::shared_ptr<const Assets> make_assets(LevelDef level, DialogueScript script, Tunables tunables) {
    validate_level(level);
    validate_tunables(tunables);
    validate_assets(level, script);
    return std::make_shared<const Assets>(Assets{std::move(level), std::move(script), tunables});
}

Aabb WorldState::platform_box(const PlatformState& p) const {
    return Aabb{p.position, level().platforms[p.def_index].half_extents};
}

std::vector<Aabb> WorldState::platform_boxes() const {
    std::vector<Aabb> out;
    out.reserve(platforms.size());
    for (const auto& p : platforms) out.push_back(platform_box(p));
    return out;
}

WorldState world_init(std::shared_ptr<const Assets> assets, int attempt) {
    validate_assets(assets->level, assets->script);
    WorldState w;
    w.assets = std::move(assets);
    const LevelDef& level = w.level();

    w.scene = Scene::Game;
    w.session.current_attempt = std::max(1, attempt);
    w.player = spawn_player(level, w.tunables());

    w.platforms.reserve(level.platforms.size());
    for (std::size_t i = 0; i < level.platforms.size(); ++i)
        w.platforms.push_back({static_cast<std::uint32_t>(i), level.platforms[i].waypoints.front(), 0, false});

    w.triggers.reserve(level.triggers.size());
    for (const auto& t : level.triggers) w.triggers.push_back({group_enabled(t.group, w.session.current_attempt), false});

    w.timer = make_timer(level.timer_seconds);
    w.camera = {w.player.body.center, false};
    return w;
}

WorldState menu_world(std::shared_ptr<const Assets> assets) {
    WorldState w = world_init(std::move(assets), 1);
    w.scene = Scene::MainMenu;
    return w;
}

void step_platforms(WorldState& w) {
    const LevelDef& level = w.level();
    const Tunables& t = w.tunables();
    bool carried = false;
    for (std::size_t i = 0; i < w.platforms.size(); ++i) {
        PlatformState& p = w.platforms[i];
        const PlatformDef& def = level.platforms[p.def_index];

        const bool standing = !carried && w.player.alive &&
                              probe_down(w.player.body, t.probe_depth, w.platform_box(p));

        // Check-then-move, as a waypoint follower's Update would.
        if (distance(def.waypoints[static_cast<std::size_t>(p.waypoint_index)], p.position) < kWaypointArrival) {
            ++p.waypoint_index;
            if (p.waypoint_index >= static_cast<int>(def.waypoints.size())) p.waypoint_index = 0;
        }
        const Vec2 next =
            move_towards(p.position, def.waypoints[static_cast<std::size_t>(p.waypoint_index)], def.speed * t.dt());
        const Vec2 delta = next - p.position;
        p.position = next;
        p.carrying_player = standing;

        if (standing) {
            carried = true;
            std::vector<Aabb> others;
            for (std::size_t j = 0; j < w.platforms.size(); ++j)
                if (j != i) others.push_back(w.platform_box(w.platforms[j]));
            w.player.body.center = slide_move(w.player.body, delta, level_solids(level, others)).center;
        }
    }
}

void step_in_place(WorldState& w, const InputFrame& raw) {
    const InputFrame in = clamped(raw);
    w.events.clear();
    w.audio_events.clear();
    ++w.ui_tick;  // 1

    if (w.scene == Scene::MainMenu) {
        if (in.advance_pressed || in.jump_pressed) w.scene = Scene::Game;
        return;
    }
    if (w.scene != Scene::Game) return;

    const bool restart_due = w.restart_pending;
    bool restart_now = false;

    if (w.conversation.active) {  // 2
        w.conversation = typewriter_tick(w.conversation);
        if (in.advance_pressed) {
            AdvanceResult r = advance(w.conversation);
            w.conversation = std::move(r.state);
            if (r.ended) {
                emit(w, EventKind::DialogueEnd, w.conversation_id);
                w.conversation_id.clear();
                w.session.is_paused = w.user_paused;
            }
        }
    } else {
        if (in.pause_pressed) {  // 3
            w.user_paused = !w.user_paused;
            w.session.is_paused = w.user_paused;
        }
        if (!w.user_paused) simulate(w, in, restart_now);  // 4-8
    }

    if (!w.camera.frozen) w.camera.position = w.player.body.center;  // 9

    // 10
    if (w.pending_credits_at && w.sim_tick >= *w.pending_credits_at) {
        w.scene = Scene::Credits;
        w.pending_credits_at.reset();
        emit(w, EventKind::Credits);
        return;
    }
    if (restart_due || restart_now) {
        w.restart_pending = false;
        restart_level(w);
    }
}

WorldState step(WorldState world, const InputFrame& input) {
    step_in_place(world, input);
    return world;
}

Snapshot snapshot(const WorldState& w) {
    Snapshot s;
    s.scene = w.scene;
    s.sim_tick = w.sim_tick;
    s.ui_tick = w.ui_tick;
    s.attempt = w.session.current_attempt;
    s.health = w.player.health;
    s.max_health = w.tunables().max_health;
    s.timer_fraction = w.timer.fraction();
    s.timer_running = w.timer.running;
    s.player_position = w.player.body.center;
    s.player_half_extents = w.player.body.half_extents;
    s.anim_code = static_cast<int>(w.player.anim);
    s.anim_speed = w.player.anim_speed;
    s.facing = w.player.facing;
    s.alive = w.player.alive;
    s.take_hit = w.player.take_hit;
    s.kill_player = w.player.kill_player;
    for (const auto& p : w.platforms) {
        const auto& def = w.level().platforms[p.def_index];
        s.platforms.push_back({def.id, p.position, def.half_extents});
    }
    s.dialogue.active = w.conversation.active;
    s.dialogue.speaker = w.conversation.speaker;
    s.dialogue.revealed_text = w.conversation.revealed_text();
    s.dialogue.revealed_chars = w.conversation.revealed;
    s.dialogue.continue_available = w.conversation.active;
    s.sim_frozen = w.sim_frozen();
    s.user_paused = w.user_paused;
    s.camera = w.camera.position;
    s.camera_frozen = w.camera.frozen;
    s.audio = w.audio_events;
    for (const auto& e : w.events) s.events.push_back(e.to_line());
    return s;
}

}  // namespace climb
