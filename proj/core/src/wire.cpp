#include "climb/wire.hpp"

#include <json.hpp>

#include <cmath>

namespace climb {

namespace {

using nlohmann::json;

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

double number_field(const json& msg, const char* key, double fallback) {
    const auto it = msg.find(key);
    if (it == msg.end()) return fallback;
    if (!it->is_number()) throw std::invalid_argument(std::string("field '") + key + "' must be a number");
    return it->get<double>();
}

bool bool_field(const json& msg, const char* key) {
    const auto it = msg.find(key);
    if (it == msg.end()) return false;
    if (it->is_boolean()) return it->get<bool>();
    if (it->is_number_integer()) return it->get<long long>() != 0;
    throw std::invalid_argument(std::string("field '") + key + "' must be a boolean");
}

}  // namespace

std::string snapshot_to_json(const Snapshot& s) {
    json platforms = json::array();
    for (const auto& p : s.platforms)
        platforms.push_back({{"id", p.id}, {"position", vec_json(p.position)}, {"half_extents", vec_json(p.half_extents)}});
    json audio = json::array();
    for (AudioEvent e : s.audio) audio.push_back(std::string(to_string(e)));

    json j = {
        {"type", "Snap"},
        {"scene", std::string(to_string(s.scene))},
        {"sim_tick", s.sim_tick},
        {"tick", s.ui_tick},
        {"attempt", s.attempt},
        {"health", s.health},
        {"max_health", s.max_health},
        {"timer_fraction", s.timer_fraction},
        {"timer_running", s.timer_running},
        {"player",
         {{"position", vec_json(s.player_position)},
          {"half_extents", vec_json(s.player_half_extents)},
          {"anim", s.anim_code},
          {"anim_speed", s.anim_speed},
          {"facing", s.facing == Facing::Left ? "left" : "right"},
          {"alive", s.alive},
          {"take_hit", s.take_hit},
          {"kill_player", s.kill_player}}},
        {"platforms", platforms},
        {"dialogue",
         {{"active", s.dialogue.active},
          {"speaker", s.dialogue.speaker},
          {"text", s.dialogue.revealed_text},
          {"continue", s.dialogue.continue_available}}},
        {"sim_frozen", s.sim_frozen},
        {"paused", s.user_paused},
        {"camera", {{"position", vec_json(s.camera)}, {"frozen", s.camera_frozen}}},
        {"audio", audio},
        {"events", s.events},
    };
    return j.dump();
}

WireSession::WireSession(std::shared_ptr<const Assets> assets) : assets_(std::move(assets)) {}

std::string WireSession::error(std::string_view message) const {
    return json{{"type", "Error"}, {"message", std::string(message)}}.dump();
}

std::string WireSession::handle_line(std::string_view line) {
    json msg;
    try {
        msg = json::parse(line);
    } catch (const json::parse_error& e) {
        return error(std::string("malformed JSON: ") + e.what());
    }
    if (!msg.is_object() || !msg.contains("type") || !msg["type"].is_string())
        return error("message must be an object with a string 'type'");

    const std::string type = msg["type"].get<std::string>();
    try {
        if (type == "Start") {
            const std::string scene = msg.value("scene", std::string("Game"));
            if (scene != "Game" && scene != "MainMenu") return error("unknown scene '" + scene + "'");
            if (!world_) world_ = scene == "MainMenu" ? menu_world(assets_) : world_init(assets_, 1);
            last_tick_.reset();
            return snapshot_to_json(snapshot(*world_));
        }
        if (type == "Input") {
            if (!world_) return error("Input before Start");
            if (!msg.contains("tick") || !msg["tick"].is_number_integer()) return error("Input needs an integer 'tick'");
            const std::int64_t tick = msg["tick"].get<std::int64_t>();
            if (last_tick_ && tick <= *last_tick_) return error("Input ticks must increase");
            InputFrame in;
            in.move_x = number_field(msg, "move_x", 0.0);
            in.move_y = number_field(msg, "move_y", 0.0);
            in.jump_pressed = bool_field(msg, "jump");
            in.advance_pressed = bool_field(msg, "adv");
            in.pause_pressed = bool_field(msg, "pause");
            if (!std::isfinite(in.move_x) || !std::isfinite(in.move_y)) return error("axes must be finite");
            last_tick_ = tick;
            step_in_place(*world_, in);
            return snapshot_to_json(snapshot(*world_));
        }
    } catch (const std::exception& e) {
        return error(e.what());
    }
    return error("unknown message type '" + type + "'");
}

}  // namespace climb
