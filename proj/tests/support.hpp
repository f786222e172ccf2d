#pragma once

#include "climb/io.hpp"
#include "climb/replay.hpp"

#include <memory>
#include <string>
#include <vector>

namespace climb::testing {

inline std::string asset_path(const std::string& name) { return std::string(CLIMB_ASSET_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(CLIMB_GOLDEN_DIR) + "/" + name; }

/// The shipped level, manuscript and tunables, loaded once.
inline std::shared_ptr<const Assets> shipped() {
    static const auto assets = load_assets(asset_path("tower.level"), asset_path("manuscript.script"),
                                           asset_path("default.tunables"));
    return assets;
}

inline InputTrace shipped_trace(const std::string& name) {
    return parse_trace(read_text_file(asset_path("traces/" + name + ".trace")));
}

inline std::string event_log(const std::vector<GameEvent>& events) {
    std::string out;
    for (const auto& e : events) out += e.to_line() + "\n";
    return out;
}

/// Assets for a hand-written level; every referenced dialogue gets a one-line stub.
inline std::shared_ptr<const Assets> tiny_assets(const std::string& level_text, Tunables t = {}) {
    LevelDef level = parse_level(level_text);
    DialogueScript script;
    for (const auto& trig : level.triggers)
        script.conversations[trig.dialogue_id] = {Dialogue{"Tester", {"Hi"}}};
    return make_assets(std::move(level), std::move(script), t);
}

inline InputFrame move(double x) { return InputFrame{x, 0.0, false, false, false}; }
inline InputFrame jump(double x = 0.0) { return InputFrame{x, 0.0, true, false, false}; }
inline InputFrame adv() { return InputFrame{0.0, 0.0, false, true, false}; }
inline InputFrame toggle_pause() { return InputFrame{0.0, 0.0, false, false, true}; }

}  // namespace climb::testing
