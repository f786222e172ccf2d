#pragma once
/**
 * @file wire.hpp
 * @brief Newline-delimited JSON protocol spoken by `climbloop serve`.
 *
 * client -> core
 *   {"type":"Start","scene":"MainMenu"|"Game"}
 *   {"type":"Input","tick":N,"move_x":x,"move_y":y,"jump":b,"adv":b,"pause":b}
 * core -> client
 *   {"type":"Snap", ...snapshot fields...}
 *   {"type":"Error","message":"..."}
 *
 * Every message is one line. Each accepted Input advances the world exactly
 * one step and is answered by exactly one Snap; Input ticks must increase.
 * The world outlives client connections: a Start after the first one
 * re-attaches to the existing world (whatever its scene) and answers with its
 * current Snap. Tick ordering restarts with each Start.
 */

#include "climb/engine.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace climb {

/// One-line JSON encoding of a snapshot (keys sorted, shortest doubles).
std::string snapshot_to_json(const Snapshot& snap);

class WireSession {
public:
    explicit WireSession(std::shared_ptr<const Assets> assets);

    /// Handles one client line and returns the single reply line (no newline).
    std::string handle_line(std::string_view line);

    const std::optional<WorldState>& world() const { return world_; }

private:
    std::string error(std::string_view message) const;

    std::shared_ptr<const Assets> assets_;
    std::optional<WorldState> world_;
    std::optional<std::int64_t> last_tick_;
};

}  // namespace climb
