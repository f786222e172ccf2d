#pragma once
/**
 * @file replay.hpp
 * @brief Input traces and the deterministic headless runner.
 *
 * Trace text:
 *
 *     # comment
 *     <tick> <move_x> <move_y> <jump> <adv> <pause>
 *     end <tick>
 *
 * Each line is a change point. Axes are sample-and-hold from their tick on;
 * jump/adv/pause are one-tick pulses that fire only on the line's own tick.
 * Ticks count step() calls (the ui clock), starting at 0.
 */

#include "climb/engine.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace climb {

struct TracePoint {
    std::int64_t tick{0};
    InputFrame frame;

    bool operator==(const TracePoint&) const = default;
};

struct InputTrace {
    std::vector<TracePoint> points;  // strictly increasing ticks
    std::int64_t run_length{0};

    bool operator==(const InputTrace&) const = default;
};

/// Throws ParseError on malformed lines or non-increasing ticks.
InputTrace parse_trace(std::string_view text);
std::string serialize_trace(const InputTrace& trace);

/// Collapses one frame per tick into change points.
InputTrace compress_frames(std::span<const InputFrame> frames);

/// Walks a trace tick by tick, expanding holds and pulses.
class TraceCursor {
public:
    explicit TraceCursor(const InputTrace& trace) : trace_(&trace) {}

    /// Frame for `tick`; ticks must be requested in increasing order.
    InputFrame frame_at(std::int64_t tick);

private:
    const InputTrace* trace_;
    std::size_t next_{0};
    InputFrame held_;
};

struct RunOptions {
    std::int64_t hash_every{0};  // 0: final digest only
    bool hash_only{false};
};

struct HashLine {
    std::int64_t tick{0};
    std::uint64_t digest{0};

    std::string to_line() const;
    bool operator==(const HashLine&) const = default;
};

struct RunReport {
    std::vector<GameEvent> events;
    std::vector<HashLine> hashes;
    std::int64_t ticks_run{0};
    bool reached_credits{false};
    WorldState final_world;
};

/// Observer sees the world after every step along with the step's tick.
using StepObserver = std::function<void(const WorldState&, std::int64_t tick)>;

RunReport run_trace(std::shared_ptr<const Assets> assets, const InputTrace& trace, const RunOptions& options = {},
                    const StepObserver& observer = {});

/// Golden hash file: `<tick> <16 hex digits>` per line, `#` comments allowed.
std::vector<HashLine> parse_golden(std::string_view text);

}  // namespace climb
