#include "climb/replay.hpp"

#include "climb/error.hpp"
#include "climb/state_hash.hpp"
#include "text_util.hpp"

#include <sstream>

namespace climb {

namespace {

bool parse_flag(const text::Token& t, int line) {
    if (t.text == "0") return false;
    if (t.text == "1") return true;
    throw ParseError(line, t.column, "expected 0 or 1, got '" + std::string(t.text) + "'");
}

double parse_axis(const text::Token& t, int line) {
    const double v = text::require_double(t, line);
    if (v < -1.0 || v > 1.0) throw ParseError(line, t.column, "axis value outside [-1, 1]");
    return v;
}

bool same_axes(const InputFrame& a, const InputFrame& b) { return a.move_x == b.move_x && a.move_y == b.move_y; }

bool has_pulse(const InputFrame& f) { return f.jump_pressed || f.advance_pressed || f.pause_pressed; }

}  // namespace

InputTrace parse_trace(std::string_view text) {
    InputTrace trace;
    bool ended = false;
    const auto lines = text::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view line = text::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const auto toks = text::tokenize(lines[i]);
        if (ended) throw ParseError(line_no, toks[0].column, "content after 'end'");

        if (toks[0].text == "end") {
            if (toks.size() != 2) throw ParseError(line_no, 0, "expected: end <tick>");
            trace.run_length = text::require_int(toks[1], line_no);
            if (trace.run_length < 0) throw ParseError(line_no, toks[1].column, "negative run length");
            if (!trace.points.empty() && trace.run_length < trace.points.back().tick)
                throw ParseError(line_no, toks[1].column, "run length is before the last change point");
            ended = true;
            continue;
        }
        if (toks.size() != 6) throw ParseError(line_no, 0, "expected: <tick> <move_x> <move_y> <jump> <adv> <pause>");
        TracePoint p;
        p.tick = text::require_int(toks[0], line_no);
        if (p.tick < 0) throw ParseError(line_no, toks[0].column, "negative tick");
        if (!trace.points.empty() && p.tick <= trace.points.back().tick)
            throw ParseError(line_no, toks[0].column, "ticks must be strictly increasing");
        p.frame.move_x = parse_axis(toks[1], line_no);
        p.frame.move_y = parse_axis(toks[2], line_no);
        p.frame.jump_pressed = parse_flag(toks[3], line_no);
        p.frame.advance_pressed = parse_flag(toks[4], line_no);
        p.frame.pause_pressed = parse_flag(toks[5], line_no);
        trace.points.push_back(p);
    }
    if (!ended) throw ParseError(static_cast<int>(lines.size()) + 1, 0, "missing 'end <tick>' line");
    return trace;
}

std::string serialize_trace(const InputTrace& trace) {
    std::ostringstream out;
    for (const auto& p : trace.points) {
        out << p.tick << ' ' << text::format_double(p.frame.move_x) << ' ' << text::format_double(p.frame.move_y) << ' '
            << (p.frame.jump_pressed ? 1 : 0) << ' ' << (p.frame.advance_pressed ? 1 : 0) << ' '
            << (p.frame.pause_pressed ? 1 : 0) << '\n';
    }
    out << "end " << trace.run_length << '\n';
    return out.str();
}

InputTrace compress_frames(std::span<const InputFrame> frames) {
    InputTrace trace;
    InputFrame held;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const InputFrame& f = frames[i];
        if (!same_axes(f, held) || has_pulse(f)) {
            trace.points.push_back({static_cast<std::int64_t>(i), f});
            held = f;
        }
    }
    trace.run_length = static_cast<std::int64_t>(frames.size());
    return trace;
}

InputFrame TraceCursor::frame_at(std::int64_t tick) {
    const auto& pts = trace_->points;
    while (next_ < pts.size() && pts[next_].tick < tick) {
        held_ = pts[next_].frame;
        ++next_;
    }
    InputFrame f{held_.move_x, held_.move_y, false, false, false};
    if (next_ < pts.size() && pts[next_].tick == tick) {
        held_ = pts[next_].frame;
        f = held_;
        ++next_;
    }
    return f;
}

std::string HashLine::to_line() const { return std::to_string(tick) + " " + format_digest(digest); }

RunReport run_trace(std::shared_ptr<const Assets> assets, const InputTrace& trace, const RunOptions& options,
                    const StepObserver& observer) {
    RunReport report;
    WorldState world = world_init(std::move(assets), 1);
    TraceCursor cursor(trace);

    const bool periodic = options.hash_every > 0 && !options.hash_only;
    if (periodic) report.hashes.push_back({0, state_hash(world)});

    std::int64_t tick = 0;
    for (; tick < trace.run_length; ++tick) {
        step_in_place(world, cursor.frame_at(tick));
        report.events.insert(report.events.end(), world.events.begin(), world.events.end());
        if (observer) observer(world, tick);
        const std::int64_t done = tick + 1;
        if (periodic && done % options.hash_every == 0) report.hashes.push_back({done, state_hash(world)});
        if (world.scene == Scene::Credits) {
            report.reached_credits = true;
            ++tick;
            break;
        }
    }
    report.ticks_run = tick;
    if (report.hashes.empty() || report.hashes.back().tick != tick) report.hashes.push_back({tick, state_hash(world)});
    report.final_world = std::move(world);
    return report;
}

std::vector<HashLine> parse_golden(std::string_view text) {
    std::vector<HashLine> out;
    const auto lines = text::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view line = text::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const auto toks = text::tokenize(lines[i]);
        if (toks.size() != 2 || toks[1].text.size() != 16)
            throw ParseError(line_no, 0, "expected: <tick> <16 hex digits>");
        HashLine h;
        h.tick = text::require_int(toks[0], line_no);
        const auto [ptr, ec] = std::from_chars(toks[1].text.data(), toks[1].text.data() + 16, h.digest, 16);
        if (ec != std::errc{} || ptr != toks[1].text.data() + 16)
            throw ParseError(line_no, toks[1].column, "bad hex digest");
        out.push_back(h);
    }
    return out;
}

}  // namespace climb
