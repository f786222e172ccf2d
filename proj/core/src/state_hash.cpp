#include "climb/state_hash.hpp"

#include "climb/engine.hpp"

#include <bit>
#include <cstdio>
#include <string>

namespace climb {

namespace {

class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void boolean(bool v) { u8(v ? 1 : 0); }
    void u32(std::uint32_t v) { put(v, 4); }
    void i32(std::int32_t v) { put(static_cast<std::uint32_t>(v), 4); }
    void i64(std::int64_t v) { put(static_cast<std::uint64_t>(v), 8); }
    void u64(std::uint64_t v) { put(v, 8); }
    void f64(double v) { put(std::bit_cast<std::uint64_t>(v), 8); }
    void vec(Vec2 v) {
        f64(v.x);
        f64(v.y);
    }
    void str(std::string_view s) {
        u32(static_cast<std::uint32_t>(s.size()));
        out_.insert(out_.end(), s.begin(), s.end());
    }
    void count(std::size_t n) { u32(static_cast<std::uint32_t>(n)); }

    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    void put(std::uint64_t v, int bytes) {
        for (int i = 0; i < bytes; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    std::vector<std::uint8_t> out_;
};

}  // namespace

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= kFnvPrime;
    }
    return h;
}

std::vector<std::uint8_t> serialize_world(const WorldState& w, HashScope scope) {
    const bool full = scope == HashScope::Full;
    const bool level_only = scope == HashScope::Level;
    ByteWriter b;

    b.u8(static_cast<std::uint8_t>(w.scene));
    if (!level_only) {
        b.i32(w.session.current_attempt);
        b.boolean(w.session.is_paused);
        b.boolean(w.user_paused);
        b.i64(w.sim_tick);
    }
    if (full) b.i64(w.ui_tick);

    const PlayerState& p = w.player;
    b.vec(p.body.center);
    b.vec(p.body.half_extents);
    b.vec(p.velocity);
    b.i32(p.health);
    b.boolean(p.grounded);
    b.u8(static_cast<std::uint8_t>(p.anim));
    b.f64(p.anim_speed);
    b.u8(static_cast<std::uint8_t>(p.facing));
    b.boolean(p.alive);
    b.boolean(p.take_hit);
    b.boolean(p.kill_player);

    b.count(w.platforms.size());
    for (const auto& pl : w.platforms) {
        b.u32(pl.def_index);
        b.vec(pl.position);
        b.i32(pl.waypoint_index);
        b.boolean(pl.carrying_player);
    }

    b.count(w.triggers.size());
    for (const auto& t : w.triggers) {
        b.boolean(t.active);
        b.boolean(t.fired);
    }

    if (full) {
        const ConversationState& c = w.conversation;
        b.boolean(c.active);
        b.str(c.speaker);
        b.count(c.pending.size());
        for (const auto& line : c.pending) {
            b.str(line.speaker);
            b.str(line.text);
        }
        b.str(c.current);
        b.u64(c.revealed);
        b.str(w.conversation_id);
    }

    b.boolean(w.timer.running);
    b.f64(w.timer.remaining);
    b.f64(w.timer.duration);

    b.vec(w.camera.position);
    b.boolean(w.camera.frozen);

    b.count(w.hazard_contacts.size());
    for (const Cell& c : w.hazard_contacts) {
        b.i32(c.col);
        b.i32(c.row);
    }

    b.boolean(w.pending_credits_at.has_value());
    if (w.pending_credits_at) b.i64(*w.pending_credits_at);
    b.boolean(w.restart_pending);

    if (full) {
        b.count(w.audio_events.size());
        for (AudioEvent e : w.audio_events) b.u8(static_cast<std::uint8_t>(e));
        b.count(w.events.size());
        for (const auto& e : w.events) {
            b.i64(e.tick);
            b.u8(static_cast<std::uint8_t>(e.kind));
            b.str(e.arg);
        }
    }
    return b.take();
}

std::uint64_t state_hash(const WorldState& world, HashScope scope) {
    const auto bytes = serialize_world(world, scope);
    return fnv1a64(bytes);
}

std::string format_digest(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return std::string(buf, 16);
}

}  // namespace climb
