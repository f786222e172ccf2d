#pragma once
/**
 * @file state_hash.hpp
 * @brief Canonical byte serialization of a WorldState and its FNV-1a digest.
 *
 * Encoding: integers little-endian fixed width, bools as one byte, doubles as
 * their 64-bit IEEE pattern, strings and lists as a u32 length followed by
 * their elements. Field order:
 *
 *   scene u8 | attempt i32 | is_paused | user_paused | sim_tick i64 | ui_tick i64
 *   player: center x,y | half x,y | velocity x,y | health i32 | grounded | anim u8
 *           | anim_speed | facing u8 | alive | take_hit | kill_player
 *   platforms[]: def_index u32 | position x,y | waypoint_index i32 | carrying
 *   triggers[]: active | fired
 *   conversation: active | speaker | pending[] (speaker, text) | current | revealed u64
 *   conversation_id | timer: running | remaining | duration
 *   camera: x,y | frozen | hazard_contacts[]: col i32, row i32
 *   pending_credits: present u8 [, tick i64] | restart_pending
 *   audio_events[] u8 | events[]: tick i64, kind u8, arg
 *
 * Scopes drop fields: Sim leaves out everything the ui clock touches (ui_tick,
 * conversation, per-tick outputs); Level additionally leaves out the session
 * fields and the sim clock, which is what survives a restart.
 */

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace climb {

struct WorldState;

enum class HashScope : std::uint8_t { Full, Sim, Level };

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed = kFnvOffsetBasis);

std::vector<std::uint8_t> serialize_world(const WorldState& world, HashScope scope = HashScope::Full);

std::uint64_t state_hash(const WorldState& world, HashScope scope = HashScope::Full);

/// 16 lowercase hex digits.
std::string format_digest(std::uint64_t digest);

}  // namespace climb
