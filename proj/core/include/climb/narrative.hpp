#pragma once
/**
 * @file narrative.hpp
 * @brief Dialogue content, trigger-group gating and the conversation state
 *        machine (sentence queue + typewriter reveal).
 *
 * Script file layout:
 *
 *     # comment (outside blocks)
 *     conversation <dialogue_id>
 *     speaker <name>
 *     > first sentence
 *     > second sentence
 *     speaker <other name>
 *     > reply
 *     <blank line ends the block>
 *
 * Each `speaker` line opens a new Dialogue entry, so an exchange between two
 * speakers is an ordered list of Dialogues under one id.
 */

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace climb {

struct Dialogue {
    std::string speaker;
    std::vector<std::string> sentences;

    bool operator==(const Dialogue&) const = default;
};

struct DialogueScript {
    std::map<std::string, std::vector<Dialogue>, std::less<>> conversations;

    const std::vector<Dialogue>* find(std::string_view id) const;
    bool operator==(const DialogueScript&) const = default;
};

/// One queued sentence with the speaker who says it.
struct Line {
    std::string speaker;
    std::string text;

    bool operator==(const Line&) const = default;
};

struct ConversationState {
    bool active{false};
    std::string speaker;
    std::deque<Line> pending;
    std::string current;
    std::size_t revealed{0};  // characters (code points) of `current` shown

    bool operator==(const ConversationState&) const = default;

    bool fully_revealed() const;
    /// The visible prefix of `current`.
    std::string revealed_text() const;
};

/// Numbered trigger group enabled for an attempt: 1..6 map to themselves,
/// later attempts enable none. The always group is enabled independently.
std::optional<int> active_group(int attempt);

/// True iff a trigger in `group` (0 = always) is enabled on `attempt`.
bool group_enabled(int group, int attempt);

/// Replaces any running conversation. `content` must be non-empty.
ConversationState start_conversation(const ConversationState& state, const std::vector<Dialogue>& content);

/// Reveals one more character; saturates; no-op when inactive.
ConversationState typewriter_tick(const ConversationState& state);

struct AdvanceResult {
    ConversationState state;
    bool ended{false};
};

/// Moves to the next queued sentence, discarding any partial reveal, or ends
/// the conversation when nothing is queued. Throws std::logic_error if inactive.
AdvanceResult advance(const ConversationState& state);

/// Throws ParseError, or ValidationError with "duplicate-id" / "empty-sentence".
DialogueScript load_script(std::string_view document);

/// Number of UTF-8 code points in s.
std::size_t utf8_length(std::string_view s);

}  // namespace climb
