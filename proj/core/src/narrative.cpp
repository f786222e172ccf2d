#include "climb/narrative.hpp"

#include "climb/error.hpp"
#include "text_util.hpp"

#include <stdexcept>

namespace climb {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0u) == 0x80u; }

std::size_t utf8_prefix_bytes(std::string_view s, std::size_t code_points) {
    std::size_t i = 0;
    std::size_t seen = 0;
    while (i < s.size() && seen < code_points) {
        ++i;
        while (i < s.size() && is_continuation(static_cast<unsigned char>(s[i]))) ++i;
        ++seen;
    }
    return i;
}

ConversationState show_next(ConversationState st) {
    Line next = std::move(st.pending.front());
    st.pending.pop_front();
    st.speaker = std::move(next.speaker);
    st.current = std::move(next.text);
    st.revealed = 0;
    return st;
}

}  // namespace

std::size_t utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (char c : s)
        if (!is_continuation(static_cast<unsigned char>(c))) ++n;
    return n;
}

const std::vector<Dialogue>* DialogueScript::find(std::string_view id) const {
    const auto it = conversations.find(id);
    return it == conversations.end() ? nullptr : &it->second;
}

bool ConversationState::fully_revealed() const { return revealed >= utf8_length(current); }

std::string ConversationState::revealed_text() const {
    return current.substr(0, utf8_prefix_bytes(current, revealed));
}

std::optional<int> active_group(int attempt) {
    if (attempt >= 1 && attempt <= 6) return attempt;
    return std::nullopt;
}

bool group_enabled(int group, int attempt) {
    if (group == 0) return true;
    const auto g = active_group(attempt);
    return g && *g == group;
}

ConversationState start_conversation(const ConversationState& /*state*/, const std::vector<Dialogue>& content) {
    if (content.empty()) throw std::invalid_argument("start_conversation: empty content");
    // Clear semantics: whatever was running is dropped.
    ConversationState st;
    st.active = true;
    for (const auto& d : content)
        for (const auto& s : d.sentences) st.pending.push_back({d.speaker, s});
    if (st.pending.empty()) throw std::invalid_argument("start_conversation: content has no sentences");
    return show_next(std::move(st));
}

ConversationState typewriter_tick(const ConversationState& state) {
    if (!state.active || state.fully_revealed()) return state;
    ConversationState st = state;
    ++st.revealed;
    return st;
}

AdvanceResult advance(const ConversationState& state) {
    if (!state.active) throw std::logic_error("advance called on an inactive conversation");
    if (state.pending.empty()) return {ConversationState{}, true};
    return {show_next(state), false};
}

DialogueScript load_script(std::string_view document) {
    DialogueScript script;
    const auto lines = text::split_lines(document);

    std::vector<Dialogue>* block = nullptr;
    std::string block_id;

    auto close_block = [&](int line_no) {
        if (!block) return;
        if (block->empty() || block->back().sentences.empty())
            throw ParseError(line_no, 0, "conversation '" + block_id + "' ends without a sentence");
        block = nullptr;
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string_view raw = lines[i];

        if (text::trim(raw).empty()) {
            close_block(line_no);
            continue;
        }
        if (raw.front() == '>') {
            if (!block || block->empty())
                throw ParseError(line_no, 1, "sentence outside a conversation/speaker block");
            std::string_view s = raw.substr(1);
            if (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            s = text::trim(s);
            if (s.empty()) throw ValidationError("empty-sentence", "line " + std::to_string(line_no));
            block->back().sentences.emplace_back(s);
            continue;
        }
        if (!block && raw.front() == '#') continue;

        const auto toks = text::tokenize(raw);
        if (toks[0].text == "conversation") {
            if (block) throw ParseError(line_no, 1, "conversation '" + block_id + "' is not closed by a blank line");
            if (toks.size() != 2) throw ParseError(line_no, 0, "expected: conversation <dialogue_id>");
            block_id = std::string(toks[1].text);
            auto [it, inserted] = script.conversations.try_emplace(block_id);
            if (!inserted) throw ValidationError("duplicate-id", "conversation '" + block_id + "' defined twice");
            block = &it->second;
        } else if (toks[0].text == "speaker") {
            if (!block) throw ParseError(line_no, 1, "speaker outside a conversation block");
            if (!block->empty() && block->back().sentences.empty())
                throw ParseError(line_no, 1, "previous speaker has no sentences");
            const std::string_view name = text::trim(raw.substr(static_cast<std::size_t>(toks[0].column) - 1 + 7));
            if (name.empty()) throw ParseError(line_no, 0, "expected: speaker <name>");
            block->push_back(Dialogue{std::string(name), {}});
        } else {
            throw ParseError(line_no, toks[0].column, "unknown line '" + std::string(toks[0].text) + "'");
        }
    }
    close_block(static_cast<int>(lines.size()) + 1);
    return script;
}

}  // namespace climb
