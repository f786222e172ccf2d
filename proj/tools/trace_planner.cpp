// Authoring tool for the shipped input traces. It drives the real engine, so
// every trace it writes replays bit-exactly through `climbloop run`.
//
//   trace_planner playthrough  spawn to credits on attempt one (beam search)
//   trace_planner idle         start the attempt-one timer, then stand still
//   trace_planner spikes       walk into the ground-floor spike pit
//   trace_planner wire         record a Start + Input script and its replies

#include "climb/io.hpp"
#include "climb/replay.hpp"
#include "climb/wire.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace {

using namespace climb;

struct Recorder {
    WorldState world;
    std::vector<InputFrame> frames;

    void push(const InputFrame& f) {
        step_in_place(world, f);
        frames.push_back(f);
    }

    // Reads every open conversation to the end, one advance per fully typed sentence.
    void settle() {
        while (world.conversation.active) {
            InputFrame f;
            f.advance_pressed = world.conversation.fully_revealed();
            push(f);
        }
    }

    void hold(double move_x, int ticks) {
        for (int i = 0; i < ticks; ++i) {
            push(InputFrame{move_x, 0.0, false, false, false});
            settle();
        }
    }
};

bool trigger_fired(const WorldState& w, std::string_view id) {
    const auto& defs = w.level().triggers;
    for (std::size_t i = 0; i < defs.size(); ++i)
        if (defs[i].id == id) return w.triggers[i].fired;
    return false;
}

// Walks right from spawn until the attempt-one timer trigger has fired.
void walk_to_timer(Recorder& r) {
    r.settle();
    while (!trigger_fired(r.world, "a1_time")) r.hold(1.0, 1);
}

struct Segment {
    std::shared_ptr<const Segment> parent;
    std::vector<InputFrame> frames;
};

struct Node {
    WorldState world;
    std::shared_ptr<const Segment> path;
    std::int64_t length{0};
    double score{0.0};
};

double score_of(const WorldState& w) {
    const PlayerState& p = w.player;
    const double feet = p.body.min_y();
    double s = feet + (p.grounded ? 0.5 : 0.0);
    if (feet > 104.5) s += p.body.center.x;
    for (std::size_t i = 0; i < w.triggers.size(); ++i)
        if (w.triggers[i].fired && w.level().triggers[i].kind == TriggerKind::EndGame) s += 1000.0;
    return s;
}

using Key = std::tuple<long, long, long, bool, std::vector<long>>;

Key key_of(const WorldState& w) {
    std::vector<long> plats;
    for (const auto& p : w.platforms) plats.push_back(std::lround(p.position.y * 10.0));
    const PlayerState& p = w.player;
    return {std::lround(p.body.center.x * 20.0), std::lround(p.body.center.y * 20.0), std::lround(p.velocity.y * 2.0),
            p.grounded, plats};
}

std::vector<InputFrame> unwind(const std::shared_ptr<const Segment>& leaf) {
    std::vector<const Segment*> chain;
    for (const Segment* s = leaf.get(); s; s = s->parent.get()) chain.push_back(s);
    std::vector<InputFrame> out;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        out.insert(out.end(), (*it)->frames.begin(), (*it)->frames.end());
    return out;
}

std::vector<InputFrame> plan_playthrough(std::shared_ptr<const Assets> assets, int beam_width, int max_rounds) {
    Recorder prefix{world_init(assets, 1), {}};
    walk_to_timer(prefix);
    const int attempt = prefix.world.session.current_attempt;
    const int max_health = prefix.world.tunables().max_health;

    std::vector<Node> beam;
    beam.push_back({prefix.world, std::make_shared<Segment>(Segment{nullptr, prefix.frames}),
                    static_cast<std::int64_t>(prefix.frames.size()), score_of(prefix.world)});

    const int holds[] = {3, 6, 12, 24};
    for (int round = 0; round < max_rounds; ++round) {
        std::map<Key, Node> next;
        for (const Node& n : beam) {
            for (int dir = -1; dir <= 1; ++dir) {
                for (int jump = 0; jump <= 1; ++jump) {
                    if (jump && !n.world.player.grounded) continue;
                    for (int hold : holds) {
                        Recorder r{n.world, {}};
                        bool ok = true;
                        for (int i = 0; i < hold && ok; ++i) {
                            r.push(InputFrame{static_cast<double>(dir), 0.0, jump == 1 && i == 0, false, false});
                            r.settle();
                            if (r.world.scene == Scene::Credits) break;
                            ok = r.world.session.current_attempt == attempt && r.world.player.health == max_health &&
                                 !r.world.restart_pending;
                        }
                        if (!ok) continue;
                        Node child{std::move(r.world), nullptr, n.length + static_cast<std::int64_t>(r.frames.size()), 0};
                        child.path = std::make_shared<Segment>(Segment{n.path, std::move(r.frames)});
                        child.score = score_of(child.world) - 1e-5 * static_cast<double>(child.length);
                        if (child.world.scene == Scene::Credits) {
                            std::cerr << "credits after " << child.length << " ticks, round " << round << "\n";
                            return unwind(child.path);
                        }
                        Key k = key_of(child.world);
                        auto it = next.find(k);
                        if (it == next.end() || it->second.score < child.score) next.insert_or_assign(k, std::move(child));
                    }
                }
            }
        }
        beam.clear();
        for (auto& [k, n] : next) beam.push_back(std::move(n));
        std::sort(beam.begin(), beam.end(), [](const Node& a, const Node& b) { return a.score > b.score; });
        if (static_cast<int>(beam.size()) > beam_width) beam.resize(beam_width);
        if (beam.empty()) break;
        if (round % 10 == 0)
            std::cerr << "round " << round << " best y " << beam.front().world.player.body.min_y() << " ticks "
                      << beam.front().length << " timer " << beam.front().world.timer.remaining << "\n";
    }
    throw std::runtime_error("no route to the credits found");
}

std::vector<InputFrame> plan_idle(std::shared_ptr<const Assets> assets, int tail) {
    Recorder r{world_init(assets, 1), {}};
    walk_to_timer(r);
    const int attempt = r.world.session.current_attempt;
    while (r.world.session.current_attempt == attempt) r.push(InputFrame{});
    for (int i = 0; i < tail; ++i) r.push(InputFrame{});
    return r.frames;
}

std::vector<InputFrame> plan_spikes(std::shared_ptr<const Assets> assets, int tail) {
    Recorder r{world_init(assets, 1), {}};
    walk_to_timer(r);
    const int attempt = r.world.session.current_attempt;
    // Stop over the first spike cell only, so every bounce re-enters a single cell.
    while (r.world.player.body.center.x < 13.45) r.hold(1.0, 1);
    while (r.world.session.current_attempt == attempt) r.push(InputFrame{});
    for (int i = 0; i < tail; ++i) r.push(InputFrame{});
    return r.frames;
}

// Turns the first `count` ticks of a trace into protocol messages and records
// what a fresh session answers.
void record_wire(std::shared_ptr<const Assets> assets, const std::string& trace_path, int count,
                 const std::string& out_prefix) {
    const InputTrace trace = parse_trace(read_text_file(trace_path));
    TraceCursor cursor(trace);
    WireSession session(assets);
    std::ofstream in(out_prefix + ".in.ndjson", std::ios::binary);
    std::ofstream out(out_prefix + ".out.ndjson", std::ios::binary);
    const std::string start = R"({"type":"Start","scene":"Game"})";
    in << start << "\n";
    out << session.handle_line(start) << "\n";
    for (int tick = 0; tick < count; ++tick) {
        const InputFrame f = cursor.frame_at(tick);
        const nlohmann::json msg{{"type", "Input"}, {"tick", tick},           {"move_x", f.move_x},
                                 {"move_y", f.move_y}, {"jump", f.jump_pressed}, {"adv", f.advance_pressed},
                                 {"pause", f.pause_pressed}};
        const std::string line = msg.dump();
        in << line << "\n";
        out << session.handle_line(line) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Authors deterministic input traces against the shipped assets"};
    std::string level = CLIMB_ASSET_DIR "/tower.level";
    std::string script = CLIMB_ASSET_DIR "/manuscript.script";
    std::string tunables = CLIMB_ASSET_DIR "/default.tunables";
    std::string out;
    std::string mode;
    int beam = 300;
    int rounds = 2000;
    int tail = 30;
    std::string trace;
    int count = 600;
    app.add_option("mode", mode, "playthrough | idle | spikes | wire")->required();
    app.add_option("--level", level);
    app.add_option("--script", script);
    app.add_option("--tunables", tunables);
    app.add_option("--out", out, "trace file to write (wire: output prefix)")->required();
    app.add_option("--trace", trace, "wire: input trace to convert");
    app.add_option("--count", count, "wire: number of Input messages");
    app.add_option("--beam", beam);
    app.add_option("--rounds", rounds);
    app.add_option("--tail", tail, "idle ticks appended after a restart");
    CLI11_PARSE(app, argc, argv);

    try {
        auto assets = load_assets(level, script, tunables);
        std::vector<InputFrame> frames;
        std::string header;
        if (mode == "wire") {
            record_wire(assets, trace, count, out);
            return 0;
        }
        if (mode == "playthrough") {
            frames = plan_playthrough(assets, beam, rounds);
            header = "# Attempt one from spawn to the credits, reading every line of dialogue.\n";
        } else if (mode == "idle") {
            frames = plan_idle(assets, tail);
            header = "# Walk into the attempt-one timer trigger, then stand still until time runs out.\n";
        } else if (mode == "spikes") {
            frames = plan_spikes(assets, tail);
            header = "# Walk into the ground-floor spike pit and stay there until the player dies.\n";
        } else {
            std::cerr << "unknown mode " << mode << "\n";
            return 1;
        }
        std::ofstream f(out);
        f << header << serialize_trace(compress_frames(frames));
        std::cerr << "wrote " << frames.size() << " ticks to " << out << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
