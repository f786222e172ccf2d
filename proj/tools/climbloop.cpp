// climbloop: headless runner, asset validator and NDJSON game server.
//
// Exit codes: 0 ok, 1 usage, 2 asset or trace error, 3 golden mismatch,
// 4 socket error.

#include "climb/error.hpp"
#include "climb/io.hpp"
#include "climb/replay.hpp"
#include "climb/state_hash.hpp"
#include "climb/wire.hpp"

#include <CLI11.hpp>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace climb;

constexpr int kExitAsset = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitSocket = 4;

struct AssetPaths {
    std::string level = CLIMB_ASSET_DIR "/tower.level";
    std::string script = CLIMB_ASSET_DIR "/manuscript.script";
    std::string tunables = CLIMB_ASSET_DIR "/default.tunables";

    void bind(CLI::App* cmd) {
        cmd->add_option("--level", level, "level file")->capture_default_str();
        cmd->add_option("--script", script, "dialogue script")->capture_default_str();
        cmd->add_option("--tunables", tunables, "tunables file")->capture_default_str();
    }
};

void report(const std::exception& e) {
    if (const auto* v = dynamic_cast<const ValidationError*>(&e))
        std::cerr << "validation error [" << v->code() << "]: " << e.what() << "\n";
    else
        std::cerr << "error: " << e.what() << "\n";
}

struct RunArgs {
    AssetPaths paths;
    std::string trace;
    std::int64_t hash_every{0};
    bool hash_only{false};
    std::string expect;
    std::string events;
};

int cmd_run(const RunArgs& a) {
    std::shared_ptr<const Assets> assets;
    InputTrace trace;
    std::vector<HashLine> golden;
    try {
        assets = load_assets(a.paths.level, a.paths.script, a.paths.tunables);
        trace = parse_trace(read_text_file(a.trace));
        if (!a.expect.empty()) golden = parse_golden(read_text_file(a.expect));
    } catch (const std::exception& e) {
        report(e);
        return kExitAsset;
    }

    RunOptions opts;
    opts.hash_every = a.hash_every;
    opts.hash_only = a.hash_only;
    const RunReport rep = run_trace(assets, trace, opts);

    std::string log;
    for (const auto& ev : rep.events) log += ev.to_line() + "\n";
    if (!a.events.empty()) {
        std::ofstream out(a.events, std::ios::binary);
        out << log;
    } else if (!a.hash_only) {
        std::cout << log;
    }
    if (a.hash_only || a.hash_every > 0)
        for (const auto& h : rep.hashes) std::cout << h.to_line() << "\n";

    if (!a.expect.empty()) {
        const std::size_t n = std::min(golden.size(), rep.hashes.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (golden[i] != rep.hashes[i]) {
                std::cerr << "golden mismatch: expected " << golden[i].to_line() << ", got " << rep.hashes[i].to_line()
                          << "\n";
                return kExitMismatch;
            }
        }
        if (golden.size() != rep.hashes.size()) {
            std::cerr << "golden mismatch: expected " << golden.size() << " hash lines, got " << rep.hashes.size()
                      << "\n";
            return kExitMismatch;
        }
    }
    return 0;
}

int cmd_validate(const AssetPaths& p) {
    try {
        auto assets = load_assets(p.level, p.script, p.tunables);
        const LevelDef& l = assets->level;
        std::cout << "ok: " << l.width << "x" << l.height << " tiles, " << l.platforms.size() << " platforms, "
                  << l.triggers.size() << " triggers, " << assets->script.conversations.size() << " conversations\n";
    } catch (const std::exception& e) {
        report(e);
        return kExitAsset;
    }
    return 0;
}

bool send_all(int fd, const std::string& data) {
    std::size_t off = 0;
    while (off < data.size()) {
        const ssize_t n = ::send(fd, data.data() + off, data.size() - off, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            return false;
        }
        off += static_cast<std::size_t>(n);
    }
    return true;
}

// Serves one client at a time; the session (and its world) survives reconnects.
int cmd_serve(const AssetPaths& p, int port, bool once) {
    std::shared_ptr<const Assets> assets;
    try {
        assets = load_assets(p.level, p.script, p.tunables);
    } catch (const std::exception& e) {
        report(e);
        return kExitAsset;
    }
    WireSession session(assets);

    const int listener = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listener < 0) {
        std::perror("socket");
        return kExitSocket;
    }
    const int yes = 1;
    ::setsockopt(listener, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    if (::bind(listener, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0 || ::listen(listener, 1) < 0) {
        std::perror("bind/listen");
        ::close(listener);
        return kExitSocket;
    }
    socklen_t len = sizeof addr;
    ::getsockname(listener, reinterpret_cast<sockaddr*>(&addr), &len);
    std::cerr << "listening on 127.0.0.1:" << ntohs(addr.sin_port) << std::endl;

    do {
        const int client = ::accept(listener, nullptr, nullptr);
        if (client < 0) {
            if (errno == EINTR) continue;
            std::perror("accept");
            break;
        }
        std::string buffer;
        char chunk[4096];
        bool open = true;
        while (open) {
            const ssize_t n = ::recv(client, chunk, sizeof chunk, 0);
            if (n <= 0) break;
            buffer.append(chunk, static_cast<std::size_t>(n));
            std::size_t nl;
            while (open && (nl = buffer.find('\n')) != std::string::npos) {
                std::string line = buffer.substr(0, nl);
                buffer.erase(0, nl + 1);
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                open = send_all(client, session.handle_line(line) + "\n");
            }
        }
        ::close(client);
    } while (!once);
    ::close(listener);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Headless runner for the tower climbing game"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "replay an input trace");
    run.paths.bind(run_cmd);
    run_cmd->add_option("--trace", run.trace, "input trace")->required();
    auto* every = run_cmd->add_option("--hash-every", run.hash_every, "emit a digest every N ticks")
                      ->check(CLI::PositiveNumber);
    auto* only = run_cmd->add_flag("--hash-only", run.hash_only, "print only the final digest");
    every->excludes(only);
    run_cmd->add_option("--expect", run.expect, "golden hash file to compare against");
    run_cmd->add_option("--events", run.events, "write the event log here instead of stdout");

    AssetPaths validate;
    auto* validate_cmd = app.add_subcommand("validate", "parse and cross-check assets");
    validate.bind(validate_cmd);

    AssetPaths serve;
    int port = 0;
    bool once = false;
    auto* serve_cmd = app.add_subcommand("serve", "serve the NDJSON protocol on localhost");
    serve.bind(serve_cmd);
    serve_cmd->add_option("--port", port, "TCP port (0 picks a free one)")->required();
    serve_cmd->add_flag("--once", once, "exit after the first client disconnects");

    CLI11_PARSE(app, argc, argv);

    if (*run_cmd) return cmd_run(run);
    if (*validate_cmd) return cmd_validate(validate);
    if (*serve_cmd) return cmd_serve(serve, port, once);
    return 1;
}
