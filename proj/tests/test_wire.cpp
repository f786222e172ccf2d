#include "climb/wire.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdio>
#include <sstream>

using namespace climb;
using namespace climb::testing;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string input(int tick, double mx = 0, bool jump = false, bool adv = false, bool pause = false) {
    return json{{"type", "Input"}, {"tick", tick}, {"move_x", mx}, {"move_y", 0}, {"jump", jump}, {"adv", adv},
                {"pause", pause}}
        .dump();
}

}  // namespace

TEST(Wire, StartThenInputs) {
    WireSession s(shipped());
    const json snap = json::parse(s.handle_line(R"({"type":"Start","scene":"Game"})"));
    EXPECT_EQ(snap["type"], "Snap");
    EXPECT_EQ(snap["scene"], "Game");
    EXPECT_EQ(snap["health"], 3);
    EXPECT_EQ(snap["timer_fraction"], 1.0);
    const json first = json::parse(s.handle_line(input(0)));
    EXPECT_EQ(first["tick"], 1);
    EXPECT_TRUE(first["dialogue"]["active"]);  // the wake-up trigger sits on the spawn point
    EXPECT_TRUE(first["sim_frozen"]);
}

TEST(Wire, Errors) {
    WireSession s(shipped());
    EXPECT_EQ(json::parse(s.handle_line(input(0)))["type"], "Error");
    EXPECT_EQ(json::parse(s.handle_line("{not json"))["type"], "Error");
    EXPECT_EQ(json::parse(s.handle_line(R"({"type":"Warp"})"))["type"], "Error");
    EXPECT_EQ(json::parse(s.handle_line(R"({"type":"Start","scene":"Credits"})"))["type"], "Error");
    s.handle_line(R"({"type":"Start"})");
    EXPECT_EQ(json::parse(s.handle_line(input(5)))["type"], "Snap");
    EXPECT_EQ(json::parse(s.handle_line(input(5)))["type"], "Error");
    EXPECT_EQ(json::parse(s.handle_line(input(4)))["type"], "Error");
}

TEST(Wire, ReattachShowsTheSameWorld) {
    WireSession s(shipped());
    s.handle_line(R"({"type":"Start","scene":"Game"})");
    std::string last;
    for (int t = 0; t < 40; ++t) last = s.handle_line(input(t, 1, false, true));
    const std::string again = s.handle_line(R"({"type":"Start","scene":"Game"})");
    json a = json::parse(last), b = json::parse(again);
    EXPECT_EQ(a, b);
    EXPECT_EQ(json::parse(s.handle_line(input(0)))["type"], "Snap");  // new connection restarts tick order
}

TEST(Wire, MenuStartsOnAdvance) {
    WireSession s(shipped());
    EXPECT_EQ(json::parse(s.handle_line(R"({"type":"Start","scene":"MainMenu"})"))["scene"], "MainMenu");
    EXPECT_EQ(json::parse(s.handle_line(input(0, 0, false, true)))["scene"], "Game");
}

TEST(Wire, GoldenTranscript) {
    const auto in = lines_of(read_text_file(golden_path("wire_600.in.ndjson")));
    const auto out = lines_of(read_text_file(golden_path("wire_600.out.ndjson")));
    ASSERT_EQ(in.size(), 601u);
    ASSERT_EQ(out.size(), in.size());
    WireSession s(shipped());
    for (std::size_t i = 0; i < in.size(); ++i) ASSERT_EQ(s.handle_line(in[i]), out[i]) << "message " << i;
}

TEST(Wire, ServeOverTcpMatchesGolden) {
    const std::string cmd = std::string(CLIMBLOOP_BIN) + " serve --port 0 --once 2>&1";
    FILE* proc = ::popen(cmd.c_str(), "r");
    ASSERT_NE(proc, nullptr);
    char banner[256] = {};
    ASSERT_NE(std::fgets(banner, sizeof banner, proc), nullptr);
    const std::string b(banner);
    const auto colon = b.rfind(':');
    ASSERT_NE(colon, std::string::npos) << b;
    const int port = std::stoi(b.substr(colon + 1));

    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    ASSERT_EQ(::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr), 0);

    const std::string requests = read_text_file(golden_path("wire_600.in.ndjson"));
    const std::string expected = read_text_file(golden_path("wire_600.out.ndjson"));
    ASSERT_EQ(::send(fd, requests.data(), requests.size(), 0), static_cast<ssize_t>(requests.size()));
    ::shutdown(fd, SHUT_WR);
    std::string got;
    char chunk[65536];
    for (ssize_t n; (n = ::recv(fd, chunk, sizeof chunk, 0)) > 0;) got.append(chunk, static_cast<std::size_t>(n));
    ::close(fd);
    EXPECT_EQ(::pclose(proc), 0);
    EXPECT_EQ(got, expected);
}
