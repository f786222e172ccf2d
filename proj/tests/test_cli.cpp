#include "support.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace climb::testing;

namespace {

int climbloop(const std::string& args) {
    const std::string cmd = std::string(CLIMBLOOP_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string trace_arg(const std::string& name) { return "--trace " + asset_path("traces/" + name + ".trace"); }

}  // namespace

TEST(Cli, ValidateShippedAssets) {
    EXPECT_EQ(climbloop("validate --level " + asset_path("tower.level") + " --script " + asset_path("manuscript.script")),
              0);
}

TEST(Cli, RunAgainstGoldenHashes) {
    EXPECT_EQ(climbloop("run " + trace_arg("playthrough") + " --hash-every 60 --expect " +
                        golden_path("playthrough.hashes")),
              0);
}

TEST(Cli, GoldenMismatchExitCode) {
    const auto tmp = std::filesystem::temp_directory_path() / "climb_bad_golden.txt";
    std::ofstream(tmp) << "0 0000000000000000\n";
    EXPECT_EQ(climbloop("run " + trace_arg("spikes") + " --hash-every 60 --expect " + tmp.string()), 3);
    std::filesystem::remove(tmp);
}

TEST(Cli, AssetErrorExitCode) {
    EXPECT_EQ(climbloop("run --level /nonexistent.level " + trace_arg("spikes")), 2);
    const auto tmp = std::filesystem::temp_directory_path() / "climb_bad.level";
    std::ofstream(tmp) << ".#.\n.S.\n###\n---\n";
    EXPECT_EQ(climbloop("validate --level " + tmp.string()), 2);
    std::filesystem::remove(tmp);
}

TEST(Cli, EventsFileEndsWithCredits) {
    const auto tmp = std::filesystem::temp_directory_path() / "climb_events.txt";
    ASSERT_EQ(climbloop("run " + trace_arg("playthrough") + " --events " + tmp.string()), 0);
    const std::string log = climb::read_text_file(tmp);
    std::filesystem::remove(tmp);
    ASSERT_GE(log.size(), 8u);
    EXPECT_EQ(log.substr(log.rfind(' ', log.size() - 2) + 1), "CREDITS\n");
}
