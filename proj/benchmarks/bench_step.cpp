#include "climb/io.hpp"
#include "climb/replay.hpp"
#include "climb/state_hash.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace climb;

namespace {

std::shared_ptr<const Assets> shipped() {
    static const auto a = load_assets(CLIMB_ASSET_DIR "/tower.level", CLIMB_ASSET_DIR "/manuscript.script",
                                      CLIMB_ASSET_DIR "/default.tunables");
    return a;
}

// One tick of free play on the shipped tower.
void BM_StepRandomInput(benchmark::State& state) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> axis(-1.0, 1.0);
    WorldState w = world_init(shipped(), 1);
    for (auto _ : state) {
        InputFrame in{axis(rng), 0.0, rng() % 6 == 0, rng() % 4 == 0, false};
        step_in_place(w, in);
        if (w.scene != Scene::Game) w = world_init(shipped(), 1);
        benchmark::DoNotOptimize(w.player.body.center);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StepRandomInput);

void BM_ReplayPlaythrough(benchmark::State& state) {
    const InputTrace trace = parse_trace(read_text_file(CLIMB_ASSET_DIR "/traces/playthrough.trace"));
    RunOptions opts;
    opts.hash_only = true;
    std::int64_t ticks = 0;
    for (auto _ : state) {
        const RunReport r = run_trace(shipped(), trace, opts);
        ticks += r.ticks_run;
        benchmark::DoNotOptimize(r.hashes);
    }
    state.SetItemsProcessed(ticks);
}
BENCHMARK(BM_ReplayPlaythrough)->Unit(benchmark::kMillisecond);

void BM_StateHash(benchmark::State& state) {
    const WorldState w = world_init(shipped(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(state_hash(w));
}
BENCHMARK(BM_StateHash);

}  // namespace

BENCHMARK_MAIN();
