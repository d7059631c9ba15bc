#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <hingerot/hinge.hpp>
#include <hingerot/image_rotation.hpp>
#include <hingerot/rotation_map.hpp>
#include <hingerot/table.hpp>

using namespace hingerot;

namespace {

const HingeTable& table(int m) {
  static std::map<int, HingeTable> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, HingeTable::build(m)).first;
  return it->second;
}

void BM_TableBuild(benchmark::State& state) {
  const auto m = static_cast<std::int64_t>(state.range(0));
  std::size_t hinges = 0;
  for (auto _ : state) {
    const HingeTable t = HingeTable::build(m);
    hinges = t.size();
    benchmark::DoNotOptimize(t);
  }
  state.counters["hinges"] = double(hinges);
}
BENCHMARK(BM_TableBuild)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

// One full turn of the incremental map; the per-iteration update count stays
// proportional to m^3 while the swept position count is 2N.
void BM_FullSweep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const HingeTable& t = table(m);
  std::uint64_t updates = 0;
  for (auto _ : state) {
    RotationMap r(t);
    updates = 0;
    for (std::size_t ph = 0; ph < 2 * t.size(); ++ph) {
      updates += r.step(t).touched.size();
    }
    benchmark::DoNotOptimize(r);
  }
  state.counters["updates"] = double(updates);
  state.counters["updates_per_m3"] = double(updates) / (double(m) * m * m);
}
BENCHMARK(BM_FullSweep)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

// A full turn of a dense random image, pixel bookkeeping included.
void BM_ImageFullTurn(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const HingeTable& t = table(m);
  std::mt19937_64 rng(7);
  std::vector<ImageRotation<std::uint8_t>::SourcePixel> px;
  DiskGrid<char>(m).for_each_point([&](Gaussian z) {
    px.push_back({z, static_cast<std::uint8_t>(rng() % 256)});
  });
  for (auto _ : state) {
    ImageRotation<std::uint8_t> img(t, px, 0);
    for (std::size_t ph = 0; ph < 2 * t.size(); ++ph) img.step();
    benchmark::DoNotOptimize(img);
  }
  state.counters["pixels"] = double(px.size());
}
BENCHMARK(BM_ImageFullTurn)->Arg(8)->Arg(16);

// Exact angle ordering on canonical triples drawn up to radius 64.
void BM_Compare(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> pq(-64, 64), kk(-65, 64);
  std::vector<HingeAngle> pool;
  while (pool.size() < 512) {
    const Triple raw{pq(rng), pq(rng), kk(rng)};
    if (raw.p * raw.p + raw.q * raw.q > 64 * 64 || !validate(raw)) continue;
    pool.push_back(HingeAngle::canonical(raw));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto c = compare(pool[i % pool.size()], pool[(i * 7 + 3) % pool.size()]);
    benchmark::DoNotOptimize(c);
    ++i;
  }
}
BENCHMARK(BM_Compare);

}  // namespace

BENCHMARK_MAIN();
