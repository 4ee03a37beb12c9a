#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ecogen/catalog.hpp"
#include "ecogen/generator.hpp"
#include "ecogen/permutation.hpp"
#include "ecogen/verify.hpp"

namespace {

const char* const kEntries[] = {"pow2", "catalan-312", "catalan-321", "schroeder", "padovan-bt", "bisfib-c"};

void BM_Generate(benchmark::State& state)
{
    const auto entry = ecogen::make_entry(kEntries[state.range(0)]);
    const int n = static_cast<int>(state.range(1));
    std::uint64_t emitted = 0;
    std::uint64_t calls = 0;
    for (auto _ : state) {
        int sink = 0;
        const auto c = ecogen::generate(n, entry, [&](std::span<const int> p) { sink += p[0]; });
        benchmark::DoNotOptimize(sink);
        emitted += c.emitted;
        calls += c.recursive_calls;
    }
    state.SetLabel(entry.id);
    state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
    state.counters["calls/perm"] = static_cast<double>(calls) / static_cast<double>(emitted);
}
BENCHMARK(BM_Generate)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {8, 10, 12}})
    ->Unit(benchmark::kMicrosecond);

void BM_Count(benchmark::State& state)
{
    const auto entry = ecogen::make_entry("schroeder");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ecogen::count(n, entry));
}
BENCHMARK(BM_Count)->Arg(10)->Arg(18)->Arg(24);

void BM_Contains(benchmark::State& state)
{
    // Worst case for the matcher: a long identity host against a pattern it avoids.
    const int n = static_cast<int>(state.range(0));
    const auto host = ecogen::Permutation::identity(n);
    const ecogen::Permutation pattern{2, 4, 3, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(ecogen::contains(host, pattern));
}
BENCHMARK(BM_Contains)->Arg(8)->Arg(16)->Arg(32);

void BM_Oracle(benchmark::State& state)
{
    const auto patterns = ecogen::parse_pattern_set("312;2431;4321");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ecogen::oracle_generate(n, patterns).size());
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
