// Serial reference kernels against the OpenMP versions, over universe size n.

#include <benchmark/benchmark.h>

#include <random>

#include "stonewb/kernels.hpp"

using namespace stonewb;
namespace k = stonewb::kernels;

namespace {

std::vector<k::CompiledEntry> entries_for(std::size_t n) {
    std::mt19937_64 rng(n);
    std::vector<k::CompiledEntry> out;
    for (std::size_t i = 0; i < 4 * n; ++i) {
        // Sparse needs, like down-set and join operators.
        Mask need = bit(rng() % n) | (rng() % 3 == 0 ? bit(rng() % n) : 0);
        out.push_back({rng() % n, need});
    }
    for (std::size_t i = 0; i < n; ++i) out.push_back({i, bit(i)});
    return out;
}

// Closed under the closure the entries generate, so every axiom holds and
// the scans run to the end.
std::vector<Mask> closed_table(std::size_t n) {
    auto t = k::serial::closure_table(n, entries_for(n));
    bool changed = true;
    while (changed) {
        changed = false;
        for (Mask x = 0; x < t.size(); ++x) {
            Mask y = t[x] | t[t[x]];
            if (y != t[x]) t[x] = y, changed = true;
        }
    }
    return t;
}

template <auto Fn>
void BM_closure_table(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto e = entries_for(n);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(n, e));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <auto Fn>
void BM_fixed_points(benchmark::State& state) {
    const auto t = closed_table(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(t));
}

template <auto Fn>
void BM_closure_axioms(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto t = closed_table(n);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(n, t));
}

template <auto Fn>
void BM_distributivity(benchmark::State& state) {
    // Down-set closure on an antichain: every subset is an ideal and the
    // lattice is distributive, so the whole triple space is scanned.
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Mask> t(std::size_t{1} << n);
    for (Mask x = 0; x < t.size(); ++x) t[x] = x;
    const auto ideals = k::serial::fixed_points(t);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(ideals, t));
}

template <auto Fn>
void BM_union_table(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Mask> sets(static_cast<std::size_t>(state.range(0)));
    for (auto& s : sets) s = static_cast<Mask>(rng());
    for (auto _ : state) benchmark::DoNotOptimize(Fn(sets));
}

}  // namespace

BENCHMARK(BM_closure_table<k::serial::closure_table>)->Name("closure_table/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_closure_table<k::parallel::closure_table>)->Name("closure_table/parallel")->DenseRange(12, 20, 4);
BENCHMARK(BM_fixed_points<k::serial::fixed_points>)->Name("fixed_points/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_fixed_points<k::parallel::fixed_points>)->Name("fixed_points/parallel")->DenseRange(12, 20, 4);
BENCHMARK(BM_closure_axioms<k::serial::closure_axioms>)->Name("closure_axioms/serial")->DenseRange(12, 18, 3);
BENCHMARK(BM_closure_axioms<k::parallel::closure_axioms>)->Name("closure_axioms/parallel")->DenseRange(12, 18, 3);
BENCHMARK(BM_distributivity<k::serial::distributivity_violation>)->Name("distributivity/serial")->DenseRange(4, 6, 1);
BENCHMARK(BM_distributivity<k::parallel::distributivity_violation>)->Name("distributivity/parallel")->DenseRange(4, 6, 1);
BENCHMARK(BM_union_table<k::serial::union_table>)->Name("union_table/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_union_table<k::parallel::union_table>)->Name("union_table/parallel")->DenseRange(12, 20, 4);

BENCHMARK_MAIN();
