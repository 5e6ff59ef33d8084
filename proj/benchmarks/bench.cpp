// Microbenchmarks for the hot paths: HNF reduction, canonical forms, ideal
// enumeration, and the integral engine.  Run with --benchmark_filter=... to
// pick a subset; counts are exact work, so times are stable across runs.

#include <benchmark/benchmark.h>

#include "zetalg/builtins.hpp"
#include "zetalg/character.hpp"
#include "zetalg/plattice.hpp"
#include "zetalg/zeta.hpp"

#include <random>
#include <vector>

using namespace zetalg;

namespace {

std::vector<Rat> mixed_basis(std::mt19937_64& rng, int64_t p, int r) {
    std::uniform_int_distribution<int> exp_d(0, 3);
    std::uniform_int_distribution<int> ent_d(-8, 8);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Rat> rows(static_cast<size_t>(r) * r, Rat(0));
    for (int i = 0; i < r; ++i) {
        rows[static_cast<size_t>(i) * r + i] = Rat(pow_int(Int(p), exp_d(rng)));
        for (int k = i + 1; k < r; ++k) rows[static_cast<size_t>(i) * r + k] = Rat(ent_d(rng));
    }
    for (int step = 0; step < 8; ++step) {
        int i = static_cast<int>(rng() % static_cast<uint64_t>(r));
        int j = static_cast<int>(rng() % static_cast<uint64_t>(r));
        if (i == j) continue;
        Rat cf(coef(rng));
        for (int k = 0; k < r; ++k)
            rows[static_cast<size_t>(i) * r + k] += cf * rows[static_cast<size_t>(j) * r + k];
    }
    return rows;
}

void BM_from_rows(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::vector<std::vector<Rat>> bases;
    for (int i = 0; i < 64; ++i) bases.push_back(mixed_basis(rng, 2, r));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(PLattice::from_rows(2, r, bases[i % bases.size()]));
        ++i;
    }
}
BENCHMARK(BM_from_rows)->Arg(2)->Arg(3)->Arg(4);

void BM_canonical_form(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    std::vector<PLattice> lattices;
    for (int i = 0; i < 64; ++i)
        lattices.push_back(PLattice::from_rows(2, r, mixed_basis(rng, 2, r)));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(lattices[i % lattices.size()]));
        ++i;
    }
}
BENCHMARK(BM_canonical_form)->Arg(2)->Arg(3)->Arg(4);

void BM_unit_measure(benchmark::State& state) {
    TableAlgebra T = make_builtin("gq21");
    CharacterTable C = character_table(T);
    IdempotentBasis E = idempotents(T, C);
    LocalOrder LO = local_order(T, E, 3);
    for (auto _ : state) benchmark::DoNotOptimize(unit_measure(LO.lambda));
}
BENCHMARK(BM_unit_measure);

void BM_count_ideals(benchmark::State& state) {
    TableAlgebra T = make_builtin("petersen");
    const int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_ideals(T, 2, kmax));
    state.SetComplexityN(kmax);
}
BENCHMARK(BM_count_ideals)->Arg(4)->Arg(6)->Arg(8);

void BM_zeta_integral(benchmark::State& state) {
    TableAlgebra T = make_builtin("gq21");
    CharacterTable C = character_table(T);
    IdempotentBasis E = idempotents(T, C);
    LocalOrder LO = local_order(T, E, 3);
    const int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zeta_integral_series(LO.lambda, kmax));
}
BENCHMARK(BM_zeta_integral)->Arg(6)->Arg(10)->Arg(14);

void BM_genus_decomposition(benchmark::State& state) {
    TableAlgebra T = make_builtin("square");
    for (auto _ : state)
        benchmark::DoNotOptimize(genus_decomposition(T, 2, 6, Engine::genus));
}
BENCHMARK(BM_genus_decomposition);

} // namespace

BENCHMARK_MAIN();
