#include <benchmark/benchmark.h>

#include "somos/eds.hpp"
#include "somos/recurrence.hpp"
#include "somos/symbolic.hpp"

using namespace somos;

namespace {

const SomosRecurrence<Rat>& rec_1331() {
    static SomosRecurrence<Rat> rec(4, {Rat(1331), Rat(119790)});
    return rec;
}

const std::array<Rat, 4>& inits_1331() {
    static std::array<Rat, 4> inits{Rat(1), Rat(3), Rat(121), Rat(177023)};
    return inits;
}

void BM_generate_naive(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    std::vector<Rat> iv(inits_1331().begin(), inits_1331().end());
    for (auto _ : state) {
        auto orbit = generate(rec_1331(), iv, 1, 1, n);
        benchmark::DoNotOptimize(orbit.at(n));
    }
}
BENCHMARK(BM_generate_naive)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_fast_term(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast_somos_term(rec_1331(), inits_1331(), n));
    }
}
BENCHMARK(BM_fast_term)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Arg(1000)->Arg(2000)
    ->Unit(benchmark::kMillisecond);

void BM_symbolic_somos4(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        auto sym = symbolic_somos4(n, 14);
        benchmark::DoNotOptimize(sym.terms.back().term_count());
    }
}
BENCHMARK(BM_symbolic_somos4)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_laurent_mul(benchmark::State& state) {
    // A_{n-1} * A_{n+1}, the dominant product of the symbolic iteration
    const int n = int(state.range(0));
    auto sym = symbolic_somos4(n + 1, 14);
    const LaurentPoly& a = sym.at(n - 1);
    const LaurentPoly& b = sym.at(n + 1);
    for (auto _ : state) benchmark::DoNotOptimize((a * b).term_count());
}
BENCHMARK(BM_laurent_mul)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_laurent_div_exact(benchmark::State& state) {
    const int n = int(state.range(0));
    auto sym = symbolic_somos4(n + 1, 14);
    const LaurentPoly prod = sym.at(n) * sym.at(n + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(LaurentPoly::div_exact(prod, sym.at(n)).term_count());
}
BENCHMARK(BM_laurent_div_exact)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_companion_extend(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        auto w = EdsSequence::companion_of_somos4(Rat(1331), Rat(119790), Rat(869));
        w.extend_to(n);
        benchmark::DoNotOptimize(w.at(n));
    }
}
BENCHMARK(BM_companion_extend)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
