#include "caoli/attack.hpp"
#include "caoli/sim.hpp"

#include <benchmark/benchmark.h>

namespace {

caoli::SchemeParams params_for(std::int64_t n, unsigned bits) {
    caoli::SchemeParams p;
    p.n = static_cast<std::size_t>(n);
    p.d = 1;
    p.min_prime_bits = bits;
    p.seed = 0xBEEFCAFEULL + static_cast<std::uint64_t>(n);
    return p;
}

void BM_Keygen64(benchmark::State& state) {
    const auto params = params_for(state.range(0), 64);
    for (auto _ : state) {
        auto pair = caoli::keygen(params);
        benchmark::DoNotOptimize(pair.second.b);
    }
}
BENCHMARK(BM_Keygen64)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_FactorPublicMatrix64(benchmark::State& state) {
    auto [sk, pk] = caoli::keygen(params_for(state.range(0), 64));
    for (auto _ : state) {
        auto factored = caoli::factor_public_matrix(pk.b);
        benchmark::DoNotOptimize(factored.first);
    }
}
BENCHMARK(BM_FactorPublicMatrix64)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_RecoverKey64(benchmark::State& state) {
    auto [sk, pk] = caoli::keygen(params_for(state.range(0), 64));
    for (auto _ : state) {
        auto rk = caoli::recover_key(pk);
        benchmark::DoNotOptimize(rk.candidates);
    }
}
BENCHMARK(BM_RecoverKey64)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_RoundTrip64(benchmark::State& state) {
    auto [sk, pk] = caoli::keygen(params_for(state.range(0), 64));
    caoli::Vec x(sk.n(), caoli::Int(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(caoli::decrypt(sk, caoli::encrypt(pk, x)));
    }
}
BENCHMARK(BM_RoundTrip64)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

// the headline configuration: 50 primes of 256 bits
void BM_FullBreak256(benchmark::State& state) {
    auto [sk, pk] = caoli::keygen(params_for(state.range(0), 256));
    caoli::Vec x(sk.n(), caoli::Int(1));
    const caoli::Int y = caoli::encrypt(pk, x);
    for (auto _ : state) {
        auto broken = caoli::full_break(pk, {y});
        benchmark::DoNotOptimize(broken.second);
    }
}
BENCHMARK(BM_FullBreak256)->Arg(16)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
