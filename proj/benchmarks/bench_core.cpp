#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ncwitt/free_poly.hpp"
#include "ncwitt/ghost.hpp"
#include "ncwitt/necklace.hpp"
#include "ncwitt/verify.hpp"

namespace {

using namespace ncwitt;

const GeneratorSetPtr kXY = make_generators({"X", "Y"});
const CoefficientRing kZ = CoefficientRing::integers();

FreePoly dense_poly(std::mt19937_64& rng, int max_deg, int terms) {
    FreePoly f = FreePoly::zero(kXY, kZ);
    for (int t = 0; t < terms; ++t) {
        Word w;
        const int len = static_cast<int>(rng() % (max_deg + 1));
        for (int i = 0; i < len; ++i) {
            w = w * Word::generator(rng() % 2);
        }
        f = f + FreePoly::monomial(kXY, kZ, w, mpz_class(1 + rng() % 9));
    }
    return f;
}

void BM_PolyMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const FreePoly f = dense_poly(rng, state.range(0), 12);
    const FreePoly g = dense_poly(rng, state.range(0), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8);

void BM_MinRotation(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::vector<Word> words;
    for (int i = 0; i < 64; ++i) {
        Word w;
        for (long j = 0; j < state.range(0); ++j) {
            w = w * Word::generator(rng() % 2);
        }
        words.push_back(w);
    }
    std::size_t idx = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_rotation(words[idx]));
        idx = (idx + 1) % words.size();
    }
}
BENCHMARK(BM_MinRotation)->Arg(16)->Arg(256);

void BM_GhostComponents(benchmark::State& state) {
    const FreePoly x = FreePoly::generator(kXY, kZ, 0);
    const FreePoly y = FreePoly::generator(kXY, kZ, 1);
    const std::vector<FreePoly> coords = {x + y, x * y, y};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ghost_components(coords, state.range(0)));
    }
}
BENCHMARK(BM_GhostComponents)->Arg(2)->Arg(3);

void BM_WittMulInt(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<mpz_class> ca, cb;
    for (int i = 0; i < 5; ++i) {
        ca.emplace_back(static_cast<long>(rng() % 2000001) - 1000000);
        cb.emplace_back(static_cast<long>(rng() % 2000001) - 1000000);
    }
    const IntWittVector a(state.range(0), ca), b(state.range(0), cb);
    for (auto _ : state) {
        benchmark::DoNotOptimize(witt_mul_int(a, b));
    }
}
BENCHMARK(BM_WittMulInt)->Arg(2)->Arg(3);

void BM_VerifyTrace(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_trace(state.range(0)));
    }
}
BENCHMARK(BM_VerifyTrace)->Arg(7)->Arg(13);

void BM_VerifyNecklace(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_necklace(state.range(0)));
    }
}
BENCHMARK(BM_VerifyNecklace)->Arg(3)->Arg(7);

} // namespace

BENCHMARK_MAIN();
