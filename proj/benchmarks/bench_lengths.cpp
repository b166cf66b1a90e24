#include <benchmark/benchmark.h>

#include "sos/global_square.hpp"
#include "sos/lengths.hpp"
#include "sos/oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace sos;
using testing::field;

void BM_LengthRationalIntegers(benchmark::State& state) {
  auto Q = field({0, 1});
  long m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(length_nf(testing::rat(Q, m)).length);
    m = m % state.range(0) + 1;
  }
}
BENCHMARK(BM_LengthRationalIntegers)->Arg(500)->Arg(100000);

void BM_LengthRandom(benchmark::State& state, std::initializer_list<long> poly) {
  auto K = field(poly);
  std::mt19937_64 rng(42);
  std::vector<NFElem> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(testing::random_elem(K, rng, 20, true));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(length_nf(xs[i++ % xs.size()]).length);
}
BENCHMARK_CAPTURE(BM_LengthRandom, quadratic_sqrt5, {-1, -1, 1});
BENCHMARK_CAPTURE(BM_LengthRandom, cubic_2, {-2, 0, 0, 1});
BENCHMARK_CAPTURE(BM_LengthRandom, quartic_6, {-6, 0, 0, 0, 1});

void BM_GlobalSquare(benchmark::State& state) {
  auto K = field({-1, -3, 0, 1});
  std::mt19937_64 rng(7);
  std::vector<NFElem> xs;
  for (int i = 0; i < 32; ++i) {
    auto a = testing::random_elem(K, rng, 50);
    xs.push_back(a * a);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_square_global(xs[i++ % xs.size()]).is_square);
}
BENCHMARK(BM_GlobalSquare);

void BM_DyadicSumOfTwoSquares(benchmark::State& state) {
  auto K = field({-6, 0, 0, 0, 1});
  auto D = dyadic_completion(split_prime(K, 2).at(0));
  std::mt19937_64 rng(11);
  std::vector<NFElem> xs;
  for (int i = 0; i < 32; ++i) xs.push_back(testing::random_elem(K, rng, 30));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sum_of_two_squares_dyadic(xs[i++ % xs.size()], D));
}
BENCHMARK(BM_DyadicSumOfTwoSquares);

void BM_PythagorasElement(benchmark::State& state, std::initializer_list<long> poly) {
  auto K = field(poly);
  for (auto _ : state) benchmark::DoNotOptimize(pythagoras_element_nf(K).number);
}
BENCHMARK_CAPTURE(BM_PythagorasElement, sqrt5, {-1, -1, 1});
BENCHMARK_CAPTURE(BM_PythagorasElement, sqrt_minus7, {2, -1, 1});

void BM_LengthFF(benchmark::State& state) {
  auto K = FunctionField::rational(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<FFElem> xs;
  for (int i = 0; i < 32; ++i) xs.push_back(testing::random_ffelem(K, rng, 8));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(length_ff(xs[i++ % xs.size()]).length);
}
BENCHMARK(BM_LengthFF)->Arg(3)->Arg(25)->Arg(101);

void BM_DyadicBruteForce(benchmark::State& state) {
  auto Q = field({0, 1});
  auto D = dyadic_completion(split_prime(Q, 2).at(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_dyadic_bruteforce(-Q.one(), testing::rat(Q, 7), D));
}
BENCHMARK(BM_DyadicBruteForce);

}  // namespace

BENCHMARK_MAIN();
