#include <benchmark/benchmark.h>

#include <random>

#include "padicalc/amice.hpp"
#include "padicalc/bch.hpp"
#include "padicalc/binomial.hpp"
#include "padicalc/groups.hpp"
#include "padicalc/mahler.hpp"

using namespace padic;

namespace {

Matrix random_lie(std::mt19937_64& rng, const PrimeContext& ctx, int d,
                  long prec) {
  std::vector<mpz_class> e(static_cast<size_t>(d) * d);
  mpz_class bound = ctx.pow_p(prec - 1);
  for (auto& x : e)
    x = 3 * mpz_class(static_cast<unsigned long>(rng() % 1000000));
  return Matrix::from_entries(ctx, d, prec, e);
}

} // namespace

static void BM_ScalarMul(benchmark::State& state) {
  PrimeContext ctx(3);
  Scalar a = Scalar::from_integer(ctx, 123456789, 40);
  Scalar b = Scalar::from_integer(ctx, 987654321, 40);
  for (auto _ : state) benchmark::DoNotOptimize(a.mul(b));
}
BENCHMARK(BM_ScalarMul);

static void BM_MatrixExp(benchmark::State& state) {
  PrimeContext ctx(3);
  std::mt19937_64 rng(1);
  Matrix a = random_lie(rng, ctx, static_cast<int>(state.range(0)), 20);
  for (auto _ : state) benchmark::DoNotOptimize(padic_exp(a));
}
BENCHMARK(BM_MatrixExp)->Arg(2)->Arg(3);

static void BM_MatrixLog(benchmark::State& state) {
  PrimeContext ctx(3);
  std::mt19937_64 rng(2);
  Matrix x = padic_exp(random_lie(rng, ctx, 3, 20));
  for (auto _ : state) benchmark::DoNotOptimize(padic_log(x));
}
BENCHMARK(BM_MatrixLog);

static void BM_MahlerTransform(benchmark::State& state) {
  PrimeContext ctx(3);
  unsigned long K = static_cast<unsigned long>(state.range(0));
  std::vector<mpz_class> values;
  for (unsigned long i = 0; i <= K; ++i)
    values.push_back(mpz_class(i) * i * i + 5);
  auto table = mahler::FunctionTable::from_integers(ctx, values, 20);
  for (auto _ : state)
    benchmark::DoNotOptimize(mahler::mahler_coefficients(table));
}
BENCHMARK(BM_MahlerTransform)->Arg(32)->Arg(128);

static void BM_DiracConvolution(benchmark::State& state) {
  PrimeContext ctx(3);
  auto a = amice::dirac(ctx, 17, 64, 20);
  auto b = amice::dirac(ctx, 23, 64, 20);
  for (auto _ : state) benchmark::DoNotOptimize(amice::convolve(a, b));
}
BENCHMARK(BM_DiracConvolution);

static void BM_BchTableBuild(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        BchTruncation(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BchTableBuild)->Arg(6)->Arg(10);

static void BM_BchEvaluate(benchmark::State& state) {
  PrimeContext ctx(3);
  BchTruncation phi(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(3);
  Matrix X = random_lie(rng, ctx, 3, 12);
  Matrix Y = random_lie(rng, ctx, 3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(phi.evaluate(X, Y));
}
BENCHMARK(BM_BchEvaluate)->Arg(6)->Arg(10);

static void BM_LimitAdd(benchmark::State& state) {
  PrimeContext ctx(3);
  std::mt19937_64 rng(4);
  groups::GroupElement x(padic_exp(random_lie(rng, ctx, 2, 12)));
  groups::GroupElement y(padic_exp(random_lie(rng, ctx, 2, 12)));
  for (auto _ : state)
    benchmark::DoNotOptimize(groups::limit_add(x, y, 8));
}
BENCHMARK(BM_LimitAdd);

static void BM_BinomialSweep(benchmark::State& state) {
  PrimeContext ctx(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(binom::audit_sweep(1, 0, 80, ctx, 4));
}
BENCHMARK(BM_BinomialSweep);

BENCHMARK_MAIN();
