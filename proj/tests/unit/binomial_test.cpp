#include "doctest.h"

#include <random>

#include "padicalc/binomial.hpp"
#include "padicalc/errors.hpp"

using namespace padic;
using namespace padic::binom;

namespace {

// direct enumeration oracle for alpha counts
unsigned long alpha_oracle(const mpz_class& b, unsigned long k,
                           unsigned long j, const PrimeContext& ctx) {
  mpz_class pj = ctx.pow_p(j);
  unsigned long count = 0;
  for (unsigned long i = 0; i < k; ++i)
    if ((mpz_class(i) - b) % pj == 0) ++count;
  return count;
}

} // namespace

TEST_SUITE("binomial") {

TEST_CASE("alpha counts against direct enumeration") {
  PrimeContext ctx(3);
  CHECK(alpha_count(0, 0, 1, ctx) == 0);
  CHECK(alpha_count(0, 10, 1, ctx) == 4); // i in {0,3,6,9}
  CHECK(alpha_count(2, 10, 2, ctx) == 1); // i = 2 only
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    mpz_class b(static_cast<unsigned long>(rng() % 200));
    unsigned long k = rng() % 60;
    unsigned long j = 1 + rng() % 3;
    unsigned long got = alpha_count(b, k, j, ctx);
    CHECK(got == alpha_oracle(b, k, j, ctx));
    // alpha in {floor(k/p^j), floor(k/p^j)+1}
    mpz_class base = mpz_class(k) / ctx.pow_p(j);
    CHECK((got == base || got == base + 1));
  }
}

TEST_CASE("falling factorial valuations") {
  PrimeContext ctx(3);
  CHECK(falling_factorial_valuation(9, 4, ctx) == 3); // 2 + 0 + 0 + 1
  CHECK(falling_factorial_valuation(1, 1, ctx) == 0);
  for (unsigned long k : {1UL, 4UL, 9UL, 20UL})
    CHECK(falling_factorial_valuation(mpz_class(k), k, ctx) ==
          factorial_valuation(k, ctx)); // a = k gives k!
  CHECK_THROWS_AS(falling_factorial_valuation(2, 4, ctx), DomainError);
}

TEST_CASE("alpha-sum identity for the falling factorial") {
  // v_p(a(a-1)...(a-k+1)) = sum_{j=1..J} alpha_count(a mod p^J, k, j)
  // whenever v_p(a - i) <= J for all i < k
  PrimeContext ctx(3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    mpz_class a(static_cast<unsigned long>(100 + rng() % 4000));
    unsigned long k = 1 + rng() % 50;
    long deepest = 0;
    for (unsigned long i = 0; i < k; ++i)
      deepest = std::max(deepest, ctx.valuation(a - static_cast<long>(i)));
    unsigned long J = static_cast<unsigned long>(deepest) + 1;
    long sum = 0;
    mpz_class b = a % ctx.pow_p(J);
    for (unsigned long j = 1; j <= J; ++j)
      sum += static_cast<long>(alpha_count(b, k, j, ctx));
    CHECK(falling_factorial_valuation(a, k, ctx) == sum);
  }
}

TEST_CASE("formula instantiations") {
  PrimeContext ctx(3);
  CHECK(formula_min_valuation(0, 5, ctx) == Rational(0)); // floor(5/3) = 1
  CHECK(formula_min_valuation(0, 0, ctx) == Rational(0));
  CHECK(formula_min_valuation(1, 8, ctx) == Rational(0)); // floor(8/9) = 0
  // out of the k < p^(n+2) regime the formula goes negative
  CHECK(formula_min_valuation(0, 27, ctx) == Rational(-4)); // -v(9!)
}

TEST_CASE("search results and deterministic witnesses") {
  PrimeContext ctx(3);
  auto r5 = search_min_valuation(0, 5, ctx, default_search_depth(0));
  CHECK(r5.min_valuation == Rational(0));
  CHECK(r5.witness.b == 2); // a = 2 + 3*1 = 5: binom(5,5) = 1
  CHECK(r5.witness.c_residue == 1);
  CHECK(search_min_valuation(0, 7, ctx, 3).min_valuation == Rational(0));
  CHECK(search_min_valuation(1, 3, ctx, 4).min_valuation == Rational(0));
}

TEST_CASE("oracle valuations are never negative for integer points") {
  PrimeContext ctx(5);
  for (unsigned long k : {0UL, 3UL, 11UL, 24UL})
    CHECK(search_min_valuation(0, k, ctx, 2).min_valuation >= Rational(0));
}

TEST_CASE("sweep agrees with the formula below p^(n+2) and records "
          "disagreement beyond") {
  for (long p : {3L, 5L}) {
    PrimeContext ctx(p);
    for (unsigned long n : {0UL, 1UL}) {
      mpz_class bound = ctx.pow_p(n + 2);
      auto rows = audit_sweep(n, 0, bound.get_ui() - 1, ctx,
                              default_search_depth(n));
      for (const auto& row : rows) {
        CHECK(row.agrees);
        CHECK(row.oracle_valuation == Rational(0));
      }
    }
  }
  // beyond the regime the closed form claims a negative valuation,
  // impossible for integral binomials; the sweep reports, not asserts
  PrimeContext ctx(3);
  auto rows = audit_sweep(0, 27, 27, ctx, 3);
  CHECK(!rows[0].agrees);
  CHECK(rows[0].formula_valuation == Rational(-4));
  CHECK(rows[0].oracle_valuation >= Rational(0));
}

TEST_CASE("search depth precondition") {
  PrimeContext ctx(3);
  CHECK_THROWS_AS(search_min_valuation(1, 3, ctx, 2), DomainError);
}

} // TEST_SUITE
