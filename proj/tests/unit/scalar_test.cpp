#include "doctest.h"

#include <random>

#include "padicalc/errors.hpp"
#include "padicalc/scalar.hpp"

using namespace padic;

namespace {

// independent extended-Euclid oracle for modular inverses
mpz_class ext_euclid_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    mpz_class q = old_r / r;
    mpz_class tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  REQUIRE(old_r == 1);
  return (old_s % m + m) % m;
}

mpz_class rand_mpz(std::mt19937_64& rng, const mpz_class& bound) {
  mpz_class r = 0;
  for (int i = 0; i < 3; ++i)
    r = (r << 32) + mpz_class(static_cast<unsigned long>(rng() & 0xffffffffULL));
  return r % bound;
}

} // namespace

TEST_SUITE("scalar") {

TEST_CASE("factorial valuation against direct factorization") {
  PrimeContext ctx3(3);
  CHECK(factorial_valuation(0, ctx3) == 0);
  CHECK(factorial_valuation(10, ctx3) == 4);  // v_3(3628800)
  CHECK(factorial_valuation(27, ctx3) == 13); // 9 + 3 + 1
  // direct factorization of k! for every k <= 2000, incremental
  for (long p : {2L, 3L, 5L}) {
    PrimeContext ctx(p);
    long direct = 0;
    for (unsigned long k = 1; k <= 2000; ++k) {
      direct += ctx.valuation(mpz_class(k));
      REQUIRE(factorial_valuation(k, ctx) == direct);
    }
  }
}

TEST_CASE("prime context validation") {
  CHECK(PrimeContext(2).epsilon() == 2);
  CHECK(PrimeContext(3).epsilon() == 1);
  CHECK(PrimeContext(1000003).epsilon() == 1);
  CHECK_THROWS_AS(PrimeContext(1), DomainError);
  CHECK_THROWS_AS(PrimeContext(9), DomainError);
  CHECK_THROWS_AS(PrimeContext(1000001), DomainError); // = 101 * 9901
}

TEST_CASE("valuation additivity: v(9*3) = 3 in Z_3") {
  PrimeContext ctx(3);
  Scalar a = Scalar::from_integer(ctx, 9, 6);
  Scalar b = Scalar::from_integer(ctx, 3, 6);
  CHECK(a.mul(b).valuation() == 3);
}

TEST_CASE("invert(2) mod 3^4 is 41, matching the extended-Euclid oracle") {
  PrimeContext ctx(3);
  Scalar two = Scalar::from_integer(ctx, 2, 4);
  Scalar inv = two.invert();
  CHECK(inv.unit() == 41);
  CHECK(inv.unit() == ext_euclid_inverse(2, ctx.pow_p(4)));
  CHECK((two.mul(inv)).unit() == 1);
}

TEST_CASE("inversion preconditions") {
  PrimeContext ctx(3);
  CHECK_THROWS_AS(Scalar::from_integer(ctx, 6, 4).invert(), DomainError);
  CHECK_THROWS_AS(Scalar::exact_zero(ctx).invert(), DomainError);
  CHECK_THROWS_AS(Scalar::zero_at_precision(ctx, 4).invert(), DomainError);
}

TEST_CASE("divide_by_p bookkeeping") {
  PrimeContext ctx(3);
  Scalar x = Scalar::from_integer(ctx, 9 * 5, 6); // v = 2, abs = 8
  Scalar y = x.divide_by_p();
  CHECK(y.valuation() == 1);
  CHECK(y.abs_precision() == x.abs_precision() - 1);
  CHECK(y.rel_precision() == x.rel_precision());
}

TEST_CASE("exact zero vs zero at precision") {
  PrimeContext ctx(3);
  Scalar ez = Scalar::exact_zero(ctx);
  Scalar zp = Scalar::zero_at_precision(ctx, 5);
  CHECK(ez.is_exact_zero());
  CHECK(!zp.is_exact_zero());
  CHECK(zp.is_zero());
  CHECK(zp.abs_precision() == 5);
  CHECK_THROWS_AS(ez.valuation(), DomainError);
  CHECK_THROWS_AS(zp.valuation(), PrecisionError);
  // a unit swallowed by low precision collapses to zero-at-precision
  Scalar deep = Scalar::from_integer_abs(ctx, 729, 4); // v = 6 >= 4
  CHECK(deep.kind() == Scalar::Kind::ZeroAtPrecision);
  CHECK(deep.abs_precision() == 4);
}

TEST_CASE("valuation additivity and ultrametric inequality on random pairs") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(7);
  mpz_class bound = ctx.pow_p(30);
  for (int trial = 0; trial < 200; ++trial) {
    mpz_class na = rand_mpz(rng, bound) + 1;
    mpz_class nb = rand_mpz(rng, bound) + 1;
    Scalar a = Scalar::from_integer(ctx, na, 12);
    Scalar b = Scalar::from_integer(ctx, nb, 12);
    CHECK(a.mul(b).valuation() == a.valuation() + b.valuation());
    Scalar sum = a.add(b);
    long floor = std::min(a.valuation(), b.valuation());
    if (!sum.is_zero()) {
      CHECK(sum.valuation() >= floor);
      if (a.valuation() != b.valuation())
        CHECK(sum.valuation() == floor); // equality off the diagonal
    }
  }
}

TEST_CASE("addition aligns precision to the weaker operand") {
  PrimeContext ctx(3);
  Scalar a = Scalar::from_integer(ctx, 7, 10);  // abs 10
  Scalar b = Scalar::from_integer(ctx, 27, 4);  // v 3, abs 7
  CHECK(a.add(b).abs_precision() == 7);
  CHECK(a.mul(b).rel_precision() == 4);
  CHECK(a.mul(b).valuation() == 3);
}

TEST_CASE("division tracks valuations exactly") {
  PrimeContext ctx(3);
  Scalar a = Scalar::from_integer(ctx, 54, 8); // v 3 * 2
  Scalar b = Scalar::from_integer(ctx, 2, 8);
  Scalar q = a.div(b);
  CHECK(q.valuation() == a.valuation());
  CHECK(q.mul(b).congruent(a));
  CHECK_THROWS_AS(a.div(Scalar::exact_zero(ctx)), DomainError);
}

TEST_CASE("pow and rational construction") {
  PrimeContext ctx(3);
  Scalar half = Scalar::from_rational(ctx, Rational(1, 2), 4);
  CHECK(half.valuation() == 0);
  CHECK(half.unit() == 41); // 1/2 = inverse of 2 mod 81
  Scalar x = Scalar::from_integer(ctx, 6, 5);
  CHECK(x.pow(3).valuation() == 3);
  CHECK(x.pow(0).unit() == 1);
  Scalar third = Scalar::from_rational(ctx, Rational(1, 3), 4);
  CHECK(third.valuation() == -1);
}

TEST_CASE("arithmetic below Z_p: negative valuations combine exactly") {
  PrimeContext ctx(3);
  Scalar third = Scalar::from_rational(ctx, Rational(1, 3), 4);   // v -1
  Scalar two_thirds = Scalar::from_rational(ctx, Rational(2, 3), 4);
  Scalar one = third.add(two_thirds);
  CHECK(one.valuation() == 0);
  CHECK(one.unit() == 1);
  // 1/3 + 1 = 4/3
  Scalar sum = third.add(Scalar::one(ctx, 6));
  CHECK(sum.valuation() == -1);
  CHECK(sum.congruent(Scalar::from_rational(ctx, Rational(4, 3), 4)));
  // 1/3 - 1/3 collapses to an inexact zero at the shared precision
  Scalar diff = third.sub(Scalar::from_rational(ctx, Rational(1, 3), 6));
  CHECK(diff.is_zero());
  CHECK(!diff.is_exact_zero());
  CHECK(diff.abs_precision() == 3);
  // deep cancellation: v(x + y) > min when valuations agree
  Scalar a = Scalar::from_integer(ctx, 4, 6);
  Scalar b = Scalar::from_integer(ctx, 5, 6);
  CHECK(a.add(b).valuation() == 2); // 9
}

TEST_CASE("mismatched primes are rejected") {
  PrimeContext p3(3), p5(5);
  Scalar a = Scalar::from_integer(p3, 2, 4);
  Scalar b = Scalar::from_integer(p5, 2, 4);
  CHECK_THROWS_AS(a.add(b), InvariantError);
  CHECK_THROWS_AS(a.mul(b), InvariantError);
}

} // TEST_SUITE
