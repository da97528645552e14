#include "doctest.h"

#include <random>

#include "padicalc/errors.hpp"
#include "padicalc/json_io.hpp"
#include "padicalc/mahler.hpp"

using namespace padic;
using namespace padic::mahler;

namespace {

const long M = 20;
const unsigned long K = 32;

FunctionTable table_of(const PrimeContext& ctx,
                       const std::vector<mpz_class>& poly, unsigned long k,
                       long prec) {
  std::vector<mpz_class> values;
  for (unsigned long i = 0; i <= k; ++i)
    values.push_back(io::eval_polynomial(poly, mpz_class(i)));
  return FunctionTable::from_integers(ctx, values, prec);
}

Scalar exact_point(const PrimeContext& ctx, long x) {
  long guard = M + factorial_valuation(K, ctx) + 2;
  return Scalar::from_integer_abs(ctx, mpz_class(x), guard);
}

} // namespace

TEST_SUITE("mahler") {

TEST_CASE("coefficients of x, binomial basis vectors, and x^2") {
  PrimeContext ctx(3);
  // f(x) = x -> (0, 1, 0, ...)
  auto cx = mahler_coefficients(table_of(ctx, {0, 1}, 12, M));
  CHECK(cx[0].is_exact_zero());
  CHECK(cx[1].residue() == 1);
  for (unsigned long k = 2; k <= 12; ++k) CHECK(cx[k].is_zero());
  // f = binom(x, j) -> e_j
  for (unsigned long j : {2UL, 5UL}) {
    std::vector<mpz_class> values;
    for (unsigned long i = 0; i <= 12; ++i) {
      mpz_class b;
      mpz_bin_ui(b.get_mpz_t(), mpz_class(i).get_mpz_t(), j);
      values.push_back(b);
    }
    auto c = mahler_coefficients(
        FunctionTable::from_integers(ctx, values, M));
    for (unsigned long k = 0; k <= 12; ++k) {
      if (k == j)
        CHECK(c[k].residue() == 1);
      else
        CHECK(c[k].is_zero());
    }
  }
  // f(x) = x^2 -> (0, 1, 2, 0, ...)
  auto c2 = mahler_coefficients(table_of(ctx, {0, 0, 1}, 12, M));
  CHECK(c2[0].is_exact_zero());
  CHECK(c2[1].residue() == 1);
  CHECK(c2[2].residue() == 2);
  CHECK(c2[3].is_zero());
}

TEST_CASE("evaluate examples") {
  PrimeContext ctx(3);
  auto c2 = mahler_coefficients(table_of(ctx, {0, 0, 1}, K, M));
  CHECK(evaluate(c2, exact_point(ctx, 3)).residue() == 9);
  // constant series returns c_0
  auto c0 = mahler_coefficients(table_of(ctx, {7}, K, M));
  CHECK(evaluate(c0, exact_point(ctx, 11)).residue() == 7);
  // x^3 sampled on 0..10, evaluated at 7
  auto c3 = mahler_coefficients(table_of(ctx, {0, 0, 0, 1}, 10, M));
  CHECK(evaluate(c3, Scalar::from_integer_abs(ctx, 7, M + 8)).residue() ==
        343);
}

TEST_CASE("reconstruction on random polynomials of degree <= 10") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<mpz_class> poly(1 + rng() % 11);
    for (auto& c : poly)
      c = mpz_class(static_cast<long>(rng() % 2001)) - 1000;
    auto series = mahler_coefficients(table_of(ctx, poly, K, M));
    for (unsigned long x = 0; x <= K; ++x) {
      Scalar got = evaluate(series, exact_point(ctx, static_cast<long>(x)));
      Scalar want = Scalar::from_integer_abs(
          ctx, io::eval_polynomial(poly, mpz_class(x)), M);
      CHECK(got.congruent(want));
    }
  }
}

TEST_CASE("linearity of the transform") {
  PrimeContext ctx(3);
  std::vector<mpz_class> f{3, 0, 2, 1}, g{-1, 4, 0, 0, 5};
  auto cf = mahler_coefficients(table_of(ctx, f, 16, M));
  auto cg = mahler_coefficients(table_of(ctx, g, 16, M));
  // h = 2f + 3g sampled directly
  std::vector<mpz_class> values;
  for (unsigned long i = 0; i <= 16; ++i)
    values.push_back(2 * io::eval_polynomial(f, mpz_class(i)) +
                     3 * io::eval_polynomial(g, mpz_class(i)));
  auto ch =
      mahler_coefficients(FunctionTable::from_integers(ctx, values, M));
  Scalar two = Scalar::from_integer(ctx, 2, M);
  Scalar three = Scalar::from_integer(ctx, 3, M);
  for (unsigned long k = 0; k <= 16; ++k)
    CHECK(ch[k].congruent(two.mul(cf[k]).add(three.mul(cg[k]))));
}

TEST_CASE("shift identity: coefficients of f(x+1) are c_k + c_(k+1)") {
  PrimeContext ctx(3);
  std::vector<mpz_class> f{2, -3, 0, 1, 7};
  auto c = mahler_coefficients(table_of(ctx, f, 17, M));
  std::vector<mpz_class> shifted;
  for (unsigned long i = 0; i <= 16; ++i)
    shifted.push_back(io::eval_polynomial(f, mpz_class(i + 1)));
  auto cs =
      mahler_coefficients(FunctionTable::from_integers(ctx, shifted, M));
  for (unsigned long k = 0; k <= 16; ++k)
    CHECK(cs[k].congruent(c[k].add(c[k + 1])));
}

TEST_CASE("character series: coefficients, degenerate z, binomial law") {
  PrimeContext ctx(3);
  // z = 0 gives the constant function 1
  auto c0 = character_series(Scalar::exact_zero(ctx), 6);
  CHECK(c0[0].residue() == 1);
  for (unsigned long k = 1; k <= 6; ++k) CHECK(c0[k].is_exact_zero());
  // z = 3: (1, 3, 9, 27, 81)
  auto c = character_series(Scalar::from_integer(ctx, 3, M), 4);
  mpz_class zpow(1);
  for (unsigned long k = 0; k <= 4; ++k) {
    CHECK(c[k].residue() == zpow);
    zpow *= 3;
  }
  CHECK_THROWS_AS(character_series(Scalar::from_integer(ctx, 2, M), 4),
                  DomainError);
  // evaluate(kappa_3, 2) = (1+3)^2 = 16
  auto cc = character_series(Scalar::from_integer(ctx, 3, M), K);
  CHECK(evaluate(cc, exact_point(ctx, 2)).residue() == 16);
  // the character law as a transform identity: mahler(a -> (1+z)^a) = (z^k)
  std::vector<mpz_class> values;
  mpz_class pow(1);
  for (unsigned long i = 0; i <= K; ++i) {
    values.push_back(pow);
    pow *= 4; // (1+3)^a
  }
  auto via_table =
      mahler_coefficients(FunctionTable::from_integers(ctx, values, M));
  for (unsigned long k = 0; k <= K; ++k)
    CHECK(via_table[k].congruent(cc[k]));
}

TEST_CASE("decay slopes of characters equal v(z)") {
  PrimeContext ctx(3);
  for (long j : {1L, 2L, 3L}) {
    auto c = character_series(Scalar::from_integer(ctx, ctx.pow_p(j), 40), K);
    auto report = decay_slope(c);
    REQUIRE(report.slope.kind == Slope::Kind::Finite);
    CHECK(report.slope.value == Rational(j));
    CHECK(report.verdict_floor.has_value());
    CHECK(*report.verdict_floor == 0); // slope >= 1/2 already at level 0
  }
}

TEST_CASE("membership verdicts") {
  PrimeContext ctx(3);
  // kappa_p: member at every level
  auto cp = character_series(Scalar::from_integer(ctx, 3, 40), K);
  for (unsigned long n = 0; n <= 4; ++n)
    CHECK(member_at_level(cp, n) == Verdict::Member);
  // all-ones tail: slope 0, member of no level
  std::vector<Scalar> ones(K + 1, Scalar::one(ctx, M));
  MahlerSeries flat(ctx, ones);
  CHECK(member_at_level(flat, 0) == Verdict::NotMember);
  CHECK(member_at_level(flat, 3) == Verdict::NotMember);
  // finitely supported series: slope +infinity, member everywhere
  std::vector<Scalar> fin(K + 1, Scalar::exact_zero(ctx));
  fin[2] = Scalar::one(ctx, M);
  MahlerSeries poly_series(ctx, fin);
  auto report = decay_slope(poly_series);
  CHECK(report.slope.kind == Slope::Kind::PlusInfinity);
  CHECK(member_at_level(poly_series, 4) == Verdict::Member);
  // zero series: member
  std::vector<Scalar> zeros(K + 1, Scalar::exact_zero(ctx));
  CHECK(member_at_level(MahlerSeries(ctx, zeros), 0) == Verdict::Member);
}

TEST_CASE("indeterminate tails are reported, not guessed") {
  PrimeContext ctx(3);
  std::vector<Scalar> c(K + 1, Scalar::zero_at_precision(ctx, 0));
  c[0] = Scalar::one(ctx, M);
  MahlerSeries fuzzy(ctx, c);
  auto report = decay_slope(fuzzy);
  CHECK(report.slope.kind == Slope::Kind::Indeterminate);
  CHECK(!report.slope.tight);
  CHECK(member_at_level(fuzzy, 0) == Verdict::Indeterminate);
}

TEST_CASE("evaluate guards against precision exhaustion") {
  PrimeContext ctx(3);
  auto c = mahler_coefficients(table_of(ctx, {0, 1}, K, M));
  // v_3(32!) = 14 eats a 4-digit point entirely
  CHECK_THROWS_AS(evaluate(c, Scalar::from_integer_abs(ctx, 7, 4)),
                  PrecisionError);
  CHECK_THROWS_AS(
      evaluate(c, Scalar::from_rational(ctx, Rational(1, 3), 8)),
      DomainError); // points outside Z_p are rejected
}

} // TEST_SUITE
