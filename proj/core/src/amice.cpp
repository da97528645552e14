#include "padicalc/amice.hpp"

#include "padicalc/errors.hpp"

namespace padic::amice {

AmiceSeries dirac(const PrimeContext& ctx, const mpz_class& a,
                  unsigned long K, long abs_prec) {
  std::vector<Scalar> d;
  d.reserve(K + 1);
  for (unsigned long k = 0; k <= K; ++k) {
    mpz_class b;
    mpz_bin_ui(b.get_mpz_t(), a.get_mpz_t(), k);
    d.push_back(Scalar::from_integer_abs(ctx, b, abs_prec));
  }
  return AmiceSeries(ctx, std::move(d));
}

AmiceSeries convolve(const AmiceSeries& a, const AmiceSeries& b) {
  require_same_prime(a.context(), b.context());
  if (a.truncation() != b.truncation())
    throw InvariantError("convolution needs matching truncations");
  unsigned long K = a.truncation();
  std::vector<Scalar> d;
  d.reserve(K + 1);
  for (unsigned long k = 0; k <= K; ++k) {
    Scalar acc = Scalar::exact_zero(a.context());
    for (unsigned long i = 0; i <= k; ++i)
      acc = acc.add(a[i].mul(b[k - i]));
    d.push_back(acc);
  }
  return AmiceSeries(a.context(), std::move(d));
}

Scalar pair(const AmiceSeries& lambda, const mahler::MahlerSeries& f) {
  require_same_prime(lambda.context(), f.context());
  if (lambda.truncation() != f.truncation())
    throw InvariantError("pairing needs matching truncations");
  Scalar acc = Scalar::exact_zero(lambda.context());
  for (unsigned long k = 0; k <= lambda.truncation(); ++k)
    acc = acc.add(lambda[k].mul(f[k]));
  return acc;
}

AmiceSeries derivative_distribution(const PrimeContext& ctx, unsigned long K,
                                    long rel_prec) {
  if (K < 1) throw DomainError("derivative distribution needs K >= 1");
  std::vector<Scalar> d;
  d.reserve(K + 1);
  d.push_back(Scalar::exact_zero(ctx));
  for (unsigned long k = 1; k <= K; ++k) {
    Rational coeff(mpz_class(k % 2 == 1 ? 1 : -1), mpz_class(k));
    d.push_back(Scalar::from_rational(ctx, coeff, rel_prec));
  }
  return AmiceSeries(ctx, std::move(d));
}

OverconvergenceResult overconvergent_at_level(const AmiceSeries& lambda,
                                              unsigned long n,
                                              std::optional<Rational> tolerance,
                                              const Rational& window_fraction) {
  if (lambda.truncation() < 10)
    throw DomainError("overconvergence test needs truncation K >= 10");
  const PrimeContext& ctx = lambda.context();
  Rational tol = tolerance ? *tolerance : default_level_tolerance(ctx, n);
  Rational threshold = -level_radius_valuation(ctx, n) + tol;
  Slope slope =
      tail_slope(lambda.series(),
                 tail_window_start(lambda.truncation(), window_fraction));
  OverconvergenceResult r;
  r.slope = slope;
  if (slope.kind == Slope::Kind::PlusInfinity)
    r.verdict = Verdict::Member;
  else if (slope.kind == Slope::Kind::Finite)
    r.verdict =
        (slope.value > threshold) ? Verdict::Member : Verdict::NotMember;
  else
    r.verdict = (slope.value > threshold) ? Verdict::Member
                                          : Verdict::Indeterminate;
  return r;
}

namespace {

// v(b_i) = v(a_i) + v_p(i!) - v_p(q_i!) - n*i, pushed through the
// exact/at-least/infinite coefficient states.
CoeffValuation b_valuation(const Scalar& a_i, unsigned long i,
                           unsigned long m, unsigned long n,
                           const PrimeContext& ctx) {
  CoeffValuation cv = CoeffValuation::of(a_i);
  if (cv.kind == CoeffValuation::Kind::Infinite) return cv;
  mpz_class qi = mpz_class(i) / ctx.pow_p(m);
  long shift = factorial_valuation(i, ctx) -
               factorial_valuation(qi.get_ui(), ctx) -
               static_cast<long>(n) * static_cast<long>(i);
  cv.value = cv.value + Rational(shift);
  return cv;
}

} // namespace

DividedPowerReport divided_power_report(const std::vector<Scalar>& a_coeffs,
                                        unsigned long m, unsigned long n) {
  if (a_coeffs.empty())
    throw DomainError("divided-power report needs coefficients");
  const PrimeContext& ctx = a_coeffs[0].context();
  DividedPowerReport r;
  r.m = m;
  r.n = n;
  r.b_valuations.reserve(a_coeffs.size());
  for (size_t i = 0; i < a_coeffs.size(); ++i)
    r.b_valuations.push_back(
        b_valuation(a_coeffs[i], static_cast<unsigned long>(i), m, n, ctx));

  // norm valuation: min over all i
  bool have = false;
  bool all_exact = true;
  Rational mn;
  for (const CoeffValuation& cv : r.b_valuations) {
    if (cv.kind == CoeffValuation::Kind::Infinite) continue;
    if (cv.kind != CoeffValuation::Kind::Exact) all_exact = false;
    if (!have || cv.value < mn) mn = cv.value;
    have = true;
  }
  if (!have)
    r.norm_valuation = {CoeffValuation::Kind::Infinite, Rational(0)};
  else
    r.norm_valuation = {all_exact ? CoeffValuation::Kind::Exact
                                  : CoeffValuation::Kind::AtLeast,
                        mn};

  // Monotone tail test for v(b_i) -> infinity: the min over the upper
  // half must strictly exceed the min over the lower half (all-zero
  // tails pass vacuously).
  size_t mid = a_coeffs.size() / 2;
  auto window_min = [&](size_t lo, size_t hi) -> std::optional<Rational> {
    std::optional<Rational> best;
    for (size_t i = lo; i < hi; ++i) {
      const CoeffValuation& cv = r.b_valuations[i];
      if (cv.kind == CoeffValuation::Kind::Infinite) continue;
      if (!best || cv.value < *best) best = cv.value;
    }
    return best;
  };
  auto head = window_min(0, mid);
  auto tail = window_min(mid, a_coeffs.size());
  if (!tail)
    r.member = true; // tail vanishes outright
  else if (!head)
    r.member = false; // values appear only in the tail: no growth seen
  else
    r.member = *tail > *head;
  return r;
}

std::optional<unsigned long> smallest_divided_power_level(
    const std::vector<Scalar>& a_coeffs, unsigned long n,
    unsigned long m_max) {
  for (unsigned long m = 0; m <= m_max; ++m)
    if (divided_power_report(a_coeffs, m, n).member) return m;
  return std::nullopt;
}

} // namespace padic::amice
