#include "padicalc/mahler.hpp"

#include "padicalc/errors.hpp"

namespace padic {

TruncatedSeries::TruncatedSeries(const PrimeContext& ctx, std::string variable,
                                 std::vector<Scalar> coefficients)
    : ctx_(ctx), var_(std::move(variable)), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    throw DomainError("series needs at least one coefficient");
  for (const Scalar& c : coeffs_) require_same_prime(ctx_, c.context());
}

CoeffValuation CoeffValuation::of(const Scalar& c) {
  switch (c.kind()) {
    case Scalar::Kind::ExactZero:
      return {CoeffValuation::Kind::Infinite, Rational(0)};
    case Scalar::Kind::ZeroAtPrecision:
      return {CoeffValuation::Kind::AtLeast, Rational(c.abs_precision())};
    default:
      return {CoeffValuation::Kind::Exact, Rational(c.valuation())};
  }
}

bool Slope::at_least(const Rational& threshold) const {
  if (kind == Kind::PlusInfinity) return true;
  return value >= threshold;
}

unsigned long tail_window_start(unsigned long K, const Rational& fraction) {
  if (fraction.num() < 0 || fraction > Rational(1))
    throw DomainError("window fraction must lie in [0, 1]");
  mpz_class lo = mpz_class(K) - (fraction.num() * K) / fraction.den();
  if (lo < 1) lo = 1;
  return lo.get_ui();
}

Slope tail_slope(const TruncatedSeries& s, unsigned long window_lo) {
  bool have_exact = false, have_bound = false;
  Rational best;      // min over exact contributions
  Rational bound;     // min over zero-at-precision floors
  for (unsigned long k = std::max<unsigned long>(window_lo, 1);
       k <= s.truncation(); ++k) {
    CoeffValuation cv = CoeffValuation::of(s[k]);
    if (cv.kind == CoeffValuation::Kind::Infinite) continue;
    Rational slope_k = cv.value / Rational(static_cast<long>(k));
    if (cv.kind == CoeffValuation::Kind::Exact) {
      if (!have_exact || slope_k < best) best = slope_k;
      have_exact = true;
    } else {
      if (!have_bound || slope_k < bound) bound = slope_k;
      have_bound = true;
    }
  }
  if (!have_exact && !have_bound)
    return Slope{Slope::Kind::PlusInfinity, Rational(0), true};
  if (!have_exact)
    return Slope{Slope::Kind::Indeterminate, bound, false};
  if (have_bound && bound < best)
    return Slope{Slope::Kind::Indeterminate, bound, false};
  return Slope{Slope::Kind::Finite, best, true};
}

namespace mahler {

FunctionTable::FunctionTable(const PrimeContext& ctx,
                             std::vector<Scalar> values)
    : ctx_(ctx), values_(std::move(values)) {
  if (values_.size() < 2)
    throw DomainError("function table needs K >= 1");
  for (const Scalar& v : values_) require_same_prime(ctx_, v.context());
}

FunctionTable FunctionTable::from_integers(const PrimeContext& ctx,
                                           const std::vector<mpz_class>& v,
                                           long abs_prec) {
  std::vector<Scalar> s;
  s.reserve(v.size());
  for (const mpz_class& n : v)
    s.push_back(Scalar::from_integer_abs(ctx, n, abs_prec));
  return FunctionTable(ctx, std::move(s));
}

MahlerSeries mahler_coefficients(const FunctionTable& f) {
  std::vector<Scalar> row = f.values();
  std::vector<Scalar> coeffs;
  coeffs.reserve(row.size());
  coeffs.push_back(row[0]);
  for (size_t k = 1; k < f.values().size(); ++k) {
    for (size_t i = 0; i + k < f.values().size(); ++i)
      row[i] = row[i + 1].sub(row[i]);
    coeffs.push_back(row[0]);
  }
  return MahlerSeries(f.context(), std::move(coeffs));
}

Scalar binomial_scalar(const Scalar& x, unsigned long k) {
  const PrimeContext& ctx = x.context();
  if (!x.is_zero() && x.valuation() < 0)
    throw DomainError("binomial_scalar needs x in Z_p");
  long ref_prec = x.is_exact_zero() ? 1 : x.abs_precision();
  if (k == 0) return Scalar::one(ctx, std::max(ref_prec, 1L));
  Scalar acc = x;
  for (unsigned long i = 1; i < k; ++i)
    acc = acc.mul(x.sub(Scalar::from_integer(ctx, mpz_class(i), ref_prec)));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  return acc.div(Scalar::from_integer(ctx, fact, std::max(ref_prec, 1L)));
}

Scalar evaluate(const MahlerSeries& s, const Scalar& x) {
  const PrimeContext& ctx = s.context();
  require_same_prime(ctx, x.context());
  if (!x.is_zero() && x.valuation() < 0)
    throw DomainError("evaluate needs x in Z_p");
  if (!x.is_exact_zero()) {
    long loss = factorial_valuation(s.truncation(), ctx);
    if (x.abs_precision() - loss < 1)
      throw PrecisionError(
          "x carries too little precision for " +
          std::to_string(s.truncation() + 1) + " Mahler terms (k! division "
          "loss " + std::to_string(loss) + ")");
  }
  // binom(x, 0) = 1 exactly: the constant term enters at full precision
  Scalar sum = s[0];
  for (unsigned long k = 1; k <= s.truncation(); ++k) {
    if (s[k].is_exact_zero()) continue;
    sum = sum.add(s[k].mul(binomial_scalar(x, k)));
  }
  return sum;
}

MahlerSeries character_series(const Scalar& z, unsigned long K) {
  const PrimeContext& ctx = z.context();
  if (!z.is_zero() && z.valuation() < 1)
    throw DomainError("character parameter needs v(z) >= 1");
  if (z.kind() == Scalar::Kind::ZeroAtPrecision && z.abs_precision() < 1)
    throw DomainError("character parameter needs v(z) >= 1");
  std::vector<Scalar> c;
  c.reserve(K + 1);
  long one_prec =
      z.is_exact_zero() ? 1 : std::max(z.abs_precision(), 1L);
  c.push_back(Scalar::one(ctx, one_prec));
  for (unsigned long k = 1; k <= K; ++k) c.push_back(z.pow(k));
  return MahlerSeries(ctx, std::move(c));
}

DecayReport decay_slope(const MahlerSeries& s,
                        const Rational& window_fraction) {
  if (s.truncation() < 10)
    throw DomainError("decay_slope needs truncation K >= 10");
  DecayReport r;
  r.window_lo = tail_window_start(s.truncation(), window_fraction);
  r.window_hi = s.truncation();
  r.per_k.reserve(s.truncation() + 1);
  for (unsigned long k = 0; k <= s.truncation(); ++k)
    r.per_k.push_back(CoeffValuation::of(s[k]));
  r.slope = tail_slope(s.series(), r.window_lo);
  if (r.slope.kind == Slope::Kind::PlusInfinity) {
    r.verdict_floor = 0;
  } else if (r.slope.kind == Slope::Kind::Finite &&
             r.slope.value > Rational(0)) {
    // thresholds 1/((p-1)p^n) decrease to 0, so some level matches
    for (unsigned long n = 0;; ++n)
      if (r.slope.value >= level_radius_valuation(s.context(), n)) {
        r.verdict_floor = n;
        break;
      }
  }
  return r;
}

Verdict member_at_level(const MahlerSeries& s, unsigned long n,
                        std::optional<Rational> tolerance,
                        const Rational& window_fraction) {
  Rational tol =
      tolerance ? *tolerance : default_level_tolerance(s.context(), n);
  DecayReport r = decay_slope(s, window_fraction);
  Rational threshold = level_radius_valuation(s.context(), n) - tol;
  if (r.slope.kind == Slope::Kind::PlusInfinity) return Verdict::Member;
  if (r.slope.kind == Slope::Kind::Finite)
    return r.slope.value >= threshold ? Verdict::Member : Verdict::NotMember;
  // Only precision floors available: a floor clearing the threshold
  // still certifies membership, anything else stays open.
  return r.slope.value >= threshold ? Verdict::Member
                                    : Verdict::Indeterminate;
}

} // namespace mahler
} // namespace padic
