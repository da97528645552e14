#pragma once

#include <optional>

#include "padicalc/series.hpp"

namespace padic::mahler {

/// f(0), f(1), ..., f(K) at a common precision; the finite data from
/// which the transform is computed. Continuity of the underlying
/// function on Z_p is the caller's responsibility.
class FunctionTable {
public:
  FunctionTable(const PrimeContext& ctx, std::vector<Scalar> values);
  /// Integer samples reduced to a common absolute precision.
  static FunctionTable from_integers(const PrimeContext& ctx,
                                     const std::vector<mpz_class>& values,
                                     long abs_prec);

  const PrimeContext& context() const { return ctx_; }
  unsigned long truncation() const {
    return static_cast<unsigned long>(values_.size()) - 1;
  }
  const std::vector<Scalar>& values() const { return values_; }

private:
  PrimeContext ctx_;
  std::vector<Scalar> values_;
};

/// Coefficients on the binomial basis binom(x, k).
class MahlerSeries {
public:
  MahlerSeries(const PrimeContext& ctx, std::vector<Scalar> coefficients)
      : s_(ctx, "binom", std::move(coefficients)) {}
  const TruncatedSeries& series() const { return s_; }
  const PrimeContext& context() const { return s_.context(); }
  unsigned long truncation() const { return s_.truncation(); }
  const Scalar& operator[](size_t k) const { return s_[k]; }

private:
  TruncatedSeries s_;
};

/// Iterated finite differences c_k = (Delta^k f)(0) via the full
/// Pascal recurrence: K^2 subtractions, no divisions, no precision
/// loss.
MahlerSeries mahler_coefficients(const FunctionTable& f);

/// binom(x, k) = x(x-1)...(x-k+1)/k! for x in Z_p. The division by k!
/// costs v_p(k!) digits of absolute precision.
Scalar binomial_scalar(const Scalar& x, unsigned long k);

/// Partial sum  sum_{k<=K} c_k binom(x, k). Throws PrecisionError when
/// x carries too little precision for the k! divisions of the
/// requested term count.
Scalar evaluate(const MahlerSeries& s, const Scalar& x);

/// Mahler series of a -> (1+z)^a for v(z) >= 1: c_k = z^k.
MahlerSeries character_series(const Scalar& z, unsigned long K);

/// Decay data for membership at the analyticity levels.
struct DecayReport {
  unsigned long window_lo = 0;
  unsigned long window_hi = 0;
  std::vector<CoeffValuation> per_k; // v(c_k) for k = 0..K
  Slope slope;
  /// Smallest n >= 0 with slope >= 1/((p-1) p^n), when one exists.
  std::optional<unsigned long> verdict_floor;
};

/// Slope over the tail window k >= K - floor(fraction*K)
/// (default fraction 1/2). Requires K >= 10.
DecayReport decay_slope(const MahlerSeries& s,
                        const Rational& window_fraction = Rational(1, 2));

/// Level-n membership: slope >= 1/((p-1) p^n) - tolerance. The default
/// tolerance is half the gap to the next level's radius exponent.
Verdict member_at_level(const MahlerSeries& s, unsigned long n,
                        std::optional<Rational> tolerance = std::nullopt,
                        const Rational& window_fraction = Rational(1, 2));

} // namespace padic::mahler
