#pragma once

#include <optional>

#include "padicalc/mahler.hpp"
#include "padicalc/series.hpp"

namespace padic::amice {

/// A distribution in its moment coordinates: d_k = lambda(binom(x,k)),
/// stored as the T-power series sum d_k T^k. Convolution of
/// distributions is multiplication of these series.
class AmiceSeries {
public:
  AmiceSeries(const PrimeContext& ctx, std::vector<Scalar> coefficients)
      : s_(ctx, "T", std::move(coefficients)) {}
  const TruncatedSeries& series() const { return s_; }
  const PrimeContext& context() const { return s_.context(); }
  unsigned long truncation() const { return s_.truncation(); }
  const Scalar& operator[](size_t k) const { return s_[k]; }

private:
  TruncatedSeries s_;
};

/// Point-evaluation distribution at the integer a: (1+T)^a, i.e.
/// d_k = binom(a, k) (generalized binomials for a < 0). Coefficients
/// carry absolute precision abs_prec.
AmiceSeries dirac(const PrimeContext& ctx, const mpz_class& a,
                  unsigned long K, long abs_prec);

/// Convolution of distributions: series product mod T^(K+1).
AmiceSeries convolve(const AmiceSeries& a, const AmiceSeries& b);

/// Duality pairing <sum d_k T^k, sum c_k binom(x,k)> = sum c_k d_k.
/// Reproduces point evaluation against dirac series.
Scalar pair(const AmiceSeries& lambda, const mahler::MahlerSeries& f);

/// The distribution f -> f'(0): log(1+T), d_k = (-1)^(k+1)/k with
/// exact (valuation, unit) bookkeeping at relative precision rel_prec.
AmiceSeries derivative_distribution(const PrimeContext& ctx, unsigned long K,
                                    long rel_prec);

struct OverconvergenceResult {
  Verdict verdict = Verdict::Indeterminate;
  Slope slope;
};

/// Overconvergence past the level-n radius: tail slope of v(d_k)/k
/// strictly above -1/((p-1) p^n) + tolerance. Dirac series (integral
/// coefficients) pass at every level.
OverconvergenceResult overconvergent_at_level(
    const AmiceSeries& lambda, unsigned long n,
    std::optional<Rational> tolerance = std::nullopt,
    const Rational& window_fraction = Rational(1, 2));

/// Valuations of the divided-power-normalized coefficients
/// b_i = a_i * i! / (q_i! p^(n i)) with q_i = floor(i / p^m), where
/// the a_i are coefficients on powers of the derivation.
struct DividedPowerReport {
  unsigned long m = 0;
  unsigned long n = 0;
  std::vector<CoeffValuation> b_valuations;
  CoeffValuation norm_valuation; // min_i v(b_i)
  bool member = false;           // v(b_i) -> infinity (monotone tail test)
};

DividedPowerReport divided_power_report(const std::vector<Scalar>& a_coeffs,
                                        unsigned long m, unsigned long n);

/// Smallest m <= m_max whose divided-power membership test passes at
/// level n, if any. Empirical probe for the factorization level.
std::optional<unsigned long> smallest_divided_power_level(
    const std::vector<Scalar>& a_coeffs, unsigned long n,
    unsigned long m_max);

} // namespace padic::amice
