#pragma once

#include <string>
#include <vector>

#include "padicalc/scalar.hpp"

namespace padic {

/// A truncated coefficient sequence c_0..c_K over a named formal
/// variable. Shared storage for the binomial-basis and T-power-basis
/// series types.
class TruncatedSeries {
public:
  TruncatedSeries(const PrimeContext& ctx, std::string variable,
                  std::vector<Scalar> coefficients);

  const PrimeContext& context() const { return ctx_; }
  const std::string& variable() const { return var_; }
  unsigned long truncation() const {
    return static_cast<unsigned long>(coeffs_.size()) - 1;
  }
  const Scalar& operator[](size_t k) const { return coeffs_[k]; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

private:
  PrimeContext ctx_;
  std::string var_;
  std::vector<Scalar> coeffs_;
};

/// How much we know about one coefficient's valuation.
struct CoeffValuation {
  enum class Kind { Exact, AtLeast, Infinite };
  Kind kind = Kind::Infinite;
  Rational value; // meaningless for Infinite

  static CoeffValuation of(const Scalar& c);
};

/// Tail decay slope of a coefficient sequence: min of v(c_k)/k over a
/// tail window, the liminf estimator for ultrametric decay.
struct Slope {
  enum class Kind { Finite, PlusInfinity, Indeterminate };
  Kind kind = Kind::PlusInfinity;
  Rational value;  // Finite: certified min; Indeterminate: lower bound
  bool tight = true; // false when zero-at-precision coefficients decided

  bool at_least(const Rational& threshold) const;
};

/// Min of v(c_k)/k over k in [window_lo, K]; exact zeros contribute
/// +infinity, zero-at-precision coefficients contribute their
/// precision floor as a lower bound and mark the slope non-tight when
/// they decide the minimum.
Slope tail_slope(const TruncatedSeries& s, unsigned long window_lo);

/// First window index for a tail fraction w: K - floor(w*K), at least 1.
unsigned long tail_window_start(unsigned long K, const Rational& fraction);

enum class Verdict { Member, NotMember, Indeterminate };

} // namespace padic
