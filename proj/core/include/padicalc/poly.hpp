#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "padicalc/prime.hpp"
#include "padicalc/rational.hpp"

namespace padic {

/// Multivariate polynomial over Q, truncated at a total degree bound.
/// Supports up to 14 variables with exponents below 16: a monomial is
/// packed into a uint64 (one nibble per variable, total degree in the
/// top byte), so monomial multiplication is integer addition.
/// Coefficients are exact rationals.
class TruncatedPoly {
public:
  TruncatedPoly(int nvars, unsigned max_degree);
  static TruncatedPoly constant(int nvars, unsigned max_degree,
                                const Rational& c);
  static TruncatedPoly variable(int nvars, unsigned max_degree, int index);

  int nvars() const { return nvars_; }
  unsigned max_degree() const { return max_degree_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<uint64_t, Rational>& terms() const { return terms_; }

  TruncatedPoly add(const TruncatedPoly& o) const;
  TruncatedPoly sub(const TruncatedPoly& o) const;
  TruncatedPoly mul(const TruncatedPoly& o) const;
  TruncatedPoly scale(const Rational& c) const;
  TruncatedPoly neg() const;

  /// Coefficient of the monomial with the given exponents.
  Rational coefficient(const std::vector<unsigned>& exponents) const;

  /// Substitutes images[i] for variable i; all images must share a
  /// variable count and degree bound, which the result inherits.
  TruncatedPoly substitute(const std::vector<TruncatedPoly>& images) const;

  /// Multiplies every total-degree-m component by factor^m.
  TruncatedPoly scale_by_degree(const Rational& factor) const;

  /// Exact evaluation at a rational point.
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Smallest p-valuation over the coefficients; max_if_zero when the
  /// polynomial vanishes. Decides integrality claims.
  Rational min_coefficient_valuation(const PrimeContext& ctx,
                                     const Rational& max_if_zero) const;

  bool operator==(const TruncatedPoly& o) const;

  static uint64_t pack(const std::vector<unsigned>& exponents);
  static unsigned packed_degree(uint64_t key) { return key >> 56; }

private:
  void insert(uint64_t key, const Rational& c);

  int nvars_;
  unsigned max_degree_;
  std::map<uint64_t, Rational> terms_;
};

} // namespace padic
