#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

#include "padicalc/prime.hpp"
#include "padicalc/rational.hpp"

namespace padic {

/// An element of Q_p at finite tracked precision.
///
/// A nonzero value is stored as p^valuation * unit with the unit kept
/// modulo p^M (0 < unit < p^M, p does not divide unit); M >= 1 is the
/// relative precision and valuation + M the absolute precision: the
/// value is known modulo p^(valuation + M).
///
/// Zero is two distinct states: exact zero (valuation is infinite) and
/// zero-at-precision (only known to be divisible by p^N). Membership
/// predicates downstream rely on the distinction.
///
/// Precision rules, applied by every operation:
///   add/sub   result known mod p^min(abs_a, abs_b)
///   mul       valuations add exactly, relative precision min(M_a, M_b)
///   invert    unit argument required, relative precision preserved
///   div       valuations subtract exactly, relative precision min
///   div_p^s   valuation drops by s, so absolute precision drops by s
///
/// Instances are immutable; all operations return new values.
class Scalar {
public:
  enum class Kind { ExactZero, ZeroAtPrecision, Unit };

  static Scalar exact_zero(const PrimeContext& ctx);
  static Scalar zero_at_precision(const PrimeContext& ctx, long abs_prec);
  /// The integer n with M significant p-adic digits of its unit part.
  static Scalar from_integer(const PrimeContext& ctx, const mpz_class& n,
                             long rel_prec);
  /// The integer n reduced modulo p^abs_prec (may collapse to
  /// zero-at-precision when p^abs_prec divides n).
  static Scalar from_integer_abs(const PrimeContext& ctx, const mpz_class& n,
                                 long abs_prec);
  /// num/den at relative precision M; den must be nonzero.
  static Scalar from_rational(const PrimeContext& ctx, const Rational& q,
                              long rel_prec);
  static Scalar from_unit_parts(const PrimeContext& ctx, long valuation,
                                const mpz_class& unit, long rel_prec);
  static Scalar one(const PrimeContext& ctx, long rel_prec);

  const PrimeContext& context() const { return ctx_; }
  Kind kind() const { return kind_; }
  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool is_zero() const { return kind_ != Kind::Unit; }

  /// Exact valuation; throws for both zero states.
  long valuation() const;
  /// Exact valuation when known, abs_precision lower bound for
  /// zero-at-precision, nothing for exact zero.
  std::optional<long> valuation_lower_bound() const;
  /// Absolute precision; throws for exact zero (it is infinite).
  long abs_precision() const;
  long rel_precision() const;
  const mpz_class& unit() const;

  /// Canonical integer representative p^v * unit of an integral value
  /// (valuation >= 0) modulo p^abs_precision; 0 for the zero states.
  mpz_class residue() const;

  Scalar neg() const;
  Scalar add(const Scalar& o) const;
  Scalar sub(const Scalar& o) const;
  Scalar mul(const Scalar& o) const;
  Scalar invert() const;
  Scalar div(const Scalar& o) const;
  Scalar divide_by_p(long steps = 1) const;
  Scalar pow(unsigned long k) const;

  /// True when this and o agree modulo p^min(abs precisions).
  bool congruent(const Scalar& o) const;

  /// Structural equality of state, valuation, unit and precision.
  bool identical(const Scalar& o) const;

  std::string str() const;

private:
  Scalar(const PrimeContext& ctx, Kind kind, long valuation, mpz_class unit,
         long rel_prec)
      : ctx_(ctx), kind_(kind), valuation_(valuation), unit_(std::move(unit)),
        rel_prec_(rel_prec) {}

  PrimeContext ctx_;
  Kind kind_;
  long valuation_; // abs precision bound for ZeroAtPrecision, 0 for ExactZero
  mpz_class unit_;
  long rel_prec_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);

} // namespace padic
