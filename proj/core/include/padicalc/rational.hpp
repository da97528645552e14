#pragma once

#include <gmpxx.h>
#include <string>

#include "padicalc/prime.hpp"

namespace padic {

/// Exact rational number, kept reduced with positive denominator.
/// Houses rational valuation exponents such as the level radii
/// v(r_n) = 1/((p-1) p^n).
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(mpz_class num, mpz_class den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(long n) : num_(n), den_(1) {}
  explicit Rational(const mpz_class& n) : num_(n), den_(1) {}

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// "a/b", or just "a" when the denominator is 1.
  std::string str() const;

  /// Parses "a", "-a", "a/b".
  static Rational parse(const std::string& text);

private:
  mpz_class num_;
  mpz_class den_; // > 0, gcd(num, den) = 1
};

/// Valuation of the radius separating analyticity level n from n+1:
/// 1/((p-1) p^n).
Rational level_radius_valuation(const PrimeContext& ctx, unsigned long n);

/// Default membership tolerance at level n: half the gap between the
/// level-n and level-(n+1) radii exponents, 1/(2 (p-1) p^(n+1)).
Rational default_level_tolerance(const PrimeContext& ctx, unsigned long n);

} // namespace padic
