#include "padicalc/rational.hpp"

#include "padicalc/errors.hpp"

namespace padic {

Rational::Rational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return num_ * o.den_ < o.num_ * den_;
}

bool Rational::operator<=(const Rational& o) const {
  return num_ * o.den_ <= o.num_ * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text));
    return Rational(mpz_class(text.substr(0, slash)),
                    mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  }
}

Rational level_radius_valuation(const PrimeContext& ctx, unsigned long n) {
  return Rational(mpz_class(1), (ctx.p() - 1) * ctx.pow_p(n));
}

Rational default_level_tolerance(const PrimeContext& ctx, unsigned long n) {
  return Rational(mpz_class(1), 2 * (ctx.p() - 1) * ctx.pow_p(n + 1));
}

} // namespace padic
