#include "padicalc/scalar.hpp"

#include "padicalc/errors.hpp"

namespace padic {

namespace {

mpz_class mod_pow(const PrimeContext& ctx, const mpz_class& x,
                  unsigned long e) {
  mpz_class m = ctx.pow_p(e);
  mpz_class r = x % m;
  if (r < 0) r += m;
  return r;
}

mpz_class invert_mod(const mpz_class& u, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()))
    throw DomainError("no modular inverse");
  return r;
}

} // namespace

Scalar Scalar::exact_zero(const PrimeContext& ctx) {
  return Scalar(ctx, Kind::ExactZero, 0, 0, 0);
}

Scalar Scalar::zero_at_precision(const PrimeContext& ctx, long abs_prec) {
  if (abs_prec < 0)
    throw PrecisionError("zero-at-precision needs nonnegative precision");
  return Scalar(ctx, Kind::ZeroAtPrecision, abs_prec, 0, 0);
}

Scalar Scalar::from_unit_parts(const PrimeContext& ctx, long valuation,
                               const mpz_class& unit, long rel_prec) {
  if (rel_prec < 1) throw PrecisionError("relative precision must be >= 1");
  mpz_class u = mod_pow(ctx, unit, static_cast<unsigned long>(rel_prec));
  if (u == 0 || u % ctx.p() == 0)
    throw InvariantError("unit part divisible by p");
  return Scalar(ctx, Kind::Unit, valuation, std::move(u), rel_prec);
}

Scalar Scalar::from_integer(const PrimeContext& ctx, const mpz_class& n,
                            long rel_prec) {
  if (n == 0) return exact_zero(ctx);
  mpz_class u;
  long v = ctx.split(n, u);
  return from_unit_parts(ctx, v, u, rel_prec);
}

Scalar Scalar::from_integer_abs(const PrimeContext& ctx, const mpz_class& n,
                                long abs_prec) {
  if (abs_prec < 1) throw PrecisionError("absolute precision must be >= 1");
  if (n == 0) return exact_zero(ctx);
  mpz_class u;
  long v = ctx.split(n, u);
  if (v >= abs_prec) return zero_at_precision(ctx, abs_prec);
  return from_unit_parts(ctx, v, u, abs_prec - v);
}

Scalar Scalar::from_rational(const PrimeContext& ctx, const Rational& q,
                             long rel_prec) {
  if (q.num() == 0) return exact_zero(ctx);
  mpz_class un, ud;
  long v = ctx.split(q.num(), un) - ctx.split(q.den(), ud);
  mpz_class m = ctx.pow_p(static_cast<unsigned long>(rel_prec));
  mpz_class u = (mod_pow(ctx, un, rel_prec) * invert_mod(ud % m, m)) % m;
  return from_unit_parts(ctx, v, u, rel_prec);
}

Scalar Scalar::one(const PrimeContext& ctx, long rel_prec) {
  return from_unit_parts(ctx, 0, 1, rel_prec);
}

long Scalar::valuation() const {
  if (kind_ == Kind::ExactZero)
    throw DomainError("valuation of exact zero is infinite");
  if (kind_ == Kind::ZeroAtPrecision)
    throw PrecisionError("valuation undetermined: zero at precision " +
                         std::to_string(valuation_));
  return valuation_;
}

std::optional<long> Scalar::valuation_lower_bound() const {
  if (kind_ == Kind::ExactZero) return std::nullopt;
  return valuation_;
}

long Scalar::abs_precision() const {
  if (kind_ == Kind::ExactZero)
    throw DomainError("exact zero has infinite precision");
  if (kind_ == Kind::ZeroAtPrecision) return valuation_;
  return valuation_ + rel_prec_;
}

long Scalar::rel_precision() const {
  if (kind_ != Kind::Unit) throw DomainError("zero has no unit part");
  return rel_prec_;
}

const mpz_class& Scalar::unit() const {
  if (kind_ != Kind::Unit) throw DomainError("zero has no unit part");
  return unit_;
}

mpz_class Scalar::residue() const {
  if (is_zero()) return 0;
  if (valuation_ < 0)
    throw DomainError("no integer residue: negative valuation");
  return ctx_.pow_p(static_cast<unsigned long>(valuation_)) * unit_;
}

Scalar Scalar::neg() const {
  if (is_zero()) return *this;
  mpz_class m = ctx_.pow_p(static_cast<unsigned long>(rel_prec_));
  return Scalar(ctx_, Kind::Unit, valuation_, m - unit_, rel_prec_);
}

Scalar Scalar::add(const Scalar& o) const {
  require_same_prime(ctx_, o.ctx_);
  if (kind_ == Kind::ExactZero) return o;
  if (o.kind_ == Kind::ExactZero) return *this;
  long abs = std::min(abs_precision(), o.abs_precision());
  if (kind_ == Kind::ZeroAtPrecision || o.kind_ == Kind::ZeroAtPrecision) {
    const Scalar& unit_side = (kind_ == Kind::Unit) ? *this : o;
    if (unit_side.kind_ != Kind::Unit || unit_side.valuation_ >= abs)
      return zero_at_precision(ctx_, abs);
    return from_unit_parts(ctx_, unit_side.valuation_, unit_side.unit_,
                           abs - unit_side.valuation_);
  }
  // Align on the smaller valuation, add residues there.
  long shift = std::min(valuation_, o.valuation_);
  long digits = abs - shift; // > 0
  mpz_class m = ctx_.pow_p(static_cast<unsigned long>(digits));
  mpz_class r =
      (ctx_.pow_p(static_cast<unsigned long>(valuation_ - shift)) * unit_ +
       ctx_.pow_p(static_cast<unsigned long>(o.valuation_ - shift)) *
           o.unit_) %
      m;
  if (r == 0) return zero_at_precision(ctx_, abs);
  mpz_class u;
  long v = shift + ctx_.split(r, u);
  if (v >= abs) return zero_at_precision(ctx_, abs);
  return from_unit_parts(ctx_, v, u, abs - v);
}

Scalar Scalar::sub(const Scalar& o) const { return add(o.neg()); }

Scalar Scalar::mul(const Scalar& o) const {
  require_same_prime(ctx_, o.ctx_);
  if (kind_ == Kind::ExactZero || o.kind_ == Kind::ExactZero)
    return exact_zero(ctx_);
  if (kind_ == Kind::ZeroAtPrecision && o.kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(ctx_, valuation_ + o.valuation_);
  if (kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(ctx_, valuation_ + o.valuation_);
  if (o.kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(ctx_, o.valuation_ + valuation_);
  long m = std::min(rel_prec_, o.rel_prec_);
  mpz_class u = (unit_ * o.unit_) % ctx_.pow_p(static_cast<unsigned long>(m));
  return from_unit_parts(ctx_, valuation_ + o.valuation_, u, m);
}

Scalar Scalar::invert() const {
  if (kind_ != Kind::Unit)
    throw DomainError("inversion of (possible) zero");
  if (valuation_ != 0)
    throw DomainError("inversion requires a unit (valuation 0), got " +
                      std::to_string(valuation_));
  mpz_class m = ctx_.pow_p(static_cast<unsigned long>(rel_prec_));
  return from_unit_parts(ctx_, 0, invert_mod(unit_, m), rel_prec_);
}

Scalar Scalar::div(const Scalar& o) const {
  require_same_prime(ctx_, o.ctx_);
  if (o.kind_ != Kind::Unit)
    throw DomainError("division by (possible) zero");
  if (kind_ == Kind::ExactZero) return *this;
  if (kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(ctx_, valuation_ - o.valuation_);
  long m = std::min(rel_prec_, o.rel_prec_);
  mpz_class mod = ctx_.pow_p(static_cast<unsigned long>(m));
  mpz_class u = (unit_ * invert_mod(o.unit_ % mod, mod)) % mod;
  return from_unit_parts(ctx_, valuation_ - o.valuation_, u, m);
}

Scalar Scalar::divide_by_p(long steps) const {
  if (steps < 0) throw DomainError("divide_by_p needs steps >= 0");
  if (kind_ == Kind::ExactZero) return *this;
  if (kind_ == Kind::ZeroAtPrecision) {
    if (valuation_ - steps < 0)
      throw PrecisionError("divide_by_p exhausts the precision of an "
                           "inexact zero");
    return zero_at_precision(ctx_, valuation_ - steps);
  }
  return Scalar(ctx_, Kind::Unit, valuation_ - steps, unit_, rel_prec_);
}

Scalar Scalar::pow(unsigned long k) const {
  if (k == 0) {
    long m = (kind_ == Kind::Unit) ? rel_prec_ : std::max(valuation_, 1L);
    return one(ctx_, m);
  }
  if (kind_ == Kind::ExactZero) return *this;
  if (kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(ctx_, valuation_ * static_cast<long>(k));
  mpz_class m = ctx_.pow_p(static_cast<unsigned long>(rel_prec_));
  mpz_class u;
  mpz_class e(k);
  mpz_powm(u.get_mpz_t(), unit_.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return from_unit_parts(ctx_, valuation_ * static_cast<long>(k), u,
                         rel_prec_);
}

bool Scalar::congruent(const Scalar& o) const { return sub(o).is_zero(); }

bool Scalar::identical(const Scalar& o) const {
  return ctx_ == o.ctx_ && kind_ == o.kind_ && valuation_ == o.valuation_ &&
         unit_ == o.unit_ && rel_prec_ == o.rel_prec_;
}

std::string Scalar::str() const {
  if (kind_ == Kind::ExactZero) return "0";
  if (kind_ == Kind::ZeroAtPrecision)
    return "O(" + ctx_.p().get_str() + "^" + std::to_string(valuation_) + ")";
  std::string s = unit_.get_str();
  if (valuation_ != 0)
    s = ctx_.p().get_str() + "^" + std::to_string(valuation_) + "*" + s;
  return s + " + O(" + ctx_.p().get_str() + "^" +
         std::to_string(abs_precision()) + ")";
}

Scalar operator+(const Scalar& a, const Scalar& b) { return a.add(b); }
Scalar operator-(const Scalar& a, const Scalar& b) { return a.sub(b); }
Scalar operator*(const Scalar& a, const Scalar& b) { return a.mul(b); }
Scalar operator/(const Scalar& a, const Scalar& b) { return a.div(b); }

} // namespace padic
