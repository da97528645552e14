#pragma once

#include <gmpxx.h>
#include <cstdint>

#include "padicalc/errors.hpp"

namespace padic {

/// The prime p together with the parity constant epsilon
/// (1 for odd p, 2 for p = 2) that controls exp/log convergence
/// domains and the powerful-lattice condition.
///
/// Construction runs a deterministic Miller-Rabin check; composite
/// or oversized inputs are rejected.
class PrimeContext {
public:
  explicit PrimeContext(const mpz_class& p);
  explicit PrimeContext(long p) : PrimeContext(mpz_class(p)) {}

  const mpz_class& p() const { return p_; }
  int epsilon() const { return epsilon_; }

  /// p^e, e >= 0.
  mpz_class pow_p(unsigned long e) const;

  /// v_p(n) for n != 0.
  long valuation(const mpz_class& n) const;

  /// Splits n = p^v * u; returns v and stores the cofactor in unit.
  long split(const mpz_class& n, mpz_class& unit) const;

  bool operator==(const PrimeContext& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeContext& o) const { return !(*this == o); }

private:
  mpz_class p_;
  int epsilon_;
};

/// Deterministic Miller-Rabin, valid for all n below 3.3e24.
bool is_prime(const mpz_class& n);

/// v_p(k!) = sum_{j>=1} floor(k/p^j).
long factorial_valuation(unsigned long k, const PrimeContext& ctx);

/// Requires primes to match before a binary operation.
inline void require_same_prime(const PrimeContext& a, const PrimeContext& b) {
  if (a != b)
    throw InvariantError("operands live over different primes: " +
                         a.p().get_str() + " vs " + b.p().get_str());
}

} // namespace padic
