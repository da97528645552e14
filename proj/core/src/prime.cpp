#include "padicalc/prime.hpp"

namespace padic {

namespace {

// Strong probable-prime test to base a.
bool miller_rabin_round(const mpz_class& n, const mpz_class& a,
                        const mpz_class& d, unsigned long r) {
  if (a % n == 0) return true;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

} // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long q : small) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // The fixed base set is a deterministic witness set below 3.317e24.
  static const mpz_class bound("3317044064679887385961981");
  if (n >= bound)
    throw DomainError("primality check only supports p < 3.3e24");
  mpz_class d = n - 1;
  unsigned long r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  for (long a : small)
    if (!miller_rabin_round(n, mpz_class(a), d, r)) return false;
  return true;
}

PrimeContext::PrimeContext(const mpz_class& p) : p_(p) {
  if (!is_prime(p))
    throw DomainError("not a prime: " + p.get_str());
  epsilon_ = (p == 2) ? 2 : 1;
}

mpz_class PrimeContext::pow_p(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), e);
  return r;
}

long PrimeContext::valuation(const mpz_class& n) const {
  if (n == 0)
    throw DomainError("valuation of zero is infinite");
  mpz_class unit;
  return static_cast<long>(
      mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t()));
}

long PrimeContext::split(const mpz_class& n, mpz_class& unit) const {
  if (n == 0)
    throw DomainError("valuation of zero is infinite");
  return static_cast<long>(
      mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t()));
}

long factorial_valuation(unsigned long k, const PrimeContext& ctx) {
  long total = 0;
  mpz_class q(k);
  while (q > 0) {
    q /= ctx.p();
    total += q.get_si();
  }
  return total;
}

} // namespace padic
