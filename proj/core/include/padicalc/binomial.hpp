#pragma once

#include <gmpxx.h>
#include <optional>
#include <vector>

#include "padicalc/prime.hpp"
#include "padicalc/rational.hpp"

namespace padic::binom {

/// An extremizing residue class a = b + p^(n+1) c found by search.
struct ResidueWitness {
  mpz_class b;         // in [0, p^(n+1))
  mpz_class c_residue; // unit residue mod p^depth
  unsigned long k = 0;
  Rational attained_valuation;
};

struct SearchResult {
  Rational min_valuation;
  ResidueWitness witness;
};

/// #{0 <= i < k : i = b mod p^j}.
unsigned long alpha_count(const mpz_class& b, unsigned long k,
                          unsigned long j, const PrimeContext& ctx);

/// v_p(a (a-1) ... (a-k+1)) for k >= 1; rejects a in {0,...,k-1}
/// (a factor vanishes and the valuation is infinite).
long falling_factorial_valuation(const mpz_class& a, unsigned long k,
                                 const PrimeContext& ctx);

/// The predicted extremal valuation of binom(a, k) over residue
/// classes b mod p^(n+1): -v_p(floor(k / p^(n+1))!), evaluated as a
/// pure formula.
Rational formula_min_valuation(unsigned long n, unsigned long k,
                               const PrimeContext& ctx);

/// Brute-force ground truth: minimizes v_p(binom(a, k)) over
/// a = b + p^(n+1) c for all b in [0, p^(n+1)) and all unit residues
/// c mod p^depth. Ties broken by smallest (b, c); binomials that
/// vanish (a < k integral) are skipped as infinite. Deterministic.
SearchResult search_min_valuation(unsigned long n, unsigned long k,
                                  const PrimeContext& ctx,
                                  unsigned long depth);

inline unsigned long default_search_depth(unsigned long n) { return n + 3; }

/// One audit row: formula vs search at (n, k).
struct AuditRow {
  unsigned long n = 0;
  unsigned long k = 0;
  Rational formula_valuation;
  Rational oracle_valuation;
  ResidueWitness witness;
  bool agrees = false;
};

/// Sweeps k in [k_lo, k_hi] sharing the residue enumeration across k
/// (incremental falling-factorial valuations), so a full audit of
/// k < p^(n+2) stays fast.
std::vector<AuditRow> audit_sweep(unsigned long n, unsigned long k_lo,
                                  unsigned long k_hi, const PrimeContext& ctx,
                                  unsigned long depth);

} // namespace padic::binom
