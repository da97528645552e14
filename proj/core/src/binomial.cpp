#include "padicalc/binomial.hpp"

#include "padicalc/errors.hpp"

namespace padic::binom {

unsigned long alpha_count(const mpz_class& b, unsigned long k,
                          unsigned long j, const PrimeContext& ctx) {
  if (b < 0) throw DomainError("alpha_count needs b >= 0");
  if (j < 1) throw DomainError("alpha_count needs j >= 1");
  if (k == 0) return 0;
  mpz_class pj = ctx.pow_p(j);
  mpz_class r = b % pj;
  mpz_class kz(k);
  if (r >= kz) return 0;
  // residues r, r + p^j, ... below k
  mpz_class cnt = (kz - 1 - r) / pj + 1;
  return cnt.get_ui();
}

long falling_factorial_valuation(const mpz_class& a, unsigned long k,
                                 const PrimeContext& ctx) {
  if (k < 1) throw DomainError("falling factorial needs k >= 1");
  long total = 0;
  for (unsigned long i = 0; i < k; ++i) {
    mpz_class f = a - static_cast<long>(i);
    if (f == 0)
      throw DomainError("falling factorial hits zero at i = " +
                        std::to_string(i));
    total += ctx.valuation(f);
  }
  return total;
}

Rational formula_min_valuation(unsigned long n, unsigned long k,
                               const PrimeContext& ctx) {
  mpz_class q = mpz_class(k) / ctx.pow_p(n + 1);
  return Rational(-factorial_valuation(q.get_ui(), ctx));
}

SearchResult search_min_valuation(unsigned long n, unsigned long k,
                                  const PrimeContext& ctx,
                                  unsigned long depth) {
  auto rows = audit_sweep(n, k, k, ctx, depth);
  return SearchResult{rows[0].oracle_valuation, rows[0].witness};
}

std::vector<AuditRow> audit_sweep(unsigned long n, unsigned long k_lo,
                                  unsigned long k_hi, const PrimeContext& ctx,
                                  unsigned long depth) {
  if (depth < n + 2)
    throw DomainError("search depth must be >= n + 2");
  std::vector<AuditRow> rows;
  if (k_hi < k_lo) return rows;
  rows.reserve(k_hi - k_lo + 1);

  mpz_class pn1 = ctx.pow_p(n + 1);
  mpz_class pd = ctx.pow_p(depth);
  const long INF = -1; // marker for infinite valuation in the sweep

  struct Best {
    long val;
    bool set = false;
    mpz_class b, c;
  };
  std::vector<Best> best(k_hi - k_lo + 1);

  // v_p(binom(a, k)) accumulated incrementally over k per candidate a.
  std::vector<long> leg(k_hi + 1, 0);
  for (unsigned long k = 1; k <= k_hi; ++k)
    leg[k] = leg[k - 1] + ctx.valuation(mpz_class(k));

  for (mpz_class b = 0; b < pn1; ++b) {
    for (mpz_class c = 1; c < pd; ++c) {
      if (c % ctx.p() == 0) continue;
      mpz_class a = b + pn1 * c;
      long ffv = 0; // v_p(a (a-1) ... (a-k+1)), INF once a factor is 0
      for (unsigned long k = 0; k <= k_hi; ++k) {
        if (k >= k_lo) {
          long v = (ffv == INF) ? INF : ffv - leg[k];
          Best& slot = best[k - k_lo];
          if (v != INF && (!slot.set || v < slot.val))
            slot = Best{v, true, b, c};
        }
        if (k == k_hi) break;
        mpz_class f = a - static_cast<long>(k);
        if (ffv != INF) {
          if (f == 0)
            ffv = INF;
          else
            ffv += ctx.valuation(f);
        }
      }
    }
  }

  for (unsigned long k = k_lo; k <= k_hi; ++k) {
    const Best& slot = best[k - k_lo];
    if (!slot.set)
      throw InvariantError("binomial search found no finite valuation");
    AuditRow row;
    row.n = n;
    row.k = k;
    row.formula_valuation = formula_min_valuation(n, k, ctx);
    row.oracle_valuation = Rational(slot.val);
    row.witness = ResidueWitness{slot.b, slot.c, k, Rational(slot.val)};
    row.agrees = (row.formula_valuation == row.oracle_valuation);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace padic::binom
