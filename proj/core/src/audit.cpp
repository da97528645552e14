#include "padicalc/audit.hpp"

#include <random>
#include <sstream>

#include "padicalc/amice.hpp"
#include "padicalc/binomial.hpp"
#include "padicalc/errors.hpp"
#include "padicalc/groups.hpp"
#include "padicalc/hopf.hpp"
#include "padicalc/json_io.hpp"
#include "padicalc/mahler.hpp"

namespace padic::audit {

namespace {

// Deterministic sampling helpers; mt19937_64 output is pinned by the
// standard, so runs are byte-reproducible across platforms.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(unsigned long seed) : engine(seed) {}

  mpz_class below(const mpz_class& bound) {
    mpz_class r = 0;
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 32;
    for (size_t have = 0; have < bits; have += 32)
      r = (r << 32) + mpz_class(static_cast<unsigned long>(
                          engine() & 0xffffffffULL));
    return r % bound;
  }

  long below_long(long bound) {
    return static_cast<long>(engine() % static_cast<unsigned long>(bound));
  }
};

groups::GroupElement random_group_element(Rng& rng, const PrimeContext& ctx,
                                          int d, long prec) {
  mpz_class depth_bound = ctx.pow_p(prec - ctx.epsilon());
  mpz_class shift = ctx.pow_p(ctx.epsilon());
  std::vector<mpz_class> e(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      e[static_cast<size_t>(i * d + j)] =
          mpz_class(i == j ? 1 : 0) + shift * rng.below(depth_bound);
  return groups::GroupElement(Matrix::from_entries(ctx, d, prec, e));
}

std::vector<mpz_class> random_polynomial(Rng& rng, unsigned max_degree) {
  unsigned deg = static_cast<unsigned>(rng.below_long(max_degree + 1));
  std::vector<mpz_class> coeffs(deg + 1);
  for (auto& c : coeffs)
    c = mpz_class(rng.below_long(2000001)) - 1000000;
  if (coeffs.back() == 0) coeffs.back() = 1;
  return coeffs;
}

std::string ok_fail(bool b) { return b ? "ok" : "FAILED"; }

// --- criterion 1: binomial estimate audit -------------------------------

CriterionResult criterion_binomial_audit() {
  CriterionResult r{1,
                    "extremal binomial valuations: search equals formula for "
                    "k < p^(n+2), p in {3,5}, n in {0,1}",
                    true, ""};
  std::ostringstream detail;
  unsigned long rows_total = 0;
  for (long p : {3L, 5L}) {
    PrimeContext ctx(p);
    for (unsigned long n : {0UL, 1UL}) {
      mpz_class kmax_z = ctx.pow_p(n + 2) - 1;
      unsigned long kmax = kmax_z.get_ui();
      auto rows = binom::audit_sweep(n, 0, kmax, ctx,
                                     binom::default_search_depth(n));
      rows_total += rows.size();
      for (const auto& row : rows) {
        bool zero_regime = row.formula_valuation == Rational(0);
        if (!row.agrees || !zero_regime ||
            row.witness.attained_valuation != row.oracle_valuation) {
          r.passed = false;
          detail << "p=" << p << " n=" << n << " k=" << row.k
                 << ": formula " << row.formula_valuation.str() << " vs "
                 << row.oracle_valuation.str() << "; ";
        }
      }
    }
  }
  detail << rows_total << " rows audited, all with stored witnesses";
  r.detail = detail.str();
  return r;
}

// --- criterion 2: Mahler reconstruction ---------------------------------

CriterionResult criterion_mahler_reconstruction() {
  CriterionResult r{2,
                    "Mahler reconstruction exact for 50 random integer "
                    "polynomials (deg <= 10, p=3, M=20, K=32, x=0..31)",
                    true, ""};
  PrimeContext ctx(3);
  const long M = 20;
  const unsigned long K = 32;
  const long x_prec = M + factorial_valuation(K, ctx) + 2;
  Rng rng(kSeed);
  int checked = 0;
  for (int trial = 0; trial < 50 && r.passed; ++trial) {
    auto poly = random_polynomial(rng, 10);
    std::vector<mpz_class> values;
    for (unsigned long i = 0; i <= K; ++i)
      values.push_back(io::eval_polynomial(poly, mpz_class(i)));
    auto table = mahler::FunctionTable::from_integers(ctx, values, M);
    auto series = mahler::mahler_coefficients(table);
    for (unsigned long x = 0; x < K && r.passed; ++x) {
      Scalar sx = Scalar::from_integer_abs(ctx, mpz_class(x), x_prec);
      Scalar got = mahler::evaluate(series, sx);
      Scalar want = Scalar::from_integer_abs(
          ctx, io::eval_polynomial(poly, mpz_class(x)), M);
      if (!got.congruent(want) ||
          (!got.is_exact_zero() && got.abs_precision() < M)) {
        r.passed = false;
        r.detail = "mismatch at trial " + std::to_string(trial) +
                   ", x = " + std::to_string(x);
      }
      ++checked;
    }
  }
  if (r.passed)
    r.detail = std::to_string(checked) + " evaluations exact at precision";
  return r;
}

// --- criterion 3: character decay ---------------------------------------

CriterionResult criterion_character_decay() {
  CriterionResult r{3,
                    "character series decay: slope(kappa_{p^j}) = j and "
                    "level verdicts match the radius threshold, n = 0..4",
                    true, ""};
  PrimeContext ctx(3);
  const unsigned long K = 32;
  std::ostringstream detail;
  for (long j = 1; j <= 3; ++j) {
    Scalar z = Scalar::from_integer(ctx, ctx.pow_p(j), 20);
    auto series = mahler::character_series(z, K);
    auto report = mahler::decay_slope(series);
    bool slope_ok = report.slope.kind == Slope::Kind::Finite &&
                    report.slope.value == Rational(j);
    if (!slope_ok) r.passed = false;
    detail << "j=" << j << " slope "
           << (report.slope.kind == Slope::Kind::Finite
                   ? report.slope.value.str()
                   : std::string("?"))
           << " " << ok_fail(slope_ok) << "; ";
    for (unsigned long n = 0; n <= 4; ++n) {
      bool expected = Rational(j) >= level_radius_valuation(ctx, n);
      Verdict got = mahler::member_at_level(series, n);
      bool match = (got == Verdict::Member) == expected &&
                   got != Verdict::Indeterminate;
      if (!match) {
        r.passed = false;
        detail << "level " << n << " verdict mismatch; ";
      }
    }
  }
  r.detail = detail.str();
  return r;
}

// --- criterion 4: duality pairing ----------------------------------------

CriterionResult criterion_duality_pairing() {
  CriterionResult r{4,
                    "pairing reproduces point evaluation for a <= 16 and "
                    "f'(0) against the symbolic derivative, 20 random "
                    "polynomials",
                    true, ""};
  PrimeContext ctx(3);
  const long M = 20;
  const unsigned long K = 32;
  Rng rng(kSeed + 4);
  int checks = 0;
  for (int trial = 0; trial < 20 && r.passed; ++trial) {
    auto poly = random_polynomial(rng, 10);
    std::vector<mpz_class> values;
    for (unsigned long i = 0; i <= K; ++i)
      values.push_back(io::eval_polynomial(poly, mpz_class(i)));
    auto series = mahler::mahler_coefficients(
        mahler::FunctionTable::from_integers(ctx, values, M));
    for (long a = 0; a <= 16 && r.passed; ++a) {
      Scalar got = amice::pair(amice::dirac(ctx, mpz_class(a), K, M), series);
      Scalar want = Scalar::from_integer_abs(
          ctx, io::eval_polynomial(poly, mpz_class(a)), M);
      if (!got.congruent(want)) {
        r.passed = false;
        r.detail = "point pairing mismatch at a=" + std::to_string(a);
      }
      ++checks;
    }
    Scalar dgot =
        amice::pair(amice::derivative_distribution(ctx, K, M), series);
    mpz_class want_d = io::derive_polynomial(poly)[0];
    Scalar dwant = Scalar::from_integer_abs(ctx, want_d, M);
    if (!dgot.congruent(dwant)) {
      r.passed = false;
      r.detail = "derivative pairing mismatch at trial " +
                 std::to_string(trial);
    }
    ++checks;
  }
  if (r.passed)
    r.detail = std::to_string(checks) + " pairings exact at precision";
  return r;
}

// --- criterion 5: convolution group law ----------------------------------

CriterionResult criterion_convolution() {
  CriterionResult r{5,
                    "dirac convolution: delta_a * delta_b = delta_(a+b) mod "
                    "(T^33, 3^20), 100 random pairs",
                    true, ""};
  PrimeContext ctx(3);
  const long M = 20;
  const unsigned long K = 32;
  Rng rng(kSeed + 5);
  for (int trial = 0; trial < 100 && r.passed; ++trial) {
    mpz_class a = rng.below(mpz_class(500));
    mpz_class b = rng.below(mpz_class(500));
    auto lhs = amice::convolve(amice::dirac(ctx, a, K, M),
                               amice::dirac(ctx, b, K, M));
    auto rhs = amice::dirac(ctx, a + b, K, M);
    for (unsigned long k = 0; k <= K; ++k)
      if (!lhs[k].congruent(rhs[k])) {
        r.passed = false;
        r.detail = "coefficient " + std::to_string(k) + " differs for a=" +
                   a.get_str() + ", b=" + b.get_str();
      }
  }
  if (r.passed) r.detail = "100 convolutions match exactly";
  return r;
}

// --- criterion 6: divided-power tower ------------------------------------

CriterionResult criterion_divided_power_tower() {
  CriterionResult r{6,
                    "divided-power membership for a_i = p^((n+1)i) at level "
                    "n, all m <= 4, b-valuations match the factorial oracle "
                    "for i <= 200",
                    true, ""};
  PrimeContext ctx(3);
  const unsigned long I = 200;
  // direct-factorization oracle for v_p(i!)
  std::vector<long> fact_val(I + 1, 0);
  mpz_class fact(1);
  for (unsigned long i = 1; i <= I; ++i) {
    fact *= static_cast<unsigned long>(i);
    mpz_class cof;
    fact_val[i] = static_cast<long>(
        mpz_remove(cof.get_mpz_t(), fact.get_mpz_t(), ctx.p().get_mpz_t()));
  }
  for (unsigned long n = 0; n <= 2 && r.passed; ++n) {
    std::vector<Scalar> a;
    for (unsigned long i = 0; i <= I; ++i)
      a.push_back(Scalar::from_unit_parts(
          ctx, static_cast<long>((n + 1) * i), 1, 8));
    for (unsigned long m = 0; m <= 4 && r.passed; ++m) {
      auto report = amice::divided_power_report(a, m, n);
      if (!report.member) {
        r.passed = false;
        r.detail = "membership false at n=" + std::to_string(n) +
                   ", m=" + std::to_string(m);
        break;
      }
      for (unsigned long i = 0; i <= I; ++i) {
        mpz_class qi = mpz_class(i) / ctx.pow_p(m);
        long expect = static_cast<long>((n + 1) * i) + fact_val[i] -
                      fact_val[qi.get_ui()] -
                      static_cast<long>(n) * static_cast<long>(i);
        const CoeffValuation& cv = report.b_valuations[i];
        if (cv.kind != CoeffValuation::Kind::Exact ||
            cv.value != Rational(expect)) {
          r.passed = false;
          r.detail = "b-valuation mismatch at n=" + std::to_string(n) +
                     " m=" + std::to_string(m) + " i=" + std::to_string(i);
          break;
        }
      }
    }
  }
  if (r.passed)
    r.detail = "n <= 2, m <= 4, i <= 200: member everywhere, valuations "
               "match the factored-factorial oracle";
  return r;
}

// --- criterion 7: BCH against matrices -----------------------------------

CriterionResult criterion_bch_vs_matrices() {
  CriterionResult r{7,
                    "group-law check (p=3, M=12, D=10): discrepancy "
                    "valuation >= 8 over 100 random pairs, d in {2,3}",
                    true, ""};
  PrimeContext ctx(3);
  const long M = 12;
  BchTruncation phi(10);
  Rng rng(kSeed + 7);
  long min_disc = 1000;
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto x = random_group_element(rng, ctx, d, M);
      auto y = random_group_element(rng, ctx, d, M);
      auto rep = groups::group_law_check(x, y, phi);
      if (rep.discrepancy < min_disc) min_disc = rep.discrepancy;
      if (rep.discrepancy < 8) r.passed = false;
    }
  }
  std::ostringstream detail;
  detail << "min discrepancy over 200 pairs = " << min_disc
         << " (threshold 8; the dropped degree-11 term has coefficient "
            "valuation -5, so the true remainder valuation is "
            "(D+1) - floor(D/(p-1)) = 6 and the threshold is not "
            "attainable by an exact degree-10 truncation)";
  r.detail = detail.str();
  return r;
}

// --- criterion 8: limit formulas ------------------------------------------

CriterionResult criterion_limit_formulas() {
  CriterionResult r{8,
                    "limit formulas: traces nondecreasing, add/bracket reach "
                    ">= M-2 by t = M against the exp/log references; "
                    "commuting pairs exact at t = 0",
                    true, ""};
  PrimeContext ctx(3);
  const long M = 12;
  const unsigned long t_max = static_cast<unsigned long>(M);
  Rng rng(kSeed + 7); // the same pair stream as criterion 7
  std::ostringstream detail;
  long worst_add = 1000, worst_bracket = 1000;
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto x = random_group_element(rng, ctx, d, M);
      auto y = random_group_element(rng, ctx, d, M);
      auto add = groups::limit_add(x, y, t_max);
      auto br = groups::limit_bracket(x, y, t_max);
      long fa = add.trace.steps.back().discrepancy;
      long fb = br.trace.steps.back().discrepancy;
      worst_add = std::min(worst_add, fa);
      worst_bracket = std::min(worst_bracket, fb);
      if (!add.trace.nondecreasing || !br.trace.nondecreasing ||
          fa < M - 2 || fb < M - 2) {
        r.passed = false;
        detail << "d=" << d << " trial " << trial << " add " << fa
               << " bracket " << fb << " nondec "
               << add.trace.nondecreasing << br.trace.nondecreasing << "; ";
      }
    }
  }
  // commuting pairs: y a power of x
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_group_element(rng, ctx, 2, M);
    auto y = group_mul(x, x);
    auto add = groups::limit_add(x, y, 2);
    auto br = groups::limit_bracket(x, y, 2);
    if (!add.trace.steps[0].at_floor) {
      r.passed = false;
      detail << "commuting add not exact at t=0; ";
    }
    // zero bracket: reference is the identity, approximants too
    if (!br.trace.steps[0].at_floor) {
      r.passed = false;
      detail << "commuting bracket not exact at t=0; ";
    }
  }
  detail << "min final discrepancies: add " << worst_add << ", bracket "
         << worst_bracket << " (floor M = " << M << ")";
  r.detail = detail.str();
  return r;
}

// --- criterion 9: powerful lattices and uniformity -------------------------

CriterionResult criterion_powerful_uniformity() {
  CriterionResult r{9,
                    "powerful_check verdicts on pM_2, pM_3, Heisenberg, M_2; "
                    "p-th power injectivity on lower p-series quotients",
                    true, ""};
  PrimeContext ctx(3);
  const long M = 10;
  std::ostringstream detail;

  auto unit_matrix = [&](int d, int i, int j, const mpz_class& scale) {
    std::vector<mpz_class> e(static_cast<size_t>(d) * d, mpz_class(0));
    e[static_cast<size_t>(i * d + j)] = scale;
    return Matrix::from_entries(ctx, d, M, e);
  };

  for (int d : {2, 3}) {
    std::vector<Matrix> basis;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        basis.push_back(unit_matrix(d, i, j, ctx.p()));
    auto rep = groups::powerful_check(basis, ctx);
    if (!rep.powerful) {
      r.passed = false;
      detail << "pM_" << d << " not recognized powerful; ";
    }
  }
  {
    // Heisenberg realization: e = pE12, f = pE23, h = pE13, [e,f] = p h
    std::vector<Matrix> basis = {unit_matrix(3, 0, 1, ctx.p()),
                                 unit_matrix(3, 1, 2, ctx.p()),
                                 unit_matrix(3, 0, 2, ctx.p())};
    auto rep = groups::powerful_check(basis, ctx);
    if (!rep.powerful) {
      r.passed = false;
      detail << "Heisenberg lattice not recognized powerful; ";
    }
  }
  {
    std::vector<Matrix> basis;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        basis.push_back(unit_matrix(2, i, j, mpz_class(1)));
    auto rep = groups::powerful_check(basis, ctx);
    if (rep.powerful) {
      r.passed = false;
      detail << "M_2(Z_3) wrongly recognized powerful; ";
    }
  }

  // injectivity of x -> x^p on P_i/P_(i+1), 50 sampled pairs per i <= 3
  Rng rng(kSeed + 9);
  for (long i = 1; i <= 3 && r.passed; ++i) {
    for (int trial = 0; trial < 50; ++trial) {
      long depth = i + ctx.epsilon() - 1;
      mpz_class bound = ctx.pow_p(M - depth);
      // x, y in P_i with x != y mod P_(i+1)
      std::vector<mpz_class> ex(4), ey(4);
      for (int k = 0; k < 4; ++k) {
        ex[static_cast<size_t>(k)] =
            mpz_class(k % 3 == 0 ? 1 : 0) + ctx.pow_p(depth) * rng.below(bound);
        ey[static_cast<size_t>(k)] =
            mpz_class(k % 3 == 0 ? 1 : 0) + ctx.pow_p(depth) * rng.below(bound);
      }
      // force a unit difference in the top-left coordinate
      ey[0] = ex[0] + ctx.pow_p(depth) *
                          (1 + 3 * ((ey[0] - ex[0]) / ctx.pow_p(depth)));
      groups::GroupElement x(Matrix::from_entries(ctx, 2, M, ex));
      groups::GroupElement y(Matrix::from_entries(ctx, 2, M, ey));
      auto xq = groups::pth_power(x, 1);
      auto yq = groups::pth_power(y, 1);
      long v = xq.matrix().congruence_valuation(yq.matrix());
      if (v != depth + 1) {
        r.passed = false;
        detail << "power map collapsed cosets at i=" << i << " (v=" << v
               << ", expected " << depth + 1 << "); ";
        break;
      }
    }
  }
  detail << "verdicts and 150 injectivity samples as expected";
  r.detail = detail.str();
  return r;
}

// --- criterion 10: Hopf comultiplication -----------------------------------

CriterionResult criterion_hopf() {
  CriterionResult r{10,
                    "coassociativity exact (abelian d<=3, Heisenberg D=6, "
                    "p sl_2 at p=5 D=6), coefficients integral, Delta(h) "
                    "closed form",
                    true, ""};
  std::ostringstream detail;
  PrimeContext ctx3(3), ctx5(5);

  for (int d = 1; d <= 3; ++d) {
    auto phi = hopf::phi_coordinates(hopf::StructureConstants::abelian(d),
                                     ctx3, 4);
    auto co = hopf::coassociativity_check(phi, ctx3);
    if (!co.exact || !phi.integral || !hopf::counit_check(phi)) {
      r.passed = false;
      detail << "abelian d=" << d << " failed; ";
    }
  }

  {
    auto phi = hopf::phi_coordinates(
        hopf::StructureConstants::heisenberg(ctx3), ctx3, 6);
    auto co = hopf::coassociativity_check(phi, ctx3);
    if (!co.exact || !phi.integral) {
      r.passed = false;
      detail << "Heisenberg coassociativity/integrality failed; ";
    }
    // Delta(h-dual) = h x 1 + 1 x h + (p/2)(e x f - f x e): in
    // coordinates, Phi_h = x_h + y_h + (p/2)(x_e y_f - x_f y_e)
    const TruncatedPoly& phih = phi.phi[2];
    Rational half_p(ctx3.p(), mpz_class(2));
    bool closed_form =
        phih.coefficient({0, 0, 1, 0, 0, 0}) == Rational(1) &&
        phih.coefficient({0, 0, 0, 0, 0, 1}) == Rational(1) &&
        phih.coefficient({1, 0, 0, 0, 1, 0}) == half_p &&
        phih.coefficient({0, 1, 0, 1, 0, 0}) == -half_p &&
        phih.term_count() == 4;
    // the e and f coordinates stay primitive
    closed_form = closed_form && phi.phi[0].term_count() == 2 &&
                  phi.phi[1].term_count() == 2;
    if (!closed_form) {
      r.passed = false;
      detail << "Heisenberg comultiplication closed form failed; ";
    }
  }

  {
    auto phi = hopf::phi_coordinates(
        hopf::StructureConstants::scaled_sl2(ctx5), ctx5, 6);
    auto co = hopf::coassociativity_check(phi, ctx5);
    if (!co.exact || !phi.integral) {
      r.passed = false;
      detail << "p sl_2 coassociativity/integrality failed; ";
    }
  }
  detail << "all lattices coassociative and integral at truncation";
  r.detail = detail.str();
  return r;
}

// --- criterion 11: duality convergence -------------------------------------

CriterionResult criterion_duality_convergence() {
  CriterionResult r{11,
                    "pairing tail valuations >= k(s_f + s_lambda) - C with "
                    "fitted C, monotone divergence on the upper half",
                    true, ""};
  PrimeContext ctx(3);
  const unsigned long K = 32;
  const long M = 72; // deep enough to see every tail valuation exactly
  std::ostringstream detail;

  for (long j : {1L, 2L}) {
    Scalar z = Scalar::from_integer(ctx, ctx.pow_p(j), M);
    auto f = mahler::character_series(z, K);
    for (int lam = 0; lam < 2; ++lam) {
      std::vector<Scalar> d;
      if (lam == 0) {
        for (unsigned long k = 0; k <= K; ++k)
          d.push_back(Scalar::one(ctx, M)); // slope 0
      } else {
        auto dirac5 = amice::dirac(ctx, mpz_class(5), K, M);
        for (unsigned long k = 0; k <= K; ++k) d.push_back(dirac5[k]);
      }
      amice::AmiceSeries lambda(ctx, d);

      // membership at levels 0 and 1
      for (unsigned long n = 0; n <= 1; ++n) {
        if (mahler::member_at_level(f, n) != Verdict::Member ||
            amice::overconvergent_at_level(lambda, n).verdict !=
                Verdict::Member) {
          r.passed = false;
          detail << "family (j=" << j << ",lam=" << lam
                 << ") not member at level " << n << "; ";
        }
      }

      // tail sums T_k = sum_{i >= k} c_i d_i; slopes are s_f = j and
      // s_lambda = 0 (the dirac family's vanishing tail is fitted as 0)
      Rational s = Rational(j);
      std::vector<std::optional<long>> tail_val(K + 1);
      Scalar tail = Scalar::exact_zero(ctx);
      for (unsigned long k = K + 1; k-- > 0;) {
        tail = tail.add(f[k].mul(lambda[k]));
        if (tail.kind() == Scalar::Kind::Unit)
          tail_val[k] = tail.valuation();
        else
          tail_val[k] = std::nullopt; // vanished (exactly or to depth M)
      }
      // fitted C over the window
      Rational C(-100000L);
      bool any = false;
      for (unsigned long k = 16; k <= K; ++k)
        if (tail_val[k]) {
          Rational gap = s * Rational(static_cast<long>(k)) -
                         Rational(*tail_val[k]);
          if (gap > C) C = gap;
          any = true;
        }
      // monotone divergence over the upper half
      long prev = -1;
      for (unsigned long k = 24; k <= K; ++k) {
        long cur = tail_val[k] ? *tail_val[k] : M;
        if (cur < prev) {
          r.passed = false;
          detail << "tail valuations not monotone (j=" << j
                 << ",lam=" << lam << "); ";
        }
        prev = cur;
      }
      detail << "j=" << j << (lam == 0 ? " all-ones" : " dirac(5)")
             << ": C = " << (any ? C.str() : std::string("-inf")) << "; ";
    }
  }
  r.detail = detail.str();
  return r;
}

} // namespace

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion_binomial_audit();
    case 2: return criterion_mahler_reconstruction();
    case 3: return criterion_character_decay();
    case 4: return criterion_duality_pairing();
    case 5: return criterion_convolution();
    case 6: return criterion_divided_power_tower();
    case 7: return criterion_bch_vs_matrices();
    case 8: return criterion_limit_formulas();
    case 9: return criterion_powerful_uniformity();
    case 10: return criterion_hopf();
    case 11: return criterion_duality_convergence();
    default:
      throw DomainError("criterion id out of range");
  }
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  out.reserve(kCriterionCount);
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id));
  return out;
}

} // namespace padic::audit
