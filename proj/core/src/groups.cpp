#include "padicalc/groups.hpp"

#include <algorithm>

#include "padicalc/errors.hpp"

namespace padic::groups {

namespace {

Matrix identity_like(const Matrix& m) {
  return Matrix::identity(m.context(), m.dim(), m.precision());
}

} // namespace

GroupElement::GroupElement(Matrix m) : m_(std::move(m)) {
  long v = m_.congruence_valuation(identity_like(m_));
  if (v < m_.context().epsilon())
    throw DomainError("not a group element: x - 1 has valuation " +
                      std::to_string(v) + " < epsilon");
}

long GroupElement::depth() const {
  return m_.congruence_valuation(identity_like(m_));
}

LieElement::LieElement(Matrix m) : m_(std::move(m)) {
  if (m_.min_valuation() < m_.context().epsilon())
    throw DomainError("not a Lie lattice element: entry valuation below "
                      "epsilon");
}

GroupElement group_mul(const GroupElement& x, const GroupElement& y) {
  return GroupElement(x.matrix().mul(y.matrix()));
}

GroupElement group_inv(const GroupElement& x) {
  return GroupElement(x.matrix().inverse());
}

LieElement lie_log(const GroupElement& x) {
  return LieElement(padic_log(x.matrix()));
}

GroupElement lie_exp(const LieElement& a) {
  return GroupElement(padic_exp(a.matrix()));
}

LieElement lie_add(const LieElement& a, const LieElement& b) {
  return LieElement(a.matrix().add(b.matrix()));
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  return LieElement(
      a.matrix().mul(b.matrix()).sub(b.matrix().mul(a.matrix())));
}

GroupElement pth_power(const GroupElement& x, unsigned long i) {
  if (i == 0) return x;
  const PrimeContext& ctx = x.context();
  long W = x.precision() + static_cast<long>(i);
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), ctx.p().get_mpz_t(), i);
  return GroupElement(x.matrix().lifted_representative(W).pow(e));
}

GroupElement pth_root(const GroupElement& y, unsigned long i) {
  if (i == 0) return y;
  const PrimeContext& ctx = y.context();
  long need = static_cast<long>(i) + ctx.epsilon();
  long d = y.depth();
  if (d < need) {
    if (y.precision() < need)
      throw PrecisionError("cannot certify p^" + std::to_string(i) +
                           "-th power membership at precision " +
                           std::to_string(y.precision()));
    throw DomainError("element is not a p^" + std::to_string(i) +
                      "-th power: depth " + std::to_string(d));
  }
  if (y.precision() - static_cast<long>(i) < 1)
    throw PrecisionError("p-th root exhausts precision");
  Matrix logy = padic_log(y.matrix());
  for (unsigned long s = 0; s < i; ++s) logy = logy.divide_by_p();
  return GroupElement(padic_exp(logy));
}

GroupElement group_commutator(const GroupElement& x, const GroupElement& y) {
  // Precision gain from contraction: perturbations of x of size p^N
  // move x y x^-1 y^-1 by p^(N + depth(y)), and symmetrically.
  long W = std::min(x.precision() + y.depth(), y.precision() + x.depth());
  Matrix a = x.matrix().lifted_representative(W);
  Matrix b = y.matrix().lifted_representative(W);
  Matrix w = a.mul(b).mul(a.inverse()).mul(b.inverse());
  return GroupElement(std::move(w));
}

GroupElement exp_of_log_sum(const GroupElement& x, const GroupElement& y) {
  return GroupElement(
      padic_exp(padic_log(x.matrix()).add(padic_log(y.matrix()))));
}

GroupElement exp_of_log_bracket(const GroupElement& x, const GroupElement& y) {
  Matrix lx = padic_log(x.matrix());
  Matrix ly = padic_log(y.matrix());
  return GroupElement(padic_exp(lx.mul(ly).sub(ly.mul(lx))));
}

namespace {

ConvergenceTrace finish_trace(ConvergenceTrace trace) {
  trace.nondecreasing = true;
  for (size_t t = 1; t < trace.steps.size(); ++t)
    if (trace.steps[t].discrepancy < trace.steps[t - 1].discrepancy)
      trace.nondecreasing = false;
  trace.reached_floor =
      !trace.steps.empty() && trace.steps.back().at_floor;
  return trace;
}

} // namespace

LimitResult limit_add(const GroupElement& x, const GroupElement& y,
                      unsigned long t_max) {
  require_same_prime(x.context(), y.context());
  long N = std::min(x.precision(), y.precision());
  GroupElement reference = exp_of_log_sum(x, y);

  ConvergenceTrace trace;
  trace.floor = N;
  std::optional<GroupElement> last;
  for (unsigned long t = 0; t <= t_max; ++t) {
    GroupElement z =
        group_mul(pth_power(x, t), pth_power(y, t)); // precision N + t
    GroupElement approx = pth_root(z, t);            // back to N
    long disc = approx.matrix().congruence_valuation(reference.matrix());
    trace.steps.push_back({std::min(disc, N), disc >= N});
    trace.approximants.push_back(approx.matrix());
    last = std::move(approx);
  }
  return LimitResult{*last, finish_trace(std::move(trace))};
}

LimitResult limit_bracket(const GroupElement& x, const GroupElement& y,
                          unsigned long t_max) {
  require_same_prime(x.context(), y.context());
  long N = std::min(x.precision(), y.precision());
  GroupElement reference = exp_of_log_bracket(x, y);

  ConvergenceTrace trace;
  trace.floor = N;
  std::optional<GroupElement> last;
  for (unsigned long t = 0; t <= t_max; ++t) {
    GroupElement a = pth_power(x, t);
    GroupElement b = pth_power(y, t);
    GroupElement c = group_commutator(a, b); // precision >= N + 2t + eps
    GroupElement approx = pth_root(c, 2 * t);
    long disc = approx.matrix().congruence_valuation(reference.matrix());
    disc = std::min(disc, N);
    trace.steps.push_back({disc, disc >= N});
    trace.approximants.push_back(approx.matrix());
    last = std::move(approx);
  }
  return LimitResult{*last, finish_trace(std::move(trace))};
}

GroupElement zp_scalar_action(const Scalar& lambda, const GroupElement& x) {
  require_same_prime(lambda.context(), x.context());
  if (!lambda.is_zero() && lambda.valuation() < 0)
    throw DomainError("scalar action needs lambda in Z_p");
  Matrix scaled = padic_log(x.matrix()).scalar_mul(lambda);
  return GroupElement(padic_exp(scaled));
}

namespace {

// Solves basis * u = target over Z/p^prec by valuation-pivoted row
// echelon on the augmented system, fresh per target (the systems here
// are tiny). Returns coordinate valuations capped at the validity
// floor prec - sum(pivot valuations), or nullopt when the target
// leaves the Z_p-span.
std::optional<std::vector<long>> coordinates_in_span(
    const std::vector<Matrix>& basis, const Matrix& target,
    const PrimeContext& ctx) {
  const int rows = basis[0].dim() * basis[0].dim();
  const int cols = static_cast<int>(basis.size());
  long prec = target.precision();
  for (const Matrix& b : basis) prec = std::min(prec, b.precision());
  mpz_class mod = ctx.pow_p(static_cast<unsigned long>(prec));

  // augmented matrix, last column is the target
  std::vector<std::vector<mpz_class>> m(
      static_cast<size_t>(rows),
      std::vector<mpz_class>(static_cast<size_t>(cols) + 1, 0));
  for (int c = 0; c < cols; ++c) {
    const Matrix& b = basis[static_cast<size_t>(c)];
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j)
        m[static_cast<size_t>(i * b.dim() + j)][static_cast<size_t>(c)] =
            b.raw(i, j) % mod;
  }
  for (int i = 0; i < target.dim(); ++i)
    for (int j = 0; j < target.dim(); ++j)
      m[static_cast<size_t>(i * target.dim() + j)][static_cast<size_t>(cols)] =
          target.raw(i, j) % mod;

  auto val = [&](const mpz_class& x) {
    return (x == 0) ? prec : std::min(prec, ctx.valuation(x));
  };

  std::vector<long> pivot_val(static_cast<size_t>(cols), 0);
  long total_loss = 0;
  for (int c = 0; c < cols; ++c) {
    int best = -1;
    long best_v = prec;
    for (int r = c; r < rows; ++r) {
      long v = val(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
      if (v < best_v) {
        best_v = v;
        best = r;
      }
    }
    if (best < 0)
      throw InvariantError(
          "basis matrices not Z_p-independent at this precision");
    std::swap(m[static_cast<size_t>(c)], m[static_cast<size_t>(best)]);
    // normalize the pivot to p^v
    mpz_class unit;
    ctx.split(m[static_cast<size_t>(c)][static_cast<size_t>(c)], unit);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    for (int k = c; k <= cols; ++k) {
      auto& e = m[static_cast<size_t>(c)][static_cast<size_t>(k)];
      e = (e * inv) % mod;
    }
    mpz_class pv = ctx.pow_p(static_cast<unsigned long>(best_v));
    for (int r = c + 1; r < rows; ++r) {
      const mpz_class e = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (e == 0) continue;
      // the pivot has minimal valuation in the remaining column
      mpz_class factor = e / pv;
      for (int k = c; k <= cols; ++k) {
        auto& x = m[static_cast<size_t>(r)][static_cast<size_t>(k)];
        x = (x - factor * m[static_cast<size_t>(c)][static_cast<size_t>(k)]) %
            mod;
        if (x < 0) x += mod;
      }
    }
    pivot_val[static_cast<size_t>(c)] = best_v;
    total_loss += best_v;
  }
  // consistency of the rows below the pivots
  for (int r = cols; r < rows; ++r)
    if (m[static_cast<size_t>(r)][static_cast<size_t>(cols)] != 0)
      return std::nullopt;

  // back-substitution; coordinates are valid modulo p^(prec - total_loss)
  long cap = prec - total_loss;
  std::vector<mpz_class> coord(static_cast<size_t>(cols), 0);
  for (int c = cols - 1; c >= 0; --c) {
    mpz_class w = m[static_cast<size_t>(c)][static_cast<size_t>(cols)];
    for (int k = c + 1; k < cols; ++k)
      w -= m[static_cast<size_t>(c)][static_cast<size_t>(k)] *
           coord[static_cast<size_t>(k)];
    w %= mod;
    if (w < 0) w += mod;
    mpz_class pv = ctx.pow_p(static_cast<unsigned long>(
        pivot_val[static_cast<size_t>(c)]));
    if (w % pv != 0) return std::nullopt; // coordinate leaves Z_p
    coord[static_cast<size_t>(c)] = w / pv;
  }
  std::vector<long> vals(static_cast<size_t>(cols));
  for (int c = 0; c < cols; ++c) {
    mpz_class r = coord[static_cast<size_t>(c)] %
                  ctx.pow_p(static_cast<unsigned long>(std::max(cap, 1L)));
    vals[static_cast<size_t>(c)] =
        (r == 0) ? cap : std::min(cap, ctx.valuation(r));
  }
  return vals;
}

} // namespace

PowerfulReport powerful_check(const std::vector<Matrix>& basis,
                              const PrimeContext& ctx) {
  if (basis.empty()) throw DomainError("powerful_check needs a basis");
  for (const Matrix& b : basis) {
    require_same_prime(ctx, b.context());
    if (b.dim() != basis[0].dim())
      throw InvariantError("basis dimension mismatch");
  }
  long prec = basis[0].precision();
  for (const Matrix& b : basis) prec = std::min(prec, b.precision());
  PowerfulReport report;
  report.min_coordinate_valuation = prec;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Matrix br = basis[i].mul(basis[j]).sub(basis[j].mul(basis[i]));
      auto vals = coordinates_in_span(basis, br, ctx);
      if (!vals) {
        report.closed_under_bracket = false;
        report.powerful = false;
        report.offending = {static_cast<int>(i), static_cast<int>(j)};
        return report;
      }
      for (long v : *vals)
        if (v < report.min_coordinate_valuation) {
          report.min_coordinate_valuation = v;
          if (v < ctx.epsilon() && report.offending.first < 0)
            report.offending = {static_cast<int>(i), static_cast<int>(j)};
        }
    }
  report.powerful = report.closed_under_bracket &&
                    report.min_coordinate_valuation >= ctx.epsilon();
  return report;
}

std::optional<long> lower_p_series_level(const GroupElement& x) {
  long d = x.depth();
  if (d >= x.precision()) return std::nullopt; // identity at precision
  return d - x.context().epsilon() + 1;
}

GroupLawReport group_law_check(const GroupElement& x, const GroupElement& y,
                               const BchTruncation& phi) {
  Matrix lx = padic_log(x.matrix());
  Matrix ly = padic_log(y.matrix());
  Matrix log_product = padic_log(group_mul(x, y).matrix());
  Matrix via_bch = phi.evaluate(lx, ly);
  Matrix diff = log_product.sub(via_bch);
  GroupLawReport r;
  long v = diff.min_valuation();
  r.discrepancy = std::min(v, diff.precision());
  // Series remainder bound: the dropped terms of degree n > D have
  // valuation >= n*v0 - floor((n-1)/(p-1)), increasing in n.
  const PrimeContext& ctx = x.context();
  long v0 = std::min(lx.min_valuation(), ly.min_valuation());
  long tail;
  if (ctx.p() - 1 > static_cast<long>(phi.degree())) {
    tail = static_cast<long>(phi.degree() + 1) * v0;
  } else {
    long pm1 = mpz_class(ctx.p() - 1).get_si();
    tail = static_cast<long>(phi.degree() + 1) * v0 -
           static_cast<long>(phi.degree()) / pm1;
  }
  r.floor = std::min(diff.precision(), tail);
  r.at_floor = r.discrepancy >= r.floor;
  return r;
}

} // namespace padic::groups
