#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padicalc/bch.hpp"
#include "padicalc/matrix.hpp"

namespace padic::groups {

/// Element of H = 1 + p^epsilon M_d(Z_p), the matrix realization of a
/// uniform pro-p group.
class GroupElement {
public:
  explicit GroupElement(Matrix m);
  const Matrix& matrix() const { return m_; }
  const PrimeContext& context() const { return m_.context(); }
  int dim() const { return m_.dim(); }
  long precision() const { return m_.precision(); }
  /// v(x - 1), capped at the precision.
  long depth() const;

private:
  Matrix m_;
};

/// Element of L = p^epsilon M_d(Z_p): all entry valuations >= epsilon.
class LieElement {
public:
  explicit LieElement(Matrix m);
  const Matrix& matrix() const { return m_; }
  const PrimeContext& context() const { return m_.context(); }
  int dim() const { return m_.dim(); }
  long precision() const { return m_.precision(); }

private:
  Matrix m_;
};

GroupElement group_mul(const GroupElement& x, const GroupElement& y);
GroupElement group_inv(const GroupElement& x);

LieElement lie_log(const GroupElement& x);
GroupElement lie_exp(const LieElement& a);
LieElement lie_add(const LieElement& a, const LieElement& b);
LieElement lie_bracket(const LieElement& a, const LieElement& b);

/// x^(p^i). The p-power map contracts: a representative mod p^N pins
/// the power mod p^(N+i), so the result carries precision N + i.
GroupElement pth_power(const GroupElement& x, unsigned long i);

/// The unique y^(p^-i) for y congruent to 1 mod p^(i+epsilon),
/// computed as exp(log(y)/p^i). The division costs i digits: result
/// precision N - i.
GroupElement pth_root(const GroupElement& y, unsigned long i);

/// Group commutator x y x^-1 y^-1. Perturbing x by 1 + O(p^N) moves
/// the commutator by O(p^(N + depth(y))) and symmetrically, so the
/// result precision is min(N_x + depth(y), N_y + depth(x)).
GroupElement group_commutator(const GroupElement& x, const GroupElement& y);

/// Reference values the limit formulas are audited against.
GroupElement exp_of_log_sum(const GroupElement& x, const GroupElement& y);
GroupElement exp_of_log_bracket(const GroupElement& x, const GroupElement& y);

struct ConvergenceTrace {
  struct Step {
    long discrepancy = 0; // against the reference, capped at floor
    bool at_floor = false;
  };
  std::vector<Step> steps;          // indexed by t = 0..t_max
  std::vector<Matrix> approximants; // the t-th approximant per step
  long floor = 0;                   // measuring precision
  bool reached_floor = false;
  bool nondecreasing = false;
};

struct LimitResult {
  GroupElement value;
  ConvergenceTrace trace;
};

/// Abelianized sum x + y = lim_t ((x^(p^t) y^(p^t))^(p^-t)) evaluated
/// at t = t_max, with the whole approximant trace measured against
/// exp(log x + log y). Power gains and root losses cancel: every
/// approximant carries the full common precision.
LimitResult limit_add(const GroupElement& x, const GroupElement& y,
                      unsigned long t_max);

/// Lie bracket limit [x,y] = lim_t ([x^(p^t), y^(p^t)]^(p^-2t)),
/// measured against exp([log x, log y]). The commutator's contraction
/// gain funds the 2t-fold root.
LimitResult limit_bracket(const GroupElement& x, const GroupElement& y,
                          unsigned long t_max);

/// x^lambda = exp(lambda log x) for lambda in Z_p; agrees with
/// iterated multiplication on integers.
GroupElement zp_scalar_action(const Scalar& lambda, const GroupElement& x);

struct PowerfulReport {
  bool closed_under_bracket = true;
  bool powerful = false;
  /// min coordinate valuation over all pairwise basis brackets
  /// (must be >= epsilon for a powerful lattice), capped at precision.
  long min_coordinate_valuation = 0;
  std::pair<int, int> offending{-1, -1}; // first failing bracket, if any
};

/// Checks [b_i, b_j] in p^epsilon * span(basis) for every pair, by
/// solving for coordinates with valuation-pivoted elimination mod p^N.
PowerfulReport powerful_check(const std::vector<Matrix>& basis,
                              const PrimeContext& ctx);

/// Largest i >= 1 with x = 1 mod p^(i + epsilon - 1), i.e. the lower
/// p-series level of x in the matrix realization; nullopt when x is
/// the identity at the working precision (level infinite there).
std::optional<long> lower_p_series_level(const GroupElement& x);

struct GroupLawReport {
  long discrepancy = 0; // v(log(xy) - Phi(log x, log y)), capped
  long floor = 0;
  bool at_floor = false;
};

/// Compares the two routes to the product's logarithm: the matrix
/// series log(x y) against the truncated BCH evaluation.
GroupLawReport group_law_check(const GroupElement& x, const GroupElement& y,
                               const BchTruncation& phi);

} // namespace padic::groups
