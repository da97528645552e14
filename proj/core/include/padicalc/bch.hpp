#pragma once

#include <string>
#include <vector>

#include "padicalc/matrix.hpp"
#include "padicalc/rational.hpp"

namespace padic {

/// The Baker-Campbell-Hausdorff series log(exp X exp Y) truncated at a
/// total bracket degree, as an explicit rational combination of
/// right-nested bracket words.
///
/// Built once from Dynkin's expansion
///   sum_n (-1)^(n-1)/n sum_{blocks} [word] / (m * prod r_i! s_i!)
/// with words aggregated by their letter strings, so an evaluation is
/// one bracket per stored word. Degrees 1 and 2 reduce to X + Y and
/// (1/2)[X, Y].
class BchTruncation {
public:
  explicit BchTruncation(unsigned degree);

  unsigned degree() const { return degree_; }

  struct Word {
    std::string letters; // over {'X','Y'}, bracketed right-nested
    int suffix = -1;     // index of letters[1:], -1 for single letters
    Rational coeff;      // aggregated coefficient (may be zero: helper)
  };
  const std::vector<Word>& words() const { return words_; }

  /// Largest p-power appearing in a coefficient denominator.
  long denominator_valuation(const PrimeContext& ctx) const;

  /// Evaluates the truncated series on integral matrices (elements of
  /// a powerful lattice). Accumulation happens over a common
  /// denominator at raised working precision; the result is p-integral
  /// and carries the full input precision. A non-integral accumulation
  /// (inputs not from a powerful lattice) raises InvariantError.
  Matrix evaluate(const Matrix& X, const Matrix& Y) const;

private:
  unsigned degree_;
  std::vector<Word> words_; // sorted by length; suffixes precede words
};

} // namespace padic
