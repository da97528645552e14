#pragma once

#include <gmpxx.h>
#include <vector>

#include "padicalc/prime.hpp"
#include "padicalc/scalar.hpp"

namespace padic {

/// A d x d matrix over Z_p at a common absolute precision: every entry
/// is a canonical residue in [0, p^prec). Immutable after construction.
class Matrix {
public:
  static Matrix zero(const PrimeContext& ctx, int dim, long prec);
  static Matrix identity(const PrimeContext& ctx, int dim, long prec);
  /// Entries reduced modulo p^prec (row-major order).
  static Matrix from_entries(const PrimeContext& ctx, int dim, long prec,
                             std::vector<mpz_class> entries);

  const PrimeContext& context() const { return ctx_; }
  int dim() const { return dim_; }
  long precision() const { return prec_; }
  const mpz_class& modulus() const { return modulus_; }
  const mpz_class& raw(int i, int j) const { return e_[idx(i, j)]; }
  Scalar entry(int i, int j) const;

  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix mul(const Matrix& o) const;
  Matrix neg() const;
  /// Multiplication by a scalar with valuation >= 0 (stays in Z_p).
  Matrix scalar_mul(const Scalar& s) const;
  Matrix mul_integer(const mpz_class& n) const;
  /// x^e for e >= 0 by repeated squaring, at this precision.
  Matrix pow(const mpz_class& e) const;
  /// Inverse modulo p^prec; the matrix must be invertible over Z_p
  /// (unit determinant).
  Matrix inverse() const;

  /// Smallest entry valuation, capped at the precision (an all-zero
  /// residue matrix reports prec).
  long min_valuation() const;
  /// v(this - o) entrywise minimum, capped at min(precisions).
  long congruence_valuation(const Matrix& o) const;
  bool congruent(const Matrix& o) const;
  bool identical(const Matrix& o) const;

  /// Same value at a smaller precision.
  Matrix reduce(long prec) const;
  /// Reinterprets the stored representatives at a larger modulus.
  /// The extra digits are NOT information about the represented value;
  /// callers must justify any precision claim on the result (the group
  /// power/commutator maps do, via contraction estimates).
  Matrix lifted_representative(long prec) const;
  /// All entries divisible by p: divides them out, precision drops by 1.
  Matrix divide_by_p() const;
  /// Multiplies by p; precision grows by 1.
  Matrix times_p() const;

private:
  Matrix(const PrimeContext& ctx, int dim, long prec)
      : ctx_(ctx), dim_(dim), prec_(prec),
        modulus_(ctx.pow_p(static_cast<unsigned long>(prec))),
        e_(static_cast<size_t>(dim) * dim, mpz_class(0)) {}
  int idx(int i, int j) const { return i * dim_ + j; }
  void check_compatible(const Matrix& o) const;

  PrimeContext ctx_;
  int dim_;
  long prec_;
  mpz_class modulus_;
  std::vector<mpz_class> e_;
};

/// exp(a) = sum a^k / k! for a with entry valuations >= epsilon
/// (the convergence domain v > 1/(p-1)).
///
/// The series is summed at an internally raised working precision so
/// that divisions by k! cannot touch the reported digits; the result
/// is correct at the full input precision and is congruent to the
/// identity modulo p^epsilon.
Matrix padic_exp(const Matrix& a);

/// log(x) = sum (-1)^(k+1) (x-I)^k / k for x congruent to the identity
/// modulo p^epsilon. Guard digits absorb the division-by-k losses; the
/// result carries the full input precision and has entry valuations
/// >= epsilon.
Matrix padic_log(const Matrix& x);

} // namespace padic
