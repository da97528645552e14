#include "padicalc/matrix.hpp"

#include <algorithm>

#include "padicalc/errors.hpp"

namespace padic {

namespace {

mpz_class invert_mod(const mpz_class& u, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()))
    throw DomainError("matrix pivot not invertible");
  return r;
}

} // namespace

Matrix Matrix::zero(const PrimeContext& ctx, int dim, long prec) {
  if (dim < 1) throw DomainError("matrix dimension must be >= 1");
  if (prec < 1) throw PrecisionError("matrix precision must be >= 1");
  return Matrix(ctx, dim, prec);
}

Matrix Matrix::identity(const PrimeContext& ctx, int dim, long prec) {
  Matrix m = zero(ctx, dim, prec);
  for (int i = 0; i < dim; ++i) m.e_[m.idx(i, i)] = 1;
  return m;
}

Matrix Matrix::from_entries(const PrimeContext& ctx, int dim, long prec,
                            std::vector<mpz_class> entries) {
  Matrix m = zero(ctx, dim, prec);
  if (entries.size() != m.e_.size())
    throw DomainError("entry count does not match dimension");
  for (size_t k = 0; k < entries.size(); ++k) {
    mpz_class r = entries[k] % m.modulus_;
    if (r < 0) r += m.modulus_;
    m.e_[k] = std::move(r);
  }
  return m;
}

Scalar Matrix::entry(int i, int j) const {
  return Scalar::from_integer_abs(ctx_, raw(i, j), prec_);
}

void Matrix::check_compatible(const Matrix& o) const {
  require_same_prime(ctx_, o.ctx_);
  if (dim_ != o.dim_)
    throw InvariantError("matrix dimensions differ");
}

Matrix Matrix::add(const Matrix& o) const {
  check_compatible(o);
  Matrix r = zero(ctx_, dim_, std::min(prec_, o.prec_));
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = (e_[k] + o.e_[k]) % r.modulus_;
  return r;
}

Matrix Matrix::sub(const Matrix& o) const {
  check_compatible(o);
  Matrix r = zero(ctx_, dim_, std::min(prec_, o.prec_));
  for (size_t k = 0; k < e_.size(); ++k) {
    mpz_class d = (e_[k] - o.e_[k]) % r.modulus_;
    if (d < 0) d += r.modulus_;
    r.e_[k] = std::move(d);
  }
  return r;
}

Matrix Matrix::mul(const Matrix& o) const {
  check_compatible(o);
  Matrix r = zero(ctx_, dim_, std::min(prec_, o.prec_));
  mpz_class acc, t;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      acc = 0;
      for (int k = 0; k < dim_; ++k) {
        t = e_[idx(i, k)] * o.e_[o.idx(k, j)];
        acc += t;
      }
      r.e_[r.idx(i, j)] = acc % r.modulus_;
    }
  return r;
}

Matrix Matrix::neg() const {
  Matrix r = zero(ctx_, dim_, prec_);
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = (e_[k] == 0) ? mpz_class(0) : modulus_ - e_[k];
  return r;
}

Matrix Matrix::scalar_mul(const Scalar& s) const {
  require_same_prime(ctx_, s.context());
  if (s.is_exact_zero()) return zero(ctx_, dim_, prec_);
  if (s.kind() == Scalar::Kind::ZeroAtPrecision) {
    long prec = std::min(prec_, s.abs_precision() + min_valuation());
    return zero(ctx_, dim_, std::max(prec, 1L));
  }
  if (s.valuation() < 0)
    throw DomainError("scalar_mul requires valuation >= 0");
  // Entry s*a_ij is known mod p^min(v_s + prec, abs_s + v(a_ij)).
  long prec = std::min(s.valuation() + prec_,
                       s.abs_precision() + min_valuation());
  Matrix r = zero(ctx_, dim_, std::max(prec, 1L));
  mpz_class factor = s.residue() % r.modulus_;
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = (e_[k] * factor) % r.modulus_;
  return r;
}

Matrix Matrix::mul_integer(const mpz_class& n) const {
  Matrix r = zero(ctx_, dim_, prec_);
  mpz_class f = n % modulus_;
  if (f < 0) f += modulus_;
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = (e_[k] * f) % modulus_;
  return r;
}

Matrix Matrix::pow(const mpz_class& e) const {
  if (e < 0) throw DomainError("matrix pow needs a nonnegative exponent");
  Matrix result = identity(ctx_, dim_, prec_);
  Matrix base = *this;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = result.mul(base);
    n >>= 1;
    if (n > 0) base = base.mul(base);
  }
  return result;
}

Matrix Matrix::inverse() const {
  // Gauss-Jordan over Z/p^prec; pivots must be units.
  Matrix a = *this;
  Matrix inv = identity(ctx_, dim_, prec_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int row = col; row < dim_; ++row)
      if (a.e_[a.idx(row, col)] % ctx_.p() != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw DomainError("matrix not invertible over Z_p");
    if (pivot != col)
      for (int j = 0; j < dim_; ++j) {
        std::swap(a.e_[a.idx(pivot, j)], a.e_[a.idx(col, j)]);
        std::swap(inv.e_[inv.idx(pivot, j)], inv.e_[inv.idx(col, j)]);
      }
    mpz_class pinv = invert_mod(a.e_[a.idx(col, col)], modulus_);
    for (int j = 0; j < dim_; ++j) {
      a.e_[a.idx(col, j)] = (a.e_[a.idx(col, j)] * pinv) % modulus_;
      inv.e_[inv.idx(col, j)] = (inv.e_[inv.idx(col, j)] * pinv) % modulus_;
    }
    for (int row = 0; row < dim_; ++row) {
      if (row == col) continue;
      mpz_class f = a.e_[a.idx(row, col)];
      if (f == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        a.e_[a.idx(row, j)] =
            (a.e_[a.idx(row, j)] - f * a.e_[a.idx(col, j)]) % modulus_;
        if (a.e_[a.idx(row, j)] < 0) a.e_[a.idx(row, j)] += modulus_;
        inv.e_[inv.idx(row, j)] =
            (inv.e_[inv.idx(row, j)] - f * inv.e_[inv.idx(col, j)]) %
            modulus_;
        if (inv.e_[inv.idx(row, j)] < 0) inv.e_[inv.idx(row, j)] += modulus_;
      }
    }
  }
  return inv;
}

long Matrix::min_valuation() const {
  long best = prec_;
  for (const mpz_class& x : e_) {
    if (x == 0) continue;
    best = std::min(best, ctx_.valuation(x));
    if (best == 0) break;
  }
  return best;
}

long Matrix::congruence_valuation(const Matrix& o) const {
  return sub(o).min_valuation();
}

bool Matrix::congruent(const Matrix& o) const {
  Matrix d = sub(o);
  return d.min_valuation() >= d.precision();
}

bool Matrix::identical(const Matrix& o) const {
  return ctx_ == o.ctx_ && dim_ == o.dim_ && prec_ == o.prec_ && e_ == o.e_;
}

Matrix Matrix::reduce(long prec) const {
  if (prec > prec_)
    throw PrecisionError("reduce cannot raise precision");
  Matrix r = zero(ctx_, dim_, prec);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] % r.modulus_;
  return r;
}

Matrix Matrix::lifted_representative(long prec) const {
  if (prec < prec_) return reduce(prec);
  Matrix r = zero(ctx_, dim_, prec);
  r.e_ = e_;
  return r;
}

Matrix Matrix::divide_by_p() const {
  if (prec_ < 2) throw PrecisionError("divide_by_p exhausts precision");
  Matrix r = zero(ctx_, dim_, prec_ - 1);
  for (size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] % ctx_.p() != 0)
      throw DomainError("divide_by_p: entry not divisible by p");
    r.e_[k] = e_[k] / ctx_.p();
  }
  return r;
}

Matrix Matrix::times_p() const {
  Matrix r = zero(ctx_, dim_, prec_ + 1);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * ctx_.p();
  return r;
}

namespace {

// Exact division of a residue by p^j * unit(fact) at modulus p^W; the
// represented value is divisible, so the residue must be too.
mpz_class divide_residue(const mpz_class& r, const mpz_class& pj,
                         const mpz_class& unit_inv, const mpz_class& mod) {
  if (r % pj != 0)
    throw InvariantError("series term residue not divisible as promised");
  return ((r / pj) * unit_inv) % mod;
}

} // namespace

Matrix padic_exp(const Matrix& a) {
  const PrimeContext& ctx = a.context();
  long N = a.precision();
  long v = a.min_valuation();
  if (v < ctx.epsilon())
    throw DomainError(
        "exp argument outside convergence domain: needs valuation >= " +
        std::to_string(ctx.epsilon()));
  if (v >= N) return Matrix::identity(ctx, a.dim(), N);

  // Terms a^k/k! have valuation >= k*v - (k-1)/(p-1); stop once that
  // clears N. p-1 may be huge, so cap the arithmetic.
  mpz_class pm1 = ctx.p() - 1;
  mpz_class kk = (mpz_class(N) * pm1 - 1) / (mpz_class(v) * pm1 - 1) + 1;
  unsigned long K = kk.get_ui();
  long guard = factorial_valuation(K, ctx);
  long W = N + guard;

  Matrix lift = a.lifted_representative(W);
  Matrix sum = Matrix::identity(ctx, a.dim(), W);
  Matrix power = Matrix::identity(ctx, a.dim(), W);
  mpz_class fact_unit(1);
  long fact_val = 0;
  const mpz_class& mod = sum.modulus();
  for (unsigned long k = 1; k <= K; ++k) {
    power = power.mul(lift);
    mpz_class uk;
    fact_val += ctx.split(mpz_class(k), uk);
    fact_unit = (fact_unit * uk) % mod;
    bool all_zero = true;
    std::vector<mpz_class> term(static_cast<size_t>(a.dim()) * a.dim());
    mpz_class pj = ctx.pow_p(static_cast<unsigned long>(fact_val));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), fact_unit.get_mpz_t(), mod.get_mpz_t());
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        term[static_cast<size_t>(i) * a.dim() + j] =
            divide_residue(power.raw(i, j), pj, inv, mod);
        if (term[static_cast<size_t>(i) * a.dim() + j] != 0) all_zero = false;
      }
    if (all_zero && power.min_valuation() >= W) break; // nilpotent input
    sum = sum.add(Matrix::from_entries(ctx, a.dim(), W, std::move(term)));
  }
  return sum.reduce(N);
}

Matrix padic_log(const Matrix& x) {
  const PrimeContext& ctx = x.context();
  long N = x.precision();
  Matrix y = x.sub(Matrix::identity(ctx, x.dim(), N));
  long v = y.min_valuation();
  if (v < ctx.epsilon())
    throw DomainError("log argument not congruent to the identity mod p^" +
                      std::to_string(ctx.epsilon()));
  if (v >= N) return Matrix::zero(ctx, x.dim(), N);

  // Find K with k*v - v_p(k) >= N for all k >= K; the bound increases
  // by at least v - 1 >= 0 per step and strictly within p-power gaps.
  unsigned long K = 1;
  {
    long logk = 0;
    mpz_class pw = ctx.p();
    for (unsigned long k = 1;; ++k) {
      while (pw <= static_cast<long>(k)) {
        ++logk;
        pw *= ctx.p();
      }
      if (static_cast<long>(k) * v - logk >= N) {
        K = k;
        break;
      }
    }
  }
  long guard = 0;
  {
    mpz_class pw = ctx.p();
    while (pw <= static_cast<long>(K)) {
      ++guard;
      pw *= ctx.p();
    }
  }
  long W = N + guard;

  Matrix lift = y.lifted_representative(W);
  Matrix sum = Matrix::zero(ctx, x.dim(), W);
  Matrix power = Matrix::identity(ctx, x.dim(), W);
  const mpz_class& mod = sum.modulus();
  for (unsigned long k = 1; k <= K; ++k) {
    power = power.mul(lift);
    if (power.min_valuation() >= W) break; // nilpotent input
    mpz_class uk;
    long jk = ctx.split(mpz_class(k), uk);
    mpz_class pj = ctx.pow_p(static_cast<unsigned long>(jk));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), uk.get_mpz_t(), mod.get_mpz_t());
    std::vector<mpz_class> term(static_cast<size_t>(x.dim()) * x.dim());
    for (int i = 0; i < x.dim(); ++i)
      for (int j = 0; j < x.dim(); ++j)
        term[static_cast<size_t>(i) * x.dim() + j] =
            divide_residue(power.raw(i, j), pj, inv, mod);
    Matrix t = Matrix::from_entries(ctx, x.dim(), W, std::move(term));
    sum = (k % 2 == 1) ? sum.add(t) : sum.sub(t);
  }
  return sum.reduce(N);
}

} // namespace padic
