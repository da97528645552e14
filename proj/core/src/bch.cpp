#include "padicalc/bch.hpp"

#include <algorithm>
#include <map>

#include "padicalc/errors.hpp"

namespace padic {

namespace {

// Enumerates Dynkin block sequences (r_1,s_1)...(r_n,s_n), r_i+s_i >= 1,
// of total degree <= D, accumulating coefficients per letter string.
void enumerate_blocks(unsigned D, unsigned degree_so_far, unsigned n_blocks,
                      const mpz_class& fact_prod, std::string& letters,
                      std::map<std::string, Rational>& acc) {
  for (unsigned r = 0; r + degree_so_far <= D; ++r) {
    for (unsigned s = (r == 0 ? 1 : 0); r + s + degree_so_far <= D; ++s) {
      unsigned block = r + s;
      letters.append(r, 'X');
      letters.append(s, 'Y');
      mpz_class fr, fs;
      mpz_fac_ui(fr.get_mpz_t(), r);
      mpz_fac_ui(fs.get_mpz_t(), s);
      mpz_class fp = fact_prod * fr * fs;
      unsigned m = degree_so_far + block;
      unsigned n = n_blocks + 1;
      // Words whose two innermost letters agree vanish identically.
      if (m == 1 || letters[m - 1] != letters[m - 2]) {
        Rational c(mpz_class((n % 2 == 1) ? 1 : -1),
                   mpz_class(n) * mpz_class(m) * fp);
        auto [it, fresh] = acc.try_emplace(letters, c);
        if (!fresh) it->second = it->second + c;
      }
      enumerate_blocks(D, m, n, fp, letters, acc);
      letters.resize(letters.size() - block);
    }
  }
}

} // namespace

BchTruncation::BchTruncation(unsigned degree) : degree_(degree) {
  if (degree < 1) throw DomainError("BCH truncation degree must be >= 1");
  std::map<std::string, Rational> acc;
  std::string scratch;
  enumerate_blocks(degree, 0, 0, mpz_class(1), scratch, acc);

  // Close under suffixes so evaluation can extend word values one
  // bracket at a time, shortest first.
  std::map<std::string, Rational> table;
  for (auto& [w, c] : acc) {
    if (c.num() == 0) continue;
    table.insert_or_assign(w, c);
    for (size_t i = 1; i + 1 <= w.size(); ++i)
      table.try_emplace(w.substr(i), Rational(0));
  }
  std::vector<std::string> order;
  order.reserve(table.size());
  for (auto& [w, c] : table) order.push_back(w);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::string, int> index;
  words_.reserve(order.size());
  for (const std::string& w : order) {
    Word word;
    word.letters = w;
    word.coeff = table.at(w);
    word.suffix = (w.size() == 1) ? -1 : index.at(w.substr(1));
    index[w] = static_cast<int>(words_.size());
    words_.push_back(std::move(word));
  }
}

long BchTruncation::denominator_valuation(const PrimeContext& ctx) const {
  long worst = 0;
  for (const Word& w : words_) {
    if (w.coeff.num() == 0) continue;
    worst = std::max(worst, ctx.valuation(w.coeff.den()));
  }
  return worst;
}

Matrix BchTruncation::evaluate(const Matrix& X, const Matrix& Y) const {
  require_same_prime(X.context(), Y.context());
  if (X.dim() != Y.dim()) throw InvariantError("dimension mismatch");
  const PrimeContext& ctx = X.context();
  long N = std::min(X.precision(), Y.precision());
  long gp = denominator_valuation(ctx);
  long W = N + gp;
  mpz_class mod = ctx.pow_p(static_cast<unsigned long>(W));
  mpz_class pgp = ctx.pow_p(static_cast<unsigned long>(gp));

  Matrix lx = X.lifted_representative(W);
  Matrix ly = Y.lifted_representative(W);
  std::vector<Matrix> value; // per word, in table order
  value.reserve(words_.size());
  Matrix sum = Matrix::zero(ctx, X.dim(), W);
  for (const Word& w : words_) {
    if (w.suffix < 0) {
      value.push_back(w.letters[0] == 'X' ? lx : ly);
    } else {
      const Matrix& inner = value[static_cast<size_t>(w.suffix)];
      const Matrix& letter = (w.letters[0] == 'X') ? lx : ly;
      value.push_back(letter.mul(inner).sub(inner.mul(letter)));
    }
    if (w.coeff.num() == 0) continue;
    // common-denominator accumulation: add p^gp * coeff * value
    mpz_class du, nu_unit;
    long vden = ctx.split(w.coeff.den(), du);
    long vnum = ctx.split(w.coeff.num(), nu_unit);
    long shift = gp + vnum - vden; // >= 0 by choice of gp
    mpz_class du_inv;
    mpz_invert(du_inv.get_mpz_t(), du.get_mpz_t(), mod.get_mpz_t());
    mpz_class mult =
        (ctx.pow_p(static_cast<unsigned long>(shift)) * nu_unit % mod) *
        du_inv % mod;
    if (mult < 0) mult += mod;
    sum = sum.add(value.back().mul_integer(mult));
  }

  // sum = p^gp * Phi; the represented value is p-integral for inputs
  // from a powerful lattice, so the residue must divide out.
  std::vector<mpz_class> entries;
  entries.reserve(static_cast<size_t>(X.dim()) * X.dim());
  for (int i = 0; i < X.dim(); ++i)
    for (int j = 0; j < X.dim(); ++j) {
      if (sum.raw(i, j) % pgp != 0)
        throw InvariantError(
            "BCH accumulation not p-integral: inputs do not span a "
            "powerful lattice");
      entries.push_back(sum.raw(i, j) / pgp);
    }
  return Matrix::from_entries(ctx, X.dim(), N, std::move(entries));
}

} // namespace padic
