#include "padicalc/poly.hpp"

#include "padicalc/errors.hpp"

namespace padic {

namespace {
constexpr int kMaxVars = 14;
constexpr unsigned kMaxExp = 15;
} // namespace

TruncatedPoly::TruncatedPoly(int nvars, unsigned max_degree)
    : nvars_(nvars), max_degree_(max_degree) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DomainError("polynomial supports 1..14 variables");
  if (max_degree > kMaxExp)
    throw DomainError("polynomial degree bound must be <= 15");
}

uint64_t TruncatedPoly::pack(const std::vector<unsigned>& exponents) {
  uint64_t key = 0;
  unsigned deg = 0;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExp) throw DomainError("exponent too large");
    key |= static_cast<uint64_t>(exponents[i]) << (4 * i);
    deg += exponents[i];
  }
  return key | (static_cast<uint64_t>(deg) << 56);
}

TruncatedPoly TruncatedPoly::constant(int nvars, unsigned max_degree,
                                      const Rational& c) {
  TruncatedPoly p(nvars, max_degree);
  if (c.num() != 0) p.terms_.emplace(0, c);
  return p;
}

TruncatedPoly TruncatedPoly::variable(int nvars, unsigned max_degree,
                                      int index) {
  TruncatedPoly p(nvars, max_degree);
  if (index < 0 || index >= nvars) throw DomainError("variable index");
  if (max_degree >= 1)
    p.terms_.emplace((uint64_t(1) << 56) | (uint64_t(1) << (4 * index)),
                     Rational(1));
  return p;
}

void TruncatedPoly::insert(uint64_t key, const Rational& c) {
  if (c.num() == 0) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.num() == 0) terms_.erase(it);
  }
}

TruncatedPoly TruncatedPoly::add(const TruncatedPoly& o) const {
  if (nvars_ != o.nvars_ || max_degree_ != o.max_degree_)
    throw InvariantError("polynomial ring mismatch");
  TruncatedPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.insert(k, c);
  return r;
}

TruncatedPoly TruncatedPoly::sub(const TruncatedPoly& o) const {
  return add(o.neg());
}

TruncatedPoly TruncatedPoly::neg() const {
  TruncatedPoly r(nvars_, max_degree_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TruncatedPoly TruncatedPoly::mul(const TruncatedPoly& o) const {
  if (nvars_ != o.nvars_ || max_degree_ != o.max_degree_)
    throw InvariantError("polynomial ring mismatch");
  TruncatedPoly r(nvars_, max_degree_);
  for (const auto& [ka, ca] : terms_) {
    unsigned da = packed_degree(ka);
    for (const auto& [kb, cb] : o.terms_) {
      if (da + packed_degree(kb) > max_degree_) continue;
      r.insert(ka + kb, ca * cb);
    }
  }
  return r;
}

TruncatedPoly TruncatedPoly::scale(const Rational& c) const {
  TruncatedPoly r(nvars_, max_degree_);
  if (c.num() == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

Rational TruncatedPoly::coefficient(
    const std::vector<unsigned>& exponents) const {
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedPoly TruncatedPoly::substitute(
    const std::vector<TruncatedPoly>& images) const {
  if (images.size() != static_cast<size_t>(nvars_))
    throw DomainError("substitute needs one image per variable");
  const TruncatedPoly& model = images[0];
  // lazily built power cache per variable
  std::vector<std::vector<TruncatedPoly>> powers(images.size());
  auto power = [&](size_t i, unsigned e) -> const TruncatedPoly& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(TruncatedPoly::constant(model.nvars_,
                                              model.max_degree_, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back().mul(images[i]));
    return cache[e];
  };
  TruncatedPoly result(model.nvars_, model.max_degree_);
  for (const auto& [k, c] : terms_) {
    TruncatedPoly term =
        TruncatedPoly::constant(model.nvars_, model.max_degree_, c);
    for (int i = 0; i < nvars_; ++i) {
      unsigned e = (k >> (4 * i)) & 0xf;
      if (e > 0) term = term.mul(power(static_cast<size_t>(i), e));
    }
    result = result.add(term);
  }
  return result;
}

TruncatedPoly TruncatedPoly::scale_by_degree(const Rational& factor) const {
  TruncatedPoly r(nvars_, max_degree_);
  std::vector<Rational> pw{Rational(1)};
  for (const auto& [k, c] : terms_) {
    unsigned d = packed_degree(k);
    while (pw.size() <= d) pw.push_back(pw.back() * factor);
    Rational scaled = c * pw[d];
    if (scaled.num() != 0) r.terms_.emplace(k, scaled);
  }
  return r;
}

Rational TruncatedPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != static_cast<size_t>(nvars_))
    throw DomainError("evaluate needs one value per variable");
  Rational total(0);
  for (const auto& [k, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      unsigned e = (k >> (4 * i)) & 0xf;
      for (unsigned j = 0; j < e; ++j)
        term = term * point[static_cast<size_t>(i)];
    }
    total = total + term;
  }
  return total;
}

Rational TruncatedPoly::min_coefficient_valuation(
    const PrimeContext& ctx, const Rational& max_if_zero) const {
  bool have = false;
  Rational best;
  for (const auto& [k, c] : terms_) {
    Rational v(ctx.valuation(c.num()) - ctx.valuation(c.den()));
    if (!have || v < best) best = v;
    have = true;
  }
  return have ? best : max_if_zero;
}

bool TruncatedPoly::operator==(const TruncatedPoly& o) const {
  return nvars_ == o.nvars_ && max_degree_ == o.max_degree_ &&
         terms_ == o.terms_;
}

} // namespace padic
