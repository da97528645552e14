#include "padicalc/hopf.hpp"

#include "padicalc/errors.hpp"

namespace padic::hopf {

StructureConstants::StructureConstants(int dim, std::vector<mpz_class> tensor)
    : dim_(dim), c_(std::move(tensor)) {
  if (dim < 1) throw DomainError("lattice rank must be >= 1");
  if (c_.size() != static_cast<size_t>(dim) * dim * dim)
    throw DomainError("structure constant tensor has wrong size");
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        if (i == j && c(i, j, k) != 0)
          throw DomainError("structure constants not alternating");
        if (c(i, j, k) != -c(j, i, k))
          throw DomainError("structure constants not antisymmetric");
      }
  // Jacobi: [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]] = 0
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int l = j + 1; l < dim_; ++l)
        for (int k = 0; k < dim_; ++k) {
          mpz_class total = 0;
          for (int m = 0; m < dim_; ++m)
            total += c(j, l, m) * c(i, m, k) + c(l, i, m) * c(j, m, k) +
                     c(i, j, m) * c(l, m, k);
          if (total != 0)
            throw DomainError("structure constants fail the Jacobi "
                              "identity");
        }
}

bool StructureConstants::powerful(const PrimeContext& ctx) const {
  for (const mpz_class& v : c_)
    if (v != 0 && ctx.valuation(v) < ctx.epsilon()) return false;
  return true;
}

StructureConstants StructureConstants::scaled(const PrimeContext& ctx,
                                              unsigned n) const {
  mpz_class f = ctx.pow_p(n);
  std::vector<mpz_class> c = c_;
  for (mpz_class& v : c) v *= f;
  return StructureConstants(dim_, std::move(c));
}

StructureConstants StructureConstants::abelian(int dim) {
  return StructureConstants(
      dim, std::vector<mpz_class>(
               static_cast<size_t>(dim) * dim * dim, mpz_class(0)));
}

StructureConstants StructureConstants::heisenberg(const PrimeContext& ctx) {
  // basis (e, f, h): [e, f] = p h
  std::vector<mpz_class> c(27, mpz_class(0));
  auto at = [&](int i, int j, int k) -> mpz_class& {
    return c[static_cast<size_t>((i * 3 + j) * 3 + k)];
  };
  at(0, 1, 2) = ctx.p();
  at(1, 0, 2) = -ctx.p();
  return StructureConstants(3, std::move(c));
}

StructureConstants StructureConstants::scaled_sl2(const PrimeContext& ctx) {
  // basis (e, h, f) of p*sl_2: [h,e] = 2p e, [h,f] = -2p f, [e,f] = p h
  std::vector<mpz_class> c(27, mpz_class(0));
  auto at = [&](int i, int j, int k) -> mpz_class& {
    return c[static_cast<size_t>((i * 3 + j) * 3 + k)];
  };
  const mpz_class p = ctx.p();
  at(1, 0, 0) = 2 * p;
  at(0, 1, 0) = -2 * p;
  at(1, 2, 2) = -2 * p;
  at(2, 1, 2) = 2 * p;
  at(0, 2, 1) = p;
  at(2, 0, 1) = -p;
  return StructureConstants(3, std::move(c));
}

namespace {

using LiePoly = std::vector<TruncatedPoly>; // coordinates on e_1..e_d

LiePoly lie_poly_bracket(const StructureConstants& sc, const LiePoly& P,
                         const LiePoly& Q) {
  int d = sc.dim();
  const TruncatedPoly& model = P[0];
  LiePoly R(static_cast<size_t>(d),
            TruncatedPoly(model.nvars(), model.max_degree()));
  for (int i = 0; i < d; ++i) {
    if (P[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (Q[static_cast<size_t>(j)].is_zero()) continue;
      bool needed = false;
      for (int k = 0; k < d; ++k)
        if (sc.c(i, j, k) != 0) needed = true;
      if (!needed) continue;
      TruncatedPoly prod =
          P[static_cast<size_t>(i)].mul(Q[static_cast<size_t>(j)]);
      for (int k = 0; k < d; ++k)
        if (sc.c(i, j, k) != 0)
          R[static_cast<size_t>(k)] = R[static_cast<size_t>(k)].add(
              prod.scale(Rational(sc.c(i, j, k))));
    }
  }
  return R;
}

} // namespace

PhiCoordinates phi_coordinates(const StructureConstants& sc,
                               const PrimeContext& ctx, unsigned D) {
  int d = sc.dim();
  int nv = 2 * d;
  BchTruncation bch(D);

  LiePoly X, Y;
  for (int k = 0; k < d; ++k) {
    X.push_back(TruncatedPoly::variable(nv, D, k));
    Y.push_back(TruncatedPoly::variable(nv, D, d + k));
  }
  std::vector<LiePoly> value;
  value.reserve(bch.words().size());
  LiePoly result(static_cast<size_t>(d), TruncatedPoly(nv, D));
  for (const auto& w : bch.words()) {
    if (w.suffix < 0) {
      value.push_back(w.letters[0] == 'X' ? X : Y);
    } else {
      const LiePoly& inner = value[static_cast<size_t>(w.suffix)];
      value.push_back(
          lie_poly_bracket(sc, w.letters[0] == 'X' ? X : Y, inner));
    }
    if (w.coeff.num() == 0) continue;
    for (int k = 0; k < d; ++k)
      result[static_cast<size_t>(k)] = result[static_cast<size_t>(k)].add(
          value.back()[static_cast<size_t>(k)].scale(w.coeff));
  }

  PhiCoordinates phi;
  phi.dim = d;
  phi.degree = D;
  phi.phi = std::move(result);
  phi.min_coefficient_valuation = Rational(0);
  bool have = false;
  for (const TruncatedPoly& f : phi.phi) {
    Rational v = f.min_coefficient_valuation(ctx, Rational(0));
    if (!f.is_zero() && (!have || v < phi.min_coefficient_valuation)) {
      phi.min_coefficient_valuation = v;
      have = true;
    }
  }
  phi.integral = phi.min_coefficient_valuation >= Rational(0);
  return phi;
}

TruncatedPoly comult(const TruncatedPoly& element, const PhiCoordinates& phi) {
  if (element.nvars() != phi.dim)
    throw DomainError("comult input must live in the d dual generators");
  return element.substitute(phi.phi);
}

CoassocReport coassociativity_check(const PhiCoordinates& phi,
                                    const PrimeContext& ctx) {
  int d = phi.dim;
  int nv3 = 3 * d;
  unsigned D = phi.degree;

  // re-index a 2d-variable polynomial into the 3d-variable ring, with
  // the two blocks sent to chosen variable offsets
  auto embed = [&](const TruncatedPoly& f, int first_off, int second_off) {
    std::vector<TruncatedPoly> images;
    images.reserve(static_cast<size_t>(2 * d));
    for (int i = 0; i < d; ++i)
      images.push_back(TruncatedPoly::variable(nv3, D, first_off + i));
    for (int i = 0; i < d; ++i)
      images.push_back(TruncatedPoly::variable(nv3, D, second_off + i));
    return f.substitute(images);
  };

  // (Delta x id) Delta: substitute Phi_i(x, y) for the first block,
  // z-variables for the second
  std::vector<TruncatedPoly> left_images;
  for (int i = 0; i < d; ++i)
    left_images.push_back(embed(phi.phi[static_cast<size_t>(i)], 0, d));
  for (int i = 0; i < d; ++i)
    left_images.push_back(TruncatedPoly::variable(nv3, D, 2 * d + i));

  // (id x Delta) Delta: x-variables, then Phi_i(y, z)
  std::vector<TruncatedPoly> right_images;
  for (int i = 0; i < d; ++i)
    right_images.push_back(TruncatedPoly::variable(nv3, D, i));
  for (int i = 0; i < d; ++i)
    right_images.push_back(embed(phi.phi[static_cast<size_t>(i)], d, 2 * d));

  CoassocReport report;
  report.exact = true;
  for (int j = 0; j < d; ++j) {
    TruncatedPoly left =
        phi.phi[static_cast<size_t>(j)].substitute(left_images);
    TruncatedPoly right =
        phi.phi[static_cast<size_t>(j)].substitute(right_images);
    TruncatedPoly diff = left.sub(right);
    if (diff.is_zero()) {
      report.per_generator.push_back(std::nullopt);
    } else {
      report.exact = false;
      report.per_generator.push_back(
          diff.min_coefficient_valuation(ctx, Rational(0)));
    }
  }
  return report;
}

bool counit_check(const PhiCoordinates& phi) {
  int d = phi.dim;
  unsigned D = phi.degree;
  std::vector<TruncatedPoly> x_then_zero, zero_then_y;
  for (int i = 0; i < d; ++i)
    x_then_zero.push_back(TruncatedPoly::variable(d, D, i));
  for (int i = 0; i < d; ++i)
    x_then_zero.push_back(TruncatedPoly(d, D));
  for (int i = 0; i < d; ++i)
    zero_then_y.push_back(TruncatedPoly(d, D));
  for (int i = 0; i < d; ++i)
    zero_then_y.push_back(TruncatedPoly::variable(d, D, i));
  for (int j = 0; j < d; ++j) {
    TruncatedPoly xj = TruncatedPoly::variable(d, D, j);
    if (!(phi.phi[static_cast<size_t>(j)].substitute(x_then_zero) == xj))
      return false;
    if (!(phi.phi[static_cast<size_t>(j)].substitute(zero_then_y) == xj))
      return false;
  }
  return true;
}

PhiCoordinates scale_lattice(const PhiCoordinates& phi,
                             const PrimeContext& ctx, unsigned n) {
  // Phi'_j(x, y) = p^(-n) Phi_j(p^n x, p^n y): the degree-m component
  // picks up p^(n(m-1))
  Rational pn(ctx.pow_p(n));
  PhiCoordinates out;
  out.dim = phi.dim;
  out.degree = phi.degree;
  for (const TruncatedPoly& f : phi.phi)
    out.phi.push_back(
        f.scale_by_degree(pn).scale(Rational(mpz_class(1), ctx.pow_p(n))));
  out.min_coefficient_valuation = Rational(0);
  bool have = false;
  for (const TruncatedPoly& f : out.phi) {
    Rational v = f.min_coefficient_valuation(ctx, Rational(0));
    if (!f.is_zero() && (!have || v < out.min_coefficient_valuation)) {
      out.min_coefficient_valuation = v;
      have = true;
    }
  }
  out.integral = out.min_coefficient_valuation >= Rational(0);
  return out;
}

std::vector<TruncatedPoly> antipode(const PhiCoordinates& phi) {
  int d = phi.dim;
  unsigned D = phi.degree;
  std::vector<TruncatedPoly> iota;
  for (int j = 0; j < d; ++j)
    iota.push_back(TruncatedPoly::variable(d, D, j).neg());
  // iota <- iota - Phi(x, iota); each pass fixes one more degree
  for (unsigned pass = 0; pass <= D; ++pass) {
    std::vector<TruncatedPoly> images;
    for (int i = 0; i < d; ++i)
      images.push_back(TruncatedPoly::variable(d, D, i));
    for (int i = 0; i < d; ++i) images.push_back(iota[static_cast<size_t>(i)]);
    std::vector<TruncatedPoly> next;
    bool fixed_point = true;
    for (int j = 0; j < d; ++j) {
      TruncatedPoly err =
          phi.phi[static_cast<size_t>(j)].substitute(images);
      if (!err.is_zero()) fixed_point = false;
      next.push_back(iota[static_cast<size_t>(j)].sub(err));
    }
    iota = std::move(next);
    if (fixed_point) break;
  }
  return iota;
}

bool antipode_check(const PhiCoordinates& phi) {
  int d = phi.dim;
  unsigned D = phi.degree;
  std::vector<TruncatedPoly> iota = antipode(phi);
  std::vector<TruncatedPoly> left_images, right_images;
  for (int i = 0; i < d; ++i)
    left_images.push_back(iota[static_cast<size_t>(i)]);
  for (int i = 0; i < d; ++i)
    left_images.push_back(TruncatedPoly::variable(d, D, i));
  for (int i = 0; i < d; ++i)
    right_images.push_back(TruncatedPoly::variable(d, D, i));
  for (int i = 0; i < d; ++i)
    right_images.push_back(iota[static_cast<size_t>(i)]);
  for (int j = 0; j < d; ++j) {
    if (!phi.phi[static_cast<size_t>(j)].substitute(left_images).is_zero())
      return false;
    if (!phi.phi[static_cast<size_t>(j)].substitute(right_images).is_zero())
      return false;
  }
  return true;
}

std::vector<Rational> evaluate_phi(const PhiCoordinates& phi,
                                   const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) {
  if (x.size() != static_cast<size_t>(phi.dim) || y.size() != x.size())
    throw DomainError("evaluate_phi needs d coordinates per side");
  std::vector<Rational> point = x;
  point.insert(point.end(), y.begin(), y.end());
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const TruncatedPoly& f : phi.phi) out.push_back(f.evaluate(point));
  return out;
}

StructureConstants change_basis(const StructureConstants& sc,
                                const std::vector<mpz_class>& g) {
  int d = sc.dim();
  if (g.size() != static_cast<size_t>(d) * d)
    throw DomainError("basis change matrix has wrong size");
  auto G = [&](int r, int c) { return Rational(g[static_cast<size_t>(r * d + c)]); };

  // exact rational inverse by Gauss-Jordan
  std::vector<Rational> a(static_cast<size_t>(d) * d), inv(a.size(), Rational(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[static_cast<size_t>(i * d + j)] = G(i, j);
  for (int i = 0; i < d; ++i) inv[static_cast<size_t>(i * d + i)] = Rational(1);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (a[static_cast<size_t>(r * d + col)].num() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("basis change matrix is singular");
    for (int j = 0; j < d; ++j) {
      std::swap(a[static_cast<size_t>(pivot * d + j)],
                a[static_cast<size_t>(col * d + j)]);
      std::swap(inv[static_cast<size_t>(pivot * d + j)],
                inv[static_cast<size_t>(col * d + j)]);
    }
    Rational pv = a[static_cast<size_t>(col * d + col)];
    for (int j = 0; j < d; ++j) {
      a[static_cast<size_t>(col * d + j)] =
          a[static_cast<size_t>(col * d + j)] / pv;
      inv[static_cast<size_t>(col * d + j)] =
          inv[static_cast<size_t>(col * d + j)] / pv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      Rational f = a[static_cast<size_t>(r * d + col)];
      if (f.num() == 0) continue;
      for (int j = 0; j < d; ++j) {
        a[static_cast<size_t>(r * d + j)] =
            a[static_cast<size_t>(r * d + j)] -
            f * a[static_cast<size_t>(col * d + j)];
        inv[static_cast<size_t>(r * d + j)] =
            inv[static_cast<size_t>(r * d + j)] -
            f * inv[static_cast<size_t>(col * d + j)];
      }
    }
  }

  std::vector<mpz_class> out(static_cast<size_t>(d) * d * d, mpz_class(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Rational total(0);
        for (int l = 0; l < d; ++l)
          for (int m = 0; m < d; ++m)
            for (int r = 0; r < d; ++r)
              total = total + G(l, i) * G(m, j) * Rational(sc.c(l, m, r)) *
                                  inv[static_cast<size_t>(k * d + r)];
        if (!total.is_integer())
          throw DomainError("transported constants leave the lattice; "
                            "basis change not unimodular");
        out[static_cast<size_t>((i * d + j) * d + k)] = total.num();
      }
  return StructureConstants(d, std::move(out));
}

} // namespace padic::hopf
