#include "doctest.h"

#include <map>
#include <random>

#include "padicalc/errors.hpp"
#include "padicalc/groups.hpp"

using namespace padic;
using namespace padic::groups;

namespace {

GroupElement rand_group(std::mt19937_64& rng, const PrimeContext& ctx, int d,
                        long prec) {
  std::vector<mpz_class> e(static_cast<size_t>(d) * d);
  mpz_class bound = ctx.pow_p(prec - ctx.epsilon());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      mpz_class r = 0;
      for (int l = 0; l < 2; ++l)
        r = (r << 32) +
            mpz_class(static_cast<unsigned long>(rng() & 0xffffffffULL));
      e[static_cast<size_t>(i * d + j)] =
          mpz_class(i == j ? 1 : 0) + ctx.pow_p(ctx.epsilon()) * (r % bound);
    }
  return GroupElement(Matrix::from_entries(ctx, d, prec, e));
}

// ----- independent BCH oracle: log(exp X exp Y) in the truncated free
// associative algebra over Q, evaluated on exact rational matrices -----

using FreeElt = std::map<std::string, Rational>;

FreeElt free_mul(const FreeElt& a, const FreeElt& b, unsigned D) {
  FreeElt r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (wa.size() + wb.size() > D) continue;
      auto [it, fresh] = r.try_emplace(wa + wb, ca * cb);
      if (!fresh) it->second = it->second + ca * cb;
    }
  return r;
}

FreeElt free_bch(unsigned D) {
  // z = exp(X) exp(Y) - 1
  FreeElt z;
  mpz_class fi(1);
  for (unsigned i = 0; i <= D; ++i) {
    if (i > 0) fi *= i;
    mpz_class fj(1);
    for (unsigned j = 0; i + j <= D; ++j) {
      if (j > 0) fj *= j;
      if (i + j == 0) continue;
      z.emplace(std::string(i, 'X') + std::string(j, 'Y'),
                Rational(mpz_class(1), fi * fj));
    }
  }
  FreeElt result, zk = z;
  for (unsigned k = 1; k <= D; ++k) {
    if (k > 1) zk = free_mul(zk, z, D);
    for (const auto& [w, c] : zk) {
      Rational contrib = c * Rational(mpz_class(k % 2 == 1 ? 1 : -1),
                                      mpz_class(k));
      auto [it, fresh] = result.try_emplace(w, contrib);
      if (!fresh) it->second = it->second + contrib;
    }
  }
  return result;
}

// evaluate a free-algebra element on exact integer matrices, over Q
std::vector<Rational> free_eval(const FreeElt& f, int d,
                                const std::vector<long>& X,
                                const std::vector<long>& Y) {
  auto mat_mul = [&](const std::vector<Rational>& a,
                     const std::vector<Rational>& b) {
    std::vector<Rational> r(static_cast<size_t>(d) * d, Rational(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational acc(0);
        for (int k = 0; k < d; ++k)
          acc = acc + a[static_cast<size_t>(i * d + k)] *
                          b[static_cast<size_t>(k * d + j)];
        r[static_cast<size_t>(i * d + j)] = acc;
      }
    return r;
  };
  std::vector<Rational> xm, ym, id;
  for (size_t i = 0; i < X.size(); ++i) {
    xm.emplace_back(X[i]);
    ym.emplace_back(Y[i]);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) id.emplace_back(i == j ? 1 : 0);
  std::vector<Rational> total(static_cast<size_t>(d) * d, Rational(0));
  for (const auto& [w, c] : f) {
    if (c.num() == 0) continue;
    std::vector<Rational> acc = id;
    for (char letter : w) acc = mat_mul(acc, letter == 'X' ? xm : ym);
    for (size_t i = 0; i < total.size(); ++i)
      total[i] = total[i] + c * acc[i];
  }
  return total;
}

} // namespace

TEST_SUITE("groups") {

TEST_CASE("group multiplication, inverse, closure") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(31);
  // 1x1: (1+3)(1+3) = 16
  GroupElement a(Matrix::from_entries(ctx, 1, 8, {4}));
  CHECK(group_mul(a, a).matrix().raw(0, 0) == 16);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = rand_group(rng, ctx, 2, 10);
    auto y = rand_group(rng, ctx, 2, 10);
    auto xy = group_mul(x, y); // constructor would reject leaving H
    CHECK(xy.depth() >= ctx.epsilon());
    CHECK(group_mul(x, group_inv(x))
              .matrix()
              .congruent(Matrix::identity(ctx, 2, 10)));
  }
}

TEST_CASE("p-th power examples and depth gain") {
  PrimeContext ctx(3);
  GroupElement x(Matrix::from_entries(ctx, 1, 8, {4}));
  CHECK(pth_power(x, 0).matrix().identical(x.matrix()));
  auto cube = pth_power(x, 1);
  CHECK(cube.precision() == 9);
  CHECK(cube.matrix().raw(0, 0) == 64);
  CHECK(cube.depth() >= 2); // 64 = 1 mod 9
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = rand_group(rng, ctx, 2, 10);
    CHECK(pth_power(g, 1).depth() >= 1 + ctx.epsilon());
  }
}

TEST_CASE("p-th roots invert p-th powers") {
  PrimeContext ctx(3);
  GroupElement y(Matrix::from_entries(ctx, 1, 8, {64}));
  auto root = pth_root(y, 1);
  CHECK(root.matrix().raw(0, 0) % ctx.pow_p(root.precision()) ==
        mpz_class(4) % ctx.pow_p(root.precision()));
  CHECK(pth_root(GroupElement(Matrix::identity(ctx, 2, 8)), 2)
            .matrix()
            .congruent(Matrix::identity(ctx, 2, 6)));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = rand_group(rng, ctx, 2, 12);
    auto back = pth_root(pth_power(x, 1), 1);
    CHECK(back.precision() == x.precision());
    CHECK(back.matrix().congruent(x.matrix()));
  }
  // depth precondition
  GroupElement shallow(Matrix::from_entries(ctx, 1, 8, {4}));
  CHECK_THROWS_AS(pth_root(shallow, 1), DomainError);
}

TEST_CASE("limit_add: commuting inputs collapse, identity is neutral") {
  PrimeContext ctx(3);
  // d = 1: every approximant equals (1+3)^2
  GroupElement x(Matrix::from_entries(ctx, 1, 10, {4}));
  auto res = limit_add(x, x, 4);
  CHECK(res.value.matrix().raw(0, 0) == 16);
  for (const auto& step : res.trace.steps) CHECK(step.at_floor);
  // x + identity = x
  GroupElement id(Matrix::identity(ctx, 1, 10));
  auto res2 = limit_add(x, id, 3);
  CHECK(res2.value.matrix().congruent(x.matrix()));
  for (const auto& step : res2.trace.steps) CHECK(step.at_floor);
}

TEST_CASE("limit_add converges to exp(log x + log y) with a monotone trace") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    auto x = rand_group(rng, ctx, 2, 12);
    auto y = rand_group(rng, ctx, 2, 12);
    auto res = limit_add(x, y, 12);
    CHECK(res.trace.nondecreasing);
    CHECK(res.trace.reached_floor);
    CHECK(res.trace.steps[6].discrepancy >= 8);
    CHECK(res.value.precision() == 12);
  }
}

TEST_CASE("the abelianized sum is commutative") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    auto x = rand_group(rng, ctx, 2, 12);
    auto y = rand_group(rng, ctx, 2, 12);
    auto xy = limit_add(x, y, 12).value;
    auto yx = limit_add(y, x, 12).value;
    CHECK(xy.matrix().congruent(yx.matrix()));
  }
}

TEST_CASE("limit_bracket: alternating, vanishing on commuting pairs, and "
          "convergent to the matrix commutator route") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(47);
  auto x = rand_group(rng, ctx, 2, 12);
  // [x, x] is the identity at every step
  auto self = limit_bracket(x, x, 3);
  CHECK(self.value.matrix().congruent(Matrix::identity(ctx, 2, 12)));
  for (const auto& s : self.trace.steps) CHECK(s.at_floor);
  // commuting pair: x with x^2
  auto comm = limit_bracket(x, group_mul(x, x), 3);
  CHECK(comm.value.matrix().congruent(Matrix::identity(ctx, 2, 12)));
  for (const auto& s : comm.trace.steps) CHECK(s.at_floor);
  // generic pairs approach exp([log x, log y])
  for (int trial = 0; trial < 5; ++trial) {
    auto a = rand_group(rng, ctx, 2, 12);
    auto b = rand_group(rng, ctx, 2, 12);
    auto res = limit_bracket(a, b, 12);
    CHECK(res.trace.nondecreasing);
    CHECK(res.trace.reached_floor);
  }
}

TEST_CASE("Z_p scalar action") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(53);
  auto x = rand_group(rng, ctx, 2, 12);
  CHECK(zp_scalar_action(Scalar::exact_zero(ctx), x)
            .matrix()
            .congruent(Matrix::identity(ctx, 2, 12)));
  CHECK(zp_scalar_action(Scalar::from_integer(ctx, 2, 12), x)
            .matrix()
            .congruent(group_mul(x, x).matrix()));
  // lambda = 1/2 in Z_3: (x^lambda)^2 = x
  Scalar half = Scalar::from_rational(ctx, Rational(1, 2), 12);
  auto sqrt_x = zp_scalar_action(half, x);
  CHECK(group_mul(sqrt_x, sqrt_x).matrix().congruent(x.matrix()));
  // distributes over limit_add
  auto y = rand_group(rng, ctx, 2, 12);
  auto sum = limit_add(x, y, 10).value;
  auto lhs = zp_scalar_action(half, sum);
  auto rhs = limit_add(zp_scalar_action(half, x), zp_scalar_action(half, y),
                       10)
                 .value;
  CHECK(lhs.matrix().congruence_valuation(rhs.matrix()) >= 10);
  CHECK_THROWS_AS(
      zp_scalar_action(Scalar::from_rational(ctx, Rational(1, 3), 8), x),
      DomainError);
}

TEST_CASE("powerful_check verdicts") {
  PrimeContext ctx(3);
  long prec = 10;
  auto unit = [&](int d, int i, int j, long scale) {
    std::vector<mpz_class> e(static_cast<size_t>(d) * d, mpz_class(0));
    e[static_cast<size_t>(i * d + j)] = scale;
    return Matrix::from_entries(ctx, d, prec, e);
  };
  // p M_2(Z_3): [pA, pB] = p^2 [A, B] in p * (p M_2)
  std::vector<Matrix> pm2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) pm2.push_back(unit(2, i, j, 3));
  CHECK(powerful_check(pm2, ctx).powerful);
  // M_2(Z_3): [E12, E21] = E11 - E22 has unit coordinates
  std::vector<Matrix> m2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m2.push_back(unit(2, i, j, 1));
  auto bad = powerful_check(m2, ctx);
  CHECK(!bad.powerful);
  CHECK(bad.closed_under_bracket);
  CHECK(bad.min_coordinate_valuation == 0);
  // abelian diagonal lattice scaled by p: zero brackets
  std::vector<Matrix> diag{unit(2, 0, 0, 3), unit(2, 1, 1, 3)};
  CHECK(powerful_check(diag, ctx).powerful);
  // a basis that is not bracket-closed: [pE12, pE21] = p^2(E11 - E22)
  // leaves span{pE12, pE21}
  std::vector<Matrix> open{unit(2, 0, 1, 3), unit(2, 1, 0, 3)};
  auto rep = powerful_check(open, ctx);
  CHECK(!rep.closed_under_bracket);
  CHECK(!rep.powerful);
}

TEST_CASE("BCH values stay in a powerful lattice") {
  // for L = pM_2 the series of two lattice elements lands back in L
  PrimeContext ctx(3);
  std::mt19937_64 rng(73);
  BchTruncation phi(8);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix X = padic_log(rand_group(rng, ctx, 2, 12).matrix());
    Matrix Y = padic_log(rand_group(rng, ctx, 2, 12).matrix());
    CHECK(phi.evaluate(X, Y).min_valuation() >= ctx.epsilon());
  }
}

TEST_CASE("BCH: commuting inputs, Heisenberg closed form, degree-2 "
          "truncation") {
  PrimeContext ctx(3);
  long prec = 12;
  BchTruncation phi6(6);
  // commuting: X and a polynomial in X
  Matrix X = Matrix::from_entries(ctx, 2, prec, {3, 6, 9, 3});
  Matrix Y = X.mul(X).add(X.mul_integer(2)); // 3-adically still >= 1
  CHECK(phi6.evaluate(X, Y).congruent(X.add(Y)));
  // Heisenberg: e = pE12, f = pE23, h = pE13, [e,f] = p h, all higher
  // brackets vanish: bch(e,f) = e + f + (p/2) h exactly
  Matrix e = Matrix::from_entries(ctx, 3, prec,
                                  {0, 3, 0, 0, 0, 0, 0, 0, 0});
  Matrix f = Matrix::from_entries(ctx, 3, prec,
                                  {0, 0, 0, 0, 0, 3, 0, 0, 0});
  Matrix h = Matrix::from_entries(ctx, 3, prec,
                                  {0, 0, 3, 0, 0, 0, 0, 0, 0});
  mpz_class inv2;
  mpz_invert(inv2.get_mpz_t(), mpz_class(2).get_mpz_t(),
             ctx.pow_p(prec).get_mpz_t());
  Matrix want = e.add(f).add(h.mul_integer((inv2 * 3) % ctx.pow_p(prec)));
  CHECK(phi6.evaluate(e, f).congruent(want));
  // D = 2 on generic input: X + Y + [X,Y]/2 exactly
  BchTruncation phi2(2);
  Matrix A = Matrix::from_entries(ctx, 2, prec, {3, 12, 6, 9});
  Matrix B = Matrix::from_entries(ctx, 2, prec, {9, 3, 3, 6});
  Matrix commAB = A.mul(B).sub(B.mul(A));
  CHECK(phi2.evaluate(A, B).congruent(
      A.add(B).add(commAB.mul_integer(inv2))));
}

TEST_CASE("BCH word table against the free-algebra logarithm oracle") {
  // independent route: log(exp X exp Y) expanded in the truncated free
  // associative algebra over Q, evaluated on exact rational matrices
  PrimeContext ctx(3);
  const long prec = 12;
  mpz_class mod = ctx.pow_p(prec);
  auto check_pair = [&](unsigned D, int d, const std::vector<long>& X,
                        const std::vector<long>& Y) {
    auto exact = free_eval(free_bch(D), d, X, Y);
    BchTruncation phi(D);
    std::vector<mpz_class> xe, ye;
    for (long v : X) xe.emplace_back(v);
    for (long v : Y) ye.emplace_back(v);
    Matrix got = phi.evaluate(Matrix::from_entries(ctx, d, prec, xe),
                              Matrix::from_entries(ctx, d, prec, ye));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rational& want = exact[static_cast<size_t>(i * d + j)];
        REQUIRE(ctx.valuation(want.den()) == 0); // p-integral
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), want.den().get_mpz_t(),
                   mod.get_mpz_t());
        mpz_class expect = (want.num() % mod) * dinv % mod;
        if (expect < 0) expect += mod;
        CHECK(got.raw(i, j) == expect);
      }
  };
  check_pair(5, 2, {3, 6, 0, 3}, {0, 3, 3, 9});
  check_pair(6, 3, {3, 6, 0, 0, 3, 9, 3, 0, 3}, {0, 3, 3, 6, 9, 0, 0, 3, 6});
}

TEST_CASE("BCH rejects non-powerful inputs by integrality failure") {
  PrimeContext ctx(3);
  BchTruncation phi(6);
  Matrix A = Matrix::from_entries(ctx, 2, 10, {1, 1, 0, 1});
  Matrix B = Matrix::from_entries(ctx, 2, 10, {1, 0, 1, 1});
  CHECK_THROWS_AS(phi.evaluate(A, B), InvariantError);
}

TEST_CASE("group law check: floors, commuting and identity cases") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(59);
  BchTruncation phi(10);
  // commuting pair: exact up to precision
  auto x = rand_group(rng, ctx, 2, 12);
  auto rep = group_law_check(x, group_mul(x, x), phi);
  CHECK(rep.discrepancy == 12);
  // y = identity: exact
  auto repid =
      group_law_check(x, GroupElement(Matrix::identity(ctx, 2, 12)), phi);
  CHECK(repid.discrepancy == 12);
  // generic pairs reach the documented series-remainder floor
  // (D+1) - floor(D/(p-1)) = 6 for D = 10, p = 3
  long min_disc = 100;
  for (int trial = 0; trial < 10; ++trial) {
    auto a = rand_group(rng, ctx, 2, 12);
    auto b = rand_group(rng, ctx, 2, 12);
    auto g = group_law_check(a, b, phi);
    CHECK(g.floor == 6);
    CHECK(g.discrepancy >= g.floor);
    min_disc = std::min(min_disc, g.discrepancy);
  }
  CHECK(min_disc == 6); // the remainder bound is sharp generically
}

TEST_CASE("lower p-series levels") {
  PrimeContext ctx(3);
  GroupElement id(Matrix::identity(ctx, 2, 10));
  CHECK(!lower_p_series_level(id).has_value());
  GroupElement x1(Matrix::from_entries(ctx, 1, 10, {4})); // 1 + 3
  CHECK(lower_p_series_level(x1) == 1);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    auto y = rand_group(rng, ctx, 2, 10);
    if (lower_p_series_level(y) != 1) continue; // want a generic generator
    CHECK(lower_p_series_level(pth_power(y, 2)) == 3);
  }
}

TEST_CASE("p = 2 works throughout with epsilon = 2") {
  PrimeContext ctx(2);
  std::mt19937_64 rng(79);
  // elements of 1 + 4 M_2(Z_2)
  auto g = rand_group(rng, ctx, 2, 14);
  auto h = rand_group(rng, ctx, 2, 14);
  CHECK(g.depth() >= 2);
  CHECK(pth_root(pth_power(g, 2), 2).matrix().congruent(g.matrix()));
  auto res = limit_add(g, h, 10);
  CHECK(res.trace.nondecreasing);
  CHECK(res.trace.steps.back().discrepancy >= 12);
  auto br = limit_bracket(g, h, 8);
  CHECK(br.trace.nondecreasing);
  // shallow elements (1 mod 2 only) are rejected
  CHECK_THROWS_AS(GroupElement(Matrix::from_entries(ctx, 1, 8, {3})),
                  DomainError);
}

TEST_CASE("p-th power map stays injective between consecutive quotients") {
  PrimeContext ctx(3);
  std::mt19937_64 rng(67);
  for (long i = 1; i <= 3; ++i) {
    long depth = i + ctx.epsilon() - 1;
    for (int trial = 0; trial < 10; ++trial) {
      auto base = rand_group(rng, ctx, 2, 12);
      // x, y in P_i, distinct cosets of P_(i+1)
      std::vector<mpz_class> ex(4, mpz_class(0)), ey(4, mpz_class(0));
      for (int k = 0; k < 4; ++k) {
        mpz_class r(static_cast<unsigned long>(rng() % 1000));
        ex[static_cast<size_t>(k)] = mpz_class(k % 3 == 0 ? 1 : 0) +
                                     ctx.pow_p(depth) * r;
        ey[static_cast<size_t>(k)] = ex[static_cast<size_t>(k)];
      }
      ey[1] += ctx.pow_p(depth); // unit difference at scale p^depth
      GroupElement x(Matrix::from_entries(ctx, 2, 12, ex));
      GroupElement y(Matrix::from_entries(ctx, 2, 12, ey));
      long v = pth_power(x, 1).matrix().congruence_valuation(
          pth_power(y, 1).matrix());
      CHECK(v == depth + 1);
    }
  }
}

} // TEST_SUITE
