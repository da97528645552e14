#pragma once

#include <optional>
#include <vector>

#include "padicalc/bch.hpp"
#include "padicalc/poly.hpp"

namespace padic::hopf {

/// Structure constants of a Lie bracket on a free rank-d lattice:
/// [e_i, e_j] = sum_k c(i,j,k) e_k, exact integers. Antisymmetry and
/// the Jacobi identity are validated on construction (garbage-in
/// detection is mandatory here).
class StructureConstants {
public:
  StructureConstants(int dim, std::vector<mpz_class> c);

  int dim() const { return dim_; }
  const mpz_class& c(int i, int j, int k) const {
    return c_[static_cast<size_t>((i * dim_ + j) * dim_ + k)];
  }
  /// [L, L] in p^epsilon L at the level of constants.
  bool powerful(const PrimeContext& ctx) const;
  /// Constants of the sublattice p^n L (brackets gain a factor p^n).
  StructureConstants scaled(const PrimeContext& ctx, unsigned n) const;

  static StructureConstants abelian(int dim);
  /// [e, f] = p h, h central.
  static StructureConstants heisenberg(const PrimeContext& ctx);
  /// p * sl_2 with basis (e, h, f): [h,e] = 2p e, [h,f] = -2p f,
  /// [e,f] = p h.
  static StructureConstants scaled_sl2(const PrimeContext& ctx);

private:
  int dim_;
  std::vector<mpz_class> c_;
};

/// Group-law coordinates: Phi_j(x_1..x_d, y_1..y_d) truncated at a
/// total degree, with exact rational coefficients. Variables 0..d-1
/// are the x-block, d..2d-1 the y-block.
struct PhiCoordinates {
  int dim = 0;
  unsigned degree = 0;
  std::vector<TruncatedPoly> phi;
  /// Integrality of all coefficients (the strict-convergence claim for
  /// powerful inputs); a violation is recorded, never silently fixed.
  bool integral = false;
  Rational min_coefficient_valuation;
};

/// BCH series in the basis given by the structure constants, truncated
/// at total degree D. Unit laws hold by construction; integrality is
/// evaluated and reported on the result.
PhiCoordinates phi_coordinates(const StructureConstants& sc,
                               const PrimeContext& ctx, unsigned D);

/// The comultiplication as an algebra map on polynomials in the dual
/// generators: generator j goes to Phi_j(first tensor block, second
/// tensor block). Input lives in d variables, output in 2d.
TruncatedPoly comult(const TruncatedPoly& element, const PhiCoordinates& phi);

struct CoassocReport {
  bool exact = false;
  /// Discrepancy valuation per generator; nullopt = identically zero.
  std::vector<std::optional<Rational>> per_generator;
};

/// (Delta x id) Delta versus (id x Delta) Delta on every generator,
/// in 3d variables mod the truncation degree.
CoassocReport coassociativity_check(const PhiCoordinates& phi,
                                    const PrimeContext& ctx);

/// Phi_j(x, 0) = x_j and Phi_j(0, y) = y_j.
bool counit_check(const PhiCoordinates& phi);

/// Coordinates for the lattice p^n L: the degree-m component of Phi_j
/// picks up a factor p^(n(m-1)).
PhiCoordinates scale_lattice(const PhiCoordinates& phi,
                             const PrimeContext& ctx, unsigned n);

/// Inversion coordinates iota with Phi(x, iota(x)) = 0 mod degree.
std::vector<TruncatedPoly> antipode(const PhiCoordinates& phi);

/// Checks the antipode law on generators: Phi_j(iota(x), x) = 0 and
/// Phi_j(x, iota(x)) = 0 mod the truncation degree.
bool antipode_check(const PhiCoordinates& phi);

/// Exact evaluation of the group law at rational coordinate vectors.
std::vector<Rational> evaluate_phi(const PhiCoordinates& phi,
                                   const std::vector<Rational>& x,
                                   const std::vector<Rational>& y);

/// Transports structure constants through an invertible integral
/// change of basis g (e'_i = sum_l g(l,i) e_l); used to sample
/// basis-independence of the induced group structure.
StructureConstants change_basis(const StructureConstants& sc,
                                const std::vector<mpz_class>& g);

} // namespace padic::hopf
