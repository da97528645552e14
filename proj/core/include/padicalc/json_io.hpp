#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "padicalc/amice.hpp"
#include "padicalc/groups.hpp"
#include "padicalc/hopf.hpp"
#include "padicalc/mahler.hpp"
#include "padicalc/matrix.hpp"
#include "padicalc/scalar.hpp"

namespace padic::io {

using json = nlohmann::ordered_json;

// All numeric payloads are exact decimal strings; no floating point
// crosses this boundary in either direction.
//
// Scalar forms:
//   unit              {"value": "<unit>", "valuation": v, "precision": abs}
//   zero at precision {"value": "0", "precision": N}
//   exact zero        {"value": "0", "valuation": "inf"}
// A bare string or integer is read as that integer at a caller-chosen
// absolute precision.

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const PrimeContext& ctx, const json& j,
                        long default_abs_prec);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json series_to_json(const TruncatedSeries& s);
std::vector<Scalar> scalar_list_from_json(const PrimeContext& ctx,
                                          const json& j,
                                          long default_abs_prec);

json coeff_valuation_to_json(const CoeffValuation& cv);
json slope_to_json(const Slope& s);
const char* verdict_name(Verdict v);

json decay_report_to_json(const mahler::DecayReport& r);
json divided_power_report_to_json(const amice::DividedPowerReport& r);
json convergence_trace_to_json(const groups::ConvergenceTrace& t);
json powerful_report_to_json(const groups::PowerfulReport& r);
json group_law_report_to_json(const groups::GroupLawReport& r);

hopf::StructureConstants structure_from_json(const json& j);
json phi_to_json(const hopf::PhiCoordinates& phi, const PrimeContext& ctx);
json coassoc_report_to_json(const hopf::CoassocReport& r);

/// Minimal expression grammar for integer polynomials in one variable:
/// terms  +|-  coeff [*] x [^ exp], e.g. "x^2", "3*x^3 - 2*x + 1".
/// Returns coefficients by ascending degree.
std::vector<mpz_class> parse_polynomial(const std::string& text);
mpz_class eval_polynomial(const std::vector<mpz_class>& coeffs,
                          const mpz_class& x);
std::vector<mpz_class> derive_polynomial(const std::vector<mpz_class>& coeffs);

} // namespace padic::io
