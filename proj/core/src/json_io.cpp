#include "padicalc/json_io.hpp"

#include <cctype>

#include "padicalc/errors.hpp"

namespace padic::io {

namespace {

mpz_class mpz_from_json(const json& j, const char* what) {
  try {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(j.get<long>());
  } catch (const std::invalid_argument&) {
  }
  throw ParseError(std::string("expected exact integer for ") + what);
}

long long_from_json(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected integer for ") + what);
  return j.get<long>();
}

} // namespace

json scalar_to_json(const Scalar& s) {
  json j;
  if (s.is_exact_zero()) {
    j["value"] = "0";
    j["valuation"] = "inf";
    return j;
  }
  if (s.kind() == Scalar::Kind::ZeroAtPrecision) {
    j["value"] = "0";
    j["precision"] = s.abs_precision();
    return j;
  }
  j["value"] = s.unit().get_str();
  j["valuation"] = s.valuation();
  j["precision"] = s.abs_precision();
  return j;
}

Scalar scalar_from_json(const PrimeContext& ctx, const json& j,
                        long default_abs_prec) {
  if (j.is_string() || j.is_number_integer())
    return Scalar::from_integer_abs(ctx, mpz_from_json(j, "scalar"),
                                    default_abs_prec);
  if (!j.is_object()) throw ParseError("scalar must be string or object");
  mpz_class value = mpz_from_json(j.at("value"), "scalar value");
  if (j.contains("valuation") && j["valuation"].is_string()) {
    if (j["valuation"].get<std::string>() != "inf")
      throw ParseError("valuation must be an integer or \"inf\"");
    if (value != 0) throw ParseError("infinite valuation needs value 0");
    return Scalar::exact_zero(ctx);
  }
  if (value == 0) {
    long prec = j.contains("precision")
                    ? long_from_json(j["precision"], "precision")
                    : default_abs_prec;
    return Scalar::zero_at_precision(ctx, prec);
  }
  if (!j.contains("valuation"))
    return Scalar::from_integer_abs(
        ctx, value,
        j.contains("precision") ? long_from_json(j["precision"], "precision")
                                : default_abs_prec);
  long v = long_from_json(j["valuation"], "valuation");
  long abs = j.contains("precision")
                 ? long_from_json(j["precision"], "precision")
                 : default_abs_prec + v;
  if (abs <= v) throw ParseError("precision must exceed valuation");
  return Scalar::from_unit_parts(ctx, v, value, abs - v);
}

json matrix_to_json(const Matrix& m) {
  json j;
  j["p"] = m.context().p().get_str();
  j["dim"] = m.dim();
  j["precision"] = m.precision();
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.dim(); ++k) row.push_back(m.raw(i, k).get_str());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix must be an object");
  PrimeContext ctx(mpz_from_json(j.at("p"), "p"));
  int dim = static_cast<int>(long_from_json(j.at("dim"), "dim"));
  long prec = long_from_json(j.at("precision"), "precision");
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != static_cast<size_t>(dim))
    throw ParseError("entries must be a dim x dim array");
  std::vector<mpz_class> entries;
  entries.reserve(static_cast<size_t>(dim) * dim);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(dim))
      throw ParseError("entries must be a dim x dim array");
    for (const json& e : row) entries.push_back(mpz_from_json(e, "entry"));
  }
  return Matrix::from_entries(ctx, dim, prec, std::move(entries));
}

json series_to_json(const TruncatedSeries& s) {
  json j;
  j["p"] = s.context().p().get_str();
  j["variable"] = s.variable();
  j["truncation"] = s.truncation();
  json coeffs = json::array();
  for (const Scalar& c : s.coefficients()) coeffs.push_back(scalar_to_json(c));
  j["coefficients"] = std::move(coeffs);
  return j;
}

std::vector<Scalar> scalar_list_from_json(const PrimeContext& ctx,
                                          const json& j,
                                          long default_abs_prec) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const json& e : j)
    out.push_back(scalar_from_json(ctx, e, default_abs_prec));
  return out;
}

json coeff_valuation_to_json(const CoeffValuation& cv) {
  switch (cv.kind) {
    case CoeffValuation::Kind::Infinite:
      return json("inf");
    case CoeffValuation::Kind::AtLeast:
      return json(">=" + cv.value.str());
    default:
      return json(cv.value.str());
  }
}

json slope_to_json(const Slope& s) {
  json j;
  switch (s.kind) {
    case Slope::Kind::PlusInfinity:
      j["kind"] = "plus_infinity";
      break;
    case Slope::Kind::Finite:
      j["kind"] = "finite";
      j["value"] = s.value.str();
      break;
    case Slope::Kind::Indeterminate:
      j["kind"] = "indeterminate";
      j["lower_bound"] = s.value.str();
      break;
  }
  j["tight"] = s.tight;
  return j;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Member:
      return "member";
    case Verdict::NotMember:
      return "not_member";
    default:
      return "indeterminate";
  }
}

json decay_report_to_json(const mahler::DecayReport& r) {
  json j;
  j["window"] = {r.window_lo, r.window_hi};
  json per = json::array();
  for (const CoeffValuation& cv : r.per_k)
    per.push_back(coeff_valuation_to_json(cv));
  j["per_k_valuations"] = std::move(per);
  j["slope"] = slope_to_json(r.slope);
  if (r.verdict_floor)
    j["verdict_floor"] = *r.verdict_floor;
  else
    j["verdict_floor"] = "none";
  return j;
}

json divided_power_report_to_json(const amice::DividedPowerReport& r) {
  json j;
  j["m"] = r.m;
  j["n"] = r.n;
  json b = json::array();
  for (const CoeffValuation& cv : r.b_valuations)
    b.push_back(coeff_valuation_to_json(cv));
  j["b_valuations"] = std::move(b);
  j["norm_valuation"] = coeff_valuation_to_json(r.norm_valuation);
  j["member"] = r.member;
  return j;
}

json convergence_trace_to_json(const groups::ConvergenceTrace& t) {
  json j;
  json steps = json::array();
  for (size_t i = 0; i < t.steps.size(); ++i) {
    json e;
    e["discrepancy"] = t.steps[i].discrepancy;
    e["at_floor"] = t.steps[i].at_floor;
    if (i < t.approximants.size())
      e["approximant"] = matrix_to_json(t.approximants[i]);
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["floor"] = t.floor;
  j["reached_floor"] = t.reached_floor;
  j["nondecreasing"] = t.nondecreasing;
  return j;
}

json powerful_report_to_json(const groups::PowerfulReport& r) {
  json j;
  j["closed_under_bracket"] = r.closed_under_bracket;
  j["powerful"] = r.powerful;
  j["min_coordinate_valuation"] = r.min_coordinate_valuation;
  if (r.offending.first >= 0)
    j["offending_pair"] = {r.offending.first, r.offending.second};
  return j;
}

json group_law_report_to_json(const groups::GroupLawReport& r) {
  json j;
  j["discrepancy"] = r.discrepancy;
  j["floor"] = r.floor;
  j["at_floor"] = r.at_floor;
  return j;
}

hopf::StructureConstants structure_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("structure must be an object");
  int dim = static_cast<int>(long_from_json(j.at("dim"), "dim"));
  const json& c = j.at("constants");
  if (!c.is_array() || c.size() != static_cast<size_t>(dim))
    throw ParseError("constants must be a dim^3 array");
  std::vector<mpz_class> flat;
  flat.reserve(static_cast<size_t>(dim) * dim * dim);
  for (const json& ci : c) {
    if (!ci.is_array() || ci.size() != static_cast<size_t>(dim))
      throw ParseError("constants must be a dim^3 array");
    for (const json& cij : ci) {
      if (!cij.is_array() || cij.size() != static_cast<size_t>(dim))
        throw ParseError("constants must be a dim^3 array");
      for (const json& e : cij) flat.push_back(mpz_from_json(e, "constant"));
    }
  }
  return hopf::StructureConstants(dim, std::move(flat));
}

json phi_to_json(const hopf::PhiCoordinates& phi, const PrimeContext& ctx) {
  json j;
  j["dim"] = phi.dim;
  j["degree"] = phi.degree;
  j["integral"] = phi.integral;
  j["min_coefficient_valuation"] = phi.min_coefficient_valuation.str();
  json comps = json::array();
  for (const TruncatedPoly& f : phi.phi) {
    json terms = json::array();
    for (const auto& [key, coeff] : f.terms()) {
      json t;
      json exps = json::array();
      for (int v = 0; v < f.nvars(); ++v)
        exps.push_back(static_cast<unsigned>((key >> (4 * v)) & 0xf));
      t["exponents"] = std::move(exps);
      t["coefficient"] = coeff.str();
      terms.push_back(std::move(t));
    }
    comps.push_back(std::move(terms));
  }
  j["components"] = std::move(comps);
  (void)ctx;
  return j;
}

json coassoc_report_to_json(const hopf::CoassocReport& r) {
  json j;
  j["exact"] = r.exact;
  json per = json::array();
  for (const auto& d : r.per_generator)
    per.push_back(d ? json(d->str()) : json("inf"));
  j["per_generator_discrepancy"] = std::move(per);
  return j;
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected integer in polynomial at "
                                       "position " + std::to_string(pos));
    return mpz_class(s.substr(start, pos - start));
  }

  // term := [sign] (coeff [* x [^ exp]] | x [^ exp])
  void term(std::vector<mpz_class>& coeffs, int sign) {
    skip_ws();
    mpz_class coeff = sign;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = sign * integer();
      have_coeff = true;
    }
    unsigned long deg = 0;
    skip_ws();
    bool star = eat('*');
    skip_ws();
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      deg = 1;
      if (eat('^')) {
        mpz_class e = integer();
        deg = e.get_ui();
      }
    } else if (star || !have_coeff) {
      throw ParseError("expected x after '*' in polynomial");
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, mpz_class(0));
    coeffs[deg] += coeff;
  }

  std::vector<mpz_class> parse() {
    std::vector<mpz_class> coeffs;
    int sign = 1;
    skip_ws();
    if (eat('-')) sign = -1;
    else eat('+');
    term(coeffs, sign);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else
        throw ParseError("expected + or - in polynomial at position " +
                         std::to_string(pos));
      term(coeffs, sign);
    }
    if (coeffs.empty()) coeffs.push_back(mpz_class(0));
    return coeffs;
  }
};

} // namespace

std::vector<mpz_class> parse_polynomial(const std::string& text) {
  PolyParser parser(text);
  return parser.parse();
}

mpz_class eval_polynomial(const std::vector<mpz_class>& coeffs,
                          const mpz_class& x) {
  mpz_class acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::vector<mpz_class> derive_polynomial(
    const std::vector<mpz_class>& coeffs) {
  std::vector<mpz_class> d;
  for (size_t i = 1; i < coeffs.size(); ++i)
    d.push_back(coeffs[i] * static_cast<long>(i));
  if (d.empty()) d.push_back(mpz_class(0));
  return d;
}

} // namespace padic::io
