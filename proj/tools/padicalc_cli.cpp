// Batch front end: every command is a thin shell over the library; no
// numeric logic lives here. All numbers cross the boundary as exact
// decimal strings.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "padicalc/audit.hpp"
#include "padicalc/binomial.hpp"
#include "padicalc/errors.hpp"
#include "padicalc/json_io.hpp"

namespace {

using padic::PrimeContext;
using padic::Rational;
using padic::Scalar;
using json = padic::io::json;

// Distinct exit codes per failure class, with a machine-readable
// diagnostic on stderr.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitDomain = 5;

struct Config {
  long p = 3;
  long precision = 20; // M
  long trunc = 32;     // K
  long degree = 6;     // D
  unsigned long seed = 1;
  std::string out;
  std::string format = "json";

  void validate() const {
    if (precision < 4)
      throw padic::InvariantError("config: precision must be >= 4");
    if (trunc < 8) throw padic::InvariantError("config: trunc must be >= 8");
    if (degree < 2) throw padic::InvariantError("config: degree must be >= 2");
    if (format != "json" && format != "csv")
      throw padic::InvariantError("config: format must be json or csv");
  }
  PrimeContext context() const { return PrimeContext(p); }
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw padic::ParseError("cannot open output file " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(const Config& cfg, const json& j) { emit(cfg, j.dump(2)); }

json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw padic::ParseError("cannot open input file " + path);
  try {
    return json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw padic::ParseError("bad JSON in " + path + ": " + e.what());
  }
}

PrimeContext context_of(const json& j, const Config& cfg) {
  if (j.contains("p")) {
    const json& p = j["p"];
    if (p.is_string()) return PrimeContext(mpz_class(p.get<std::string>()));
    if (p.is_number_integer()) return PrimeContext(p.get<long>());
    throw padic::ParseError("p must be an integer or decimal string");
  }
  return cfg.context();
}

long precision_of(const json& j, const Config& cfg) {
  if (j.contains("precision")) return j["precision"].get<long>();
  return cfg.precision;
}

// Mahler series from --fn (series json), --table (value table json) or
// --poly (integer polynomial expression, sampled on 0..K). An explicit
// -K caps tables and series longer than K+1 entries.
padic::mahler::MahlerSeries mahler_input(const Config& cfg,
                                         const std::string& fn_file,
                                         const std::string& table_file,
                                         const std::string& poly_expr,
                                         bool cap_to_trunc = false) {
  int sources = !fn_file.empty() + !table_file.empty() + !poly_expr.empty();
  if (sources != 1)
    throw padic::ParseError(
        "need exactly one of --fn, --table, --poly for the function side");
  auto capped = [&](std::vector<Scalar> v) {
    size_t want = static_cast<size_t>(cfg.trunc) + 1;
    if (cap_to_trunc && v.size() > want)
      v.erase(v.begin() + static_cast<long>(want), v.end());
    return v;
  };
  if (!fn_file.empty()) {
    json j = read_json_file(fn_file);
    PrimeContext ctx = context_of(j, cfg);
    return padic::mahler::MahlerSeries(
        ctx, capped(padic::io::scalar_list_from_json(
                 ctx, j.at("coefficients"), precision_of(j, cfg))));
  }
  if (!table_file.empty()) {
    json j = read_json_file(table_file);
    PrimeContext ctx = context_of(j, cfg);
    return padic::mahler::mahler_coefficients(padic::mahler::FunctionTable(
        ctx, capped(padic::io::scalar_list_from_json(
                 ctx, j.at("values"), precision_of(j, cfg)))));
  }
  auto coeffs = padic::io::parse_polynomial(poly_expr);
  PrimeContext ctx = cfg.context();
  std::vector<mpz_class> values;
  for (long i = 0; i <= cfg.trunc; ++i)
    values.push_back(padic::io::eval_polynomial(coeffs, mpz_class(i)));
  return padic::mahler::mahler_coefficients(
      padic::mahler::FunctionTable::from_integers(ctx, values,
                                                  cfg.precision));
}

padic::amice::AmiceSeries distribution_input(const Config& cfg,
                                             const std::string& dist_file,
                                             long dirac_a, bool use_dirac,
                                             bool use_derivative,
                                             unsigned long K) {
  int sources = !dist_file.empty() + use_dirac + use_derivative;
  if (sources != 1)
    throw padic::ParseError(
        "need exactly one of --dist, --dirac, --derivative for the "
        "distribution side");
  if (!dist_file.empty()) {
    json j = read_json_file(dist_file);
    PrimeContext ctx = context_of(j, cfg);
    return padic::amice::AmiceSeries(
        ctx, padic::io::scalar_list_from_json(ctx, j.at("coefficients"),
                                              precision_of(j, cfg)));
  }
  if (use_derivative)
    return padic::amice::derivative_distribution(cfg.context(), K,
                                                 cfg.precision);
  return padic::amice::dirac(cfg.context(), mpz_class(dirac_a), K,
                             cfg.precision);
}

// ---------------------------------------------------------------------

int cmd_binom_audit(const Config& cfg, long n, long kmin, long kmax,
                    long depth_flag) {
  PrimeContext ctx(cfg.p);
  unsigned long depth = depth_flag >= 0
                            ? static_cast<unsigned long>(depth_flag)
                            : padic::binom::default_search_depth(
                                  static_cast<unsigned long>(n));
  std::vector<padic::binom::AuditRow> rows;
  if (kmax >= kmin)
    rows = padic::binom::audit_sweep(static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(kmin),
                                     static_cast<unsigned long>(kmax), ctx,
                                     depth);
  bool regime_violation = false;
  mpz_class regime_bound = ctx.pow_p(static_cast<unsigned long>(n) + 2);
  for (const auto& row : rows)
    if (!row.agrees && mpz_class(row.k) < regime_bound)
      regime_violation = true;

  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "p,n,k,formula_valuation,oracle_valuation,witness_b,witness_c,"
           "agrees\n";
    for (const auto& row : rows)
      out << cfg.p << ',' << row.n << ',' << row.k << ','
          << row.formula_valuation.str() << ','
          << row.oracle_valuation.str() << ','
          << row.witness.b.get_str() << ',' << row.witness.c_residue.get_str()
          << ',' << (row.agrees ? "true" : "false") << '\n';
    emit(cfg, out.str());
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json r;
      r["p"] = std::to_string(cfg.p);
      r["n"] = row.n;
      r["k"] = row.k;
      r["formula_valuation"] = row.formula_valuation.str();
      r["oracle_valuation"] = row.oracle_valuation.str();
      r["witness_b"] = row.witness.b.get_str();
      r["witness_c"] = row.witness.c_residue.get_str();
      r["agrees"] = row.agrees;
      arr.push_back(std::move(r));
    }
    emit_json(cfg, arr);
  }
  if (regime_violation)
    throw padic::InvariantError(
        "oracle disagrees with the formula inside the k < p^(n+2) regime");
  return kExitOk;
}

int cmd_mahler(const Config& cfg, const std::string& table_file,
               const std::string& poly_expr, const std::string& window,
               bool classify, long level, const std::string& tolerance,
               bool cap_to_trunc) {
  auto series = mahler_input(cfg, "", table_file, poly_expr, cap_to_trunc);
  Rational frac = window.empty() ? Rational(1, 2) : Rational::parse(window);
  auto report = padic::mahler::decay_slope(series, frac);
  json j;
  j["series"] = padic::io::series_to_json(series.series());
  j["decay"] = padic::io::decay_report_to_json(report);
  if (classify) {
    std::optional<Rational> tol;
    if (!tolerance.empty()) tol = Rational::parse(tolerance);
    padic::Verdict v = padic::mahler::member_at_level(
        series, static_cast<unsigned long>(level), tol, frac);
    json m;
    m["level"] = level;
    m["verdict"] = padic::io::verdict_name(v);
    j["membership"] = std::move(m);
  }
  emit_json(cfg, j);
  return kExitOk;
}

int cmd_amice(const Config& cfg, bool use_dirac, long dirac_a,
              bool use_derivative) {
  auto series =
      distribution_input(cfg, "", dirac_a, use_dirac, use_derivative,
                         static_cast<unsigned long>(cfg.trunc));
  emit_json(cfg, padic::io::series_to_json(series.series()));
  return kExitOk;
}

int cmd_pair(const Config& cfg, const std::string& dist_file, long dirac_a,
             bool use_dirac, bool use_derivative, const std::string& fn_file,
             const std::string& table_file, const std::string& poly_expr,
             bool cap_to_trunc) {
  auto f = mahler_input(cfg, fn_file, table_file, poly_expr, cap_to_trunc);
  auto lambda = distribution_input(cfg, dist_file, dirac_a, use_dirac,
                                   use_derivative, f.truncation());
  Scalar v = padic::amice::pair(lambda, f);
  if (cfg.format == "csv") {
    emit(cfg, v.is_zero() ? std::string("0") : v.residue().get_str());
  } else {
    json j;
    j["value"] = padic::io::scalar_to_json(v);
    emit_json(cfg, j);
  }
  return kExitOk;
}

int cmd_dmn(const Config& cfg, long m, long n, const std::string& coeff_file,
            long probe_m) {
  json j = read_json_file(coeff_file);
  PrimeContext ctx = context_of(j, cfg);
  auto coeffs = padic::io::scalar_list_from_json(ctx, j.at("coefficients"),
                                                 precision_of(j, cfg));
  auto report = padic::amice::divided_power_report(
      coeffs, static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  json out = padic::io::divided_power_report_to_json(report);
  if (probe_m >= 0) {
    auto smallest = padic::amice::smallest_divided_power_level(
        coeffs, static_cast<unsigned long>(n),
        static_cast<unsigned long>(probe_m));
    out["smallest_member_m"] =
        smallest ? json(*smallest) : json("none");
  }
  emit_json(cfg, out);
  return kExitOk;
}

int cmd_group_limit(const Config& cfg, const std::string& x_file,
                    const std::string& y_file, long tmax, bool bracket) {
  auto x = padic::groups::GroupElement(
      padic::io::matrix_from_json(read_json_file(x_file)));
  auto y = padic::groups::GroupElement(
      padic::io::matrix_from_json(read_json_file(y_file)));
  unsigned long t =
      tmax >= 0 ? static_cast<unsigned long>(tmax)
                : static_cast<unsigned long>(x.precision());
  auto result = bracket ? padic::groups::limit_bracket(x, y, t)
                        : padic::groups::limit_add(x, y, t);
  json j;
  j["value"] = padic::io::matrix_to_json(result.value.matrix());
  j["reference"] = padic::io::matrix_to_json(
      (bracket ? padic::groups::exp_of_log_bracket(x, y)
               : padic::groups::exp_of_log_sum(x, y))
          .matrix());
  j["trace"] = padic::io::convergence_trace_to_json(result.trace);
  emit_json(cfg, j);
  return kExitOk;
}

int cmd_bch(const Config& cfg, const std::string& x_file,
            const std::string& y_file) {
  auto X = padic::io::matrix_from_json(read_json_file(x_file));
  auto Y = padic::io::matrix_from_json(read_json_file(y_file));
  padic::groups::LieElement lx(X), ly(Y); // validates the lattice domain
  padic::BchTruncation phi(static_cast<unsigned>(cfg.degree));
  json j;
  j["value"] = padic::io::matrix_to_json(phi.evaluate(lx.matrix(), ly.matrix()));
  j["degree"] = cfg.degree;
  emit_json(cfg, j);
  return kExitOk;
}

int cmd_powerful_check(const Config& cfg, const std::string& basis_file) {
  json j = read_json_file(basis_file);
  PrimeContext ctx = context_of(j, cfg);
  long prec = precision_of(j, cfg);
  int dim = j.at("dim").get<int>();
  std::vector<padic::Matrix> basis;
  for (const json& el : j.at("elements")) {
    std::vector<mpz_class> entries;
    for (const json& row : el)
      for (const json& e : row)
        entries.push_back(e.is_string() ? mpz_class(e.get<std::string>())
                                        : mpz_class(e.get<long>()));
    basis.push_back(
        padic::Matrix::from_entries(ctx, dim, prec, std::move(entries)));
  }
  auto report = padic::groups::powerful_check(basis, ctx);
  emit_json(cfg, padic::io::powerful_report_to_json(report));
  return kExitOk;
}

int cmd_lps_level(const Config& cfg, const std::string& x_file) {
  auto x = padic::groups::GroupElement(
      padic::io::matrix_from_json(read_json_file(x_file)));
  auto level = padic::groups::lower_p_series_level(x);
  json j;
  j["level"] = level ? json(*level) : json("inf");
  j["precision"] = x.precision();
  emit_json(cfg, j);
  return kExitOk;
}

int cmd_comult_check(const Config& cfg, const std::string& structure_file,
                     long scale) {
  json j = read_json_file(structure_file);
  PrimeContext ctx = context_of(j, cfg);
  auto sc = padic::io::structure_from_json(j);
  if (scale > 0) sc = sc.scaled(ctx, static_cast<unsigned long>(scale));
  auto phi = padic::hopf::phi_coordinates(
      sc, ctx, static_cast<unsigned>(cfg.degree));
  auto coassoc = padic::hopf::coassociativity_check(phi, ctx);
  json out;
  out["powerful_constants"] = sc.powerful(ctx);
  out["integral"] = phi.integral;
  out["min_coefficient_valuation"] = phi.min_coefficient_valuation.str();
  out["counit"] = padic::hopf::counit_check(phi);
  out["antipode"] = padic::hopf::antipode_check(phi);
  out["coassociativity"] = padic::io::coassoc_report_to_json(coassoc);
  emit_json(cfg, out);
  if (!coassoc.exact || !phi.integral)
    throw padic::InvariantError(
        "comultiplication violates coassociativity or integrality at this "
        "truncation");
  return kExitOk;
}

int cmd_acceptance(const Config& cfg) {
  auto results = padic::audit::run_all();
  int fails = 0;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      json e;
      e["id"] = r.id;
      e["passed"] = r.passed;
      e["title"] = r.title;
      e["detail"] = r.detail;
      arr.push_back(std::move(e));
      if (!r.passed) ++fails;
    }
    emit_json(cfg, arr);
  } else {
    std::ostringstream out;
    for (const auto& r : results) {
      out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": "
          << r.title << " -- " << r.detail << "\n";
      if (!r.passed) ++fails;
    }
    emit(cfg, out.str());
  }
  return fails == 0 ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"padicalc: finite-precision p-adic computer algebra"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("-p,--prime", cfg.p, "prime p")->capture_default_str();
  app.add_option("-M,--precision", cfg.precision, "absolute precision")
      ->capture_default_str();
  auto* trunc_opt = app.add_option("-K,--trunc", cfg.trunc,
                                   "series truncation")
                        ->capture_default_str();
  app.add_option("-D,--degree", cfg.degree, "polynomial/BCH degree bound")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default stdout)");
  auto* format_opt =
      app.add_option("--format", cfg.format, "json or csv (binom-audit "
                                             "defaults to csv)")
          ->capture_default_str();

  // binom-audit
  long ba_n = 0, ba_kmin = 0, ba_kmax = -1, ba_depth = -1;
  auto* binom = app.add_subcommand(
      "binom-audit", "sweep the extremal binomial valuation search against "
                     "the closed formula");
  binom->add_option("-n,--level", ba_n, "congruence level n >= 0");
  binom->add_option("--kmin", ba_kmin, "first index k");
  binom->add_option("--kmax", ba_kmax,
                    "last index k (inclusive; empty sweep when < kmin)");
  binom->add_option("--depth", ba_depth, "unit residue search depth");

  // mahler / classify
  std::string mh_table, mh_poly, mh_window, mh_tol;
  long mh_level = 0;
  auto* mh = app.add_subcommand(
      "mahler", "finite-difference transform and decay report");
  mh->add_option("--table", mh_table, "function table JSON");
  mh->add_option("--poly", mh_poly, "integer polynomial expression");
  mh->add_option("--window", mh_window, "tail window fraction (rational)");
  auto* cls = app.add_subcommand(
      "classify", "mahler plus membership verdict at a level");
  cls->add_option("--table", mh_table, "function table JSON");
  cls->add_option("--poly", mh_poly, "integer polynomial expression");
  cls->add_option("--window", mh_window, "tail window fraction (rational)");
  cls->add_option("--level", mh_level, "analyticity level n")->required();
  cls->add_option("--tolerance", mh_tol, "membership tolerance (rational)");

  // amice
  long am_dirac = 0;
  bool am_derivative = false;
  auto* am = app.add_subcommand(
      "amice", "distribution coordinates as a T-power series");
  auto* am_dirac_opt =
      am->add_option("--dirac", am_dirac, "point mass at an integer");
  am->add_flag("--derivative", am_derivative, "the f -> f'(0) distribution");

  // pair
  std::string pr_dist, pr_fn, pr_table, pr_poly;
  long pr_dirac = 0;
  bool pr_derivative = false;
  auto* pr = app.add_subcommand(
      "pair", "duality pairing of a distribution against a Mahler series");
  pr->add_option("--dist", pr_dist, "distribution series JSON");
  auto* pr_dirac_opt =
      pr->add_option("--dirac", pr_dirac, "point mass at an integer");
  pr->add_flag("--derivative", pr_derivative, "derivative distribution");
  pr->add_option("--fn", pr_fn, "Mahler series JSON");
  pr->add_option("--table", pr_table, "function table JSON");
  pr->add_option("--poly", pr_poly, "integer polynomial expression");

  // dmn
  long dmn_m = 0, dmn_n = 0, dmn_probe = -1;
  std::string dmn_coeffs;
  auto* dmn = app.add_subcommand(
      "dmn", "divided-power coefficient norms and membership");
  dmn->add_option("--m", dmn_m, "divided-power level m")->required();
  dmn->add_option("--n", dmn_n, "radius level n")->required();
  dmn->add_option("--coeffs", dmn_coeffs, "derivation coefficients JSON")
      ->required();
  dmn->add_option("--probe-m", dmn_probe,
                  "also report the smallest member m <= this bound");

  // group-add / group-bracket
  std::string g_x, g_y;
  long g_tmax = -1;
  auto* gadd = app.add_subcommand(
      "group-add", "abelianized sum via the power/root limit formula");
  gadd->add_option("--x", g_x, "group element JSON")->required();
  gadd->add_option("--y", g_y, "group element JSON")->required();
  gadd->add_option("--tmax", g_tmax, "limit steps (default: precision)");
  auto* gbr = app.add_subcommand(
      "group-bracket", "Lie bracket via the commutator limit formula");
  gbr->add_option("--x", g_x, "group element JSON")->required();
  gbr->add_option("--y", g_y, "group element JSON")->required();
  gbr->add_option("--tmax", g_tmax, "limit steps (default: precision)");

  // bch
  std::string b_x, b_y;
  auto* bch = app.add_subcommand(
      "bch", "truncated Baker-Campbell-Hausdorff series on lattice "
             "matrices");
  bch->add_option("--x", b_x, "Lie element JSON")->required();
  bch->add_option("--y", b_y, "Lie element JSON")->required();

  // powerful-check
  std::string pc_basis;
  auto* pc = app.add_subcommand(
      "powerful-check", "bracket closure and powerfulness of a matrix "
                        "lattice basis");
  pc->add_option("--basis", pc_basis, "basis JSON")->required();

  // lps-level
  std::string lps_x;
  auto* lps = app.add_subcommand(
      "lps-level", "lower p-series level of a group element");
  lps->add_option("--x", lps_x, "group element JSON")->required();

  // comult-check
  std::string cm_structure;
  long cm_scale = 0;
  auto* cm = app.add_subcommand(
      "comult-check", "comultiplication coassociativity/integrality at a "
                      "truncation degree");
  cm->add_option("--structure", cm_structure, "structure constants JSON")
      ->required();
  cm->add_option("--scale", cm_scale, "lattice scaling level n");

  // acceptance
  auto* acc = app.add_subcommand(
      "acceptance", "run the full acceptance suite (one line per "
                    "criterion)");

  // global flags remain usable after the subcommand name
  for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (binom->parsed() && format_opt->count() == 0) cfg.format = "csv";
    cfg.validate();
    PrimeContext probe = cfg.context(); // validates primality early
    (void)probe;
    if (binom->parsed())
      return cmd_binom_audit(cfg, ba_n, ba_kmin, ba_kmax, ba_depth);
    bool cap = trunc_opt->count() > 0;
    if (mh->parsed())
      return cmd_mahler(cfg, mh_table, mh_poly, mh_window, false, 0, "",
                        cap);
    if (cls->parsed())
      return cmd_mahler(cfg, mh_table, mh_poly, mh_window, true, mh_level,
                        mh_tol, cap);
    if (am->parsed())
      return cmd_amice(cfg, !am_dirac_opt->empty(), am_dirac, am_derivative);
    if (pr->parsed())
      return cmd_pair(cfg, pr_dist, pr_dirac, !pr_dirac_opt->empty(),
                      pr_derivative, pr_fn, pr_table, pr_poly, cap);
    if (dmn->parsed())
      return cmd_dmn(cfg, dmn_m, dmn_n, dmn_coeffs, dmn_probe);
    if (gadd->parsed()) return cmd_group_limit(cfg, g_x, g_y, g_tmax, false);
    if (gbr->parsed()) return cmd_group_limit(cfg, g_x, g_y, g_tmax, true);
    if (bch->parsed()) return cmd_bch(cfg, b_x, b_y);
    if (pc->parsed()) return cmd_powerful_check(cfg, pc_basis);
    if (lps->parsed()) return cmd_lps_level(cfg, lps_x);
    if (cm->parsed()) return cmd_comult_check(cfg, cm_structure, cm_scale);
    if (acc->parsed()) return cmd_acceptance(cfg);
    throw padic::ParseError("no command");
  } catch (const padic::ParseError& e) {
    std::cerr << json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitParse;
  } catch (const padic::PrecisionError& e) {
    std::cerr << json{{"error",
                       {{"kind", "precision"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitPrecision;
  } catch (const padic::InvariantError& e) {
    std::cerr << json{{"error",
                       {{"kind", "invariant"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitInvariant;
  } catch (const padic::DomainError& e) {
    std::cerr << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << json{{"error",
                       {{"kind", "internal"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 70;
  }
}
