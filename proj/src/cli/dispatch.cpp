#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "causet/cli.hpp"
#include "causet/coefficients.hpp"
#include "causet/continuum.hpp"
#include "causet/dalembertian.hpp"
#include "causet/errors.hpp"
#include "causet/hypergeom.hpp"
#include "causet/parallel.hpp"
#include "causet/sprinkling.hpp"
#include "causet/version.hpp"

namespace causet::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kLimitTolerance = 1e-2;
constexpr double kIntegralTolerance = 0.05;
constexpr double kRicciTolerance = 0.05;
constexpr double kCancellationRatio = 1e-2;

struct Options {
  std::optional<int> threads;
  bool no_meta = false;

  int dim = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> digits;
  std::string format = "json";
  std::string out;

  std::string ratio = "1";
  std::string tau;
  std::string rho;
  bool no_top = false;
  std::size_t runs = 0;
  std::string field;
  std::string in;
  std::string identity;
  std::string zmax;
  int points = 4;
};

double parse_double(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("--" + name + " is not a number: " + text);
  }
  if (used != text.size() || !std::isfinite(v)) throw DomainError("--" + name + " is not a number: " + text);
  return v;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

Json envelope(const RunConfig& config, const Options& opt) {
  Json j;
  j["toolkit"] = kToolkitName;
  j["version"] = kToolkitVersion;
  j["config"] = config.to_json();
  if (!opt.no_meta) j["meta"] = {{"timestamp", timestamp()}, {"threads", thread_count()}};
  return j;
}

Json exact_json(const ExactScalar& s, int digits) { return {{"exact", s.exact_string()}, {"approx", s.decimal(digits)}}; }

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string bigfloat_string(const BigFloat& v, int digits) { return v.is_zero() ? "0" : v.to_string(digits); }

void emit(const std::string& text, const RunConfig& config, std::ostream& out) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw DomainError("cannot open " + config.out + " for writing");
  file << text;
}

void emit_json(const Json& j, const RunConfig& config, std::ostream& out) { emit(j.dump(2) + "\n", config, out); }

int run_coeffs(const RunConfig& config, const Options& opt, std::ostream& out) {
  const int digits = config.digits.value_or(30);
  const Rational ratio = parse_rational(opt.ratio);
  const auto set = coefficients::coefficient_set(config.dimension, ratio);
  const ExactScalar a_d(set.ricci_prefactor);

  if (config.format == "json") {
    Json j = envelope(config, opt);
    j["dim"] = set.dimension;
    j["c_d"] = exact_json(set.c_d, digits);
    j["alpha"] = exact_json(set.alpha, digits);
    j["beta"] = exact_json(set.beta, digits);
    j["alpha_over_beta"] = exact_json(coefficients::alpha_over_beta(set.dimension), digits);
    j["n_d"] = set.layer_count;
    Json c = Json::array();
    for (const auto& q : set.layer_coefficients) c.push_back(rational_string(q));
    j["C"] = std::move(c);
    j["l_over_lp"] = rational_string(set.l_over_lp);
    j["zeta"] = exact_json(set.zeta, digits);
    j["a_d"] = exact_json(a_d, digits);
    emit_json(j, config, out);
    return kSuccess;
  }

  std::vector<std::pair<std::string, ExactScalar>> rows{{"c_d", set.c_d},
                                                        {"alpha", set.alpha},
                                                        {"beta", set.beta},
                                                        {"alpha_over_beta", coefficients::alpha_over_beta(set.dimension)},
                                                        {"zeta", set.zeta},
                                                        {"a_d", a_d}};
  for (int i = 0; i < set.layer_count; ++i) rows.emplace_back("C_" + std::to_string(i + 1), ExactScalar(set.layer_coefficients[static_cast<std::size_t>(i)]));
  std::ostringstream s;
  if (config.format == "csv") {
    s << "# " << kToolkitName << " " << kToolkitVersion << " " << config.to_json().dump() << "\n";
    s << "name,exact,approx\n";
    for (const auto& [name, v] : rows) s << name << "," << v.exact_string() << "," << v.decimal(digits) << "\n";
  } else {
    s << kToolkitName << " " << kToolkitVersion << "  " << config.to_json().dump() << "\n";
    s << "d = " << set.dimension << ", n_d = " << set.layer_count << "\n";
    for (const auto& [name, v] : rows) {
      s << std::left << std::setw(16) << name << std::setw(40) << v.exact_string() << v.decimal(digits) << "\n";
    }
  }
  emit(s.str(), config, out);
  return kSuccess;
}

sprinkling::DiamondSpec diamond_from(const RunConfig& config, const Options& opt) {
  sprinkling::DiamondSpec spec;
  spec.dimension = config.dimension;
  spec.tau = parse_double(opt.tau, "tau");
  spec.density = parse_double(opt.rho, "rho");
  spec.include_top_element = !opt.no_top;
  sprinkling::validate(spec);
  return spec;
}

int run_sprinkle(const RunConfig& config, const Options& opt, std::ostream& out) {
  const auto spec = diamond_from(config, opt);
  auto rng = sprinkling::run_stream(*config.seed, 0);
  const auto s = sprinkling::sample_diamond(spec, rng, *config.seed);
  const auto format = config.format == "bin" ? sprinkling::SprinkleFormat::binary : sprinkling::SprinkleFormat::json;
  sprinkling::save_sprinkle(config.out, s, format);
  Json j = envelope(config, opt);
  j["elements"] = s.size();
  j["volume"] = sprinkling::volume(spec);
  j["expected_elements"] = spec.density * sprinkling::volume(spec);
  j["top_index"] = s.top_index ? Json(*s.top_index) : Json(nullptr);
  out << j.dump(2) << "\n";
  return kSuccess;
}

int run_boxop(const RunConfig& config, const Options& opt, std::ostream& out) {
  const auto spec = diamond_from(config, opt);
  const auto field = dalembertian::FieldSpec::parse(opt.field, config.dimension);
  const auto coeffs = coefficients::coefficient_set(config.dimension, parse_rational(opt.ratio));
  const auto report = dalembertian::ensemble_mean_b(spec, field, coeffs, opt.runs, *config.seed);

  if (config.format == "csv") {
    std::ostringstream s;
    s << "# " << kToolkitName << " " << kToolkitVersion << " " << config.to_json().dump() << "\n";
    s << "# target=" << report.target << " mean=" << report.mean << " stderr=" << report.standard_error << "\n";
    s << "run,value,elements\n";
    s << std::setprecision(17);
    for (std::size_t r = 0; r < report.runs; ++r) s << r << "," << report.values[r] << "," << report.sizes[r] << "\n";
    emit(s.str(), config, out);
    return kSuccess;
  }
  Json j = envelope(config, opt);
  j["field"] = report.field;
  j["target"] = report.target;
  j["mean"] = report.mean;
  j["standard_error"] = report.standard_error;
  j["deviation"] = report.mean - report.target;
  j["runs"] = report.runs;
  j["master_seed"] = report.master_seed;
  j["values"] = report.values;
  j["elements"] = report.sizes;
  emit_json(j, config, out);
  return kSuccess;
}

int run_action(const RunConfig& config, const Options& opt, std::ostream& out) {
  const auto s = sprinkling::load_sprinkle(opt.in);
  if (s.dimension() != config.dimension) {
    throw DomainError("--dim " + std::to_string(config.dimension) + " does not match the sprinkle dimension " +
                      std::to_string(s.dimension()));
  }
  const auto coeffs = coefficients::coefficient_set(config.dimension, parse_rational(opt.ratio));
  const auto m = sprinkling::causal_matrix(s);
  const auto hist = dalembertian::interval_histogram(m, coeffs.layer_count);
  const auto value = dalembertian::action_exact(coeffs, s.size(), hist.counts);
  const int digits = config.digits.value_or(17);

  if (config.format == "csv") {
    std::ostringstream c;
    c << "# " << kToolkitName << " " << kToolkitVersion << " " << config.to_json().dump() << "\n";
    c << "name,value\nN," << s.size() << "\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i) c << "N_" << i + 1 << "," << hist.counts[i] << "\n";
    c << "overflow," << hist.overflow << "\naction," << value.decimal(digits) << "\n";
    emit(c.str(), config, out);
    return kSuccess;
  }
  Json j = envelope(config, opt);
  j["N"] = s.size();
  j["abundances"] = hist.counts;
  j["overflow"] = hist.overflow;
  j["action"] = exact_json(value, digits);
  emit_json(j, config, out);
  return kSuccess;
}

std::vector<Rational> ladder_for(const Options& opt, const Rational& default_top) {
  const Rational top = opt.zmax.empty() ? default_top : parse_rational(opt.zmax);
  return hypergeom::geometric_ladder(10, top, opt.points);
}

Json limit_json(const hypergeom::LimitReport& r, bool pass) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"z", rational_string(row.z)},
                    {"value", bigfloat_string(row.value, r.digits)},
                    {"target", bigfloat_string(row.target, r.digits)},
                    {"abs_error", bigfloat_string(row.abs_error, 6)}});
  }
  return {{"identity", r.identity},
          {"parameters", r.parameters},
          {"rows", std::move(rows)},
          {"monotone", r.monotone},
          {"fitted_exponent", number_or_null(r.fitted_exponent)},
          {"final_rel_error", r.final_rel_error},
          {"pass", pass}};
}

Json convergence_json(const continuum::ConvergenceReport& r, bool pass) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.ladder.size(); ++i) {
    rows.push_back({{"z", rational_string(r.ladder[i])},
                    {"value", bigfloat_string(r.values[i], r.digits)},
                    {"abs_error", bigfloat_string(r.abs_errors[i], 6)},
                    {"rel_error", r.rel_errors[i]},
                    {"largest_term", r.largest_term[i]}});
  }
  return {{"quantity", r.quantity},
          {"dim", r.dimension},
          {"target", bigfloat_string(r.target, r.digits)},
          {"asymptotic_limit", bigfloat_string(r.asymptotic_limit, r.digits)},
          {"rows", std::move(rows)},
          {"monotone", r.monotone},
          {"fitted_exponent", number_or_null(r.fitted_exponent)},
          {"predicted_exponent", r.predicted_exponent ? Json(rational_string(*r.predicted_exponent)) : Json(nullptr)},
          {"final_rel_error", r.final_rel_error},
          {"pass", pass}};
}

std::string verify_csv(const RunConfig& config, const Json& reports) {
  std::ostringstream s;
  s << "# " << kToolkitName << " " << kToolkitVersion << " " << config.to_json().dump() << "\n";
  s << "report,z,value,abs_error\n";
  for (const auto& r : reports) {
    const std::string name = r.contains("parameters") ? r["parameters"].get<std::string>() : r["quantity"].get<std::string>();
    if (!r.contains("rows")) continue;
    for (const auto& row : r["rows"]) {
      s << '"' << name << "\"," << row["z"].get<std::string>() << "," << row["value"].get<std::string>() << ","
        << row["abs_error"].get<std::string>() << "\n";
    }
  }
  return s.str();
}

int run_verify(const RunConfig& config, const Options& opt, std::ostream& out) {
  const int d = config.dimension;
  Json reports = Json::array();
  bool pass = true;

  if (opt.identity == "limit0" || opt.identity == "limit") {
    const int digits = config.digits.value_or(77);
    const auto ladder = ladder_for(opt, 10000);
    const auto sets = continuum::limit_parameter_sets(d);
    if (opt.identity == "limit0") {
      if (sets.flat.empty()) throw DomainError("no flat parameter sets arise in d = " + std::to_string(d));
      for (const auto& a : sets.flat) {
        const auto r = hypergeom::verify_limit_flat(a, ladder, digits);
        const bool ok = r.final_rel_error < kLimitTolerance && r.monotone;
        pass = pass && ok;
        reports.push_back(limit_json(r, ok));
      }
    } else {
      if (sets.gamma.empty()) throw DomainError("no gamma parameter sets arise in d = " + std::to_string(d));
      for (const auto& [a0, a] : sets.gamma) {
        const auto r = hypergeom::verify_limit_gamma(a0, a, ladder, digits);
        const bool ok = r.final_rel_error < kLimitTolerance && r.monotone;
        pass = pass && ok;
        reports.push_back(limit_json(r, ok));
      }
    }
  } else if (opt.identity == "generating") {
    const auto g = hypergeom::generating_polynomial(d);
    const int nd = coefficients::layer_count(d);
    Json rows = Json::array();
    for (int i = 1; i <= nd + 3; ++i) {
      const Rational c = coefficients::layer_coefficient(d, i);
      const Rational deriv = hypergeom::derivative_at_zero(g, i - 1);
      pass = pass && c == deriv;
      rows.push_back({{"i", i}, {"C_i", rational_string(c)}, {"derivative", rational_string(deriv)}, {"equal", c == deriv}});
    }
    reports.push_back({{"identity", "generating"}, {"polynomial", g.to_string("z")}, {"coefficients", std::move(rows)}, {"pass", pass}});
  } else {
    const int digits = config.digits.value_or(40);
    const auto defaults = continuum::default_ladder(d);
    const auto ladder = opt.zmax.empty() ? defaults : ladder_for(opt, defaults.back());
    if (opt.identity == "beta" || opt.identity == "alpha-beta") {
      const auto r = opt.identity == "beta" ? continuum::check_beta(d, ladder, digits)
                                            : continuum::check_alpha_over_beta(d, ladder, digits);
      pass = r.final_rel_error < kIntegralTolerance && r.monotone;
      Json j = convergence_json(r, pass);
      j["expected_exponent"] = rational_string(ratio(2, d));
      reports.push_back(std::move(j));
    } else {
      const auto r = continuum::check_ricci(d, ladder, digits);
      const bool ok_r = r.i_r.abs_errors.back().to_double() < kRicciTolerance && r.i_r.monotone;
      const bool ok_00 = r.i_00.final_rel_error < kCancellationRatio * r.i_00.largest_term.back() && r.i_00.monotone;
      pass = ok_r && ok_00;
      reports.push_back(convergence_json(r.i_r, ok_r));
      reports.push_back(convergence_json(r.i_00, ok_00));
    }
  }

  if (config.format == "csv") {
    emit(verify_csv(config, reports), config, out);
  } else {
    Json j = envelope(config, opt);
    j["identity"] = opt.identity;
    j["pass"] = pass;
    j["reports"] = std::move(reports);
    emit_json(j, config, out);
  }
  return pass ? kSuccess : kVerificationFailed;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Causal-set d'Alembertian coefficients, continuum checks and sprinkling", kToolkitName};
  app.set_version_flag("--version", std::string(kToolkitName) + " " + kToolkitVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", opt.threads, "OpenMP team size (falls back to CAUSET_THREADS)")->check(CLI::PositiveNumber);
  app.add_flag("--no-meta", opt.no_meta, "omit timestamp and thread count from the output");

  auto add_dim = [&](CLI::App* sub) { sub->add_option("--dim", opt.dim, "spacetime dimension")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "write to this file instead of stdout"); };

  auto* coeffs = app.add_subcommand("coeffs", "closed-form coefficients");
  add_dim(coeffs);
  coeffs->add_option("--ratio", opt.ratio, "l/l_p in zeta_d");
  coeffs->add_option("--digits", opt.digits, "decimal digits")->check(CLI::Range(1, 10000));
  coeffs->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv", "table"}));
  add_out(coeffs);

  auto* sprinkle = app.add_subcommand("sprinkle", "Poisson sprinkling of a causal diamond");
  add_dim(sprinkle);
  sprinkle->add_option("--tau", opt.tau, "proper time between the tips")->required();
  sprinkle->add_option("--rho", opt.rho, "density")->required();
  sprinkle->add_option("--seed", opt.seed, "master seed")->required();
  sprinkle->add_option("--out", opt.out, "sprinkle file")->required();
  sprinkle->add_option("--format", opt.format)->check(CLI::IsMember({"json", "bin"}));
  sprinkle->add_flag("--no-top", opt.no_top, "do not append the future tip");

  auto* boxop = app.add_subcommand("boxop", "ensemble mean of B at the diamond tip");
  add_dim(boxop);
  boxop->add_option("--tau", opt.tau)->required();
  boxop->add_option("--rho", opt.rho)->required();
  boxop->add_option("--runs", opt.runs)->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  boxop->add_option("--seed", opt.seed)->required();
  boxop->add_option("--field", opt.field, "e.g. t^2*window(0.5,1)")->required();
  boxop->add_option("--ratio", opt.ratio, "l/l_p in zeta_d");
  boxop->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  add_out(boxop);

  auto* action = app.add_subcommand("action", "action of a stored sprinkle");
  action->add_option("--in", opt.in, "sprinkle file (JSON or CSET1)")->required();
  add_dim(action);
  action->add_option("--ratio", opt.ratio, "l/l_p in zeta_d");
  action->add_option("--digits", opt.digits)->check(CLI::Range(1, 10000));
  action->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  add_out(action);

  auto* verify = app.add_subcommand("verify", "numerical identity and convergence checks");
  verify->add_option("--identity", opt.identity)
      ->required()
      ->check(CLI::IsMember({"limit0", "limit", "generating", "beta", "alpha-beta", "ricci"}));
  add_dim(verify);
  verify->add_option("--zmax", opt.zmax, "top of the z ladder");
  verify->add_option("--points", opt.points, "ladder points")->check(CLI::Range(2, 64));
  verify->add_option("--digits", opt.digits)->check(CLI::Range(10, 10000));
  verify->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolkitName << " " << kToolkitVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  RunConfig config;
  config.subcommand = app.get_subcommands().front()->get_name();
  config.dimension = opt.dim;
  config.seed = opt.seed;
  config.digits = opt.digits;
  config.format = opt.format;
  config.out = opt.out;
  if (config.subcommand == "coeffs") {
    config.parameters = {{"ratio", opt.ratio}};
  } else if (config.subcommand == "sprinkle") {
    config.parameters = {{"tau", opt.tau}, {"rho", opt.rho}, {"top", opt.no_top ? "false" : "true"}};
  } else if (config.subcommand == "boxop") {
    config.parameters = {{"tau", opt.tau}, {"rho", opt.rho}, {"runs", std::to_string(opt.runs)}, {"field", opt.field}, {"ratio", opt.ratio}};
  } else if (config.subcommand == "action") {
    config.parameters = {{"in", opt.in}, {"ratio", opt.ratio}};
  } else {
    config.parameters = {{"identity", opt.identity}, {"zmax", opt.zmax}, {"points", std::to_string(opt.points)}};
  }

  try {
    if (auto threads = resolve_thread_count(opt.threads)) set_thread_count(*threads);
    if (config.subcommand == "coeffs") return run_coeffs(config, opt, out);
    if (config.subcommand == "sprinkle") return run_sprinkle(config, opt, out);
    if (config.subcommand == "boxop") return run_boxop(config, opt, out);
    if (config.subcommand == "action") return run_action(config, opt, out);
    return run_verify(config, opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace causet::cli
