#include "cli/commands.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "vortex/adler_moser.hpp"
#include "vortex/correlation.hpp"
#include "vortex/errors.hpp"
#include "vortex/moebius.hpp"
#include "vortex/refine.hpp"

namespace vortex::cli {

namespace {

template <class T>
T param(const json& params, const char* key, T fallback) {
  if (!params.contains(key) || params.at(key).is_null()) return fallback;
  try {
    return params.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("parameter '") + key + "' has the wrong type");
  }
}

template <class T>
T required(const json& params, const char* key) {
  if (!params.contains(key)) throw ParseError(std::string("missing parameter '") + key + "'");
  try {
    return params.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("parameter '") + key + "' has the wrong type");
  }
}

ConfigFile config_param(const json& params) {
  if (!params.contains("config")) throw ParseError("missing configuration");
  return config_from_json(params.at("config"));
}

Complex point_param(const json& params, const char* key) {
  const auto xy = required<std::vector<double>>(params, key);
  if (xy.size() != 2) throw ParseError(std::string("parameter '") + key + "' needs two numbers");
  return {xy[0], xy[1]};
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json estimate_json(double eps, const QuadratureResult& r) {
  return {{"epsilon", eps},
          {"value", r.value},
          {"abs_error_estimate", r.abs_error_estimate},
          {"tail_correction", r.tail_correction},
          {"cells_used", r.cells_used},
          {"budget_exhausted", r.budget_exhausted}};
}

std::string csv_number(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

}  // namespace

CommandOutput cmd_energy(const json& params) {
  const auto file = config_param(params);
  CommandOutput out;
  out.report = {{"W", energy(file.config)},
                {"n_vortices", file.config.size()},
                {"convention", "sum over ordered pairs j != k (each unordered pair counted twice)"}};
  return out;
}

CommandOutput cmd_check(const json& params) {
  const auto file = config_param(params);
  const double tol = param(params, "tol", 1e-10);
  if (!(tol > 0.0)) throw ParseError("--tol must be positive");
  json forces_json = json::array();
  for (auto f : forces(file.config)) forces_json.push_back(complex_to_json(f));
  CommandOutput out;
  const double r = residual(file.config);
  out.report = {{"residual", r},
                {"tolerance", tol},
                {"is_equilibrium", r <= tol},
                {"forces", std::move(forces_json)}};
  return out;
}

CommandOutput cmd_correlation(const json& params) {
  const auto file = config_param(params);
  const auto& config = file.config;

  QuadratureSpec spec = default_spec(config);
  spec.cutoff_radius = param(params, "radius", spec.cutoff_radius);
  spec.target_abs_error = param(params, "target_error", spec.target_abs_error);
  spec.max_cells = param<std::int64_t>(params, "max_cells", spec.max_cells);
  auto epsilons = param(params, "eps_list", default_epsilons(config));
  const bool allow = param(params, "allow_nonequilibrium", false);
  const std::string format = param<std::string>(params, "format", "json");
  if (format != "json" && format != "csv") throw ParseError("--format must be json or csv");
  if (epsilons.size() < 2) throw ParseError("--eps-list needs at least two values");
  for (std::size_t i = 0; i + 1 < epsilons.size(); ++i) {
    if (!(epsilons[i] > epsilons[i + 1])) throw ParseError("--eps-list must be strictly decreasing");
  }

  const double r = residual(config);
  const bool equilibrium = r <= kCorrelationGate;
  if (!equilibrium && !allow) {
    std::ostringstream msg;
    msg << "configuration is not an equilibrium: residual max|f_j| = " << r << " exceeds "
        << kCorrelationGate << "; pass --allow-nonequilibrium for truncated values only";
    throw InvalidConfiguration(msg.str());
  }

  CommandOutput out;
  json estimates = json::array();
  bool exhausted = false;
  if (equilibrium) {
    const auto report = correlation_limit(config, epsilons, spec);
    for (std::size_t i = 0; i < report.epsilons.size(); ++i) {
      estimates.push_back(estimate_json(report.epsilons[i], report.estimates[i]));
    }
    exhausted = report.budget_exhausted;
    out.report = {{"extrapolated_limit", report.extrapolated_limit},
                  {"extrapolation_error", report.extrapolation_error},
                  {"observed_order", number_or_null(report.observed_order)},
                  {"fit_degenerate", report.fit_degenerate}};
  } else {
    for (const double eps : epsilons) {
      QuadratureSpec local = spec;
      local.epsilon = eps;
      const auto est = correlation_A_eps(config, local);
      exhausted = exhausted || est.budget_exhausted;
      estimates.push_back(estimate_json(eps, est));
    }
    out.report = {{"extrapolated_limit", nullptr},
                  {"extrapolation_error", nullptr},
                  {"observed_order", nullptr},
                  {"fit_degenerate", nullptr}};
  }
  out.report["truncated_only"] = !equilibrium;
  out.report["equilibrium_residual"] = r;
  out.report["epsilons"] = epsilons;
  out.report["estimates"] = std::move(estimates);
  out.report["cutoff_radius"] = spec.cutoff_radius;
  out.report["target_abs_error"] = spec.target_abs_error;
  out.report["max_cells"] = spec.max_cells;
  out.report["budget_exhausted"] = exhausted;
  if (exhausted) out.exit_code = kNumericFailure;

  if (format == "csv") {
    std::ostringstream csv;
    csv << "epsilon,value,abs_error_estimate,tail_correction,cells_used,budget_exhausted\n";
    for (const auto& e : out.report["estimates"]) {
      csv << csv_number(e["epsilon"].get<double>()) << ',' << csv_number(e["value"].get<double>())
          << ',' << csv_number(e["abs_error_estimate"].get<double>()) << ','
          << csv_number(e["tail_correction"].get<double>()) << ','
          << e["cells_used"].get<std::int64_t>() << ','
          << (e["budget_exhausted"].get<bool>() ? "true" : "false") << '\n';
    }
    out.csv = csv.str();
  }
  return out;
}

CommandOutput cmd_pair_integral(const json& params) {
  const Complex p = point_param(params, "p");
  const Complex q = point_param(params, "q");
  const double eps = required<double>(params, "eps");
  const double sep = std::abs(p - q);
  if (!(eps > 0.0) || !(eps < 0.5 * sep)) {
    std::ostringstream msg;
    msg << "--eps " << eps << " must lie in (0, |p - q|/2) = (0, " << 0.5 * sep << ")";
    throw ParseError(msg.str());
  }
  QuadratureSpec spec;
  spec.epsilon = eps;
  spec.cutoff_radius = param(params, "radius", 50.0 * (1.0 + sep));
  spec.target_abs_error = param(params, "target_error", 1e-6);
  spec.max_cells = param<std::int64_t>(params, "max_cells", spec.max_cells);

  const auto r = pair_integral(p, q, eps, spec);
  const auto m = moebius_params(eps / sep);
  CommandOutput out;
  out.report = {{"value", r.value},
                {"re", r.complex_value.real()},
                {"im", r.complex_value.imag()},
                {"abs_error_estimate", r.abs_error_estimate},
                {"tail_correction", r.tail_correction},
                {"cells_used", r.cells_used},
                {"budget_exhausted", r.budget_exhausted},
                {"moebius",
                 {{"epsilon", m.epsilon}, {"a", m.a}, {"b", m.b}, {"R1", m.R1}, {"R2", m.R2}}}};
  if (r.budget_exhausted) out.exit_code = kNumericFailure;
  return out;
}

CommandOutput cmd_adler_moser(const json& params) {
  const int n = required<int>(params, "n");
  std::vector<Complex> tau;
  for (const auto& t : param(params, "tau", json::array())) {
    tau.emplace_back(t.at("re").get<double>(), t.at("im").get<double>());
  }
  if (n < 1) throw ParseError("--n must be at least 1");
  if (tau.size() != static_cast<std::size_t>(n - 1)) {
    std::ostringstream msg;
    msg << "--n " << n << " needs " << n - 1 << " values in --tau-list, got " << tau.size();
    throw ParseError(msg.str());
  }
  const bool refine = param(params, "refine", false);

  const auto chain = adler_moser_chain(n, tau);
  auto config = config_from_adler_moser(chain);

  CommandOutput out;
  json degrees = json::array();
  for (const auto& p : chain.polynomials) degrees.push_back(p.degree());
  json defects = json::array();
  for (int k = 1; k < n; ++k) defects.push_back(wronskian_defect(chain, k));
  json tau_json = json::array();
  for (auto t : tau) tau_json.push_back(complex_to_json(t));

  const double before = residual(config);
  double after = before;
  int iterations = 0;
  std::string status = "not_refined";
  if (refine) {
    std::vector<std::size_t> all(config.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    NewtonSettings settings;
    settings.tolerance = 1e-13;
    const auto result = refine_equilibrium(config, all, settings);
    config = result.configuration;
    after = result.final_residual;
    iterations = result.iterations;
    status = to_string(result.status);
    if (after > 1e-12) out.exit_code = kNumericFailure;
  }

  std::ostringstream label;
  label << "adler-moser n=" << n;
  const json config_json = config_to_json(config, label.str());
  out.report = {{"n", n},
                {"tau", std::move(tau_json)},
                {"degrees", std::move(degrees)},
                {"wronskian_defects", std::move(defects)},
                {"n_negative", chain[n - 1].degree()},
                {"n_positive", chain[n].degree()},
                {"residual_before", before},
                {"residual_after", after},
                {"refined", refine},
                {"refine_status", status},
                {"iterations", iterations},
                {"config", config_json}};
  if (params.contains("out") && params.at("out").is_string()) {
    out.files.emplace_back(params.at("out").get<std::string>(), config_json);
  }
  return out;
}

CommandOutput cmd_refine(const json& params) {
  const auto file = config_param(params);
  std::vector<std::size_t> free;
  const json free_param = param(params, "free", json("all"));
  if (free_param.is_string() && free_param.get<std::string>() == "all") {
    for (std::size_t i = 0; i < file.config.size(); ++i) free.push_back(i);
  } else if (free_param.is_array()) {
    for (const auto& k : free_param) {
      if (!k.is_number_unsigned()) throw ParseError("--free indices must be non-negative integers");
      free.push_back(k.get<std::size_t>());
    }
  } else {
    throw ParseError("--free must be \"all\" or a list of indices");
  }
  NewtonSettings settings;
  settings.tolerance = param(params, "tol", settings.tolerance);
  settings.max_iterations = param(params, "max_iter", settings.max_iterations);
  if (!(settings.tolerance > 0.0)) throw ParseError("--tol must be positive");
  if (settings.max_iterations < 1) throw ParseError("--max-iter must be at least 1");
  for (auto k : free) {
    if (k >= file.config.size()) throw ParseError("--free index out of range");
  }

  const auto result = refine_equilibrium(file.config, free, settings);
  CommandOutput out;
  const json config_json = config_to_json(result.configuration, file.label);
  out.report = {{"free", free},
                {"tolerance", settings.tolerance},
                {"initial_residual", result.initial_residual},
                {"final_residual", result.final_residual},
                {"iterations", result.iterations},
                {"status", to_string(result.status)},
                {"converged", result.converged()},
                {"config", config_json}};
  if (!result.converged()) out.exit_code = kNumericFailure;
  if (params.contains("out") && params.at("out").is_string()) {
    out.files.emplace_back(params.at("out").get<std::string>(), config_json);
  }
  return out;
}

CommandOutput dispatch(const std::string& command, const json& params) {
  if (command == "energy") return cmd_energy(params);
  if (command == "check") return cmd_check(params);
  if (command == "correlation") return cmd_correlation(params);
  if (command == "pair-integral") return cmd_pair_integral(params);
  if (command == "adler-moser") return cmd_adler_moser(params);
  if (command == "refine") return cmd_refine(params);
  throw ParseError("unknown command '" + command + "'");
}

}  // namespace vortex::cli
