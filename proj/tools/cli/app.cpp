#include "cli/app.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "cli/commands.hpp"
#include "vortex/errors.hpp"

namespace vortex::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split_list(text)) values.push_back(parse_complex(item).real());
  return values;
}

json make_manifest(const std::string& command, const json& params, const json& results) {
  return {{"command", command},
          {"parameters", params},
          {"tool_version", VORTEX_TOOL_VERSION},
          {"results", results}};
}

int replay(const std::string& path, std::ostream& out) {
  const json manifest = read_json_file(path);
  if (!manifest.contains("command") || !manifest.contains("parameters") ||
      !manifest.contains("results")) {
    throw ParseError("manifest needs command, parameters and results");
  }
  const auto command = manifest.at("command").get<std::string>();
  const auto rerun = dispatch(command, manifest.at("parameters"));
  const bool identical = rerun.report.dump() == manifest.at("results").dump();
  out << json{{"command", command}, {"identical", identical}}.dump(2) << '\n';
  return identical ? kSuccess : kReplayMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point-vortex energies, equilibria and the correlation coefficient"};
  app.require_subcommand(1);
  app.set_version_flag("--version", VORTEX_TOOL_VERSION);

  std::string config_path;
  std::string manifest_path;
  double tol = 0.0;
  std::string eps_list;
  double radius = 0.0;
  double target_error = 0.0;
  std::int64_t max_cells = 0;
  std::string format = "json";
  bool allow_nonequilibrium = false;
  std::string p_text;
  std::string q_text;
  double eps = 0.0;
  int n = 0;
  std::string tau_list;
  bool refine = false;
  std::string out_path;
  std::string free_text = "all";
  int max_iter = 0;

  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("--manifest", manifest_path, "Write a run manifest to this path");
  };

  auto* energy = app.add_subcommand("energy", "Kirchhoff-Onsager energy W (ordered pairs)");
  energy->add_option("config", config_path, "Configuration JSON")->required();
  add_manifest(energy);

  auto* check = app.add_subcommand("check", "Forces f_j, residual and equilibrium test");
  check->add_option("config", config_path, "Configuration JSON")->required();
  auto* check_tol = check->add_option("--tol", tol, "Equilibrium tolerance on max |f_j|");
  add_manifest(check);

  auto* corr = app.add_subcommand("correlation", "A_eps estimates and the eps -> 0 limit");
  corr->add_option("config", config_path, "Configuration JSON")->required();
  auto* corr_eps = corr->add_option("--eps-list", eps_list, "Decreasing excision radii, comma separated");
  auto* corr_radius = corr->add_option("--radius", radius, "Cutoff radius R");
  auto* corr_target = corr->add_option("--target-error", target_error, "Absolute error target");
  auto* corr_cells = corr->add_option("--max-cells", max_cells, "Cell budget per radius");
  corr->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  corr->add_flag("--allow-nonequilibrium", allow_nonequilibrium,
                 "Report truncated values for a non-equilibrium");
  add_manifest(corr);

  auto* pair = app.add_subcommand("pair-integral",
                                  "Integral of conj(z-p)^-2 (z-q)^-2 outside two eps-disks");
  pair->add_option("--p", p_text, "First centre x,y")->required();
  pair->add_option("--q", q_text, "Second centre x,y")->required();
  pair->add_option("--eps", eps, "Excision radius")->required();
  auto* pair_target = pair->add_option("--target-error", target_error, "Absolute error target");
  auto* pair_radius = pair->add_option("--radius", radius, "Cutoff radius R");
  auto* pair_cells = pair->add_option("--max-cells", max_cells, "Cell budget");
  add_manifest(pair);

  auto* am = app.add_subcommand("adler-moser", "Equilibrium from consecutive Adler-Moser polynomials");
  am->add_option("--n", n, "Chain index n >= 1")->required();
  am->add_option("--tau-list", tau_list, "tau_2..tau_n, comma separated (a, a+bi)");
  am->add_flag("--refine", refine, "Newton-refine the roots");
  am->add_option("--out", out_path, "Write the configuration here");
  add_manifest(am);

  auto* ref = app.add_subcommand("refine", "Newton refinement of an approximate equilibrium");
  ref->add_option("config", config_path, "Configuration JSON")->required();
  ref->add_option("--free", free_text, "Indices allowed to move: all or i,j,...");
  auto* ref_tol = ref->add_option("--tol", tol, "Target residual");
  auto* ref_iter = ref->add_option("--max-iter", max_iter, "Iteration cap");
  ref->add_option("--out", out_path, "Write the refined configuration here");
  add_manifest(ref);

  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "Re-run a manifest and compare results bit for bit");
  rep->add_option("manifest", replay_path, "Manifest JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (rep->parsed()) return replay(replay_path, out);

    std::string command;
    json params = json::object();
    auto load_config = [&] { params["config"] = read_json_file(config_path); };

    if (energy->parsed()) {
      command = "energy";
      load_config();
    } else if (check->parsed()) {
      command = "check";
      load_config();
      if (check_tol->count()) params["tol"] = tol;
    } else if (corr->parsed()) {
      command = "correlation";
      load_config();
      if (corr_eps->count()) params["eps_list"] = parse_reals(eps_list);
      if (corr_radius->count()) params["radius"] = radius;
      if (corr_target->count()) params["target_error"] = target_error;
      if (corr_cells->count()) params["max_cells"] = max_cells;
      params["format"] = format;
      params["allow_nonequilibrium"] = allow_nonequilibrium;
    } else if (pair->parsed()) {
      command = "pair-integral";
      const Complex p = parse_point(p_text);
      const Complex q = parse_point(q_text);
      params["p"] = {p.real(), p.imag()};
      params["q"] = {q.real(), q.imag()};
      params["eps"] = eps;
      if (pair_target->count()) params["target_error"] = target_error;
      if (pair_radius->count()) params["radius"] = radius;
      if (pair_cells->count()) params["max_cells"] = max_cells;
    } else if (am->parsed()) {
      command = "adler-moser";
      params["n"] = n;
      json tau = json::array();
      for (const auto& item : split_list(tau_list)) tau.push_back(complex_to_json(parse_complex(item)));
      params["tau"] = std::move(tau);
      params["refine"] = refine;
      if (!out_path.empty()) params["out"] = out_path;
    } else if (ref->parsed()) {
      command = "refine";
      load_config();
      if (free_text == "all") {
        params["free"] = "all";
      } else {
        json indices = json::array();
        for (const auto& item : split_list(free_text)) {
          const double k = parse_complex(item).real();
          if (k < 0 || k != static_cast<double>(static_cast<long long>(k))) {
            throw ParseError("--free indices must be non-negative integers");
          }
          indices.push_back(static_cast<std::size_t>(k));
        }
        params["free"] = std::move(indices);
      }
      if (ref_tol->count()) params["tol"] = tol;
      if (ref_iter->count()) params["max_iter"] = max_iter;
      if (!out_path.empty()) params["out"] = out_path;
    }

    auto result = dispatch(command, params);
    for (const auto& [path, doc] : result.files) write_json_file(path, doc);
    if (!manifest_path.empty()) {
      write_json_file(manifest_path, make_manifest(command, params, result.report));
    }
    if (!result.csv.empty()) {
      out << result.csv;
    } else {
      out << result.report.dump(2) << '\n';
    }
    if (result.exit_code == kNumericFailure) {
      err << "vortex " << command << ": numeric target not met (see report)\n";
    }
    return result.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidConfiguration& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const PoleEvaluation& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const DegenerateParameters& e) {
    err << "degenerate construction: " << e.what() << '\n';
    return kDegenerateConstruction;
  } catch (const NonConvergence& e) {
    err << "no convergence: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace vortex::cli
