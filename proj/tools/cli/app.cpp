#include "cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bornsim/errors.hpp"
#include "cli/commands.hpp"
#include "cli/exit_codes.hpp"

namespace bornsim::cli {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// deg/180 is exact for the common right-angle inputs, so 90 degrees lands
// exactly on pi/2.
double deg_to_rad(double deg) { return (deg / 180.0) * kPi; }

struct ThetaOptions {
  double degrees = 90.0;
  double radians = 0.0;
  CLI::Option* radians_opt = nullptr;

  void attach(CLI::App* sub) {
    CLI::Option* deg = sub->add_option("--theta-degrees", degrees,
                                       "Tilt of the incoming spin off the "
                                       "measurement axis, in degrees")
                           ->capture_default_str();
    radians_opt =
        sub->add_option("--theta-radians", radians,
                        "Tilt in radians (alternative to --theta-degrees)");
    deg->excludes(radians_opt);
    radians_opt->excludes(deg);
  }

  double resolve() const {
    return radians_opt->count() > 0 ? radians : deg_to_rad(degrees);
  }
};

void attach_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--out", common.out_dir, "Output directory")
      ->capture_default_str();
  sub->add_option("--format", common.format, "Tabular output selection")
      ->check(CLI::IsMember({"csv", "json", "both"}))
      ->capture_default_str();
  sub->add_flag("--svg", common.svg, "Also emit a self-contained SVG plot");
  sub->add_option("--seed", common.seed, "Seed for sampled histories")
      ->capture_default_str();
  // Handled by the flat-config preprocessor below; registered here so it
  // appears in --help and parses cleanly.
  sub->add_option("--config", common.config_path,
                  "Flat key=value file with # comments; command-line flags "
                  "win over file values");
}

void attach_sg_params(CLI::App* sub, SgParams& params, double& sigma0) {
  sub->add_option("--mass", params.mass, "Particle mass (natural units)")
      ->capture_default_str();
  sub->add_option("--coupling", params.coupling, "Magnetic-moment scale")
      ->capture_default_str();
  sub->add_option("--b0", params.field_b0, "Uniform field at packet center")
      ->capture_default_str();
  sub->add_option("--gradient", params.gradient, "Field gradient along y")
      ->capture_default_str();
  sub->add_option("--grid-length", params.grid_length, "Grid extent L")
      ->capture_default_str();
  sub->add_option("--grid-points", params.grid_points,
                  "Grid points (power of two)")
      ->capture_default_str();
  sub->add_option("--dt", params.dt, "Time step")->capture_default_str();
  sub->add_option("--t-final", params.t_final, "Propagation time")
      ->capture_default_str();
  sub->add_option("--sigma0", sigma0, "Initial packet width")
      ->capture_default_str();
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct ConfigEntry {
  std::string key;
  std::string value;
};

// Flat key=value lines, # comments, underscores and dashes interchangeable
// in keys.
std::vector<ConfigEntry> read_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open config file: " + path);
  std::vector<ConfigEntry> entries;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::domain_error("config line " + std::to_string(line_no) +
                              ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::domain_error("config line " + std::to_string(line_no) +
                              ": empty key");
    }
    std::replace(key.begin(), key.end(), '_', '-');
    if (!seen.insert(key).second) {
      throw std::domain_error("config: duplicate key '" + key + "'");
    }
    entries.push_back({key, value});
  }
  return entries;
}

// Applies a config file to the argument list of one subcommand: every key
// becomes --key=value unless the same flag already appears on the command
// line. The tilt angle is one logical field with two spellings, so either
// spelling on the command line overrides both in the file.
std::vector<std::string> merge_config(const CLI::App& app,
                                      std::vector<std::string> args) {
  // Locate the subcommand token.
  std::vector<std::string> names;
  for (const CLI::App* sub :
       const_cast<CLI::App&>(app).get_subcommands([](const CLI::App*) {
         return true;
       })) {
    names.push_back(sub->get_name());
  }
  std::size_t sub_index = args.size();
  const CLI::App* sub = nullptr;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (std::find(names.begin(), names.end(), args[i]) != names.end()) {
      sub_index = i;
      sub = const_cast<CLI::App&>(app).get_subcommand(args[i]);
      break;
    }
  }
  if (sub == nullptr) return args;

  // Locate --config among the subcommand's arguments.
  std::string config_path;
  for (std::size_t i = sub_index + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty()) return args;

  std::set<std::string> valid;
  for (const CLI::Option* opt : sub->get_options()) {
    for (const std::string& lname : opt->get_lnames()) valid.insert(lname);
  }

  const auto user_has = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (std::size_t i = sub_index + 1; i < args.size(); ++i) {
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };

  std::vector<ConfigEntry> entries = read_flat_config(config_path);
  bool file_has_degrees = false, file_has_radians = false;
  for (const ConfigEntry& e : entries) {
    if (e.key == "config") {
      throw std::domain_error("config: a config file cannot set 'config'");
    }
    if (valid.find(e.key) == valid.end()) {
      throw std::domain_error("config: unknown key '" + e.key + "' for '" +
                              sub->get_name() + "'");
    }
    file_has_degrees = file_has_degrees || e.key == "theta-degrees";
    file_has_radians = file_has_radians || e.key == "theta-radians";
  }
  if (file_has_degrees && file_has_radians) {
    throw std::domain_error(
        "config: theta-degrees and theta-radians are mutually exclusive");
  }
  const bool user_sets_theta =
      user_has("theta-degrees") || user_has("theta-radians");

  for (const ConfigEntry& e : entries) {
    const bool is_theta = e.key == "theta-degrees" || e.key == "theta-radians";
    if (is_theta && user_sets_theta) continue;
    if (user_has(e.key)) continue;
    args.push_back("--" + e.key + "=" + e.value);
  }
  return args;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "bornsim: spin-1/2 wavepacket splitting in a field gradient, with "
      "weighted branch counting over repeated runs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bornsim 1.0.0");

  int exit_code = kExitOk;

  // evolve
  auto evolve_opts = std::make_shared<EvolveOptions>();
  auto evolve_common = std::make_shared<CommonOptions>();
  auto evolve_theta = std::make_shared<ThetaOptions>();
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Propagate one packet and record the splitting time series");
  evolve_theta->attach(evolve);
  attach_sg_params(evolve, evolve_opts->params, evolve_opts->sigma0);
  evolve->add_option("--record-every", evolve_opts->record_every,
                     "Steps between recorded rows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  attach_common(evolve, *evolve_common);
  evolve->callback([=, &exit_code] {
    evolve_opts->theta = evolve_theta->resolve();
    exit_code = cmd_evolve(*evolve_opts, *evolve_common);
  });

  // branch
  auto branch_opts = std::make_shared<BranchOptions>();
  auto branch_common = std::make_shared<CommonOptions>();
  auto branch_q = std::make_shared<std::string>("1/2");
  auto branch_mode = std::make_shared<std::string>("weighted");
  CLI::App* branch = app.add_subcommand(
      "branch", "Tally observer histories over N repeated runs");
  branch->add_option("--N", branch_opts->runs, "Number of runs")
      ->capture_default_str();
  branch->add_option("--q", *branch_q,
                     "Plus-branch weight; \"num/den\" keeps the tally exact")
      ->capture_default_str();
  branch->add_option("--mode", *branch_mode, "Counting rule")
      ->check(CLI::IsMember({"naive", "weighted"}))
      ->capture_default_str();
  branch->add_flag("--enumerate", branch_opts->enumerate,
                   "Walk all 2^N histories instead of the closed form");
  attach_common(branch, *branch_common);
  branch->callback([=, &exit_code] {
    parse_branch_weight(*branch_q, branch_opts->q, branch_opts->q_exact);
    branch_opts->mode =
        *branch_mode == "naive" ? BranchMode::naive : BranchMode::weighted;
    exit_code = cmd_branch(*branch_opts, *branch_common);
  });

  // compare
  auto compare_opts = std::make_shared<CompareOptions>();
  auto compare_common = std::make_shared<CommonOptions>();
  auto compare_theta = std::make_shared<ThetaOptions>();
  CLI::App* compare = app.add_subcommand(
      "compare", "Naive vs weighted history distributions at one angle");
  compare->add_option("--N", compare_opts->runs, "Number of runs")
      ->capture_default_str();
  compare_theta->attach(compare);
  compare->add_option("--samples", compare_opts->samples,
                      "Sampled histories (0 = analytic only)")
      ->capture_default_str();
  attach_common(compare, *compare_common);
  compare->callback([=, &exit_code] {
    compare_opts->theta = compare_theta->resolve();
    exit_code = cmd_compare(*compare_opts, *compare_common);
  });

  // end-to-end
  auto e2e_opts = std::make_shared<EndToEndOptions>();
  auto e2e_common = std::make_shared<CommonOptions>();
  auto e2e_theta = std::make_shared<ThetaOptions>();
  CLI::App* e2e = app.add_subcommand(
      "end-to-end",
      "Solver-extracted branch weight fed through the full analysis");
  e2e->add_option("--N", e2e_opts->runs, "Number of runs")
      ->capture_default_str();
  e2e_theta->attach(e2e);
  attach_sg_params(e2e, e2e_opts->params, e2e_opts->sigma0);
  e2e->add_option("--samples", e2e_opts->samples,
                  "Sampled histories (0 = analytic only)")
      ->capture_default_str();
  e2e->add_option("--selfcheck-fault", e2e_opts->selfcheck_fault,
                  "Testing aid: bias the extracted weight to exercise the "
                  "self-check failure path")
      ->capture_default_str();
  attach_common(e2e, *e2e_common);
  e2e->callback([=, &exit_code] {
    e2e_opts->theta = e2e_theta->resolve();
    exit_code = cmd_end_to_end(*e2e_opts, *e2e_common);
  });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverError;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return exit_code;
}

}  // namespace bornsim::cli
