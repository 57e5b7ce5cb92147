// Command-line front end: `sweep` emits entanglement measures over an
// acceleration grid as CSV or JSON; `verify` runs the closed-form-vs-numeric
// oracle suite. Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unruhent/sweep.hpp"
#include "unruhent/verify.hpp"

namespace {

// Accepts "re" or "re,im".
std::complex<double> parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw CLI::ValidationError("expected a number, got '" + text + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw CLI::ValidationError("expected 're' or 're,im', got '" + text + "'");
  }
  return {re, im};
}

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  return text.substr(begin, text.find_last_not_of(" \t\r") - begin + 1);
}

// Expands a plain key=value config file into --key=value tokens, inserted
// right after the subcommand token. Explicit flags come later and win
// because every option takes its last occurrence.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config") {
      if (std::next(it) == args.end())
        throw std::runtime_error("--config expects a file path");
      path = *std::next(it);
      it = args.erase(it, it + 2);
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::vector<std::string> extra;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = trimmed(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": expected key=value");
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error(path + ":" + std::to_string(line_number) + ": empty key");
    extra.push_back("--" + key + "=" + value);
  }

  auto subcommand = std::find_if(args.begin(), args.end(), [](const std::string& arg) {
    return !arg.empty() && arg[0] != '-';
  });
  if (subcommand == args.end())
    throw std::runtime_error("--config requires a subcommand");
  args.insert(std::next(subcommand), extra.begin(), extra.end());
  return args;
}

int emit(const unruhent::sweep::SweepConfig& config) {
  const auto rows = unruhent::sweep::run_sweep(config);
  if (config.output_path == "-") {
    unruhent::sweep::write_rows(std::cout, config.format, rows);
    return 0;
  }
  std::ofstream out(config.output_path);
  if (!out) {
    std::cerr << "error: cannot open '" << config.output_path << "' for writing\n";
    return 1;
  }
  unruhent::sweep::write_rows(out, config.format, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of a shared Dirac mode between an inertial observer and a "
               "uniformly accelerated one"};
  app.require_subcommand(1);

  // --- sweep ---
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a state family over an acceleration grid");
  sweep_cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string config_path;
  sweep_cmd->add_option("--config", config_path,
                        "plain key=value config file; flags win on conflict");

  std::string family_name = "bell-phi+";
  sweep_cmd->add_option("--family", family_name,
                        "state family: bell-phi+ bell-phi- bell-psi+ bell-psi- mode "
                        "occupation-singlet custom")
      ->capture_default_str();

  std::string spin_pair = "ud";
  sweep_cmd->add_option("--spin-pair", spin_pair, "mode family spins: ud du uu dd")
      ->check(CLI::IsMember({"ud", "du", "uu", "dd"}))
      ->capture_default_str();

  unruhent::sweep::GridSpec grid;
  auto* r_min_opt = sweep_cmd->add_option("--r-min", grid.r_min, "grid start (radians)")
                        ->capture_default_str();
  auto* r_max_opt = sweep_cmd->add_option("--r-max", grid.r_max, "grid end (radians)")
                        ->capture_default_str();
  sweep_cmd->add_option("--steps", grid.steps, "number of grid points (>= 2)")
      ->capture_default_str();

  double x_min = 0.0, x_max = 0.0;
  std::string x_scale = "linear";
  auto* x_min_opt = sweep_cmd->add_option("--x-min", x_min, "grid start in x = omega c / a");
  auto* x_max_opt = sweep_cmd->add_option("--x-max", x_max, "grid end in x = omega c / a");
  sweep_cmd->add_option("--x-scale", x_scale, "x grid spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  x_min_opt->excludes(r_min_opt)->excludes(r_max_opt);
  x_max_opt->excludes(r_min_opt)->excludes(r_max_opt);

  double phi = 0.0;
  sweep_cmd->add_option("--phi", phi, "Bogoliubov phase")->capture_default_str();

  std::string alpha = "0", beta = "0", gamma = "0", delta = "0";
  sweep_cmd->add_option("--alpha", alpha, "custom family: amplitude of |u,u> (re or re,im)");
  sweep_cmd->add_option("--beta", beta, "custom family: amplitude of |u,d>");
  sweep_cmd->add_option("--gamma", gamma, "custom family: amplitude of |d,u>");
  sweep_cmd->add_option("--delta", delta, "custom family: amplitude of |d,d>");

  std::string format = "csv";
  sweep_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::string out_path = "-";
  sweep_cmd->add_option("--out", out_path, "output path ('-' for stdout)")->capture_default_str();

  // --- verify ---
  auto* verify_cmd =
      app.add_subcommand("verify", "run every closed-form-vs-numeric oracle and report max errors");
  std::optional<double> tolerance;
  verify_cmd->add_option("--tolerance", tolerance,
                         "override the per-check tolerances with one global value");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config(std::move(args));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sweep_cmd->parsed()) {
      unruhent::sweep::SweepConfig config;
      const auto family = unruhent::sweep::parse_family(family_name);
      if (!family) {
        std::cerr << "error: unknown state family '" << family_name << "'\n";
        return 1;
      }
      config.family = *family;
      config.pair_alice = spin_pair[0] == 'u' ? unruhent::fock::Spin::Up
                                              : unruhent::fock::Spin::Down;
      config.pair_rob = spin_pair[1] == 'u' ? unruhent::fock::Spin::Up
                                            : unruhent::fock::Spin::Down;
      config.grid = grid;
      if (x_min_opt->count() || x_max_opt->count()) {
        if (x_min_opt->count()) config.grid.x_min = x_min;
        if (x_max_opt->count()) config.grid.x_max = x_max;
        config.grid.x_scale = x_scale == "log" ? unruhent::sweep::XScale::Log
                                               : unruhent::sweep::XScale::Linear;
      }
      config.phi = phi;
      if (config.family == unruhent::sweep::Family::Custom)
        config.custom = unruhent::entanglement::StateParams::from_excitations(
            parse_complex(alpha), parse_complex(beta), parse_complex(gamma), parse_complex(delta));
      config.format = format == "json" ? unruhent::sweep::OutputFormat::Json
                                       : unruhent::sweep::OutputFormat::Csv;
      config.output_path = out_path;
      return emit(config);
    }
    return unruhent::verify::run_and_report(std::cout, tolerance);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
