#include "unruhent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "unruhent/spintrace.hpp"
#include "unruhent/unruh.hpp"

namespace unruhent::sweep {

namespace {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

density::DensityMatrix state_for(const SweepConfig& config, const rindler::SqueezingParams& p) {
  switch (config.family) {
    case Family::BellPhiPlus:
      return entanglement::bell_rho_ar(entanglement::BellKind::PhiPlus, p);
    case Family::BellPhiMinus:
      return entanglement::bell_rho_ar(entanglement::BellKind::PhiMinus, p);
    case Family::BellPsiPlus:
      return entanglement::bell_rho_ar(entanglement::BellKind::PsiPlus, p);
    case Family::BellPsiMinus:
      return entanglement::bell_rho_ar(entanglement::BellKind::PsiMinus, p);
    case Family::Mode:
      return entanglement::mode_entangled_rho_ar(p, config.pair_alice, config.pair_rob);
    case Family::OccupationSinglet:
      return spintrace::occupation_rho(spintrace::maximally_entangled_occupation_state(), p);
    case Family::Custom:
      return entanglement::build_general_rho_ar(*config.custom, p);
  }
  throw std::invalid_argument("unknown state family");
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "bell-phi+") return Family::BellPhiPlus;
  if (name == "bell-phi-") return Family::BellPhiMinus;
  if (name == "bell-psi+") return Family::BellPsiPlus;
  if (name == "bell-psi-") return Family::BellPsiMinus;
  if (name == "mode") return Family::Mode;
  if (name == "occupation-singlet") return Family::OccupationSinglet;
  if (name == "custom") return Family::Custom;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::BellPhiPlus: return "bell-phi+";
    case Family::BellPhiMinus: return "bell-phi-";
    case Family::BellPsiPlus: return "bell-psi+";
    case Family::BellPsiMinus: return "bell-psi-";
    case Family::Mode: return "mode";
    case Family::OccupationSinglet: return "occupation-singlet";
    case Family::Custom: return "custom";
  }
  return "?";
}

void validate(const SweepConfig& config) {
  if (config.grid.steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
  if (config.grid.uses_x()) {
    if (!config.grid.x_min || !config.grid.x_max)
      throw std::invalid_argument("an x grid needs both x-min and x-max");
    if (!(*config.grid.x_min > 0.0) || !(*config.grid.x_max > 0.0))
      throw std::invalid_argument("frequency ratios must be positive");
    if (!(*config.grid.x_min < *config.grid.x_max))
      throw std::invalid_argument("x-min must be below x-max");
  } else {
    if (!(config.grid.r_min >= 0.0) || !(config.grid.r_max <= M_PI / 4.0 + 1e-12) ||
        !(config.grid.r_min < config.grid.r_max))
      throw std::invalid_argument("r range must satisfy 0 <= r-min < r-max <= pi/4");
  }
  if (config.family == Family::Custom) {
    if (!config.custom) throw std::invalid_argument("family 'custom' needs state parameters");
    config.custom->validate();
  }
}

SweepRow evaluate_point(const SweepConfig& config, double r, std::optional<double> x) {
  rindler::SqueezingParams p{r, config.phi, x};

  SweepRow row;
  row.r = r;
  row.x = x;
  row.expected_number = unruh::expected_number(p);

  const density::DensityMatrix rho = state_for(config, p);
  const entanglement::EntanglementReport report = entanglement::analyze_bipartite(rho, r);
  row.negativity = report.negativity;
  row.mutual_information = report.mutual_information;
  row.pt_min_eigenvalue = report.pt_spectrum.front();
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  const int n = config.grid.steps;

  std::vector<double> rs(n);
  std::vector<std::optional<double>> xs(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    if (config.grid.uses_x()) {
      const double lo = *config.grid.x_min, hi = *config.grid.x_max;
      double x = config.grid.x_scale == XScale::Log ? lo * std::pow(hi / lo, t)
                                                    : lo + t * (hi - lo);
      if (i == 0) x = lo;
      if (i == n - 1) x = hi;
      xs[i] = x;
      rs[i] = rindler::squeezing_r(x);
    } else {
      rs[i] = i == 0          ? config.grid.r_min
              : (i == n - 1) ? config.grid.r_max
                             : config.grid.r_min + t * (config.grid.r_max - config.grid.r_min);
    }
  }

  // Points are independent pure evaluations; compute them in parallel and
  // emit by index.
  std::vector<SweepRow> rows(n);
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
  std::atomic<int> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    try {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        rows[i] = evaluate_point(config, rs[i], xs[i]);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(n);
    }
  };
  if (workers <= 1 || n < 4) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "r,x,negativity,mutual_information,pt_min_eigenvalue,expected_number\n";
  for (const auto& row : rows) {
    out << format_double(row.r) << ',';
    if (row.x) out << format_double(*row.x);
    out << ',' << format_double(row.negativity) << ',' << format_double(row.mutual_information)
        << ',' << format_double(row.pt_min_eigenvalue) << ','
        << format_double(row.expected_number) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    out << "  {\"r\": " << format_double(row.r) << ", \"x\": "
        << (row.x ? format_double(*row.x) : "null")
        << ", \"negativity\": " << format_double(row.negativity)
        << ", \"mutual_information\": " << format_double(row.mutual_information)
        << ", \"pt_min_eigenvalue\": " << format_double(row.pt_min_eigenvalue)
        << ", \"expected_number\": " << format_double(row.expected_number) << "}"
        << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  out << "]\n";
}

void write_rows(std::ostream& out, OutputFormat format, const std::vector<SweepRow>& rows) {
  if (format == OutputFormat::Csv)
    write_csv(out, rows);
  else
    write_json(out, rows);
}

}  // namespace unruhent::sweep
