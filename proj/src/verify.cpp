#include "unruhent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "unruhent/density.hpp"
#include "unruhent/entanglement.hpp"
#include "unruhent/rindler.hpp"
#include "unruhent/spintrace.hpp"
#include "unruhent/unruh.hpp"

namespace unruhent::verify {

namespace {

using entanglement::StateParams;
using rindler::SqueezingParams;

double state_diff(const fock::StateVector& a, const fock::StateVector& b) {
  fock::StateVector d = a - b;
  return d.norm();
}

double matrix_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double sorted_diff(std::vector<double> a, std::vector<double> b) {
  while (a.size() < b.size()) a.push_back(0.0);
  while (b.size() < a.size()) b.push_back(0.0);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

StateParams random_params(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  fock::Complex z[4];
  double norm2 = 0.0;
  for (auto& c : z) {
    c = fock::Complex{gauss(rng), gauss(rng)};
    norm2 += std::norm(c);
  }
  const double weight = std::sqrt(uniform(rng) / norm2);
  for (auto& c : z) c *= weight;
  return StateParams::from_excitations(z[0], z[1], z[2], z[3]);
}

struct Suite {
  std::vector<CheckResult> results;
  std::optional<double> override_tol;

  void check(std::string name, double max_error, double tolerance) {
    const double tol = override_tol.value_or(tolerance);
    results.push_back({std::move(name), max_error, tol, max_error <= tol});
  }
};

void vacuum_checks(Suite& suite) {
  double solver_err = 0.0, residual = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double r = (M_PI / 4.0) * i / 19.0;
    for (int j = 0; j < 8; ++j) {
      const SqueezingParams p{r, 2.0 * M_PI * j / 8.0, std::nullopt};
      const fock::StateVector built = rindler::build_rindler_vacuum(p);
      solver_err = std::max(solver_err, state_diff(rindler::solve_vacuum_numerically(p), built));
      for (auto s : {fock::Spin::Up, fock::Spin::Down})
        residual = std::max(residual, rindler::apply_minkowski_annihilator(p, s, built).norm());
    }
  }
  suite.check("rindler: vacuum nullspace solver vs closed-form coefficients", solver_err, 1e-12);
  suite.check("rindler: vacuum annihilation residual", residual, 1e-12);

  double one_particle_err = 0.0;
  for (int i = 0; i < 12; ++i) {
    const SqueezingParams p{(M_PI / 4.0) * i / 11.0, 0.7 * i, std::nullopt};
    const fock::StateVector vac = rindler::build_rindler_vacuum(p);
    for (auto s : {fock::Spin::Up, fock::Spin::Down})
      one_particle_err =
          std::max(one_particle_err, state_diff(rindler::apply_minkowski_creator(p, s, vac),
                                                rindler::build_one_particle(p, s)));
  }
  suite.check("rindler: one-particle builder vs Bogoliubov operator pipeline", one_particle_err,
              1e-12);
}

void unruh_checks(Suite& suite) {
  double trace_err = 0.0, fermi_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = (M_PI / 4.0) * (i + 1) / 50.0;
    const SqueezingParams p{r, 0.3, std::nullopt};
    const auto rho_r = density::partial_trace(
        density::from_pure(rindler::build_rindler_vacuum(p)), {std::string(density::kRegionIFactor)});
    const double numeric = unruh::number_operator_expectation(rho_r);
    const double closed = unruh::expected_number(p);
    trace_err = std::max(trace_err, std::abs(numeric - closed));
    const double x = -std::log(std::tan(r)) / M_PI;
    if (x > 0.0)
      fermi_err = std::max(fermi_err,
                           std::abs(closed - unruh::expected_number_from_frequency_ratio(x)));
  }
  suite.check("unruh: Tr(N rho_R) vs 2 sin^2 r", trace_err, 1e-12);
  suite.check("unruh: 2 sin^2 r vs Fermi-Dirac occupancy", fermi_err, 1e-12);

  double vac_trace_err = 0.0;
  for (int i = 0; i < 10; ++i) {
    const SqueezingParams p{(M_PI / 4.0) * i / 9.0, 1.1, std::nullopt};
    const auto rho_r = density::partial_trace(
        density::from_pure(rindler::build_rindler_vacuum(p)), {std::string(density::kRegionIFactor)});
    const double c2 = std::cos(p.r) * std::cos(p.r), s2 = std::sin(p.r) * std::sin(p.r);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected.diagonal() << c2 * c2, s2 * c2, s2 * c2, s2 * s2;
    vac_trace_err = std::max(vac_trace_err, matrix_diff(rho_r.matrix(), expected));
  }
  suite.check("density: traced vacuum vs closed-form diagonal", vac_trace_err, 1e-12);
}

void general_state_checks(Suite& suite) {
  std::mt19937 rng(20100907);
  double err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const StateParams params = random_params(rng);
    for (int j = 0; j < 10; ++j) {
      const SqueezingParams p{(M_PI / 4.0) * j / 9.0, 0.631 * i, std::nullopt};
      err = std::max(err, matrix_diff(entanglement::build_general_rho_ar(params, p).matrix(),
                                      entanglement::general_rho_ar_closed_form(params, p).matrix()));
    }
  }
  suite.check("entanglement: numeric rho_AR vs closed-form region-IV trace sum", err, 1e-12);
}

void bell_checks(Suite& suite) {
  using entanglement::BellKind;
  double spectrum_err = 0.0, negativity_err = 0.0, mi_err = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double r = (M_PI / 4.0) * i / 39.0;
    const SqueezingParams p{r, 0.9, std::nullopt};
    for (auto kind : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
      const auto rho = entanglement::bell_rho_ar(kind, p);
      const auto report = entanglement::analyze_bipartite(rho, r);
      spectrum_err = std::max(spectrum_err, sorted_diff(report.pt_spectrum,
                                                        entanglement::closed_form_bell_pt_spectrum(r)));
      const double c2 = std::cos(r) * std::cos(r);
      negativity_err = std::max(negativity_err, std::abs(report.negativity - c2));
      mi_err = std::max(mi_err, std::abs(report.mutual_information - 2.0 * c2));
    }
  }
  suite.check("entanglement: Bell partial-transpose spectrum vs closed form", spectrum_err, 1e-10);
  suite.check("entanglement: Bell negativity vs cos^2 r", negativity_err, 1e-10);
  suite.check("entanglement: Bell mutual information vs 2 cos^2 r", mi_err, 1e-9);
}

void mode_checks(Suite& suite) {
  double spectrum_err = 0.0, negativity_err = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double r = (M_PI / 4.0) * i / 39.0;
    const SqueezingParams p{r, 1.7, std::nullopt};
    const auto rho = entanglement::mode_entangled_rho_ar(p);
    const auto report = entanglement::analyze_bipartite(rho, r);
    spectrum_err = std::max(spectrum_err,
                            sorted_diff(report.pt_spectrum,
                                        entanglement::closed_form_mode_pt_spectrum(r)));
    negativity_err =
        std::max(negativity_err, std::abs(report.negativity - std::cos(r) * std::cos(r)));
  }
  suite.check("entanglement: mode-state partial-transpose spectrum vs closed form", spectrum_err,
              1e-10);
  suite.check("entanglement: mode-state negativity vs cos^2 r", negativity_err, 1e-10);
}

void occupation_checks(Suite& suite) {
  std::mt19937 rng(424243);
  double spectrum_err = 0.0, negativity_err = 0.0;
  for (int i = 0; i < 40; ++i) {
    const StateParams params = random_params(rng);
    const double r = (M_PI / 4.0) * i / 39.0;
    const SqueezingParams p{r, 1.3, std::nullopt};
    const auto rho_n = spintrace::occupation_rho(params, p);
    const auto spectrum = density::hermitian_eigenvalues(density::partial_transpose(rho_n, "R"));
    spectrum_err =
        std::max(spectrum_err, sorted_diff(spectrum, spintrace::occupation_pt_spectrum(params, r)));
    negativity_err = std::max(negativity_err,
                              std::abs(entanglement::negativity(rho_n, "R") -
                                       spintrace::occupation_negativity(params, r)));
  }
  suite.check("spintrace: occupation partial-transpose spectrum vs closed form", spectrum_err,
              1e-10);
  suite.check("spintrace: occupation negativity numeric vs closed form", negativity_err, 1e-10);
}

void multimode_checks(Suite& suite) {
  double c0_err = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double r = (M_PI / 4.0) * i / 40.0;
    c0_err = std::max(c0_err,
                      std::abs(rindler::multimode_c0(1, r) - std::cos(r) * std::cos(r)));
  }
  suite.check("rindler: multimode C0(1, r) vs cos^2 r", c0_err, 1e-14);

  double upsilon_err = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 2 * n; ++m) {
      std::uint64_t product = 1;
      for (int k = 0; k < m; ++k) product *= static_cast<std::uint64_t>(2 * n - k);
      upsilon_err = std::max(upsilon_err, std::abs(static_cast<double>(rindler::upsilon(n, m)) -
                                                   static_cast<double>(product)));
    }
  }
  suite.check("rindler: upsilon enumeration vs falling-factorial product", upsilon_err, 0.0);

  double coeff_err = 0.0;
  for (int i = 0; i < 12; ++i) {
    const SqueezingParams p{(M_PI / 4.0) * i / 11.0, 0.5 * i, std::nullopt};
    const auto vc = rindler::vacuum_coefficients(p);
    coeff_err = std::max(coeff_err, std::abs(vc.A - rindler::multimode_cm(1, 1, p.r, p.phi)));
    coeff_err =
        std::max(coeff_err, std::abs(vc.C - 2.0 * rindler::multimode_cm(1, 2, p.r, p.phi)));
  }
  suite.check("rindler: A = C1 and C = 2! C2 at n = 1", coeff_err, 1e-12);
}

void phi_invariance_checks(Suite& suite) {
  const double phis[] = {0.0, 0.7, M_PI / 2.0, 2.1};
  double spread = 0.0;
  for (double r : {0.2, 0.55, M_PI / 4.0}) {
    std::vector<std::pair<double, double>> samples[3];
    for (double phi : phis) {
      const SqueezingParams p{r, phi, std::nullopt};
      const auto bell = entanglement::analyze_bipartite(
          entanglement::bell_rho_ar(entanglement::BellKind::PhiPlus, p), r);
      const auto mode = entanglement::analyze_bipartite(entanglement::mode_entangled_rho_ar(p), r);
      const auto occ = entanglement::analyze_bipartite(
          spintrace::occupation_rho(spintrace::maximally_entangled_occupation_state(), p), r);
      samples[0].emplace_back(bell.negativity, bell.mutual_information);
      samples[1].emplace_back(mode.negativity, mode.mutual_information);
      samples[2].emplace_back(occ.negativity, occ.mutual_information);
    }
    for (const auto& family : samples)
      for (const auto& [n, mi] : family) {
        spread = std::max(spread, std::abs(n - family.front().first));
        spread = std::max(spread, std::abs(mi - family.front().second));
      }
  }
  suite.check("entanglement: negativity and mutual information are phi-invariant", spread, 1e-10);
}

}  // namespace

std::vector<CheckResult> run_all(std::optional<double> tolerance_override) {
  Suite suite;
  suite.override_tol = tolerance_override;
  vacuum_checks(suite);
  unruh_checks(suite);
  general_state_checks(suite);
  bell_checks(suite);
  mode_checks(suite);
  occupation_checks(suite);
  multimode_checks(suite);
  phi_invariance_checks(suite);
  return suite.results;
}

int run_and_report(std::ostream& out, std::optional<double> tolerance_override) {
  const auto results = run_all(tolerance_override);
  std::size_t passed = 0;
  for (const auto& result : results) {
    char line[256];
    std::snprintf(line, sizeof(line), "[%s] %-68s max error %.3e (tol %.0e)\n",
                  result.passed ? "ok" : "FAIL", result.name.c_str(), result.max_error,
                  result.tolerance);
    out << line;
    if (result.passed) ++passed;
  }
  out << "verify: " << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? 0 : 2;
}

}  // namespace unruhent::verify
