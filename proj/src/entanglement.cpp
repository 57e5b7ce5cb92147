#include "unruhent/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace unruhent::entanglement {

namespace {

using density::DensityMatrix;
using density::MinkowskiDyad;
using fock::Slot;
using fock::Spin;
using fock::StateVector;
using fock::Subsystem;

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kNegativeEigenvalueCutoff = -1e-10;

Slot alice(Spin s) { return Slot{Subsystem::AliceMinkowski, s}; }

}  // namespace

StateParams StateParams::from_excitations(Complex alpha, Complex beta, Complex gamma,
                                          Complex delta) {
  const double excited =
      std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(delta);
  if (excited > 1.0 + 1e-12)
    throw std::invalid_argument("StateParams: excitation amplitudes exceed unit norm");
  StateParams params{Complex{std::sqrt(std::max(0.0, 1.0 - excited)), 0.0}, alpha, beta, gamma,
                     delta};
  return params;
}

void StateParams::validate() const {
  const double excited = std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(delta);
  if (excited > 1.0 + 1e-9)
    throw std::invalid_argument("StateParams: excitation amplitudes exceed unit norm");
  if (std::abs(mu.imag()) > 1e-9 || mu.real() < -1e-9)
    throw std::invalid_argument("StateParams: mu must be real nonnegative");
  if (std::abs(mu.real() - std::sqrt(std::max(0.0, 1.0 - excited))) > 1e-9)
    throw std::invalid_argument("StateParams: mu is inconsistent with the excitation amplitudes");
}

StateParams bell_params(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus:
      return StateParams::from_excitations(kInvSqrt2, 0.0, 0.0, kInvSqrt2);
    case BellKind::PhiMinus:
      return StateParams::from_excitations(kInvSqrt2, 0.0, 0.0, -kInvSqrt2);
    case BellKind::PsiPlus:
      return StateParams::from_excitations(0.0, kInvSqrt2, kInvSqrt2, 0.0);
    case BellKind::PsiMinus:
      return StateParams::from_excitations(0.0, kInvSqrt2, -kInvSqrt2, 0.0);
  }
  throw std::invalid_argument("bell_params: unknown kind");
}

StateParams mode_entangled_params(fock::Spin alice_spin, fock::Spin rob_spin) {
  Complex a{}, b{}, g{}, d{};
  if (alice_spin == Spin::Up)
    (rob_spin == Spin::Up ? a : b) = kInvSqrt2;
  else
    (rob_spin == Spin::Up ? g : d) = kInvSqrt2;
  return StateParams::from_excitations(a, b, g, d);
}

fock::StateVector build_general_state(const StateParams& params,
                                      const rindler::SqueezingParams& p) {
  params.validate();
  const StateVector vac = rindler::build_rindler_vacuum(p);
  const StateVector one_up = rindler::build_one_particle(p, Spin::Up);
  const StateVector one_down = rindler::build_one_particle(p, Spin::Down);

  StateVector state = params.mu * vac;
  state += params.alpha * fock::apply_creation(one_up, alice(Spin::Up));
  state += params.beta * fock::apply_creation(one_down, alice(Spin::Up));
  state += params.gamma * fock::apply_creation(one_up, alice(Spin::Down));
  state += params.delta * fock::apply_creation(one_down, alice(Spin::Down));
  return state;
}

density::DensityMatrix build_general_rho_ar(const StateParams& params,
                                            const rindler::SqueezingParams& p) {
  const DensityMatrix full = density::from_pure(build_general_state(params, p));
  return density::partial_trace(
      full, {std::string(density::kAliceFactor), std::string(density::kRegionIFactor)});
}

density::DensityMatrix general_rho_ar_closed_form(const StateParams& params,
                                                  const rindler::SqueezingParams& p) {
  params.validate();
  using SpinPair = std::pair<Spin, Spin>;
  const SpinPair uu{Spin::Up, Spin::Up}, ud{Spin::Up, Spin::Down};
  const SpinPair du{Spin::Down, Spin::Up}, dd{Spin::Down, Spin::Down};
  const std::pair<Complex, SpinPair> excitations[4] = {
      {params.alpha, uu}, {params.beta, ud}, {params.gamma, du}, {params.delta, dd}};

  Eigen::MatrixXcd sum =
      std::norm(params.mu) *
      density::partial_trace_region_iv_closed_form(MinkowskiDyad{}, p).matrix();

  for (const auto& [coef, spins] : excitations) {
    const Eigen::MatrixXcd term =
        (params.mu * std::conj(coef)) *
        density::partial_trace_region_iv_closed_form(MinkowskiDyad{{}, spins}, p).matrix();
    sum += term + term.adjoint();
  }

  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const auto& [ci, si] = excitations[i];
      const auto& [cj, sj] = excitations[j];
      const Eigen::MatrixXcd term =
          (ci * std::conj(cj)) *
          density::partial_trace_region_iv_closed_form(MinkowskiDyad{si, sj}, p).matrix();
      sum += (i == j) ? term : Eigen::MatrixXcd(term + term.adjoint());
    }
  }

  std::vector<density::SubsystemBasis> factors = {
      {std::string(density::kAliceFactor), density::mode_labels()},
      {std::string(density::kRegionIFactor), density::mode_labels()},
  };
  return DensityMatrix(std::move(factors), std::move(sum));
}

density::DensityMatrix bell_rho_ar(BellKind kind, const rindler::SqueezingParams& p) {
  return build_general_rho_ar(bell_params(kind), p);
}

density::DensityMatrix mode_entangled_rho_ar(const rindler::SqueezingParams& p,
                                             fock::Spin alice_spin, fock::Spin rob_spin) {
  const DensityMatrix full = build_general_rho_ar(mode_entangled_params(alice_spin, rob_spin), p);
  const std::string populated = alice_spin == Spin::Up ? "u" : "d";
  return density::restrict_subspace(full, density::kAliceFactor, {"0", populated});
}

double negativity(const density::DensityMatrix& rho, std::string_view transpose_subsystem) {
  const DensityMatrix sigma = density::partial_transpose(rho, transpose_subsystem);
  double total = 0.0;
  for (double lambda : density::hermitian_eigenvalues(sigma))
    if (lambda < kNegativeEigenvalueCutoff) total += -lambda;
  return 2.0 * total;
}

double mutual_information(const density::DensityMatrix& rho_ar) {
  if (rho_ar.factors().size() != 2)
    throw std::invalid_argument("mutual_information: state must carry exactly two subsystems");
  const auto& a = rho_ar.factors()[0].name;
  const auto& r = rho_ar.factors()[1].name;
  const double s_a = density::von_neumann_entropy(density::partial_trace(rho_ar, {a}));
  const double s_r = density::von_neumann_entropy(density::partial_trace(rho_ar, {r}));
  return s_a + s_r - density::von_neumann_entropy(rho_ar);
}

std::vector<double> closed_form_bell_pt_spectrum(double r) {
  const double c2 = std::cos(r) * std::cos(r);
  const double s2 = std::sin(r) * std::sin(r);
  return {0.5 * c2, 0.5 * c2, 0.5 * c2, 0.5 * s2, 0.5 * s2, -0.5 * c2};
}

std::vector<double> closed_form_mode_pt_spectrum(double r) {
  const double c = std::cos(r), s = std::sin(r);
  const double c2 = c * c, s2 = s * s;
  const double root_a = std::sqrt(s2 * s2 * c2 * c2 + 4.0 * std::pow(c2, 3));
  const double root_b = std::sqrt(std::pow(s2, 4) + 4.0 * s2 * s2 * c2);
  return {0.5 * c2 * c2,
          0.5 * c2 * s2,
          0.5 * s2,
          0.5 * c2,
          0.25 * (s2 * c2 + root_a),
          0.25 * (s2 * c2 - root_a),
          0.25 * (s2 * s2 + root_b),
          0.25 * (s2 * s2 - root_b)};
}

EntanglementReport analyze_bipartite(const density::DensityMatrix& rho_ar, double r) {
  if (rho_ar.factors().size() != 2)
    throw std::invalid_argument("analyze_bipartite: state must carry exactly two subsystems");
  const auto& a = rho_ar.factors()[0].name;
  const auto& rob = rho_ar.factors()[1].name;

  EntanglementReport report;
  report.r = r;
  report.pt_spectrum = density::hermitian_eigenvalues(density::partial_transpose(rho_ar, rob));
  for (double lambda : report.pt_spectrum)
    if (lambda < kNegativeEigenvalueCutoff) report.negativity += -2.0 * lambda;
  report.entropy_a = density::von_neumann_entropy(density::partial_trace(rho_ar, {a}));
  report.entropy_r = density::von_neumann_entropy(density::partial_trace(rho_ar, {rob}));
  report.entropy_ar = density::von_neumann_entropy(rho_ar);
  report.mutual_information = report.entropy_a + report.entropy_r - report.entropy_ar;
  return report;
}

}  // namespace unruhent::entanglement
