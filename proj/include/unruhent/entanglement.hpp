#pragma once

#include <string_view>
#include <vector>

#include "unruhent/density.hpp"
#include "unruhent/fock.hpp"
#include "unruhent/rindler.hpp"

namespace unruhent::entanglement {

using fock::Complex;

/// Coefficients of the shared Minkowski state
///   mu |0,0> + alpha |u,u> + beta |u,d> + gamma |d,u> + delta |d,d>
/// with mu = sqrt(1 - |alpha|^2 - |beta|^2 - |gamma|^2 - |delta|^2) taken
/// real nonnegative.
struct StateParams {
  Complex mu, alpha, beta, gamma, delta;

  /// Completes mu from the four excitation amplitudes. Throws
  /// std::invalid_argument when they exceed unit norm.
  static StateParams from_excitations(Complex alpha, Complex beta, Complex gamma, Complex delta);

  /// Throws std::invalid_argument unless the invariants hold.
  void validate() const;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

StateParams bell_params(BellKind kind);

/// (|0,0> + |s,s'>)/sqrt(2), the occupation-and-spin entangled family.
StateParams mode_entangled_params(fock::Spin alice_spin, fock::Spin rob_spin);

/// The shared state expanded over the full Alice x RegionI x RegionIV Fock
/// basis via the Rindler builders. Unit norm for valid params.
fock::StateVector build_general_state(const StateParams& params,
                                      const rindler::SqueezingParams& p);

/// Numeric pipeline: build_general_state -> projector -> Tr_IV. 16-dim
/// Alice x RegionI density matrix.
density::DensityMatrix build_general_rho_ar(const StateParams& params,
                                            const rindler::SqueezingParams& p);

/// Same matrix assembled from the closed-form region-IV traces of the 15
/// Minkowski dyads (plus Hermitian conjugates); the oracle route for the
/// numeric pipeline.
density::DensityMatrix general_rho_ar_closed_form(const StateParams& params,
                                                  const rindler::SqueezingParams& p);

density::DensityMatrix bell_rho_ar(BellKind kind, const rindler::SqueezingParams& p);

/// Accelerated (|0,0> + |s,s'>)/sqrt(2) reduced to Alice x RegionI and
/// restricted to Alice's populated levels {0, s}: a qubit x qu4it state.
density::DensityMatrix mode_entangled_rho_ar(const rindler::SqueezingParams& p,
                                             fock::Spin alice_spin = fock::Spin::Up,
                                             fock::Spin rob_spin = fock::Spin::Down);

/// Twice the absolute sum of the negative partial-transpose eigenvalues
/// (maximally entangled reads 1). Eigenvalues above -1e-10 count as zero.
double negativity(const density::DensityMatrix& rho, std::string_view transpose_subsystem);

/// S_A + S_R - S_AR in bits for a two-factor state (first factor = Alice side).
double mutual_information(const density::DensityMatrix& rho_ar);

/// Bell partial-transpose spectrum {cos^2 r / 2 (x3), sin^2 r / 2 (x2),
/// -cos^2 r / 2}, in that order.
std::vector<double> closed_form_bell_pt_spectrum(double r);

/// The eight partial-transpose eigenvalues of the accelerated
/// (|0,0> + |s,s'>)/sqrt(2) state, in the block order
///   c^4/2, s^2 c^2/2, s^2/2, c^2/2,
///   (s^2 c^2 +- sqrt(s^4 c^4 + 4 c^6))/4, (s^4 +- sqrt(s^8 + 4 s^4 c^2))/4.
std::vector<double> closed_form_mode_pt_spectrum(double r);

/// Everything the sweep reports about one bipartite state at one r.
struct EntanglementReport {
  double r = 0.0;
  double negativity = 0.0;
  std::vector<double> pt_spectrum;  // ascending
  double entropy_a = 0.0;
  double entropy_r = 0.0;
  double entropy_ar = 0.0;
  double mutual_information = 0.0;
};

EntanglementReport analyze_bipartite(const density::DensityMatrix& rho_ar, double r);

}  // namespace unruhent::entanglement
