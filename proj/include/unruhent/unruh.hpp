#pragma once

#include "unruhent/density.hpp"
#include "unruhent/rindler.hpp"

namespace unruhent::unruh {

/// Thermal occupancy seen by the accelerated observer of the Minkowski
/// vacuum. Natural units hbar = k_B = c = 1; temperature_scale is T/omega.
struct ThermalReport {
  double r = 0.0;
  double expected_number = 0.0;
  double temperature_scale = 0.0;
};

/// <N_R> = 2 sin^2 r; the factor 2 is the spin degeneracy.
double expected_number(const rindler::SqueezingParams& p);

/// The same occupancy as a Fermi-Dirac distribution, 2 / (e^{2 pi x} + 1).
double expected_number_from_frequency_ratio(double x);

/// Tr(N rho) with occupancy weights {0, 1, 1, 2} on {empty, up, down, pair}.
/// Rejects states that are not a single mode-basis factor.
double number_operator_expectation(const density::DensityMatrix& rho_r);

ThermalReport thermal_report(const rindler::SqueezingParams& p);

}  // namespace unruhent::unruh
