#pragma once

#include <cstdint>
#include <optional>

#include "unruhent/fock.hpp"

namespace unruhent::rindler {

using fock::Complex;

/// Acceleration parametrization of the Bogoliubov transformation. r is the
/// two-mode squeezing angle, r in [0, pi/4]: r = 0 is the inertial limit,
/// r = pi/4 the infinite-acceleration limit. phi is the transformation phase
/// (it drops out of every observable; keeping it everywhere makes that a
/// testable statement rather than an assumption).
struct SqueezingParams {
  double r = 0.0;
  double phi = 0.0;
  /// x = omega c / a when the params were derived from an acceleration.
  std::optional<double> frequency_ratio;
};

/// r = arctan(e^{-pi x}) for the dimensionless group x = omega c / a.
/// Throws std::domain_error for x <= 0 (not a uniformly accelerated observer).
double squeezing_r(double x);

SqueezingParams params_from_frequency_ratio(double x, double phi = 0.0);

/// Amplitudes of the Minkowski vacuum over the Rindler pair basis
/// {|0,0>, |up>_I|down>_IV, |down>_I|up>_IV, |updown>_I|updown>_IV}:
/// V = cos^2 r, A = B = e^{i phi} sin r cos r, C = e^{2 i phi} sin^2 r.
struct VacuumCoefficients {
  Complex V, A, B, C;
};

VacuumCoefficients vacuum_coefficients(const SqueezingParams& p);

/// The Minkowski vacuum of the mode expressed over region-I/IV Rindler
/// occupations: V|0,0> + A|u>_I|d>_IV + B|d>_I|u>_IV + C|ud>_I|ud>_IV.
fock::StateVector build_rindler_vacuum(const SqueezingParams& p);

/// Minkowski one-particle state of the given spin over Rindler occupations:
///   up:   cos r |u>_I|0>_IV + e^{i phi} sin r |ud>_I|u>_IV
///   down: cos r |d>_I|0>_IV - e^{i phi} sin r |ud>_I|d>_IV
fock::StateVector build_one_particle(const SqueezingParams& p, fock::Spin spin);

/// The Bogoliubov-transformed Minkowski particle annihilator
/// a_s = cos r c_{I,s} - e^{i phi} sin r d^dagger_{IV,-s} applied via fock ops.
fock::StateVector apply_minkowski_annihilator(const SqueezingParams& p, fock::Spin s,
                                              const fock::StateVector& state);

/// Adjoint of apply_minkowski_annihilator:
/// a_s^dagger = cos r c^dagger_{I,s} - e^{-i phi} sin r d_{IV,-s}.
fock::StateVector apply_minkowski_creator(const SqueezingParams& p, fock::Spin s,
                                          const fock::StateVector& state);

/// Independent route to the vacuum: solves the annihilation conditions
/// a_s |0> = 0 (both spins) as a linear system on the span of the four pair
/// basis states and returns the unit-norm null vector, phase-fixed so the
/// |0,0> amplitude is real positive. Throws std::runtime_error if the
/// nullspace dimension is not 1 (which would signal a sign-convention bug).
fock::StateVector solve_vacuum_numerically(const SqueezingParams& p);

/// Number of ordered m-tuples of pairwise-distinct (spin, mode) pairs drawn
/// from n modes (2n pairs). Enumerated explicitly for n <= 4, falling
/// factorial product otherwise. Upsilon_0 == 1. Throws std::invalid_argument
/// for n < 1, m < 0 or m > 2n.
std::uint64_t upsilon(int modes, int m);

/// Vacuum normalization constant for n populated modes:
/// C^0 = [sum_{m=0}^{n} Y_m tan^{2m} r + sum_{m=n+1}^{2n} Y_{2n-m} tan^{2m} r]^{-1/2}.
/// For n = 1 this reduces to cos^2 r.
double multimode_c0(int modes, double r);

/// C^m = C^0 e^{i m phi} tan^m r / m!, 0 <= m <= 2n.
Complex multimode_cm(int modes, int m, double r, double phi);

}  // namespace unruhent::rindler
