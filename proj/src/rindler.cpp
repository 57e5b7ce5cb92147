#include "unruhent/rindler.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace unruhent::rindler {

namespace {

using fock::FockBasisState;
using fock::Slot;
using fock::Spin;
using fock::StateVector;
using fock::Subsystem;

constexpr Slot kRegionI_Up{Subsystem::RobRegionI, Spin::Up};
constexpr Slot kRegionI_Down{Subsystem::RobRegionI, Spin::Down};
constexpr Slot kRegionIV_Up{Subsystem::RobRegionIV, Spin::Up};
constexpr Slot kRegionIV_Down{Subsystem::RobRegionIV, Spin::Down};

Slot region_i(Spin s) { return Slot{Subsystem::RobRegionI, s}; }
Slot region_iv(Spin s) { return Slot{Subsystem::RobRegionIV, s}; }

Complex phase(double phi) { return Complex{std::cos(phi), std::sin(phi)}; }

// Ordered m-tuples of distinct elements from `available` not yet used in `mask`.
std::uint64_t count_distinct_tuples(int available, int m, std::uint32_t mask) {
  if (m == 0) return 1;
  std::uint64_t total = 0;
  for (int i = 0; i < available; ++i) {
    if ((mask >> i) & 1u) continue;
    total += count_distinct_tuples(available, m - 1, mask | (1u << i));
  }
  return total;
}

}  // namespace

double squeezing_r(double x) {
  if (!(x > 0.0)) throw std::domain_error("squeezing_r: frequency ratio must be positive");
  return std::atan(std::exp(-M_PI * x));
}

SqueezingParams params_from_frequency_ratio(double x, double phi) {
  SqueezingParams p;
  p.r = squeezing_r(x);
  p.phi = phi;
  p.frequency_ratio = x;
  return p;
}

VacuumCoefficients vacuum_coefficients(const SqueezingParams& p) {
  const double c = std::cos(p.r), s = std::sin(p.r);
  const Complex e = phase(p.phi);
  return VacuumCoefficients{Complex{c * c, 0.0}, e * (s * c), e * (s * c), e * e * (s * s)};
}

fock::StateVector build_rindler_vacuum(const SqueezingParams& p) {
  const VacuumCoefficients vc = vacuum_coefficients(p);
  StateVector v;
  v += vc.V * StateVector::basis(FockBasisState{});
  v += vc.A * StateVector::basis(fock::basis_with_slots({kRegionI_Up, kRegionIV_Down}));
  v += vc.B * StateVector::basis(fock::basis_with_slots({kRegionI_Down, kRegionIV_Up}));
  v += vc.C * StateVector::basis(fock::basis_with_slots(
                  {kRegionI_Up, kRegionI_Down, kRegionIV_Up, kRegionIV_Down}));
  return v;
}

fock::StateVector build_one_particle(const SqueezingParams& p, fock::Spin spin) {
  const double c = std::cos(p.r), s = std::sin(p.r);
  const Complex e = phase(p.phi);
  StateVector v;
  if (spin == Spin::Up) {
    v += Complex{c, 0.0} * StateVector::basis(fock::basis_with_slots({kRegionI_Up}));
    v += (e * s) * StateVector::basis(
                       fock::basis_with_slots({kRegionI_Up, kRegionI_Down, kRegionIV_Up}));
  } else {
    v += Complex{c, 0.0} * StateVector::basis(fock::basis_with_slots({kRegionI_Down}));
    v += (-e * s) * StateVector::basis(
                        fock::basis_with_slots({kRegionI_Up, kRegionI_Down, kRegionIV_Down}));
  }
  return v;
}

fock::StateVector apply_minkowski_annihilator(const SqueezingParams& p, fock::Spin s,
                                              const fock::StateVector& state) {
  const double c = std::cos(p.r), sr = std::sin(p.r);
  StateVector out = Complex{c, 0.0} * fock::apply_annihilation(state, region_i(s));
  out += (-phase(p.phi) * sr) * fock::apply_creation(state, region_iv(fock::opposite(s)));
  return out;
}

fock::StateVector apply_minkowski_creator(const SqueezingParams& p, fock::Spin s,
                                          const fock::StateVector& state) {
  const double c = std::cos(p.r), sr = std::sin(p.r);
  StateVector out = Complex{c, 0.0} * fock::apply_creation(state, region_i(s));
  out += (-phase(-p.phi) * sr) * fock::apply_annihilation(state, region_iv(fock::opposite(s)));
  return out;
}

fock::StateVector solve_vacuum_numerically(const SqueezingParams& p) {
  const StateVector span[4] = {
      StateVector::basis(FockBasisState{}),
      StateVector::basis(fock::basis_with_slots({kRegionI_Up, kRegionIV_Down})),
      StateVector::basis(fock::basis_with_slots({kRegionI_Down, kRegionIV_Up})),
      StateVector::basis(fock::basis_with_slots(
          {kRegionI_Up, kRegionI_Down, kRegionIV_Up, kRegionIV_Down})),
  };

  // Stack the two annihilation conditions over the full 64-dim image space.
  Eigen::MatrixXcd conditions = Eigen::MatrixXcd::Zero(128, 4);
  for (int j = 0; j < 4; ++j) {
    for (int si = 0; si < 2; ++si) {
      const StateVector image =
          apply_minkowski_annihilator(p, static_cast<Spin>(si), span[j]);
      for (const auto& [b, a] : image.amplitudes())
        conditions(64 * si + b.bits(), j) = a;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(conditions, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = 1e-10 * std::max(sigma(0), 1.0);
  int null_dim = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) < cutoff) ++null_dim;
  null_dim += 4 - static_cast<int>(sigma.size());
  if (null_dim != 1)
    throw std::runtime_error("solve_vacuum_numerically: nullspace dimension is " +
                             std::to_string(null_dim) + ", expected 1");

  Eigen::VectorXcd null_vec = svd.matrixV().col(3);
  const Complex head = null_vec(0);
  if (std::abs(head) < 1e-12)
    throw std::runtime_error("solve_vacuum_numerically: vanishing |0,0> amplitude");
  null_vec *= std::conj(head) / std::abs(head);  // make the |0,0> amplitude real positive

  StateVector out;
  for (int j = 0; j < 4; ++j) out += Complex(null_vec(j)) * span[j];
  return out.normalized();
}

std::uint64_t upsilon(int modes, int m) {
  if (modes < 1) throw std::invalid_argument("upsilon: need at least one mode");
  if (m < 0 || m > 2 * modes)
    throw std::invalid_argument("upsilon: pair count must lie in [0, 2n]");
  if (modes <= 4) return count_distinct_tuples(2 * modes, m, 0u);
  std::uint64_t prod = 1;
  for (int i = 0; i < m; ++i) prod *= static_cast<std::uint64_t>(2 * modes - i);
  return prod;
}

double multimode_c0(int modes, double r) {
  const double t2 = std::tan(r) * std::tan(r);
  double sum = 0.0;
  double t_pow = 1.0;  // tan^{2m} r
  for (int m = 0; m <= 2 * modes; ++m) {
    const int index = m <= modes ? m : 2 * modes - m;
    sum += static_cast<double>(upsilon(modes, index)) * t_pow;
    t_pow *= t2;
  }
  return 1.0 / std::sqrt(sum);
}

Complex multimode_cm(int modes, int m, double r, double phi) {
  if (m < 0 || m > 2 * modes)
    throw std::invalid_argument("multimode_cm: pair count must lie in [0, 2n]");
  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const Complex e = Complex{std::cos(m * phi), std::sin(m * phi)};
  return multimode_c0(modes, r) * e * std::pow(std::tan(r), m) / factorial;
}

}  // namespace unruhent::rindler
