#include "unruhent/spintrace.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace unruhent::spintrace {

namespace {

using density::DensityMatrix;
using density::SubsystemBasis;
using fock::Complex;

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr std::string_view kBasisName = "occupation_totalspin";

// Standard 16-dim flat index over Alice x RegionI, mode_labels() order.
constexpr int kEmpty = 0, kUp = 1, kDown = 2, kPair = 3;
constexpr int std_index(int a, int i) { return 4 * a + i; }

// Occupation sector index into {00,01,02,10,11,12}.
int occupation_index(const OccupationSpinBasisElement& e) {
  return 3 * e.alice_occupation + e.rob_occupation;
}

// The isometry from the 16-dim standard basis onto the 12 allowed elements.
const Eigen::MatrixXcd& dictionary() {
  static const Eigen::MatrixXcd u = [] {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(12, 16);
    const auto& basis = occupation_spin_basis();
    for (int row = 0; row < 12; ++row) {
      const auto& e = basis[row];
      switch (occupation_index(e)) {
        case 0:  // (0,0): vacuum singlet
          m(row, std_index(kEmpty, kEmpty)) = 1.0;
          break;
        case 1:  // (0,1): lone Rob particle
          m(row, std_index(kEmpty, e.spin == TotalSpin::DoubletPlus ? kUp : kDown)) = 1.0;
          break;
        case 2:  // (0,2): Rob pair singlet
          m(row, std_index(kEmpty, kPair)) = 1.0;
          break;
        case 3:  // (1,0): lone Alice particle
          m(row, std_index(e.spin == TotalSpin::DoubletPlus ? kUp : kDown, kEmpty)) = 1.0;
          break;
        case 4:  // (1,1): triplets and singlet
          switch (e.spin) {
            case TotalSpin::Singlet:
              m(row, std_index(kUp, kDown)) = kInvSqrt2;
              m(row, std_index(kDown, kUp)) = -kInvSqrt2;
              break;
            case TotalSpin::TripletPlus:
              m(row, std_index(kUp, kUp)) = 1.0;
              break;
            case TotalSpin::TripletZero:
              m(row, std_index(kUp, kDown)) = kInvSqrt2;
              m(row, std_index(kDown, kUp)) = kInvSqrt2;
              break;
            case TotalSpin::TripletMinus:
              m(row, std_index(kDown, kDown)) = 1.0;
              break;
            default:
              break;
          }
          break;
        case 5:  // (1,2): Alice particle with Rob pair
          m(row, std_index(e.spin == TotalSpin::DoubletPlus ? kUp : kDown, kPair)) = 1.0;
          break;
      }
    }
    return m;
  }();
  return u;
}

bool is_standard_16(const DensityMatrix& rho) {
  return rho.dim() == 16 && rho.factors().size() == 2 &&
         rho.factors()[0].labels == density::mode_labels() &&
         rho.factors()[1].labels == density::mode_labels();
}

}  // namespace

std::string spin_label(TotalSpin j) {
  switch (j) {
    case TotalSpin::Singlet: return "S";
    case TotalSpin::TripletPlus: return "T+";
    case TotalSpin::TripletZero: return "T0";
    case TotalSpin::TripletMinus: return "T-";
    case TotalSpin::DoubletPlus: return "D+";
    case TotalSpin::DoubletMinus: return "D-";
  }
  return "?";
}

bool is_allowed(const OccupationSpinBasisElement& e) {
  const bool doublet = e.spin == TotalSpin::DoubletPlus || e.spin == TotalSpin::DoubletMinus;
  switch (3 * e.alice_occupation + e.rob_occupation) {
    case 0: case 2:
      return e.spin == TotalSpin::Singlet;
    case 1: case 3: case 5:
      return doublet;
    case 4:
      return !doublet;
    default:
      return false;
  }
}

const std::vector<OccupationSpinBasisElement>& occupation_spin_basis() {
  static const std::vector<OccupationSpinBasisElement> basis = [] {
    std::vector<OccupationSpinBasisElement> all;
    for (int na = 0; na <= 1; ++na)
      for (int nr = 0; nr <= 2; ++nr)
        for (int j = 0; j < 6; ++j) {
          const OccupationSpinBasisElement e{na, nr, static_cast<TotalSpin>(j)};
          if (is_allowed(e)) all.push_back(e);
        }
    return all;
  }();
  return basis;
}

std::string label(const OccupationSpinBasisElement& e) {
  return std::to_string(e.alice_occupation) + std::to_string(e.rob_occupation) + ":" +
         spin_label(e.spin);
}

density::DensityMatrix to_occupation_totalspin(const density::DensityMatrix& rho_ar) {
  if (!is_standard_16(rho_ar))
    throw std::invalid_argument(
        "to_occupation_totalspin: expected the 16-dim Alice x RegionI standard basis");

  // Alice's pair level lies outside the dictionary.
  const auto& m = rho_ar.matrix();
  for (int i = 0; i < 16; ++i) {
    for (int local = 0; local < 4; ++local) {
      const int pair_row = std_index(kPair, local);
      if (std::abs(m(pair_row, i)) > 1e-12 || std::abs(m(i, pair_row)) > 1e-12)
        throw std::invalid_argument(
            "to_occupation_totalspin: state has support on Alice's pair level");
    }
  }

  const Eigen::MatrixXcd& u = dictionary();
  std::vector<std::string> labels;
  for (const auto& e : occupation_spin_basis()) labels.push_back(label(e));
  return DensityMatrix({{std::string(kBasisName), std::move(labels)}}, u * m * u.adjoint());
}

density::DensityMatrix trace_out_total_spin(const density::DensityMatrix& rho) {
  const auto& basis = occupation_spin_basis();
  if (rho.dim() != 12 || rho.factors().size() != 1 || rho.factors()[0].name != kBasisName)
    throw std::invalid_argument("trace_out_total_spin: expected the occupation x total-spin basis");

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(6, 6);
  for (int p = 0; p < 12; ++p) {
    for (int q = 0; q < 12; ++q) {
      if (basis[p].spin != basis[q].spin) continue;
      const int np = occupation_index(basis[p]);
      const int nq = occupation_index(basis[q]);
      if (np != nq && basis[p].spin != TotalSpin::Singlet) continue;
      out(np, nq) += rho.matrix()(p, q);
    }
  }

  std::vector<SubsystemBasis> factors = {
      {std::string(density::kAliceFactor), {"0", "1"}},
      {"R", {"0", "1", "2"}},
  };
  return DensityMatrix(std::move(factors), std::move(out));
}

density::DensityMatrix occupation_rho(const entanglement::StateParams& params,
                                      const rindler::SqueezingParams& p) {
  return trace_out_total_spin(
      to_occupation_totalspin(entanglement::build_general_rho_ar(params, p)));
}

double occupation_negativity(const entanglement::StateParams& params, double r) {
  params.validate();
  const double c2 = std::cos(r) * std::cos(r);
  const double s2 = std::sin(r) * std::sin(r);
  const double m = std::abs(params.mu);
  const double singlet2 = std::norm(params.beta - params.gamma) / 2.0;
  return 2.0 * c2 *
         std::abs(m * m * s2 - m * std::sqrt(m * m * s2 * s2 + c2 * singlet2));
}

std::vector<double> occupation_pt_spectrum(const entanglement::StateParams& params, double r) {
  params.validate();
  const double c2 = std::cos(r) * std::cos(r);
  const double s2 = std::sin(r) * std::sin(r);
  const double m = std::abs(params.mu);
  const double m2 = m * m;
  const double singlet2 = std::norm(params.beta - params.gamma) / 2.0;
  const double root = m * std::sqrt(m2 * s2 * s2 + c2 * singlet2);
  return {m2 * c2 * c2,          m2 * s2 * s2,
          (1.0 - m2) * c2,       (1.0 - m2) * s2,
          c2 * (m2 * s2 + root), c2 * (m2 * s2 - root)};
}

entanglement::StateParams maximally_entangled_occupation_state() {
  return entanglement::StateParams::from_excitations(0.0, 0.5, -0.5, 0.0);
}

}  // namespace unruhent::spintrace
