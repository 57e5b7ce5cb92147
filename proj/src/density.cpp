#include "unruhent/density.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace unruhent::density {

namespace {

using fock::Spin;

std::vector<Eigen::Index> factor_dims(const std::vector<SubsystemBasis>& factors) {
  std::vector<Eigen::Index> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) dims.push_back(static_cast<Eigen::Index>(f.labels.size()));
  return dims;
}

// Decompose a flat index into per-factor indices (first factor slowest).
std::vector<Eigen::Index> decompose(Eigen::Index flat, const std::vector<Eigen::Index>& dims) {
  std::vector<Eigen::Index> idx(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    idx[f] = flat % dims[f];
    flat /= dims[f];
  }
  return idx;
}

Eigen::Index compose(const std::vector<Eigen::Index>& idx, const std::vector<Eigen::Index>& dims) {
  Eigen::Index flat = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) flat = flat * dims[f] + idx[f];
  return flat;
}

// Local occupation index of one (mode, spin-pair) subsystem inside a flat
// Fock pattern: 0 empty, 1 up, 2 down, 3 pair. Matches mode_labels() order.
int local_index(fock::FockBasisState b, fock::Subsystem sub) {
  const int up = b.occupied(fock::Slot{sub, Spin::Up}) ? 1 : 0;
  const int down = b.occupied(fock::Slot{sub, Spin::Down}) ? 1 : 0;
  return up + 2 * down;
}

int pair_label_index(std::optional<std::pair<Spin, Spin>> side, bool alice) {
  if (!side) return 0;
  const Spin s = alice ? side->first : side->second;
  return s == Spin::Up ? 1 : 2;
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<SubsystemBasis> factors, Eigen::MatrixXcd matrix)
    : factors_(std::move(factors)), mat_(std::move(matrix)) {
  Eigen::Index expected = 1;
  for (const auto& f : factors_) {
    if (f.labels.empty()) throw std::invalid_argument("DensityMatrix: empty factor basis");
    expected *= static_cast<Eigen::Index>(f.labels.size());
  }
  if (mat_.rows() != mat_.cols() || mat_.rows() != expected)
    throw std::invalid_argument("DensityMatrix: matrix shape does not match basis labels");
}

bool DensityMatrix::has_factor(std::string_view name) const {
  for (const auto& f : factors_)
    if (f.name == name) return true;
  return false;
}

int DensityMatrix::factor_index(std::string_view name) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("DensityMatrix: no subsystem named '" + std::string(name) + "'");
}

double DensityMatrix::trace() const { return mat_.trace().real(); }

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

bool DensityMatrix::is_hermitian(double tol) const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

const std::vector<std::string>& mode_labels() {
  static const std::vector<std::string> labels = {"0", "u", "d", "ud"};
  return labels;
}

DensityMatrix from_pure(const fock::StateVector& state) {
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("from_pure: state is not normalized");

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(64);
  for (const auto& [b, a] : state.amplitudes()) {
    const Eigen::Index idx = 16 * local_index(b, fock::Subsystem::AliceMinkowski) +
                             4 * local_index(b, fock::Subsystem::RobRegionI) +
                             local_index(b, fock::Subsystem::RobRegionIV);
    psi(idx) = a;
  }

  std::vector<SubsystemBasis> factors = {
      {std::string(kAliceFactor), mode_labels()},
      {std::string(kRegionIFactor), mode_labels()},
      {std::string(kRegionIVFactor), mode_labels()},
  };
  return DensityMatrix(std::move(factors), psi * psi.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  std::vector<bool> kept(rho.factors().size(), false);
  for (const auto& name : keep) {
    const int f = rho.factor_index(name);
    if (kept[f]) throw std::invalid_argument("partial_trace: duplicate subsystem '" + name + "'");
    kept[f] = true;
  }

  const auto dims = factor_dims(rho.factors());
  std::vector<SubsystemBasis> out_factors;
  std::vector<Eigen::Index> out_dims;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (!kept[f]) continue;
    out_factors.push_back(rho.factors()[f]);
    out_dims.push_back(dims[f]);
  }
  const Eigen::Index out_dim =
      std::accumulate(out_dims.begin(), out_dims.end(), Eigen::Index{1}, std::multiplies<>());

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  for (Eigen::Index row = 0; row < rho.dim(); ++row) {
    const auto ri = decompose(row, dims);
    for (Eigen::Index col = 0; col < rho.dim(); ++col) {
      const auto ci = decompose(col, dims);
      bool diagonal_on_traced = true;
      for (std::size_t f = 0; f < dims.size(); ++f)
        if (!kept[f] && ri[f] != ci[f]) {
          diagonal_on_traced = false;
          break;
        }
      if (!diagonal_on_traced) continue;
      std::vector<Eigen::Index> ro, co;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        if (!kept[f]) continue;
        ro.push_back(ri[f]);
        co.push_back(ci[f]);
      }
      out(compose(ro, out_dims), compose(co, out_dims)) += rho.matrix()(row, col);
    }
  }
  return DensityMatrix(std::move(out_factors), std::move(out));
}

DensityMatrix partial_transpose(const DensityMatrix& rho, std::string_view subsystem) {
  const std::size_t target = static_cast<std::size_t>(rho.factor_index(subsystem));
  const auto dims = factor_dims(rho.factors());

  Eigen::MatrixXcd out(rho.dim(), rho.dim());
  for (Eigen::Index row = 0; row < rho.dim(); ++row) {
    auto ri = decompose(row, dims);
    for (Eigen::Index col = 0; col < rho.dim(); ++col) {
      auto ci = decompose(col, dims);
      std::swap(ri[target], ci[target]);
      out(compose(ri, dims), compose(ci, dims)) = rho.matrix()(row, col);
      std::swap(ri[target], ci[target]);
    }
  }
  return DensityMatrix(rho.factors(), std::move(out));
}

DensityMatrix restrict_subspace(const DensityMatrix& rho, std::string_view subsystem,
                                const std::vector<std::string>& keep_labels, double tol) {
  const std::size_t target = static_cast<std::size_t>(rho.factor_index(subsystem));
  const auto& all_labels = rho.factors()[target].labels;

  std::vector<Eigen::Index> keep_local;
  for (const auto& label : keep_labels) {
    auto it = std::find(all_labels.begin(), all_labels.end(), label);
    if (it == all_labels.end())
      throw std::invalid_argument("restrict_subspace: unknown label '" + label + "'");
    keep_local.push_back(std::distance(all_labels.begin(), it));
  }

  const auto dims = factor_dims(rho.factors());
  auto is_kept_flat = [&](Eigen::Index flat) {
    const auto idx = decompose(flat, dims);
    return std::find(keep_local.begin(), keep_local.end(), idx[target]) != keep_local.end();
  };

  std::vector<Eigen::Index> kept_rows;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    if (is_kept_flat(i)) {
      kept_rows.push_back(i);
      continue;
    }
    for (Eigen::Index j = 0; j < rho.dim(); ++j)
      if (std::abs(rho.matrix()(i, j)) > tol || std::abs(rho.matrix()(j, i)) > tol)
        throw std::invalid_argument("restrict_subspace: discarded basis states carry support");
  }

  Eigen::MatrixXcd out(kept_rows.size(), kept_rows.size());
  for (std::size_t i = 0; i < kept_rows.size(); ++i)
    for (std::size_t j = 0; j < kept_rows.size(); ++j)
      out(i, j) = rho.matrix()(kept_rows[i], kept_rows[j]);

  std::vector<SubsystemBasis> factors = rho.factors();
  factors[target].labels = keep_labels;
  return DensityMatrix(std::move(factors), std::move(out));
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (m + m.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  return hermitian_eigenvalues(rho.matrix());
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double entropy = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    if (lambda < -1e-8)
      throw std::invalid_argument("von_neumann_entropy: state has a negative eigenvalue");
    if (lambda <= 0.0) continue;  // clamps [-1e-10, 0) dust and skips exact zeros
    entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

DensityMatrix partial_trace_region_iv_closed_form(const MinkowskiDyad& dyad,
                                                  const rindler::SqueezingParams& p) {
  if (dyad.ket && !dyad.bra)
    throw std::invalid_argument(
        "partial_trace_region_iv_closed_form: |s,s'><0,0| is not one of the three closed-form "
        "shapes; take the adjoint of the vacuum-particle form instead");

  const double c = std::cos(p.r), s = std::sin(p.r);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(16, 16);
  // Flat index over Alice x RegionI with the mode_labels() order {0,u,d,ud}.
  auto at = [&m](int a_ket, int i_ket, int a_bra, int i_bra) -> Complex& {
    return m(4 * a_ket + i_ket, 4 * a_bra + i_bra);
  };
  constexpr int k0 = 0, ku = 1, kd = 2, kp = 3;

  if (!dyad.ket && !dyad.bra) {
    at(k0, k0, k0, k0) = std::pow(c, 4);
    at(k0, ku, k0, ku) = s * s * c * c;
    at(k0, kd, k0, kd) = s * s * c * c;
    at(k0, kp, k0, kp) = std::pow(s, 4);
  } else if (!dyad.ket && dyad.bra) {
    const int a = pair_label_index(dyad.bra, true);
    const int r_local = pair_label_index(dyad.bra, false);
    at(k0, k0, a, r_local) = c * c * c;
    if (dyad.bra->second == Spin::Up)
      at(k0, kd, a, kp) = s * s * c;
    else
      at(k0, ku, a, kp) = -s * s * c;
  } else {
    const int a_ket = pair_label_index(dyad.ket, true);
    const int r_ket = pair_label_index(dyad.ket, false);
    const int a_bra = pair_label_index(dyad.bra, true);
    const int r_bra = pair_label_index(dyad.bra, false);
    at(a_ket, r_ket, a_bra, r_bra) = c * c;
    if (dyad.ket->second == dyad.bra->second) at(a_ket, kp, a_bra, kp) += s * s;
  }

  std::vector<SubsystemBasis> factors = {
      {std::string(kAliceFactor), mode_labels()},
      {std::string(kRegionIFactor), mode_labels()},
  };
  return DensityMatrix(std::move(factors), std::move(m));
}

}  // namespace unruhent::density
