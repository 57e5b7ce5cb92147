#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unruhent/fock.hpp"
#include "unruhent/rindler.hpp"

namespace unruhent::density {

using fock::Complex;

/// One tensor factor: a named subsystem with an ordered local basis.
struct SubsystemBasis {
  std::string name;
  std::vector<std::string> labels;
};

/// A complex square matrix carrying its ordered, labeled tensor basis. The
/// global basis is the cartesian product of the factor labels, first factor
/// slowest. Partial operations address factors by name, never by raw index
/// arithmetic at call sites. The type itself does not force Hermiticity or
/// unit trace: partial transposes and closed-form trace contributions flow
/// through it too.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<SubsystemBasis> factors, Eigen::MatrixXcd matrix);

  const std::vector<SubsystemBasis>& factors() const { return factors_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  bool has_factor(std::string_view name) const;
  int factor_index(std::string_view name) const;  // throws if absent

  double trace() const;
  double purity() const;
  bool is_hermitian(double tol = 1e-12) const;

 private:
  std::vector<SubsystemBasis> factors_;
  Eigen::MatrixXcd mat_;
};

inline constexpr std::string_view kAliceFactor = "A";
inline constexpr std::string_view kRegionIFactor = "I";
inline constexpr std::string_view kRegionIVFactor = "IV";

/// Local basis of one (mode, spin-pair) subsystem: empty, spin-up particle,
/// spin-down particle, particle pair. Local index order matches.
const std::vector<std::string>& mode_labels();

/// |psi><psi| over the Alice x RegionI x RegionIV basis (4 x 4 x 4).
/// Requires ||psi|| = 1 within 1e-9.
DensityMatrix from_pure(const fock::StateVector& state);

/// Standard partial trace onto the named factors (kept in original order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

/// Transpose the indices of one factor.
DensityMatrix partial_transpose(const DensityMatrix& rho, std::string_view subsystem);

/// Drop local basis labels of one factor, verifying the discarded rows and
/// columns carry no support above `tol`.
DensityMatrix restrict_subspace(const DensityMatrix& rho, std::string_view subsystem,
                                const std::vector<std::string>& keep_labels,
                                double tol = 1e-12);

/// Real eigenvalues in ascending order. Rejects matrices that are not
/// Hermitian within 1e-10.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m);
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

/// -sum lambda log2 lambda in bits, with 0 log 0 = 0. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything below -1e-8 is rejected.
double von_neumann_entropy(const DensityMatrix& rho);

/// Descriptor of a Minkowski dyad |ket><bra| on the Alice+Rob mode pair.
/// nullopt stands for the bipartite vacuum side |0,0>; a spin pair (sA, sR)
/// stands for |sA>_A |sR>_R. Exactly three shapes have closed-form region-IV
/// traces: vacuum-vacuum, vacuum-particle and particle-particle.
struct MinkowskiDyad {
  std::optional<std::pair<fock::Spin, fock::Spin>> ket;
  std::optional<std::pair<fock::Spin, fock::Spin>> bra;
};

/// Closed-form Tr_IV of the dyad after expressing Rob's mode in Rindler
/// coordinates, as a 16-dim Alice x RegionI contribution:
///   Tr_IV |0,0><0,0|   = c^4 |0,0><0,0| + s^2 c^2 (|0,u><0,u| + |0,d><0,d|)
///                        + s^4 |0,ud><0,ud|
///   Tr_IV |0,0><s,s'|  = c^3 |0,0><s,s'|
///                        + s^2 c (d_{s' u} |0,d><s,ud| - d_{s' d} |0,u><s,ud|)
///   Tr_IV |s1,s2><s3,s4| = c^2 |s1,s2><s3,s4| + d_{s2 s4} s^2 |s1,ud><s3,ud|
/// with c = cos r, s = sin r. Independent of phi. Rejects the shape
/// |s,s'><0,0| (use the adjoint of the vacuum-particle form).
DensityMatrix partial_trace_region_iv_closed_form(const MinkowskiDyad& dyad,
                                                  const rindler::SqueezingParams& p);

}  // namespace unruhent::density
