#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "unruhent/density.hpp"
#include "unruhent/entanglement.hpp"
#include "unruhent/rindler.hpp"

using namespace unruhent;
using density::DensityMatrix;
using density::SubsystemBasis;
using rindler::SqueezingParams;
using Complex = fock::Complex;

namespace {

const std::string kA{density::kAliceFactor};
const std::string kI{density::kRegionIFactor};

DensityMatrix vacuum_rho_64(const SqueezingParams& p) {
  return density::from_pure(rindler::build_rindler_vacuum(p));
}

Eigen::MatrixXcd random_hermitian(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex{gauss(rng), gauss(rng)};
  return 0.5 * (m + m.adjoint());
}

}  // namespace

TEST_CASE("projector of the bare vacuum is diag(1, 0, ...)") {
  const DensityMatrix rho = density::from_pure(fock::StateVector::vacuum());
  CHECK(rho.dim() == 64);
  CHECK(std::abs(rho.matrix()(0, 0) - 1.0) < 1e-15);
  CHECK(rho.matrix().cwiseAbs().sum() == doctest::Approx(1.0));
  CHECK(rho.trace() == doctest::Approx(1.0));
}

TEST_CASE("from_pure rejects unnormalized states") {
  const fock::StateVector v =
      Complex{0.5, 0.0} * fock::StateVector::vacuum();
  CHECK_THROWS_AS(density::from_pure(v), std::invalid_argument);
}

TEST_CASE("pure-state projectors have unit purity") {
  const auto bell = entanglement::build_general_state(
      entanglement::bell_params(entanglement::BellKind::PhiPlus), {0.0, 0.0, {}});
  CHECK(density::from_pure(bell).purity() == doctest::Approx(1.0));

  // The Rindler vacuum stays pure on the 16-dim I x IV space.
  const auto rho =
      density::partial_trace(vacuum_rho_64({M_PI / 6.0, 0.0, {}}), {kI, "IV"});
  CHECK(rho.dim() == 16);
  CHECK(rho.purity() == doctest::Approx(1.0));
}

TEST_CASE("tracing region IV from the vacuum gives the thermal diagonal") {
  for (double r = 0.0; r <= M_PI / 4.0 + 1e-12; r += M_PI / 24.0) {
    const auto rho_r = density::partial_trace(vacuum_rho_64({r, 0.8, {}}), {kI});
    const double c2 = std::cos(r) * std::cos(r), s2 = std::sin(r) * std::sin(r);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected.diagonal() << c2 * c2, s2 * c2, s2 * c2, s2 * s2;
    CHECK(testsupport::max_entry_diff(rho_r.matrix(), expected) < 1e-14);
  }
}

TEST_CASE("partial trace of a product state returns the factor") {
  // |u>_A (x) vacuum elsewhere
  const fock::StateVector v = fock::apply_creation(
      fock::StateVector::vacuum(), {fock::Subsystem::AliceMinkowski, fock::Spin::Up});
  const auto rho_a = density::partial_trace(density::from_pure(v), {kA});
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK(testsupport::max_entry_diff(rho_a.matrix(), expected) < 1e-15);
}

TEST_CASE("Alice's reduced Bell state is maximally mixed") {
  const auto rho_ar = entanglement::bell_rho_ar(entanglement::BellKind::PhiPlus,
                                                {0.52, 0.0, {}});
  const auto rho_a = density::partial_trace(rho_ar, {kA});
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  CHECK(testsupport::max_entry_diff(rho_a.matrix(), expected) < 1e-14);
}

TEST_CASE("partial trace rejects unknown subsystems") {
  const auto rho = vacuum_rho_64({0.3, 0.0, {}});
  CHECK_THROWS_AS(density::partial_trace(rho, {"nope"}), std::invalid_argument);
  CHECK_THROWS_AS(density::partial_trace(rho, {kA, kA}), std::invalid_argument);
}

TEST_CASE("closed-form region-IV traces of the three dyad shapes") {
  const SqueezingParams p{0.44, 1.7, {}};
  const double c = std::cos(p.r), s = std::sin(p.r);

  SUBCASE("vacuum-vacuum term") {
    const auto term = density::partial_trace_region_iv_closed_form({{}, {}}, p);
    CHECK(std::abs(term.matrix()(0, 0) - std::pow(c, 4)) < 1e-15);
    CHECK(std::abs(term.matrix()(1, 1) - s * s * c * c) < 1e-15);
    CHECK(std::abs(term.matrix()(2, 2) - s * s * c * c) < 1e-15);
    CHECK(std::abs(term.matrix()(3, 3) - std::pow(s, 4)) < 1e-15);
    CHECK(term.matrix().cwiseAbs().sum() == doctest::Approx(1.0));
  }

  SUBCASE("vacuum-particle term with a spin-down bra picks the minus branch") {
    // Tr_IV |0,0><d,d| = c^3 |0,0><d,d| - s^2 c |0,u><d,ud|
    const auto term = density::partial_trace_region_iv_closed_form(
        {{}, std::pair{fock::Spin::Down, fock::Spin::Down}}, p);
    CHECK(std::abs(term.matrix()(0, 4 * 2 + 2) - c * c * c) < 1e-15);
    CHECK(std::abs(term.matrix()(1, 4 * 2 + 3) + s * s * c) < 1e-15);
    CHECK(term.matrix().cwiseAbs().sum() ==
          doctest::Approx(c * c * c + s * s * c));
  }

  SUBCASE("particle-particle term keeps the pair branch only for equal Rob spins") {
    // Tr_IV |u,u><d,u| = c^2 |u,u><d,u| + s^2 |u,ud><d,ud|
    const auto equal = density::partial_trace_region_iv_closed_form(
        {std::pair{fock::Spin::Up, fock::Spin::Up}, std::pair{fock::Spin::Down, fock::Spin::Up}},
        p);
    CHECK(std::abs(equal.matrix()(4 * 1 + 1, 4 * 2 + 1) - c * c) < 1e-15);
    CHECK(std::abs(equal.matrix()(4 * 1 + 3, 4 * 2 + 3) - s * s) < 1e-15);

    // Tr_IV |u,u><d,d| = c^2 |u,u><d,d| alone: the Rob spins differ.
    const auto mixed = density::partial_trace_region_iv_closed_form(
        {std::pair{fock::Spin::Up, fock::Spin::Up}, std::pair{fock::Spin::Down, fock::Spin::Down}},
        p);
    CHECK(std::abs(mixed.matrix()(4 * 1 + 1, 4 * 2 + 2) - c * c) < 1e-15);
    CHECK(mixed.matrix().cwiseAbs().sum() == doctest::Approx(c * c));
  }

  SUBCASE("the particle-vacuum shape is rejected") {
    CHECK_THROWS_AS(density::partial_trace_region_iv_closed_form(
                        {std::pair{fock::Spin::Up, fock::Spin::Up}, {}}, p),
                    std::invalid_argument);
  }
}

TEST_CASE("closed-form trace sum equals the numeric pipeline entrywise") {
  std::mt19937 rng(5150);
  std::vector<entanglement::StateParams> cases;
  for (int trial = 0; trial < 20; ++trial) cases.push_back(testsupport::random_params(rng));
  for (auto kind : {entanglement::BellKind::PhiPlus, entanglement::BellKind::PhiMinus,
                    entanglement::BellKind::PsiPlus, entanglement::BellKind::PsiMinus})
    cases.push_back(entanglement::bell_params(kind));
  for (auto a : {fock::Spin::Up, fock::Spin::Down})
    for (auto b : {fock::Spin::Up, fock::Spin::Down})
      cases.push_back(entanglement::mode_entangled_params(a, b));

  int salt = 0;
  for (const auto& params : cases) {
    for (int j = 0; j < 5; ++j) {
      const SqueezingParams p{(M_PI / 4.0) * j / 4.0, 0.77 * ++salt, {}};
      CHECK(testsupport::max_entry_diff(
                entanglement::build_general_rho_ar(params, p).matrix(),
                entanglement::general_rho_ar_closed_form(params, p).matrix()) < 1e-12);
    }
  }
}

TEST_CASE("partial transpose is a trace- and hermiticity-preserving involution") {
  std::mt19937 rng(99);
  const auto params = testsupport::random_params(rng);
  const auto rho = entanglement::build_general_rho_ar(params, {0.37, 2.2, {}});
  const auto pt = density::partial_transpose(rho, kI);
  CHECK(pt.is_hermitian(1e-12));
  CHECK(pt.trace() == doctest::Approx(rho.trace()));
  CHECK(testsupport::max_entry_diff(density::partial_transpose(pt, kI).matrix(), rho.matrix()) <
        1e-15);
}

TEST_CASE("partial transpose leaves a product state's spectrum untouched") {
  const auto rho = density::partial_trace(vacuum_rho_64({0.0, 0.0, {}}), {kA, kI});
  const auto pt = density::partial_transpose(rho, kI);
  CHECK(testsupport::sorted_multiset_diff(density::hermitian_eigenvalues(rho),
                                          density::hermitian_eigenvalues(pt)) < 1e-14);
}

TEST_CASE("Bell partial transpose reproduces the block matrix") {
  const double r = 0.66;
  const auto pt = density::partial_transpose(
      entanglement::bell_rho_ar(entanglement::BellKind::PhiPlus, {r, 0.0, {}}), kI);
  const double c2 = std::cos(r) * std::cos(r), s2 = std::sin(r) * std::sin(r);
  const auto& m = pt.matrix();
  const auto idx = [](int a, int i) { return 4 * a + i; };
  CHECK(std::abs(m(idx(1, 1), idx(1, 1)) - 0.5 * c2) < 1e-14);  // |u,u><u,u|
  CHECK(std::abs(m(idx(1, 2), idx(2, 1)) - 0.5 * c2) < 1e-14);  // |u,d><d,u|
  CHECK(std::abs(m(idx(2, 1), idx(1, 2)) - 0.5 * c2) < 1e-14);
  CHECK(std::abs(m(idx(2, 2), idx(2, 2)) - 0.5 * c2) < 1e-14);
  CHECK(std::abs(m(idx(1, 3), idx(1, 3)) - 0.5 * s2) < 1e-14);  // |u,ud><u,ud|
  CHECK(std::abs(m(idx(2, 3), idx(2, 3)) - 0.5 * s2) < 1e-14);
  CHECK(std::abs(m(idx(1, 1), idx(2, 2))) < 1e-14);  // coherence moved away
}

TEST_CASE("restrict_subspace drops only unpopulated labels") {
  const auto rho = entanglement::bell_rho_ar(entanglement::BellKind::PsiMinus, {0.3, 0.0, {}});
  const auto small = density::restrict_subspace(rho, kA, {"u", "d"});
  CHECK(small.dim() == 8);
  CHECK(small.trace() == doctest::Approx(1.0));
  CHECK_THROWS_AS(density::restrict_subspace(rho, kA, {"0"}), std::invalid_argument);
  CHECK_THROWS_AS(density::restrict_subspace(rho, kA, {"bogus"}), std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues of a diagonal matrix") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = 0.7;
  m(1, 1) = -0.2;
  const auto ev = density::hermitian_eigenvalues(m);
  CHECK(ev[0] == doctest::Approx(-0.2));
  CHECK(ev[1] == doctest::Approx(0.7));
}

TEST_CASE("non-Hermitian input is rejected") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(density::hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("eigenvalues agree with the characteristic-polynomial oracle") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    const Eigen::MatrixXcd m = random_hermitian(6, rng);
    CHECK(testsupport::sorted_multiset_diff(density::hermitian_eigenvalues(m),
                                            testsupport::char_poly_eigenvalues(m)) < 1e-9);
  }
}

TEST_CASE("Bell partial-transpose spectrum matches the closed form") {
  const double r = 0.29;
  const auto pt = density::partial_transpose(
      entanglement::bell_rho_ar(entanglement::BellKind::PhiPlus, {r, 0.4, {}}), kI);
  CHECK(testsupport::sorted_multiset_diff(density::hermitian_eigenvalues(pt),
                                          entanglement::closed_form_bell_pt_spectrum(r)) <
        1e-12);
}

TEST_CASE("entropy of reference states") {
  const auto pure = density::partial_trace(vacuum_rho_64({0.42, 0.0, {}}), {kI, "IV"});
  CHECK(density::von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-10));

  DensityMatrix mixed({{"q", {"0", "1"}}}, 0.5 * Eigen::MatrixXcd::Identity(2, 2));
  CHECK(density::von_neumann_entropy(mixed) == doctest::Approx(1.0));
}

TEST_CASE("Rob's Bell entropy matches the closed form") {
  for (double r : {0.15, 0.47, M_PI / 4.0}) {
    const auto rho_r = density::partial_trace(
        entanglement::bell_rho_ar(entanglement::BellKind::PsiPlus, {r, 0.0, {}}), {kI});
    const double c2 = std::cos(r) * std::cos(r), s2 = std::sin(r) * std::sin(r);
    double expected = -c2 * std::log2(0.5 * c2);
    if (s2 > 0.0) expected -= s2 * std::log2(s2);
    CHECK(std::abs(density::von_neumann_entropy(rho_r) - expected) < 1e-12);
  }
}

TEST_CASE("entropy rejects states with genuinely negative eigenvalues") {
  DensityMatrix bad({{"q", {"0", "1"}}},
                    (Eigen::MatrixXcd(2, 2) << 1.5, 0.0, 0.0, -0.5).finished());
  CHECK_THROWS_AS(density::von_neumann_entropy(bad), std::invalid_argument);
}

TEST_CASE("entropy is invariant under basis relabeling") {
  std::mt19937 rng(8);
  const auto params = testsupport::random_params(rng);
  const auto rho = entanglement::build_general_rho_ar(params, {0.51, 0.0, {}});

  // Swap the two middle labels of Rob's factor and permute the matrix the same way.
  Eigen::MatrixXcd permuted = rho.matrix();
  std::vector<int> perm{0, 2, 1, 3};
  Eigen::MatrixXcd p16 = Eigen::MatrixXcd::Zero(16, 16);
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i) p16(4 * a + perm[i], 4 * a + i) = 1.0;
  permuted = p16 * permuted * p16.adjoint();
  DensityMatrix relabeled({{kA, density::mode_labels()}, {kI, {"0", "d", "u", "ud"}}},
                          permuted);
  CHECK(std::abs(density::von_neumann_entropy(relabeled) - density::von_neumann_entropy(rho)) <
        1e-12);
}

TEST_CASE("entropies do not depend on the squeezing phase") {
  std::mt19937 rng(21);
  const auto params = testsupport::random_params(rng);
  const double r = 0.44;
  double reference = -1.0;
  for (double phi : {0.0, 0.7, M_PI / 2.0, 2.1}) {
    const auto rho = entanglement::build_general_rho_ar(params, {r, phi, {}});
    const double s = density::von_neumann_entropy(rho) +
                     density::von_neumann_entropy(density::partial_trace(rho, {kI}));
    if (reference < 0.0) reference = s;
    CHECK(std::abs(s - reference) < 1e-10);
  }
}

TEST_CASE("reduced state keeps unit trace at every acceleration") {
  std::mt19937 rng(314);
  const auto params = testsupport::random_params(rng);
  for (double r = 0.0; r <= M_PI / 4.0 + 1e-12; r += M_PI / 40.0) {
    const auto rho = entanglement::build_general_rho_ar(params, {r, 1.0, {}});
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
    CHECK(rho.is_hermitian(1e-12));
  }
}
