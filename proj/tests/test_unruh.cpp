#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "unruhent/unruh.hpp"

using namespace unruhent;
using rindler::SqueezingParams;

namespace {

density::DensityMatrix thermal_rho(const SqueezingParams& p) {
  return density::partial_trace(density::from_pure(rindler::build_rindler_vacuum(p)),
                                {std::string(density::kRegionIFactor)});
}

}  // namespace

TEST_CASE("expected occupancy at the reference angles") {
  CHECK(unruh::expected_number({0.0, 0.0, {}}) == doctest::Approx(0.0));
  CHECK(std::abs(unruh::expected_number({M_PI / 4.0, 0.0, {}}) - 1.0) < 1e-12);
  CHECK(std::abs(unruh::expected_number({M_PI / 6.0, 0.0, {}}) - 0.5) < 1e-14);
}

TEST_CASE("occupancy from the frequency ratio matches the angle form") {
  // e^{-pi x} = 1/sqrt(3)  =>  r = pi/6 and e^{2 pi x} = 3
  const double x = std::log(3.0) / (2.0 * M_PI);
  CHECK(std::abs(unruh::expected_number_from_frequency_ratio(x) - 0.5) < 1e-14);
  const auto p = rindler::params_from_frequency_ratio(x);
  CHECK(std::abs(unruh::expected_number(p) - 0.5) < 1e-12);
  CHECK_THROWS_AS(unruh::expected_number_from_frequency_ratio(0.0), std::domain_error);
}

TEST_CASE("number operator on reference states") {
  Eigen::MatrixXcd pair = Eigen::MatrixXcd::Zero(4, 4);
  pair(3, 3) = 1.0;
  density::DensityMatrix rho_pair({{std::string(density::kRegionIFactor),
                                    density::mode_labels()}},
                                  pair);
  CHECK(unruh::number_operator_expectation(rho_pair) == doctest::Approx(2.0));

  density::DensityMatrix mixed({{std::string(density::kRegionIFactor), density::mode_labels()}},
                               0.25 * Eigen::MatrixXcd::Identity(4, 4));
  CHECK(unruh::number_operator_expectation(mixed) == doctest::Approx(1.0));
}

TEST_CASE("number operator rejects foreign bases") {
  density::DensityMatrix qubit({{"q", {"0", "1"}}}, 0.5 * Eigen::MatrixXcd::Identity(2, 2));
  CHECK_THROWS_AS(unruh::number_operator_expectation(qubit), std::invalid_argument);
}

TEST_CASE("traced-vacuum occupancy equals 2 sin^2 r on a 50-point grid") {
  for (int i = 0; i < 50; ++i) {
    const double r = (M_PI / 4.0) * (i + 1) / 50.0;
    const SqueezingParams p{r, 0.9, {}};
    const double numeric = unruh::number_operator_expectation(thermal_rho(p));
    CHECK(std::abs(numeric - unruh::expected_number(p)) < 1e-12);
    // Degeneracy factor: exactly twice the spinless Fermi-Dirac occupancy.
    const double x = -std::log(std::tan(r)) / M_PI;
    if (x > 0.0)
      CHECK(std::abs(unruh::expected_number(p) -
                     unruh::expected_number_from_frequency_ratio(x)) < 1e-12);
  }
}

TEST_CASE("thermal report carries the temperature scale") {
  const double x = 0.25;
  const auto report = unruh::thermal_report(rindler::params_from_frequency_ratio(x, 0.0));
  CHECK(report.expected_number == doctest::Approx(2.0 / (std::exp(2.0 * M_PI * x) + 1.0)));
  CHECK(report.temperature_scale == doctest::Approx(1.0 / (2.0 * M_PI * x)));
  CHECK(report.r == doctest::Approx(rindler::squeezing_r(x)));

  // Derived from r alone when x was never given.
  const auto from_r = unruh::thermal_report({rindler::squeezing_r(x), 0.0, {}});
  CHECK(from_r.temperature_scale == doctest::Approx(report.temperature_scale).epsilon(1e-10));
  CHECK(unruh::thermal_report({0.0, 0.0, {}}).temperature_scale == doctest::Approx(0.0));
}
