#include "unruhent/unruh.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace unruhent::unruh {

double expected_number(const rindler::SqueezingParams& p) {
  const double s = std::sin(p.r);
  return 2.0 * s * s;
}

double expected_number_from_frequency_ratio(double x) {
  if (!(x > 0.0))
    throw std::domain_error("expected_number_from_frequency_ratio: frequency ratio must be positive");
  return 2.0 / (std::exp(2.0 * M_PI * x) + 1.0);
}

double number_operator_expectation(const density::DensityMatrix& rho_r) {
  if (rho_r.factors().size() != 1 || rho_r.factors()[0].labels != density::mode_labels())
    throw std::invalid_argument(
        "number_operator_expectation: expected a single {0,u,d,ud} mode factor");
  const auto& m = rho_r.matrix();
  static constexpr double kWeights[4] = {0.0, 1.0, 1.0, 2.0};
  double total = 0.0;
  for (int i = 0; i < 4; ++i) total += kWeights[i] * m(i, i).real();
  return total;
}

ThermalReport thermal_report(const rindler::SqueezingParams& p) {
  ThermalReport report;
  report.r = p.r;
  report.expected_number = expected_number(p);

  double x;
  if (p.frequency_ratio) {
    x = *p.frequency_ratio;
  } else {
    const double t = std::tan(p.r);
    x = t > 0.0 ? -std::log(t) / M_PI : std::numeric_limits<double>::infinity();
  }
  // 0 in the inertial limit (x -> inf), divergent at x -> 0.
  report.temperature_scale = 1.0 / (2.0 * M_PI * x);
  return report;
}

}  // namespace unruhent::unruh
