#pragma once

#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unruhent/entanglement.hpp"

namespace unruhent::sweep {

enum class Family {
  BellPhiPlus,
  BellPhiMinus,
  BellPsiPlus,
  BellPsiMinus,
  Mode,
  OccupationSinglet,
  Custom,
};

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family family);

enum class XScale { Linear, Log };
enum class OutputFormat { Csv, Json };

/// Grid either directly in the squeezing angle r (inclusive endpoints) or in
/// the dimensionless frequency ratio x = omega c / a (linear or log spacing),
/// from which r is derived per point.
struct GridSpec {
  double r_min = 0.0;
  double r_max = M_PI / 4.0;
  int steps = 200;
  std::optional<double> x_min;
  std::optional<double> x_max;
  XScale x_scale = XScale::Linear;

  bool uses_x() const { return x_min.has_value() || x_max.has_value(); }
};

struct SweepConfig {
  Family family = Family::BellPhiPlus;
  fock::Spin pair_alice = fock::Spin::Up;  // mode family: Alice's spin in |s,s'>
  fock::Spin pair_rob = fock::Spin::Down;
  std::optional<entanglement::StateParams> custom;
  GridSpec grid;
  double phi = 0.0;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path = "-";
};

/// Throws std::invalid_argument on invalid ranges, step counts or missing
/// custom parameters.
void validate(const SweepConfig& config);

struct SweepRow {
  double r = 0.0;
  std::optional<double> x;
  double negativity = 0.0;
  double mutual_information = 0.0;
  double pt_min_eigenvalue = 0.0;
  double expected_number = 0.0;
};

SweepRow evaluate_point(const SweepConfig& config, double r, std::optional<double> x);

/// Evaluates the grid (points may run concurrently; rows are emitted in grid
/// order) and returns one row per point. Deterministic for a fixed config.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Column order: r,x,negativity,mutual_information,pt_min_eigenvalue,expected_number.
/// Numbers carry 17 significant digits; a missing x is an empty field.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// The same rows as a JSON array of objects with identical field names; a
/// missing x is null.
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);

void write_rows(std::ostream& out, OutputFormat format, const std::vector<SweepRow>& rows);

}  // namespace unruhent::sweep
