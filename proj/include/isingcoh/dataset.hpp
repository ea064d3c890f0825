#pragma once

// Tabular datasets for the CLI: figure presets, phase diagrams and sweeps,
// plus locale-independent CSV / manifest writers.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isingcoh/model.hpp"
#include "isingcoh/sweep.hpp"

namespace isingcoh {

using Cell = std::variant<double, std::string>;

struct Dataset {
  std::string id;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Dataset-specific manifest entries (parameters, grid, preset notes).
  std::vector<std::pair<std::string, std::string>> manifest;

  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

class UnknownFigure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& figure_ids();

/// Builds the dataset of a figure preset. Throws UnknownFigure.
Dataset figure_dataset(const std::string& id);

/// Default temperature grid: 200 log-spaced points over [1e-2, 1e3] * omega0/10.
std::vector<double> default_temperature_grid(double omega0);

/// Phase label, delta_e_min and zero-temperature coherence on a (J, omega_a)
/// grid; rows are J-major.
Dataset phase_diagram(const ModelParams& base, const std::vector<double>& j_grid,
                      const std::vector<double>& omega_a_grid);

Dataset sweep_dataset(const SweepResult& result);

/// Shortest round-trip decimal form ('.' separator, no locale).
std::string format_real(double x);

void write_csv(std::ostream& os, const Dataset& data);

/// key=value lines, one per entry, '\n' line endings.
void write_manifest(std::ostream& os,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace isingcoh
