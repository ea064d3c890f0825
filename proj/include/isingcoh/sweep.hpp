#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isingcoh/model.hpp"

namespace isingcoh {

enum class SweepVariable { T, J, OmegaA, Gamma, N };

const char* to_string(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& name);

struct SweepOptions {
  bool bounds = false;       // attach upper_bound / lower_bound
  bool asymptotics = false;  // attach both high-T estimates (T > 0 rows only)
  unsigned threads = 0;      // 0 = hardware concurrency
};

struct SweepRow {
  double x;
  double c;
  std::optional<double> c_ub;
  std::optional<double> c_lb;
  std::optional<double> high_t_leading;
  std::optional<double> high_t_two_term;
};

struct SweepResult {
  SweepVariable variable;
  std::vector<SweepRow> rows;
};

class SweepError : public std::invalid_argument {
 public:
  SweepError(std::size_t index, double value, const std::string& why);

  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t index_;
  double value_;
};

/// Evaluates C along `grid`, overriding the chosen field of `base` (or the
/// temperature `t`) at each point. The grid must be strictly monotone; an N
/// grid must hold integers. Points may be evaluated concurrently, rows are
/// always returned in grid order and do not depend on the thread count.
SweepResult sweep(const ModelParams& base, Temperature t, SweepVariable variable,
                  std::span<const double> grid, const SweepOptions& options = {});

/// `count` log-spaced points over [lo, hi], both ends included.
std::vector<double> log_grid(double lo, double hi, int count);

/// `count` evenly spaced points over [lo, hi], both ends included.
std::vector<double> linear_grid(double lo, double hi, int count);

}  // namespace isingcoh
