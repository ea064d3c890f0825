#include "isingcoh/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "isingcoh/limits.hpp"
#include "isingcoh/observables.hpp"

namespace isingcoh {

namespace {

std::string what_at(std::size_t index, double value, const std::string& why) {
  std::ostringstream os;
  os.precision(17);
  os << "sweep point " << index << " (value " << value << "): " << why;
  return os.str();
}

struct Point {
  ModelParams params;
  double t;
};

Point point_at(const ModelParams& base, Temperature t, SweepVariable v, double x) {
  Point pt{base, t.value()};
  switch (v) {
    case SweepVariable::T: pt.t = x; break;
    case SweepVariable::J: pt.params.j = x; break;
    case SweepVariable::OmegaA: pt.params.omega_a = x; break;
    case SweepVariable::Gamma: pt.params.gamma = x; break;
    case SweepVariable::N: pt.params.n = static_cast<int>(x); break;
  }
  return pt;
}

SweepRow evaluate(const Point& pt, double x, const SweepOptions& options) {
  const Temperature temp(pt.t);
  SweepRow row{x, coherence(pt.params, temp), {}, {}, {}, {}};
  if (options.bounds) {
    row.c_ub = upper_bound(pt.params, temp);
    row.c_lb = lower_bound(pt.params, temp);
  }
  if (options.asymptotics && !temp.is_zero()) {
    row.high_t_leading = high_t_asymptotic(pt.params, temp, HighTOrder::Leading).value;
    row.high_t_two_term =
        high_t_asymptotic(pt.params, temp, HighTOrder::LeadingPlusSubleading).value;
  }
  return row;
}

}  // namespace

const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::T: return "T";
    case SweepVariable::J: return "J";
    case SweepVariable::OmegaA: return "omega_a";
    case SweepVariable::Gamma: return "gamma";
    case SweepVariable::N: return "N";
  }
  return "?";
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "T" || name == "t") return SweepVariable::T;
  if (name == "J" || name == "j") return SweepVariable::J;
  if (name == "omega_a" || name == "omega-a") return SweepVariable::OmegaA;
  if (name == "gamma") return SweepVariable::Gamma;
  if (name == "N" || name == "n") return SweepVariable::N;
  throw std::invalid_argument("unknown sweep variable '" + name + "'");
}

SweepError::SweepError(std::size_t index, double value, const std::string& why)
    : std::invalid_argument(what_at(index, value, why)), index_(index), value_(value) {}

SweepResult sweep(const ModelParams& base, Temperature t, SweepVariable variable,
                  std::span<const double> grid, const SweepOptions& options) {
  const bool increasing = grid.size() < 2 || grid[1] > grid[0];
  std::vector<Point> points;
  points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    if (!std::isfinite(x)) throw SweepError(i, x, "grid value is not finite");
    if (i > 0 && (increasing ? !(x > grid[i - 1]) : !(x < grid[i - 1]))) {
      throw SweepError(i, x, "grid is not strictly monotone");
    }
    if (variable == SweepVariable::N && x != std::floor(x)) {
      throw SweepError(i, x, "N must be an integer");
    }
    Point pt = point_at(base, t, variable, x);
    try {
      pt.params = validate(pt.params);
      Temperature check(pt.t);
    } catch (const ModelError& e) {
      throw SweepError(i, x, e.what());
    }
    points.push_back(pt);
  }

  SweepResult result{variable, std::vector<SweepRow>(points.size())};
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      result.rows[i] = evaluate(points[i], grid[i], options);
    }
    return result;
  }
  {
    // Strided assignment; each row is a pure function of its grid point.
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += workers) {
          result.rows[i] = evaluate(points[i], grid[i], options);
        }
      });
    }
  }
  return result;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("log_grid needs 0 < lo < hi and count >= 2");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  const double a = std::log10(lo);
  const double step = (std::log10(hi) - a) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = std::pow(10.0, a + step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (!(hi > lo) || count < 2) {
    throw std::invalid_argument("linear_grid needs lo < hi and count >= 2");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo + step * i;
  out.back() = hi;
  return out;
}

}  // namespace isingcoh
