#pragma once

#include <stdexcept>
#include <string>

namespace isingcoh {

/// Largest ring size accepted by the closed-form engine. Degeneracies are
/// exact 64-bit integers over the whole range.
inline constexpr int kMaxSources = 64;

enum class ModelErrorKind {
  NonPositiveGap,
  NegativeCoupling,
  NZero,
  NTooLarge,
  NonFinite,
  NegativeTemperature,
};

const char* to_string(ModelErrorKind kind);

class ModelError : public std::invalid_argument {
 public:
  ModelError(ModelErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ModelErrorKind kind() const noexcept { return kind_; }

 private:
  ModelErrorKind kind_;
};

/// Physical parameters of a target two-level system coupled to an Ising ring
/// of `n` source two-level systems. Units: hbar = k_B = 1.
struct ModelParams {
  double omega0 = 1.0;   // target gap
  double omega_a = 1.0;  // source gap
  double gamma = 0.0;    // target-source coupling
  double j = 0.0;        // nearest-neighbour Ising coupling, either sign
  int n = 1;             // ring size

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Returns `raw` unchanged if it satisfies every model invariant, otherwise
/// throws ModelError. `n_cap` lowers the accepted ring size (never raises it
/// above kMaxSources).
ModelParams validate(const ModelParams& raw, int n_cap = kMaxSources);

/// Absolute temperature. T = 0 is a legal value and routes evaluation to the
/// ground-state formulas; beta() is only defined for T > 0.
class Temperature {
 public:
  explicit Temperature(double t);

  double value() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_ == 0.0; }
  double beta() const;

 private:
  double t_;
};

std::string describe(const ModelParams& p);

}  // namespace isingcoh
