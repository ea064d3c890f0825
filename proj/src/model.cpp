#include "isingcoh/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isingcoh {

const char* to_string(ModelErrorKind kind) {
  switch (kind) {
    case ModelErrorKind::NonPositiveGap: return "NonPositiveGap";
    case ModelErrorKind::NegativeCoupling: return "NegativeCoupling";
    case ModelErrorKind::NZero: return "NZero";
    case ModelErrorKind::NTooLarge: return "NTooLarge";
    case ModelErrorKind::NonFinite: return "NonFinite";
    case ModelErrorKind::NegativeTemperature: return "NegativeTemperature";
  }
  return "Unknown";
}

ModelParams validate(const ModelParams& raw, int n_cap) {
  const int cap = std::min(n_cap, kMaxSources);
  if (!std::isfinite(raw.omega0) || !std::isfinite(raw.omega_a) ||
      !std::isfinite(raw.gamma) || !std::isfinite(raw.j)) {
    throw ModelError(ModelErrorKind::NonFinite,
                     "parameters must be finite: " + describe(raw));
  }
  if (raw.omega0 <= 0.0 || raw.omega_a <= 0.0) {
    throw ModelError(ModelErrorKind::NonPositiveGap,
                     "omega0 and omega_a must be > 0: " + describe(raw));
  }
  if (raw.gamma < 0.0) {
    throw ModelError(ModelErrorKind::NegativeCoupling,
                     "gamma must be >= 0 (pass |gamma|): " + describe(raw));
  }
  if (raw.n <= 0) {
    throw ModelError(ModelErrorKind::NZero, "n must be >= 1: " + describe(raw));
  }
  if (raw.n > cap) {
    throw ModelError(ModelErrorKind::NTooLarge,
                     "n exceeds cap " + std::to_string(cap) + ": " + describe(raw));
  }
  return raw;
}

Temperature::Temperature(double t) : t_(t) {
  if (!(t >= 0.0) || std::isinf(t)) {
    throw ModelError(ModelErrorKind::NegativeTemperature,
                     "temperature must be finite and >= 0, got " + std::to_string(t));
  }
}

double Temperature::beta() const {
  if (is_zero()) {
    throw std::domain_error("beta is undefined at T = 0");
  }
  return 1.0 / t_;
}

std::string describe(const ModelParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "{omega0=" << p.omega0 << ", omega_a=" << p.omega_a
     << ", gamma=" << p.gamma << ", j=" << p.j << ", n=" << p.n << "}";
  return os.str();
}

}  // namespace isingcoh
