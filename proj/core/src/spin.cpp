#include "bornsim/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace bornsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Spinor make_skew_state(double theta) {
  if (!std::isfinite(theta)) {
    throw std::domain_error("make_skew_state: theta must be finite");
  }
  const double half = std::remainder(theta, kTwoPi) / 2.0;
  return Spinor{{std::cos(half), 0.0}, {0.0, std::sin(half)}};
}

double born_weight(const Spinor& state) {
  const double norm = state.norm_sq();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::domain_error("born_weight: spinor is not normalized");
  }
  const double q = std::norm(state.up);
  return q < 0.0 ? 0.0 : (q > 1.0 ? 1.0 : q);
}

double born_weight_for_angle(double theta) {
  return (1.0 + std::cos(std::remainder(theta, kTwoPi))) / 2.0;
}

double clamp_unit_interval(double q) {
  if (q >= 0.0 && q <= 1.0) return q;
  if (q > -1e-12 && q < 0.0) return 0.0;
  if (q > 1.0 && q < 1.0 + 1e-12) return 1.0;
  throw std::domain_error("branch weight q must lie in [0, 1]");
}

BranchWeights branch_weights(double q) {
  q = clamp_unit_interval(q);
  const double f = 2.0 * q;
  return BranchWeights{f, 2.0 - f, q};
}

}  // namespace bornsim
