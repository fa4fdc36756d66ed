#pragma once

#include <complex>

namespace bornsim {

// Spin-1/2 state over the measurement basis selected by the apparatus
// (mu = +1/2, -1/2 along the field axis).
struct Spinor {
  std::complex<double> up;    // amplitude on mu = +1/2
  std::complex<double> down;  // amplitude on mu = -1/2

  double norm_sq() const { return std::norm(up) + std::norm(down); }
};

// Universe multiplicities spawned by one measurement: f on the plus branch,
// g on the minus branch, derived from q as f = 2q, g = 2 - f. They are never
// stored independently, so f + g == 2 holds exactly in double arithmetic.
struct BranchWeights {
  double f;
  double g;
  double q;
};

// Incoming state tilted by theta radians off the measurement axis, in the
// plane containing that axis and the beam polarization. Convention in the
// mu basis: (cos(theta/2), i sin(theta/2)). The azimuthal phase is a fixed
// gauge choice; everything downstream depends only on |amplitude|^2.
// theta is reduced mod 2*pi; non-finite input is rejected.
Spinor make_skew_state(double theta);

// q = |up|^2, the weight of the plus outcome. Requires a normalized spinor
// (norm deviation <= 1e-9), result clamped onto [0, 1].
double born_weight(const Spinor& state);

// cos^2(theta/2) evaluated as (1 + cos(theta))/2. The half-angle form keeps
// q exactly 0.5 when theta is within one ulp of pi/2.
double born_weight_for_angle(double theta);

// f = 2q, g = 2 - 2q. Applies the standard clamp rule to q.
BranchWeights branch_weights(double q);

// q values within 1e-12 of [0, 1] are clamped onto the interval; anything
// further out throws std::domain_error.
double clamp_unit_interval(double q);

}  // namespace bornsim
