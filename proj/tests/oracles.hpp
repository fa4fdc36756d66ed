#pragma once

// Independent reference implementations used as test oracles. Everything
// here takes the most direct route available -- naive DFT, bitmask history
// enumeration, closed-form Gaussians, lgamma binomial pmf -- and shares no
// code with the library paths under test.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

inline constexpr double kPi = 3.1415926535897932384626433832795;

// O(n^2) DFT, forward convention sum_j x_j e^{-2 pi i jk/n}, unnormalized.
inline std::vector<cd> naive_dft(const std::vector<cd>& in) {
  const std::size_t n = in.size();
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cd acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = -2.0 * kPi * static_cast<double>(j * k % n) /
                           static_cast<double>(n);
      acc += in[j] * cd{std::cos(phase), std::sin(phase)};
    }
    out[k] = acc;
  }
  return out;
}

// Exact evolved packet for one spin component under
//
//   H = p^2/(2 mass) + alpha y + c,   alpha = -s/2 * coupling * gradient,
//                                     c     = -s/2 * coupling * b0,
//
// i.e. a displaced free Gaussian carried along the classical path, times
// the classical action phase:
//
//   psi(y, t) = exp(i S(t)) exp(i p_c(t) (y - y_c(t))) phi(y - y_c(t), t)
//   y_c = -alpha t^2 / (2 mass),  p_c = -alpha t,
//   S   = alpha^2 t^3 / (3 mass) - c t,
//   phi(xi, t) = (2 pi sigma0^2)^(-1/4) sigma0 / sqrt(A) exp(-xi^2/(4A)),
//   A   = sigma0^2 + i t / (2 mass).
//
// Validity is checked in the tests by a finite-difference residual of the
// Schrodinger equation, independently of any propagator.
struct GaussianPacket {
  double mass = 1.0;
  double coupling = 1.0;
  double b0 = 0.0;
  double gradient = 1.0;
  double sigma0 = 0.5;

  cd component(double y, double t, int s) const {
    const double alpha = -0.5 * s * coupling * gradient;
    const double c0 = -0.5 * s * coupling * b0;
    const double yc = -alpha * t * t / (2.0 * mass);
    const double pc = -alpha * t;
    const double action = alpha * alpha * t * t * t / (3.0 * mass) - c0 * t;
    const cd width{sigma0 * sigma0, t / (2.0 * mass)};
    const double xi = y - yc;
    const cd envelope = std::pow(2.0 * kPi * sigma0 * sigma0, -0.25) *
                        sigma0 / std::sqrt(width) *
                        std::exp(-xi * xi / (4.0 * width));
    return std::exp(cd{0.0, action + pc * xi}) * envelope;
  }

  double mean(double t, int s) const {
    return s * coupling * gradient / (4.0 * mass) * t * t;
  }

  double width_at(double t) const {
    const double r = t / (2.0 * mass * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + r * r);
  }

  // Schrodinger residual |i d psi/dt - H psi| by central differences.
  double residual(double y, double t, int s) const {
    const double ht = 1e-5, hy = 1e-4;
    const cd dpsi_dt =
        (component(y, t + ht, s) - component(y, t - ht, s)) / (2.0 * ht);
    const cd lap = (component(y + hy, t, s) - 2.0 * component(y, t, s) +
                    component(y - hy, t, s)) /
                   (hy * hy);
    const double v = -0.5 * s * coupling * (b0 + gradient * y);
    const cd res = cd{0.0, 1.0} * dpsi_dt -
                   (-lap / (2.0 * mass) + v * component(y, t, s));
    return std::abs(res);
  }

  // Normalized cross-component overlap |<psi+|psi->|/sqrt(pp pm) by
  // trapezoid quadrature on a fine grid, for spin amplitudes (up, down).
  double cross_overlap(cd up, cd down, double t, double length,
                       std::size_t points) const {
    const double dy = length / static_cast<double>(points);
    cd cross{0.0, 0.0};
    double pp = 0.0, pm = 0.0;
    for (std::size_t j = 0; j < points; ++j) {
      const double y = -length / 2.0 + static_cast<double>(j) * dy;
      const cd plus = up * component(y, t, +1);
      const cd minus = down * component(y, t, -1);
      cross += std::conj(plus) * minus * dy;
      pp += std::norm(plus) * dy;
      pm += std::norm(minus) * dy;
    }
    return std::abs(cross) / std::sqrt(pp * pm);
  }
};

// All 2^runs histories by bitmask (bit r set = plus on run r), weight
// multiplied out per run. Independent of the recursive tree walk under test.
inline std::vector<double> brute_force_counts(int runs, double f, double g) {
  std::vector<double> counts(static_cast<std::size_t>(runs) + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << runs); ++mask) {
    double weight = 1.0;
    int pluses = 0;
    for (int r = 0; r < runs; ++r) {
      if ((mask >> r) & 1) {
        weight *= f;
        ++pluses;
      } else {
        weight *= g;
      }
    }
    counts[static_cast<std::size_t>(pluses)] += weight;
  }
  return counts;
}

// Binomial pmf via lgamma, for peak and distance cross-checks.
inline double binom_pmf(int n, int k, double p) {
  if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return k == n ? 1.0 : 0.0;
  const double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0);
  return std::exp(log_choose + k * std::log(p) + (n - k) * std::log1p(-p));
}

inline int binom_mode(int n, double p) {
  int best = 0;
  double best_val = binom_pmf(n, 0, p);
  for (int k = 1; k <= n; ++k) {
    const double v = binom_pmf(n, k, p);
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  return best;
}

inline double tv_distance(int n, double p1, double p2) {
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    acc += std::abs(binom_pmf(n, k, p1) - binom_pmf(n, k, p2));
  }
  return 0.5 * acc;
}

}  // namespace oracle
