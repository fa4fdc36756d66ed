#include "bornsim/sg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bornsim/errors.hpp"
#include "bornsim/fft.hpp"

namespace bornsim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kEmptyPopulation = 1e-12;

ComponentMoments moments_of(const std::vector<std::complex<double>>& psi,
                            double grid_length) {
  const std::size_t n = psi.size();
  const double dy = grid_length / static_cast<double>(n);
  double pop = 0.0, first = 0.0, second = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double y = -grid_length / 2.0 + static_cast<double>(j) * dy;
    const double w = std::norm(psi[j]) * dy;
    pop += w;
    first += y * w;
    second += y * y * w;
  }
  ComponentMoments m;
  m.population = pop;
  if (pop >= kEmptyPopulation) {
    m.mean = first / pop;
    const double var = second / pop - m.mean * m.mean;
    m.sigma = var > 0.0 ? std::sqrt(var) : 0.0;
  }
  return m;
}

void check_boundary(const PacketState& state) {
  const double half = state.grid_length() / 2.0;
  for (int sign : {+1, -1}) {
    const ComponentMoments m = component_moments(state, sign);
    if (m.population < kEmptyPopulation) continue;
    if (std::abs(m.mean) + 5.0 * m.sigma >= half) {
      throw SolverError(
          "evolve: packet envelope reached within five widths of the "
          "periodic boundary (t = " +
          std::to_string(state.time()) + ")");
    }
  }
}

}  // namespace

void SgParams::validate() const {
  if (!(mass > 0.0)) throw std::domain_error("SgParams: mass must be > 0");
  if (!(grid_length > 0.0)) {
    throw std::domain_error("SgParams: grid_length must be > 0");
  }
  if (grid_points < 16 || !is_power_of_two(grid_points)) {
    throw std::domain_error(
        "SgParams: grid_points must be a power of two, >= 16");
  }
  if (!(dt > 0.0)) throw std::domain_error("SgParams: dt must be > 0");
  if (!(t_final >= 0.0)) {
    throw std::domain_error("SgParams: t_final must be >= 0");
  }
  if (!std::isfinite(coupling) || !std::isfinite(field_b0) ||
      !std::isfinite(gradient) || !std::isfinite(dt) ||
      !std::isfinite(t_final) || !std::isfinite(grid_length) ||
      !std::isfinite(mass)) {
    throw std::domain_error("SgParams: parameters must be finite");
  }
}

PacketState::PacketState(std::size_t grid_points, double grid_length)
    : plus_(grid_points), minus_(grid_points), grid_length_(grid_length) {}

double PacketState::norm() const {
  const double dy = grid_spacing();
  double total = 0.0;
  for (std::size_t j = 0; j < plus_.size(); ++j) {
    total += (std::norm(plus_[j]) + std::norm(minus_[j])) * dy;
  }
  return total;
}

ComponentMoments component_moments(const PacketState& state, int sign) {
  return moments_of(sign > 0 ? state.plus() : state.minus(),
                    state.grid_length());
}

double dispersed_width(double sigma0, double t, double mass) {
  const double ratio = t / (2.0 * mass * sigma0 * sigma0);
  return sigma0 * std::sqrt(1.0 + ratio * ratio);
}

PacketState init_packet(const Spinor& spin, double sigma0,
                        const SgParams& params) {
  params.validate();
  if (std::abs(spin.norm_sq() - 1.0) > 1e-9) {
    throw std::domain_error("init_packet: spinor is not normalized");
  }
  const double dy =
      params.grid_length / static_cast<double>(params.grid_points);
  if (!(sigma0 > 0.0) || sigma0 < 8.0 * dy) {
    throw SolverError(
        "init_packet: sigma0 must span at least 8 grid spacings (" +
        std::to_string(sigma0) + " < " + std::to_string(8.0 * dy) + ")");
  }
  const double displacement =
      std::abs(params.coupling * params.gradient) / (4.0 * params.mass) *
      params.t_final * params.t_final;
  const double final_width =
      dispersed_width(sigma0, params.t_final, params.mass);
  if (displacement + 5.0 * final_width >= params.grid_length / 2.0) {
    throw SolverError(
        "init_packet: projected excursion at t_final (" +
        std::to_string(displacement + 5.0 * final_width) +
        ") reaches the boundary; enlarge grid_length or reduce t_final");
  }

  PacketState state(params.grid_points, params.grid_length);
  double envelope_norm = 0.0;
  std::vector<double> envelope(params.grid_points);
  for (std::size_t j = 0; j < params.grid_points; ++j) {
    const double y = state.y(j);
    envelope[j] = std::exp(-y * y / (4.0 * sigma0 * sigma0));
    envelope_norm += envelope[j] * envelope[j] * dy;
  }
  const double scale = 1.0 / std::sqrt(envelope_norm);
  for (std::size_t j = 0; j < params.grid_points; ++j) {
    state.plus()[j] = spin.up * (envelope[j] * scale);
    state.minus()[j] = spin.down * (envelope[j] * scale);
  }
  return state;
}

PacketState evolve(PacketState state, const SgParams& params,
                   double duration) {
  params.validate();
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw std::domain_error("evolve: duration must be finite and >= 0");
  }
  if (state.grid_points() != params.grid_points ||
      state.grid_length() != params.grid_length) {
    throw std::domain_error("evolve: state grid does not match params grid");
  }
  const long long steps = std::llround(duration / params.dt);
  if (steps == 0) return state;

  const std::size_t n = params.grid_points;
  const double dy = params.grid_length / static_cast<double>(n);
  const Fft fft(n);

  // Half-step potential phases per component and full-step kinetic phases.
  // The potential for mu = s/2 is -s/2 * coupling * (b0 + gradient * y).
  std::vector<std::complex<double>> kick_plus(n), kick_minus(n), kinetic(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double y = -params.grid_length / 2.0 + static_cast<double>(j) * dy;
    const double v_plus =
        -0.5 * params.coupling * (params.field_b0 + params.gradient * y);
    const double arg = -v_plus * params.dt / 2.0;
    kick_plus[j] = {std::cos(arg), std::sin(arg)};
    kick_minus[j] = std::conj(kick_plus[j]);  // opposite magnetic moment

    const long long k_index =
        j < n / 2 ? static_cast<long long>(j)
                  : static_cast<long long>(j) - static_cast<long long>(n);
    const double k = kTwoPi * static_cast<double>(k_index) / params.grid_length;
    const double kin_arg = -k * k / (2.0 * params.mass) * params.dt;
    kinetic[j] = {std::cos(kin_arg), std::sin(kin_arg)};
  }

  auto* psi_p = state.plus().data();
  auto* psi_m = state.minus().data();
  for (long long step = 0; step < steps; ++step) {
    for (std::size_t j = 0; j < n; ++j) {
      psi_p[j] *= kick_plus[j];
      psi_m[j] *= kick_minus[j];
    }
    fft.forward(psi_p);
    fft.forward(psi_m);
    for (std::size_t j = 0; j < n; ++j) {
      psi_p[j] *= kinetic[j];
      psi_m[j] *= kinetic[j];
    }
    fft.inverse(psi_p);
    fft.inverse(psi_m);
    for (std::size_t j = 0; j < n; ++j) {
      psi_p[j] *= kick_plus[j];
      psi_m[j] *= kick_minus[j];
    }
    state.advance_time(params.dt);
    check_boundary(state);
  }
  return state;
}

SplitDiagnostics diagnostics(const PacketState& state) {
  const ComponentMoments plus = component_moments(state, +1);
  const ComponentMoments minus = component_moments(state, -1);

  SplitDiagnostics d;
  d.pop_plus = plus.population;
  d.pop_minus = minus.population;
  d.mean_y_plus = plus.mean;
  d.mean_y_minus = minus.mean;
  if (plus.population >= kEmptyPopulation &&
      minus.population >= kEmptyPopulation) {
    const double dy = state.grid_spacing();
    std::complex<double> cross{0.0, 0.0};
    for (std::size_t j = 0; j < state.grid_points(); ++j) {
      cross += std::conj(state.plus()[j]) * state.minus()[j] * dy;
    }
    d.spatial_overlap =
        std::abs(cross) / std::sqrt(plus.population * minus.population);
  }
  return d;
}

std::pair<double, double> extract_branch_amplitudes(const PacketState& state) {
  const SplitDiagnostics d = diagnostics(state);
  return {d.pop_plus, d.pop_minus};
}

double projection_infidelity(double theta, const SgParams& params,
                             double sigma0) {
  PacketState state =
      evolve(init_packet(make_skew_state(theta), sigma0, params), params,
             params.t_final);
  const double pop_minus = component_moments(state, -1).population;
  if (pop_minus < kEmptyPopulation) return 0.0;

  // Reference ket: the detected minus branch, renormalized.
  const double dy = state.grid_spacing();
  const double scale = 1.0 / std::sqrt(pop_minus);
  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t j = 0; j < state.grid_points(); ++j) {
    overlap += std::conj(state.minus()[j] * scale) * state.minus()[j] * dy;
  }
  return std::norm(overlap);
}

}  // namespace bornsim
