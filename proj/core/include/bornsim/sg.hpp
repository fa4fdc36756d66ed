#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "bornsim/spin.hpp"

namespace bornsim {

// Spinor wavepacket dynamics along the gradient axis, natural units
// (hbar = 1).
//
// The Hamiltonian per spin component mu = +-1/2 is
//
//     H = p^2/(2 mass) - coupling * mu * (field_b0 + gradient * y)
//
// The uniform field term contributes only a spin-dependent global phase;
// the gradient term is the linear potential that pulls the two components
// apart. With zero initial mean momentum the component means follow
//
//     <y>_{+-}(t) = +- (coupling * gradient / (4 mass)) * t^2
//
// and each component keeps the free-packet width
// sigma(t)^2 = sigma0^2 (1 + (t / (2 mass sigma0^2))^2), since a linear
// potential displaces a Gaussian without deforming it.
//
// Propagation is a Strang splitting: half potential kick in position space,
// full kinetic step in the spectral basis, half kick. Each factor is applied
// exactly, so the scheme is norm preserving and second order, and it
// conserves the two spin populations identically (the Hamiltonian is
// diagonal in mu). Boundaries are periodic; a runtime guard rejects states
// whose envelope approaches the edge instead of letting them wrap.

struct SgParams {
  double mass = 1.0;
  double coupling = 1.0;  // magnetic-moment scale C in -C mu B_y
  double field_b0 = 0.0;  // uniform B_y at the packet center
  double gradient = 1.0;  // dB_y/dy
  double grid_length = 64.0;
  std::size_t grid_points = 1024;  // power of two, >= 16
  double dt = 1e-3;
  double t_final = 4.0;

  // Throws std::domain_error when a field is out of range.
  void validate() const;
};

// Spinor-valued wavefunction sampled on the uniform grid
// y_j = -L/2 + j * (L/n), j = 0 .. n-1.
class PacketState {
 public:
  PacketState(std::size_t grid_points, double grid_length);

  std::size_t grid_points() const { return plus_.size(); }
  double grid_length() const { return grid_length_; }
  double grid_spacing() const {
    return grid_length_ / static_cast<double>(plus_.size());
  }
  double y(std::size_t j) const {
    return -grid_length_ / 2.0 + static_cast<double>(j) * grid_spacing();
  }
  double time() const { return time_; }
  void advance_time(double dt_total) { time_ += dt_total; }

  std::vector<std::complex<double>>& plus() { return plus_; }
  std::vector<std::complex<double>>& minus() { return minus_; }
  const std::vector<std::complex<double>>& plus() const { return plus_; }
  const std::vector<std::complex<double>>& minus() const { return minus_; }

  // Total discrete norm, sum_j (|psi+|^2 + |psi-|^2) dy.
  double norm() const;

 private:
  std::vector<std::complex<double>> plus_;
  std::vector<std::complex<double>> minus_;
  double grid_length_;
  double time_ = 0.0;
};

struct SplitDiagnostics {
  double mean_y_plus = 0.0;
  double mean_y_minus = 0.0;
  double pop_plus = 0.0;
  double pop_minus = 0.0;
  // |integral psi+^* psi- dy| / sqrt(pop+ pop-); 0 when either population
  // is below 1e-12.
  double spatial_overlap = 0.0;
};

// Population and position moments of one spin component (sign = +1 or -1).
// mean and sigma are reported as 0 for an essentially empty component.
struct ComponentMoments {
  double population = 0.0;
  double mean = 0.0;
  double sigma = 0.0;
};
ComponentMoments component_moments(const PacketState& state, int sign);

// Free-packet position spread at time t for initial spread sigma0.
double dispersed_width(double sigma0, double t, double mass);

// Gaussian packet at y = 0 with |psi|^2 proportional to
// exp(-y^2 / (2 sigma0^2)), zero mean momentum, spin factor applied
// uniformly, normalized on the grid.
//
// Throws SolverError when sigma0 spans fewer than 8 grid spacings, or when
// the projected excursion at t_final (Ehrenfest displacement plus five
// dispersed widths) would reach the boundary.
PacketState init_packet(const Spinor& spin, double sigma0,
                        const SgParams& params);

// Propagates for the requested duration, rounded to the nearest whole
// number of steps of params.dt; the state's time() reports what was
// actually reached. Throws SolverError if the envelope of a populated
// component comes within five of its current widths of the boundary.
PacketState evolve(PacketState state, const SgParams& params,
                   double duration);

SplitDiagnostics diagnostics(const PacketState& state);

// (q_plus, q_minus) = the two spin populations, the squared amplitudes
// carried into the branch bookkeeping.
std::pair<double, double> extract_branch_amplitudes(const PacketState& state);

// Squared overlap between the evolved state of a theta-tilted packet and
// the normalized minus branch of that same state (the detected ket). Equals
// sin^2(theta/2): strictly below 1 whenever both branches are populated,
// i.e. the detected branch cannot be the unitary image of the input.
double projection_infidelity(double theta, const SgParams& params,
                             double sigma0 = 0.5);

}  // namespace bornsim
