#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bornsim/branch.hpp"
#include "bornsim/sg.hpp"

namespace bornsim {

// Quantitative comparison of the two branch-counting rules against the
// Born rule: normalized distributions over the plus-count p, their total
// variation distance, peak locations, and (optionally) Monte-Carlo
// frequencies from sampled observer histories.
struct DistributionReport {
  std::optional<double> theta;  // radians, when the weight came from an angle
  double q = 0.5;
  int runs = 0;

  std::vector<double> predicted;  // weighted counts / 2^N
  std::vector<double> naive;      // C(N, p) / 2^N
  std::optional<std::vector<double>> empirical;

  double tv_naive_weighted = 0.0;  // 1/2 * L1 distance, in [0, 1]
  int peak_weighted = 0;
  int peak_naive = 0;
  double born_peak = 0.0;  // N * q
  bool narratives_disagree = false;

  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> empirical_plus_frequency;
  std::optional<double> plus_frequency_abs_error;  // |empirical - q|
  std::optional<double> plus_frequency_stderr3;    // 3 sigma, exact binomial
  std::optional<double> max_abs_dev_from_predicted;
};

// Core report builder for a supplied branch weight. samples <= 0 skips the
// Monte-Carlo section.
DistributionReport report_for_weight(int runs, double q, std::int64_t samples,
                                     std::uint64_t seed);

// Both counting rules at the weight q = cos^2(theta/2). The report flags
// disagreement whenever the two peaks differ; they coincide only at
// q = 1/2, where the weighted rule degenerates to the naive one.
DistributionReport compare_narratives(int runs, double theta);

// Adds sampled observer histories (at least 100) and their deviations from
// the weighted prediction.
DistributionReport born_convergence(double theta, int runs,
                                    std::int64_t samples, std::uint64_t seed);

// Full pipeline: propagate a theta-tilted packet through the apparatus,
// read the branch weight off the final state (not from the closed form),
// and feed it into the distribution report.
struct EndToEndReport {
  double theta = 0.0;
  double sigma0 = 0.0;
  double q_numeric = 0.0;   // extracted from the evolved packet
  double q_analytic = 0.0;  // cos^2(theta/2)
  double q_abs_error = 0.0;
  double actual_time = 0.0;
  SplitDiagnostics final_state;
  DistributionReport report;  // built from q_numeric
};

EndToEndReport end_to_end(double theta, const SgParams& params, double sigma0,
                          int runs, std::int64_t samples, std::uint64_t seed);

}  // namespace bornsim
