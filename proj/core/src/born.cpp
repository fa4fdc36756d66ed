#include "bornsim/born.hpp"

#include <cmath>
#include <stdexcept>

#include "bornsim/spin.hpp"

namespace bornsim {

namespace {

// counts / 2^N. Scaling by an exact power of two keeps the naive and
// weighted normalizations bit-identical whenever the counts are.
std::vector<double> normalize(const HistoryTally& tally) {
  std::vector<double> out(tally.counts.size());
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = std::ldexp(tally.counts[p], -tally.runs);
  }
  return out;
}

double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b) {
  KahanSum sum;
  for (std::size_t p = 0; p < a.size(); ++p) sum.add(std::abs(a[p] - b[p]));
  return 0.5 * sum.value();
}

}  // namespace

DistributionReport report_for_weight(int runs, double q, std::int64_t samples,
                                     std::uint64_t seed) {
  q = clamp_unit_interval(q);

  BranchConfig weighted{runs, q, BranchMode::weighted, std::nullopt};
  BranchConfig naive{runs, q, BranchMode::naive, std::nullopt};

  DistributionReport report;
  report.q = q;
  report.runs = runs;
  report.predicted = normalize(closed_form(weighted));
  report.naive = normalize(closed_form(naive));
  report.tv_naive_weighted = total_variation(report.predicted, report.naive);
  report.peak_weighted = peak(weighted);
  report.peak_naive = peak(naive);
  report.born_peak = static_cast<double>(runs) * q;
  report.narratives_disagree = report.peak_weighted != report.peak_naive;

  if (samples > 0) {
    report.samples = samples;
    report.seed = seed;
    const auto histories = sample_histories(weighted, samples, seed);
    std::vector<double> freq(static_cast<std::size_t>(runs) + 1, 0.0);
    std::int64_t total_pluses = 0;
    for (const ObserverHistory& h : histories) {
      freq[static_cast<std::size_t>(h.plus_count)] += 1.0;
      total_pluses += h.plus_count;
    }
    for (double& f : freq) f /= static_cast<double>(samples);

    const double draws = static_cast<double>(samples) * runs;
    const double plus_freq = static_cast<double>(total_pluses) / draws;
    double max_dev = 0.0;
    for (std::size_t p = 0; p < freq.size(); ++p) {
      max_dev = std::max(max_dev, std::abs(freq[p] - report.predicted[p]));
    }
    report.empirical = std::move(freq);
    report.empirical_plus_frequency = plus_freq;
    report.plus_frequency_abs_error = std::abs(plus_freq - q);
    report.plus_frequency_stderr3 = 3.0 * std::sqrt(q * (1.0 - q) / draws);
    report.max_abs_dev_from_predicted = max_dev;
  }
  return report;
}

DistributionReport compare_narratives(int runs, double theta) {
  DistributionReport report =
      report_for_weight(runs, born_weight_for_angle(theta), 0, 0);
  report.theta = theta;
  return report;
}

DistributionReport born_convergence(double theta, int runs,
                                    std::int64_t samples, std::uint64_t seed) {
  if (samples < 100) {
    throw std::domain_error("born_convergence: need at least 100 samples");
  }
  DistributionReport report =
      report_for_weight(runs, born_weight_for_angle(theta), samples, seed);
  report.theta = theta;
  return report;
}

EndToEndReport end_to_end(double theta, const SgParams& params, double sigma0,
                          int runs, std::int64_t samples, std::uint64_t seed) {
  PacketState state =
      evolve(init_packet(make_skew_state(theta), sigma0, params), params,
             params.t_final);

  EndToEndReport result;
  result.theta = theta;
  result.sigma0 = sigma0;
  result.actual_time = state.time();
  result.final_state = diagnostics(state);
  result.q_numeric = extract_branch_amplitudes(state).first;
  result.q_analytic = born_weight_for_angle(theta);
  result.q_abs_error = std::abs(result.q_numeric - result.q_analytic);
  result.report = report_for_weight(runs, result.q_numeric, samples, seed);
  result.report.theta = theta;
  return result;
}

}  // namespace bornsim
