#include "bornsim/born.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace bornsim;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

TEST_CASE("the two counting rules coincide only at the balanced angle") {
  for (int runs : {10, 17}) {
    const DistributionReport r = compare_narratives(runs, kPi / 2);
    CHECK(r.q == 0.5);  // (1 + cos(pi/2))/2 collapses to one half exactly
    CHECK(r.tv_naive_weighted == 0.0);
    CHECK(r.peak_weighted == r.peak_naive);
    CHECK_FALSE(r.narratives_disagree);
  }
}

TEST_CASE("skew angle: the rules disagree and the distance is large") {
  const DistributionReport r = compare_narratives(20, kPi / 3);
  CHECK(r.q == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r.peak_weighted == 15);
  CHECK(r.peak_naive == 10);
  CHECK(r.narratives_disagree);
  CHECK(r.tv_naive_weighted > 0.3);
  CHECK(r.tv_naive_weighted ==
        doctest::Approx(oracle::tv_distance(20, 0.75, 0.5)).epsilon(1e-12));
  CHECK(r.born_peak == doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("aligned spin: weighted rule is a point mass") {
  const DistributionReport r = compare_narratives(10, 0.0);
  CHECK(r.q == 1.0);
  CHECK(r.predicted[10] == 1.0);
  for (int p = 0; p < 10; ++p) CHECK(r.predicted[static_cast<std::size_t>(p)] == 0.0);
  CHECK(r.tv_naive_weighted ==
        doctest::Approx(1023.0 / 1024.0).epsilon(1e-12));
}

TEST_CASE("distributions are normalized and the distance is bounded") {
  for (double q : {0.0, 0.123, 0.5, 0.87, 1.0}) {
    const DistributionReport r = report_for_weight(25, q, 0, 0);
    double sum_pred = 0.0, sum_naive = 0.0;
    for (double v : r.predicted) sum_pred += v;
    for (double v : r.naive) sum_naive += v;
    CHECK(std::abs(sum_pred - 1.0) < 1e-9);
    CHECK(std::abs(sum_naive - 1.0) < 1e-9);
    CHECK(r.tv_naive_weighted >= 0.0);
    CHECK(r.tv_naive_weighted <= 1.0);
  }
}

TEST_CASE("distance from the naive rule grows with |q - 1/2|") {
  double previous = -1.0;
  for (double q = 0.5; q < 0.96; q += 0.05) {
    const DistributionReport r = report_for_weight(20, q, 0, 0);
    CHECK(r.tv_naive_weighted >= previous - 1e-15);
    previous = r.tv_naive_weighted;
  }
  // and vanishes only at q = 1/2
  CHECK(report_for_weight(20, 0.5, 0, 0).tv_naive_weighted == 0.0);
  CHECK(report_for_weight(20, 0.55, 0, 0).tv_naive_weighted > 1e-6);
}

TEST_CASE("Monte-Carlo section: degenerate and balanced weights") {
  const DistributionReport aligned = born_convergence(0.0, 5, 1000, 3);
  REQUIRE(aligned.empirical_plus_frequency.has_value());
  CHECK(*aligned.empirical_plus_frequency == 1.0);
  CHECK(*aligned.plus_frequency_abs_error == 0.0);

  const DistributionReport balanced = born_convergence(kPi / 2, 10, 100000, 11);
  REQUIRE(balanced.empirical.has_value());
  const double expected = 252.0 / 1024.0;
  const double sigma = std::sqrt(expected * (1.0 - expected) / 100000.0);
  CHECK(std::abs((*balanced.empirical)[5] - expected) < 4.0 * sigma);

  CHECK_THROWS_AS(born_convergence(kPi / 2, 10, 50, 1), std::domain_error);
}

TEST_CASE("Monte-Carlo section: single-run skew angle") {
  const DistributionReport r = born_convergence(2.0 * kPi / 3, 1, 100000, 17);
  REQUIRE(r.empirical_plus_frequency.has_value());
  CHECK(r.q == doctest::Approx(0.25).epsilon(1e-12));
  const double bound = 4.0 * std::sqrt(0.25 * 0.75 / 100000.0);
  CHECK(std::abs(*r.empirical_plus_frequency - 0.25) < bound);
  CHECK(*r.plus_frequency_stderr3 ==
        doctest::Approx(3.0 * std::sqrt(0.25 * 0.75 / 100000.0)));
}

TEST_CASE("end to end: numerically extracted weight drives the report") {
  const SgParams params;

  const EndToEndReport balanced = end_to_end(kPi / 2, params, 0.5, 10, 2000, 7);
  CHECK(std::abs(balanced.q_numeric - 0.5) < 1e-6);
  CHECK(balanced.q_abs_error < 1e-6);
  CHECK(balanced.report.peak_weighted == 5);
  CHECK(balanced.actual_time == doctest::Approx(4.0).epsilon(1e-9));

  const EndToEndReport aligned = end_to_end(0.0, params, 0.5, 10, 2000, 7);
  CHECK(aligned.q_numeric == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(aligned.final_state.pop_minus == 0.0);
  CHECK(aligned.report.predicted[10] == doctest::Approx(1.0).epsilon(1e-12));

  const EndToEndReport skew = end_to_end(2.0 * kPi / 3, params, 0.5, 20, 2000, 7);
  CHECK(std::abs(skew.q_numeric - 0.25) < 1e-6);
  CHECK(skew.report.peak_weighted == 5);
}

TEST_CASE("end to end report matches the analytic-weight report") {
  const SgParams params;
  for (double theta : {kPi / 3, 2.0 * kPi / 3}) {
    const EndToEndReport numeric = end_to_end(theta, params, 0.5, 20, 2000, 42);
    const DistributionReport analytic =
        report_for_weight(20, born_weight_for_angle(theta), 2000, 42);

    CHECK(std::abs(numeric.report.q - analytic.q) < 1e-6);
    CHECK(numeric.report.peak_weighted == analytic.peak_weighted);
    CHECK(numeric.report.peak_naive == analytic.peak_naive);
    CHECK(std::abs(numeric.report.tv_naive_weighted -
                   analytic.tv_naive_weighted) < 1e-6);
    CHECK(std::abs(numeric.report.born_peak - analytic.born_peak) < 1e-6);
    for (int p = 0; p <= 20; ++p) {
      const auto i = static_cast<std::size_t>(p);
      CHECK(std::abs(numeric.report.predicted[i] - analytic.predicted[i]) <
            1e-6);
      CHECK(std::abs(numeric.report.naive[i] - analytic.naive[i]) < 1e-6);
      CHECK(std::abs((*numeric.report.empirical)[i] -
                     (*analytic.empirical)[i]) < 1e-6);
    }
  }
}
