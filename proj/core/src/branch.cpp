#include "bornsim/branch.hpp"

#include <cmath>
#include <stdexcept>

#include "bornsim/rng.hpp"
#include "bornsim/spin.hpp"

namespace bornsim {

namespace {

// Exact tree walk. Weights are tracked as integer numerators over the
// implicit common denominator den^depth: stepping to the plus child
// multiplies by f = 2a/den, to the minus child by g = 2(den-a)/den.
void walk_exact(int depth, int runs, int pluses, const BigInt& value,
                const BigInt& plus_num, const BigInt& minus_num,
                std::vector<BigInt>& leaf_sums) {
  if (depth == runs) {
    leaf_sums[static_cast<std::size_t>(pluses)] += value;
    return;
  }
  walk_exact(depth + 1, runs, pluses + 1, value * plus_num, plus_num,
             minus_num, leaf_sums);
  walk_exact(depth + 1, runs, pluses, value * minus_num, plus_num, minus_num,
             leaf_sums);
}

void walk_float(int depth, int runs, int pluses, double value, double f,
                double g, std::vector<KahanSum>& leaf_sums) {
  if (depth == runs) {
    leaf_sums[static_cast<std::size_t>(pluses)].add(value);
    return;
  }
  walk_float(depth + 1, runs, pluses + 1, value * f, f, g, leaf_sums);
  walk_float(depth + 1, runs, pluses, value * g, f, g, leaf_sums);
}

HistoryTally tally_from_exact(int runs, std::vector<BigRational> counts) {
  HistoryTally tally;
  tally.runs = runs;
  tally.counts_exact = std::move(counts);
  tally.counts.resize(tally.counts_exact.size());
  for (std::size_t p = 0; p < tally.counts_exact.size(); ++p) {
    tally.total_exact += tally.counts_exact[p];
    tally.counts[p] = tally.counts_exact[p].convert_to<double>();
  }
  tally.total = tally.total_exact.convert_to<double>();
  return tally;
}

HistoryTally tally_from_float(int runs, std::vector<double> counts) {
  HistoryTally tally;
  tally.runs = runs;
  tally.counts = std::move(counts);
  KahanSum total;
  for (double c : tally.counts) total.add(c);
  tally.total = total.value();
  return tally;
}

}  // namespace

void BranchConfig::validate() const {
  if (runs < 1) throw std::domain_error("BranchConfig: runs must be >= 1");
  clamp_unit_interval(q);
  if (q_exact) {
    if (*q_exact < 0 || *q_exact > 1) {
      throw std::domain_error("BranchConfig: q_exact must lie in [0, 1]");
    }
    if (std::abs(q_exact->convert_to<double>() - q) > 1e-9) {
      throw std::domain_error("BranchConfig: q_exact disagrees with q");
    }
  }
}

bool BranchConfig::exact() const {
  return mode == BranchMode::naive || q_exact.has_value();
}

std::pair<double, double> branch_once(double multiplicity, double q) {
  if (!(multiplicity >= 0.0) || !std::isfinite(multiplicity)) {
    throw std::domain_error("branch_once: multiplicity must be >= 0");
  }
  const BranchWeights w = branch_weights(q);
  return {multiplicity * w.f, multiplicity * w.g};
}

HistoryTally enumerate_tree(const BranchConfig& config) {
  config.validate();
  if (config.runs > kMaxEnumerationRuns) {
    throw std::domain_error("enumerate_tree: runs exceeds the 2^N bound (" +
                            std::to_string(kMaxEnumerationRuns) + ")");
  }
  const int n = config.runs;

  if (config.exact()) {
    BigInt plus_num(1), minus_num(1), den(1);
    if (config.mode == BranchMode::weighted) {
      const BigInt a = boost::multiprecision::numerator(*config.q_exact);
      const BigInt b = boost::multiprecision::denominator(*config.q_exact);
      plus_num = 2 * a;        // f = 2a/b
      minus_num = 2 * (b - a);  // g = 2(b-a)/b
      den = b;
    }
    std::vector<BigInt> sums(static_cast<std::size_t>(n) + 1);
    walk_exact(0, n, 0, BigInt(1), plus_num, minus_num, sums);
    const BigInt den_n = den == 1 ? BigInt(1) : boost::multiprecision::pow(
                                                    den, static_cast<unsigned>(n));
    std::vector<BigRational> counts(sums.size());
    for (std::size_t p = 0; p < sums.size(); ++p) {
      counts[p] = BigRational(sums[p], den_n);
    }
    return tally_from_exact(n, std::move(counts));
  }

  const BranchWeights w = branch_weights(config.q);
  const double f = config.mode == BranchMode::naive ? 1.0 : w.f;
  const double g = config.mode == BranchMode::naive ? 1.0 : w.g;
  std::vector<KahanSum> sums(static_cast<std::size_t>(n) + 1);
  walk_float(0, n, 0, 1.0, f, g, sums);
  std::vector<double> counts(sums.size());
  for (std::size_t p = 0; p < sums.size(); ++p) counts[p] = sums[p].value();
  return tally_from_float(n, std::move(counts));
}

HistoryTally closed_form(const BranchConfig& config) {
  config.validate();
  const int n = config.runs;

  if (config.mode == BranchMode::naive) {
    std::vector<BigRational> counts(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
      counts[static_cast<std::size_t>(p)] = BigRational(binomial(n, p));
    }
    return tally_from_exact(n, std::move(counts));
  }

  if (config.q_exact) {
    const BigRational f = BigRational(2) * *config.q_exact;
    const BigRational g = BigRational(2) - f;
    std::vector<BigRational> counts(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
      counts[static_cast<std::size_t>(p)] = BigRational(binomial(n, p)) *
                                            rational_pow(f, p) *
                                            rational_pow(g, n - p);
    }
    return tally_from_exact(n, std::move(counts));
  }

  const BranchWeights w = branch_weights(config.q);
  std::vector<double> counts(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) {
    counts[static_cast<std::size_t>(p)] =
        binomial(n, p).convert_to<double>() * dpow(w.f, p) * dpow(w.g, n - p);
  }
  return tally_from_float(n, std::move(counts));
}

int peak(const BranchConfig& config) {
  const HistoryTally tally = closed_form(config);
  std::size_t best = 0;
  if (tally.exact()) {
    for (std::size_t p = 1; p < tally.counts_exact.size(); ++p) {
      if (tally.counts_exact[p] > tally.counts_exact[best]) best = p;
    }
  } else {
    for (std::size_t p = 1; p < tally.counts.size(); ++p) {
      if (tally.counts[p] > tally.counts[best]) best = p;
    }
  }
  return static_cast<int>(best);
}

std::vector<ObserverHistory> sample_histories(const BranchConfig& config,
                                              std::int64_t count,
                                              std::uint64_t seed,
                                              bool uniform_naive_contrast) {
  config.validate();
  if (count < 1) {
    throw std::domain_error("sample_histories: count must be >= 1");
  }
  double q = config.q;
  if (config.mode == BranchMode::naive) {
    if (!uniform_naive_contrast) {
      throw std::domain_error(
          "sample_histories: naive mode weights all histories equally; "
          "uniform sampling is available only as an explicit contrast");
    }
    q = 0.5;  // uniform over the 2^N histories
  }

  std::vector<ObserverHistory> histories;
  histories.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    ObserverHistory h;
    h.outcomes.resize(static_cast<std::size_t>(config.runs));
    for (int r = 0; r < config.runs; ++r) {
      const bool plus = rng.bernoulli(q);
      h.outcomes[static_cast<std::size_t>(r)] = plus ? '+' : '-';
      h.plus_count += plus ? 1 : 0;
    }
    histories.push_back(std::move(h));
  }
  return histories;
}

}  // namespace bornsim
