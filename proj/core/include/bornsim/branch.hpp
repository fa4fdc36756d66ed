#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bornsim/exact.hpp"

namespace bornsim {

// Bookkeeping for repeated two-outcome measurements across the branching
// tree of observer copies.
//
// In naive mode every measurement doubles the number of universes with
// equal weight, so after N runs the number of observers whose history holds
// p plus outcomes is C(N, p). In weighted mode each measurement spawns
// f = 2q universes on the plus branch and g = 2 - f on the minus branch,
// giving
//
//     count(p) = C(N, p) f^p g^(N-p) = 2^N q^p (1-q)^(N-p) C(N, p)
//
// which is 2^N times the binomial law Bin(N, q): the distribution of
// histories peaks at the quantum weight q instead of at 1/2. Multiplicities
// are generally non-integer; when q is supplied as an exact rational the
// whole tally is kept in exact rational arithmetic so the defining
// identities (total == 2^N, tree == closed form) are checkable without
// tolerance.

enum class BranchMode { naive, weighted };

struct BranchConfig {
  int runs = 1;  // N, number of repetitions
  double q = 0.5;
  BranchMode mode = BranchMode::weighted;
  // When set, must agree with q to 1e-9; switches counting to exact
  // arithmetic.
  std::optional<BigRational> q_exact;

  void validate() const;
  // True when exact counts are available: naive mode always, weighted mode
  // only with q_exact.
  bool exact() const;
};

// Multiplicity per plus-count p = 0 .. runs. counts is always populated;
// counts_exact mirrors it on the exact path (and is otherwise empty).
// On the floating-point path counts are accumulated with compensated
// summation and the total is within 1e-9 relative of 2^runs.
struct HistoryTally {
  int runs = 0;
  std::vector<double> counts;
  std::vector<BigRational> counts_exact;
  double total = 0.0;
  BigRational total_exact;

  bool exact() const { return !counts_exact.empty(); }
};

// One measurement applied to `multiplicity` universes: returns the plus and
// minus multiplicities (multiplicity * 2q, multiplicity * 2(1-q)). Their sum
// is 2 * multiplicity.
std::pair<double, double> branch_once(double multiplicity, double q);

// Hard bound for explicit 2^N tree walks; closed_form has no such bound.
inline constexpr int kMaxEnumerationRuns = 24;

// Walks all 2^runs histories, multiplying f or g per step (1 and 1 in naive
// mode), and tallies by plus-count. Exact when config.exact().
HistoryTally enumerate_tree(const BranchConfig& config);

// Evaluates count(p) = C(N, p) f^p g^(N-p) for all p directly, with exact
// big-integer binomial coefficients.
HistoryTally closed_form(const BranchConfig& config);

// argmax_p count(p); ties (which occur exactly when (runs+1) q is an
// integer) break toward the smaller p. Always within 1 of runs * q.
int peak(const BranchConfig& config);

// The outcome string of one observer copy, e.g. "++-+-", with its
// plus-count.
struct ObserverHistory {
  std::string outcomes;
  int plus_count = 0;
};

// Draws observer histories with probability f^p g^(N-p) / 2^N each, i.e.
// runs independent Bernoulli(q) outcomes per history. Deterministic for a
// fixed seed, with one derived random stream per history so results do not
// depend on evaluation order. Requires weighted mode: naive counting gives
// every history equal weight, and sampling that is only meaningful as a
// uniform-contrast baseline, available by opting in.
std::vector<ObserverHistory> sample_histories(
    const BranchConfig& config, std::int64_t count, std::uint64_t seed,
    bool uniform_naive_contrast = false);

}  // namespace bornsim
