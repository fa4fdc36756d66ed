#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bornsim/branch.hpp"
#include "bornsim/exact.hpp"
#include "bornsim/sg.hpp"

namespace bornsim::cli {

struct CommonOptions {
  std::string out_dir = ".";
  std::string format = "both";  // csv | json | both
  bool svg = false;
  std::uint64_t seed = 12345;
  // Consumed by the flat-config preprocessor before CLI parsing; kept here
  // so the option has a stable binding target.
  std::string config_path;
};

struct EvolveOptions {
  double theta = 1.5707963267948966;  // radians; the app layer converts
  double sigma0 = 0.5;
  SgParams params;
  int record_every = 10;  // grid steps between recorded rows
};

struct BranchOptions {
  int runs = 10;
  double q = 0.5;
  std::optional<BigRational> q_exact;
  BranchMode mode = BranchMode::weighted;
  bool enumerate = false;  // explicit tree walk instead of the closed form
};

struct CompareOptions {
  int runs = 10;
  double theta = 1.5707963267948966;
  std::int64_t samples = 0;  // 0 disables the Monte-Carlo section
};

struct EndToEndOptions {
  int runs = 10;
  double theta = 1.5707963267948966;
  double sigma0 = 0.5;
  SgParams params;
  std::int64_t samples = 100000;
  // Testing aid: bias added to the extracted weight before the self-check,
  // to exercise the failure exit path against a healthy solver.
  double selfcheck_fault = 0.0;
};

// Each command writes its files under out_dir and returns a process exit
// code. Argument and solver errors are reported by exception and mapped in
// the app layer.
int cmd_evolve(const EvolveOptions& opts, const CommonOptions& common);
int cmd_branch(const BranchOptions& opts, const CommonOptions& common);
int cmd_compare(const CompareOptions& opts, const CommonOptions& common);
int cmd_end_to_end(const EndToEndOptions& opts, const CommonOptions& common);

// "0.75" or "num/den" (exact, propagated through the counting as a
// rational). Throws std::domain_error on anything else or out of [0, 1].
void parse_branch_weight(const std::string& text, double& q,
                         std::optional<BigRational>& q_exact);

}  // namespace bornsim::cli
