#pragma once

namespace bornsim::cli {

// Process exit contract, asserted by the integration tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;  // bad flags, config file, ranges
inline constexpr int kExitSolverError = 3;  // resolution / boundary failures
inline constexpr int kExitSelfCheckFailed = 4;

}  // namespace bornsim::cli
