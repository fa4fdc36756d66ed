#pragma once

#include <stdexcept>
#include <string>

namespace bornsim {

// Failure of the spectral solver to produce a trustworthy state: an
// under-resolved initial packet, or a packet drifting too close to the
// periodic boundary. Kept distinct from std::domain_error (bad arguments)
// so front ends can map the two classes to different exit codes.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bornsim
