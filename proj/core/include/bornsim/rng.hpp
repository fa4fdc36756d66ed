#pragma once

#include <cstdint>

namespace bornsim {

// splitmix64 (Steele, Lea & Flood). Small, fast, and good enough for
// Bernoulli sampling; unlike std::bernoulli_distribution its output is
// identical on every platform for a fixed seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

// Seed of the index-th stream derived from a master seed. Streams are
// independent of evaluation order, so consumers may draw them serially or
// partition them across workers and get the same result.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return g.next();
}

}  // namespace bornsim
