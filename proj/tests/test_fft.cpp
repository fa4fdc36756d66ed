#include "bornsim/fft.hpp"

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace bornsim;
using cd = std::complex<double>;

namespace {

std::vector<cd> random_signal(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

}  // namespace

TEST_CASE("forward transform matches the naive DFT") {
  for (std::size_t n : {std::size_t{16}, std::size_t{64}, std::size_t{256}}) {
    std::vector<cd> signal = random_signal(n, 1234 + static_cast<unsigned>(n));
    const std::vector<cd> expected = oracle::naive_dft(signal);
    Fft fft(n);
    fft.forward(signal.data());
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(signal[k] - expected[k]) < 1e-11);
    }
  }
}

TEST_CASE("inverse undoes forward") {
  std::vector<cd> signal = random_signal(1024, 42);
  const std::vector<cd> original = signal;
  Fft fft(1024);
  fft.forward(signal.data());
  fft.inverse(signal.data());
  for (std::size_t j = 0; j < signal.size(); ++j) {
    CHECK(std::abs(signal[j] - original[j]) < 1e-13);
  }
}

TEST_CASE("Parseval: norm preserved up to the 1/n scaling") {
  std::vector<cd> signal = random_signal(512, 5);
  double before = 0.0;
  for (const cd& x : signal) before += std::norm(x);
  Fft fft(512);
  fft.forward(signal.data());
  double after = 0.0;
  for (const cd& x : signal) after += std::norm(x);
  CHECK(after / 512.0 == doctest::Approx(before).epsilon(1e-13));
}

TEST_CASE("rejects sizes that are not powers of two") {
  CHECK_THROWS_AS(Fft(20), std::domain_error);
  CHECK_THROWS_AS(Fft(0), std::domain_error);
  CHECK(is_power_of_two(1));
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(1000));
}
