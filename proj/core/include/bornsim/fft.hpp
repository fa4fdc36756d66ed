#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bornsim {

bool is_power_of_two(std::size_t n);

// Radix-2 in-place FFT with precomputed twiddles and bit-reversal table.
// Grid sizes in this project are powers of two by construction. Distinct
// instances share nothing, so transforms may run concurrently.
class Fft {
 public:
  // n must be a power of two (n >= 1); throws std::domain_error otherwise.
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::complex<double>* data) const;
  // Scaled by 1/n so that inverse(forward(x)) == x up to roundoff.
  void inverse(std::complex<double>* data) const;

 private:
  void transform(std::complex<double>* data, bool inverse) const;

  std::size_t n_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;  // exp(-2 pi i k/n), k < n/2
};

}  // namespace bornsim
