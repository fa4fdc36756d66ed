#include "bornsim/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bornsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Fft::Fft(std::size_t n) : n_(n), bitrev_(n) {
  if (!is_power_of_two(n)) {
    throw std::domain_error("Fft: size must be a power of two");
  }
  int log2n = 0;
  while ((std::size_t{1} << log2n) < n_) ++log2n;
  for (std::size_t i = 0; i < n_; ++i) {
    bitrev_[i] = (bitrev_[i >> 1] >> 1) | ((i & 1) << (log2n - 1));
  }
  twiddle_.resize(n_ / 2);
  for (std::size_t k = 0; k < n_ / 2; ++k) {
    const double phase = -kTwoPi * static_cast<double>(k) / static_cast<double>(n_);
    twiddle_[k] = {std::cos(phase), std::sin(phase)};
  }
}

void Fft::transform(std::complex<double>* a, bool inverse) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (i < bitrev_[i]) std::swap(a[i], a[bitrev_[i]]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t stride = n_ / len;
    for (std::size_t block = 0; block < n_; block += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> w = twiddle_[j * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = a[block + j];
        const std::complex<double> v = a[block + j + len / 2] * w;
        a[block + j] = u + v;
        a[block + j + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) a[i] *= scale;
  }
}

void Fft::forward(std::complex<double>* data) const { transform(data, false); }

void Fft::inverse(std::complex<double>* data) const { transform(data, true); }

}  // namespace bornsim
