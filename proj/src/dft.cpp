#include "elaa/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace elaa {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<cdouble>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cdouble> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k)
    twiddle[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                     static_cast<double>(n));
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t block = 0; block < n; block += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cdouble u = a[block + k];
        const cdouble v = a[block + k + half] * twiddle[k * stride];
        a[block + k] = u + v;
        a[block + k + half] = u - v;
      }
    }
  }
}

std::vector<cdouble> dft_direct(std::span<const cdouble> x) {
  const std::size_t n = x.size();
  std::vector<cdouble> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cdouble acc{};
    for (std::size_t m = 0; m < n; ++m) {
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>((m * k) % n) / static_cast<double>(n);
      acc += x[m] * cdouble{std::cos(angle), std::sin(angle)};
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

std::vector<cdouble> unitary_dft(std::span<const cdouble> input) {
  if (input.empty()) throw std::invalid_argument("unitary_dft: empty input");
  std::vector<cdouble> out;
  if (is_pow2(input.size())) {
    out.assign(input.begin(), input.end());
    fft_pow2(out);
  } else {
    out = dft_direct(input);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(input.size()));
  for (cdouble& v : out) v *= scale;
  return out;
}

}  // namespace elaa
