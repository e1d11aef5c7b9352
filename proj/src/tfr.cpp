#include "ntewt/tfr.hpp"

#include <numbers>
#include <stdexcept>

namespace ntewt {

ScaleGrid::ScaleGrid(std::size_t n_, double omega_psi_, double sample_rate_)
    : n(n_), sample_rate(sample_rate_), omega_psi(omega_psi_) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("ScaleGrid: n must be even and >= 4");
  }
  const std::size_t half = n / 2;
  a.resize(half);
  center_freq_hz.resize(half);
  for (std::size_t k = 0; k < half; ++k) {
    a[k] = 1.0 / double(k + 1);
    center_freq_hz[k] = double(k + 1) * omega_psi /
                        (2.0 * std::numbers::pi) * (sample_rate / double(n));
  }
  b.resize(n);
  omega.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    b[j] = double(j) / double(n);
    omega[j] = 2.0 * std::numbers::pi * double(j);
  }
}

}  // namespace ntewt
