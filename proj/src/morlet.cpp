#include "ntewt/morlet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ntewt {

void WaveletParams::validate() const {
  if (!(sigma > 0.0)) throw std::invalid_argument("WaveletParams: sigma must be > 0");
  if (!(omega_psi > 0.0)) {
    throw std::invalid_argument("WaveletParams: omega_psi must be > 0");
  }
  // admissibility proxy: the one-sided spectrum must be negligible at w = 0
  const double at_zero = std::exp(-sigma * sigma * omega_psi * omega_psi / 2.0);
  if (!(at_zero < 1e-3)) {
    throw std::invalid_argument(
        "WaveletParams: sigma*omega_psi too small, wavelet not numerically "
        "admissible");
  }
}

double morlet_peak_value(const WaveletParams& p) {
  return std::pow(4.0 * std::numbers::pi * p.sigma * p.sigma, 0.25);
}

void morlet_spectrum(const WaveletParams& p, double a,
                     std::span<const double> omegas, std::span<double> out) {
  if (!(a > 0.0)) throw std::invalid_argument("morlet_spectrum: a must be > 0");
  const double amp = morlet_peak_value(p);
  const double s2 = p.sigma * p.sigma;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double d = a * omegas[i] - p.omega_psi;
    out[i] = amp * std::exp(-0.5 * s2 * d * d);
  }
}

std::vector<double> morlet_spectrum(const WaveletParams& p, double a,
                                    std::span<const double> omegas) {
  std::vector<double> out(omegas.size());
  morlet_spectrum(p, a, omegas, out);
  return out;
}

void morlet_spectrum_derivative(const WaveletParams& p, double a,
                                std::span<const double> omegas,
                                std::span<double> out) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("morlet_spectrum_derivative: a must be > 0");
  }
  const double amp = morlet_peak_value(p);
  const double s2 = p.sigma * p.sigma;
  const double factor = p.sigma5_derivative ? s2 * s2 * p.sigma : s2;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double d = a * omegas[i] - p.omega_psi;
    const double psi = amp * std::exp(-0.5 * s2 * d * d);
    out[i] = -a * factor * d * psi;
  }
}

std::vector<double> morlet_spectrum_derivative(const WaveletParams& p,
                                               double a,
                                               std::span<const double> omegas) {
  std::vector<double> out(omegas.size());
  morlet_spectrum_derivative(p, a, omegas, out);
  return out;
}

}  // namespace ntewt
