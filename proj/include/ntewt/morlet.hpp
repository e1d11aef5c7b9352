#pragma once

#include <span>
#include <vector>

namespace ntewt {

// Morlet wavelet defined in the frequency domain:
//   psi_hat(a*w) = (4*pi*sigma^2)^(1/4) * exp(-sigma^2*(a*w - omega_psi)^2/2)
struct WaveletParams {
  double sigma = 5.0;      // width
  double omega_psi = 6.0;  // central frequency, rad

  // Derivative convention. The analytically correct frequency derivative of
  // psi_hat carries a sigma^2 factor; the sigma^5 variant is kept behind this
  // switch for comparison runs (it only rescales the time operator's
  // numerator uniformly).
  bool sigma5_derivative = false;

  // Throws std::invalid_argument if sigma/omega_psi are out of range or the
  // sampled wavelet fails the numerical admissibility proxy
  // psi_hat(0) < 1e-3 * peak.
  void validate() const;
};

double morlet_peak_value(const WaveletParams& p);

// psi_hat evaluated at a*omegas[i].
void morlet_spectrum(const WaveletParams& p, double a,
                     std::span<const double> omegas, std::span<double> out);
std::vector<double> morlet_spectrum(const WaveletParams& p, double a,
                                    std::span<const double> omegas);

// d/dw psi_hat(a*w) evaluated at a*omegas[i]:
//   -a*sigma^2*(a*w - omega_psi)*psi_hat(a*w)
// (sigma^5 in place of sigma^2 when sigma5_derivative is set).
void morlet_spectrum_derivative(const WaveletParams& p, double a,
                                std::span<const double> omegas,
                                std::span<double> out);
std::vector<double> morlet_spectrum_derivative(const WaveletParams& p,
                                               double a,
                                               std::span<const double> omegas);

}  // namespace ntewt
