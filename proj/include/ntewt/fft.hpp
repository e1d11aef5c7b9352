#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace ntewt {

using cplx = std::complex<double>;

namespace detail {
struct FftTables;
}

// Forward/inverse discrete Fourier transform for any length n >= 1.
// Conventions:
//   forward:  X[k] = sum_j x[j] * exp(-2*pi*i*j*k/n)
//   inverse:  x[j] = (1/n) * sum_k X[k] * exp(+2*pi*i*k*j/n)
//
// Power-of-two lengths use an iterative radix-2 transform; other lengths
// go through Bluestein's chirp-z reduction to a padded power of two.
// Twiddle/chirp tables are cached per length and shared between instances;
// each Fft object carries its own scratch, so use one instance per thread.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::span<const cplx> in, std::span<cplx> out);
  void inverse(std::span<const cplx> in, std::span<cplx> out);

 private:
  void pow2_transform(cplx* data, bool invert) const;
  void bluestein(std::span<const cplx> in, std::span<cplx> out, bool invert);

  std::size_t n_;
  std::shared_ptr<const detail::FftTables> tables_;
  std::vector<cplx> work_a_, work_b_;
};

// Convenience one-shot transforms.
std::vector<cplx> dft(std::span<const double> x);
std::vector<cplx> dft(std::span<const cplx> x);
std::vector<cplx> idft(std::span<const cplx> x);

}  // namespace ntewt
