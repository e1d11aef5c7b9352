#include "ntewt/kernels.hpp"

namespace ntewt::kernels {

namespace {

void cmul_real_scalar(const cplx* x, const double* r, cplx* out,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = cplx(x[i].real() * r[i], x[i].imag() * r[i]);
  }
}

void cmul_real_rot90_scalar(const cplx* x, const double* r, cplx* out,
                            std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = cplx(-x[i].imag() * r[i], x[i].real() * r[i]);
  }
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

double sumsq_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

double dot_real_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scale_scalar(cplx* x, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= s;
}

}  // namespace

const Ops& scalar() {
  static const Ops ops = {
      "scalar",         cmul_real_scalar, cmul_real_rot90_scalar,
      axpy_scalar,      sumsq_scalar,     dot_real_scalar,
      scale_scalar,
  };
  return ops;
}

}  // namespace ntewt::kernels
