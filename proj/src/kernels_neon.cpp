#include "ntewt/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>

namespace ntewt::kernels {

namespace {

// One float64x2_t holds a single complex value (re, im).

void cmul_real_neon(const cplx* x, const double* r, cplx* out, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* od = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t xv = vld1q_f64(xd + 2 * i);
    vst1q_f64(od + 2 * i, vmulq_n_f64(xv, r[i]));
  }
}

void cmul_real_rot90_neon(const cplx* x, const double* r, cplx* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = cplx(-x[i].imag() * r[i], x[i].real() * r[i]);
  }
}

void axpy_neon(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const float64x2_t var = vdupq_n_f64(alpha.real());
  const float64x2_t vai = vdupq_n_f64(alpha.imag());
  const float64x2_t signs = {-1.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t xv = vld1q_f64(xd + 2 * i);
    float64x2_t xs = vextq_f64(xv, xv, 1);  // im re
    float64x2_t prod =
        vfmaq_f64(vmulq_f64(vmulq_f64(vai, xs), signs), var, xv);
    vst1q_f64(yd + 2 * i, vaddq_f64(vld1q_f64(yd + 2 * i), prod));
  }
}

double sumsq_neon(const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t v = vld1q_f64(xd + 2 * i);
    acc = vfmaq_f64(acc, v, v);
  }
  return vaddvq_f64(acc);
}

double dot_real_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void scale_neon(cplx* x, double s, std::size_t n) {
  double* xd = reinterpret_cast<double*>(x);
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_f64(xd + 2 * i, vmulq_n_f64(vld1q_f64(xd + 2 * i), s));
  }
}

}  // namespace

const Ops* neon() {
  static const Ops ops = {
      "neon",     cmul_real_neon, cmul_real_rot90_neon,
      axpy_neon,  sumsq_neon,     dot_real_neon,
      scale_neon,
  };
  return &ops;
}

}  // namespace ntewt::kernels

#endif
