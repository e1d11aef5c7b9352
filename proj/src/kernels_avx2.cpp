#include "ntewt/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#include <immintrin.h>

namespace ntewt::kernels {

namespace {

// Complex data is interleaved (re, im); one __m256d holds two complex values.

void cmul_real_avx2(const cplx* x, const double* r, cplx* out, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* od = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d rv = _mm256_loadu_pd(r + i);  // r0 r1 r2 r3
    __m256d rlo = _mm256_permute4x64_pd(rv, 0x50);  // r0 r0 r1 r1
    __m256d rhi = _mm256_permute4x64_pd(rv, 0xFA);  // r2 r2 r3 r3
    __m256d xlo = _mm256_loadu_pd(xd + 2 * i);
    __m256d xhi = _mm256_loadu_pd(xd + 2 * i + 4);
    _mm256_storeu_pd(od + 2 * i, _mm256_mul_pd(xlo, rlo));
    _mm256_storeu_pd(od + 2 * i + 4, _mm256_mul_pd(xhi, rhi));
  }
  for (; i < n; ++i) {
    out[i] = cplx(x[i].real() * r[i], x[i].imag() * r[i]);
  }
}

void cmul_real_rot90_avx2(const cplx* x, const double* r, cplx* out,
                          std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* od = reinterpret_cast<double*>(out);
  // negate lanes 0 and 2 (the real slots after the swap)
  const __m256d signs = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d rv = _mm256_loadu_pd(r + i);
    __m256d rlo = _mm256_permute4x64_pd(rv, 0x50);
    __m256d rhi = _mm256_permute4x64_pd(rv, 0xFA);
    __m256d xlo = _mm256_mul_pd(_mm256_loadu_pd(xd + 2 * i), rlo);
    __m256d xhi = _mm256_mul_pd(_mm256_loadu_pd(xd + 2 * i + 4), rhi);
    // (re, im) -> (-im, re)
    xlo = _mm256_xor_pd(_mm256_permute_pd(xlo, 0x5), signs);
    xhi = _mm256_xor_pd(_mm256_permute_pd(xhi, 0x5), signs);
    _mm256_storeu_pd(od + 2 * i, xlo);
    _mm256_storeu_pd(od + 2 * i + 4, xhi);
  }
  for (; i < n; ++i) {
    out[i] = cplx(-x[i].imag() * r[i], x[i].real() * r[i]);
  }
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d var = _mm256_set1_pd(alpha.real());
  const __m256d vai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d xs = _mm256_permute_pd(xv, 0x5);  // im re im re
    __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(var, xv),
                                    _mm256_mul_pd(vai, xs));
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] += cplx(alpha.real() * xr - alpha.imag() * xi,
                 alpha.real() * xi + alpha.imag() * xr);
  }
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sumsq_avx2(const cplx* x, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

double dot_real_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void scale_avx2(cplx* x, double s, std::size_t n) {
  double* xd = reinterpret_cast<double*>(x);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(xd + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(xd + 2 * i), vs));
  }
  for (; i < n; ++i) x[i] *= s;
}

}  // namespace

const Ops* avx2() {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) {
    return nullptr;
  }
  static const Ops ops = {
      "avx2",     cmul_real_avx2, cmul_real_rot90_avx2,
      axpy_avx2,  sumsq_avx2,     dot_real_avx2,
      scale_avx2,
  };
  return &ops;
}

}  // namespace ntewt::kernels

#else

namespace ntewt::kernels {
const Ops* avx2() { return nullptr; }
}  // namespace ntewt::kernels

#endif
