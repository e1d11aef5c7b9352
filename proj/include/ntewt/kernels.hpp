#pragma once

#include <complex>
#include <cstddef>

// Inner-loop primitives shared by the transform and filter paths.
// A scalar reference implementation always exists; on x86 an AVX2 variant
// is selected at runtime when the CPU supports it. All variants satisfy
// the same contracts and are equivalence-tested against the scalar ones.

namespace ntewt::kernels {

using cplx = std::complex<double>;

struct Ops {
  const char* name;

  // out[i] = x[i] * r[i]
  void (*cmul_real)(const cplx* x, const double* r, cplx* out, std::size_t n);

  // out[i] = i * x[i] * r[i]  (multiply by r, rotate by +90 degrees)
  void (*cmul_real_rot90)(const cplx* x, const double* r, cplx* out,
                          std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);

  // sum of |x[i]|^2
  double (*sumsq)(const cplx* x, std::size_t n);

  // sum of a[i] * b[i]
  double (*dot_real)(const double* a, const double* b, std::size_t n);

  // x[i] *= s
  void (*scale)(cplx* x, double s, std::size_t n);
};

const Ops& scalar();

// AVX2 variant; returns nullptr when not compiled in or not supported by
// the running CPU.
const Ops* avx2();

// NEON variant (aarch64 builds only).
const Ops* neon();

// The variant chosen at startup (best available). Overridable for tests
// and for reference timing runs.
const Ops& active();
void set_active(const Ops& ops);

}  // namespace ntewt::kernels
