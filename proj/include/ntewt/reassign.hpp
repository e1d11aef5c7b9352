#pragma once

#include <cstdint>
#include <vector>

#include "ntewt/tfr.hpp"

namespace ntewt {

struct NtewtConfig {
  // reassignment tolerance in normalized time units
  double epsilon = 1e-3;
  // relative floor for |W| (fraction of the row peak) below which the time
  // operator is not evaluated
  double magnitude_guard = 1e-12;
  // absolute floor for |1 - d_b t~|; smaller denominators are clamped here
  // so stationary content gets a huge-but-finite metric instead of a
  // divergent Newton step
  double denom_guard = 1e-8;
  // test the fixed-point condition on Re(b - t_bar) instead of the complex
  // modulus
  bool real_part_metric = false;
  // filter accumulation uses the pre-rescaling W coefficient instead of the
  // renormalized NTe coefficient
  bool raw_accumulation = false;

  void validate() const;
};

// Complex time operator t~[j,k] with a validity mask for guarded points.
struct ComplexTimeField {
  std::size_t n = 0;
  std::size_t rows = 0;
  std::vector<cplx> t;            // scale-major, like Tfr
  std::vector<std::uint8_t> valid;

  cplx& at(std::size_t j, std::size_t k) { return t[k * n + j]; }
  const cplx& at(std::size_t j, std::size_t k) const { return t[k * n + j]; }
};

// |b[j] - t_bar[j,k]| plus validity; invalid points are never selected as
// fixed points.
struct FixedPointField {
  std::size_t n = 0;
  std::size_t rows = 0;
  std::vector<double> metric;
  std::vector<std::uint8_t> valid;

  double& at(std::size_t j, std::size_t k) { return metric[k * n + j]; }
  const double& at(std::size_t j, std::size_t k) const {
    return metric[k * n + j];
  }
};

// t~[j,k] = b[j] + a[k] * WTpsi[j,k]/W[j,k] where |W| clears the magnitude
// guard; guarded points are flagged invalid, never thrown.
ComplexTimeField complex_time_operator(const Tfr& w, const Tfr& w_tpsi,
                                       const NtewtConfig& cfg);

// Newton group-delay estimator:
//   d_b t~ = 1 + a * ((DbWTpsi)*W - WTpsi*(DbW)) / W^2
//   t_bar  = b - (b - t~)/(1 - d_b t~)
// metric = |b[j] - t_bar[j,k]| (complex modulus, or |Re| with
// cfg.real_part_metric).
FixedPointField newton_gd(const ComplexTimeField& t_tilde, const Tfr& db_w,
                          const Tfr& db_w_tpsi, const Tfr& w,
                          const Tfr& w_tpsi, const NtewtConfig& cfg);

// NTe[j,k] = W[j,k] where valid and metric < epsilon, else 0; each row with
// surviving points is then rescaled so its two-norm matches the W row.
Tfr reassign(const Tfr& w, const FixedPointField& field,
             const NtewtConfig& cfg);

// log10 of the metric with invalid points mapped to the sentinel cap.
std::vector<double> export_fixed_point_log(const FixedPointField& field,
                                           double invalid_cap = 6.0);

}  // namespace ntewt
