#include "ntewt/reassign.hpp"

#include <cmath>
#include <stdexcept>

#include "ntewt/kernels.hpp"

namespace ntewt {

void NtewtConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("NtewtConfig: epsilon must be > 0");
  if (!(magnitude_guard > 0.0) || !(denom_guard > 0.0)) {
    throw std::invalid_argument("NtewtConfig: guards must be > 0");
  }
}

namespace {

void check_dims(const Tfr& a, const Tfr& b, const char* what) {
  if (a.n() != b.n() || a.rows() != b.rows()) {
    throw std::invalid_argument(std::string(what) + ": TFR dimension mismatch");
  }
}

double row_peak_sq(const cplx* row, std::size_t n) {
  double peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    peak = std::max(peak, std::norm(row[j]));
  }
  return peak;
}

}  // namespace

ComplexTimeField complex_time_operator(const Tfr& w, const Tfr& w_tpsi,
                                       const NtewtConfig& cfg) {
  check_dims(w, w_tpsi, "complex_time_operator");
  cfg.validate();
  const ScaleGrid& grid = w.grid();
  const std::size_t n = grid.n;

  ComplexTimeField field;
  field.n = n;
  field.rows = w.rows();
  field.t.assign(n * field.rows, cplx(0.0, 0.0));
  field.valid.assign(n * field.rows, 0);

  for (std::size_t k = 0; k < field.rows; ++k) {
    const cplx* wr = w.row(k);
    const cplx* wt = w_tpsi.row(k);
    const double floor_sq =
        row_peak_sq(wr, n) * cfg.magnitude_guard * cfg.magnitude_guard;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t idx = k * n + j;
      if (std::norm(wr[j]) > floor_sq && std::norm(wr[j]) > 0.0) {
        field.t[idx] = grid.b[j] + grid.a[k] * wt[j] / wr[j];
        field.valid[idx] = 1;
      } else {
        field.t[idx] = cplx(grid.b[j], 0.0);
      }
    }
  }
  return field;
}

FixedPointField newton_gd(const ComplexTimeField& t_tilde, const Tfr& db_w,
                          const Tfr& db_w_tpsi, const Tfr& w,
                          const Tfr& w_tpsi, const NtewtConfig& cfg) {
  check_dims(w, w_tpsi, "newton_gd");
  check_dims(w, db_w, "newton_gd");
  check_dims(w, db_w_tpsi, "newton_gd");
  cfg.validate();
  const ScaleGrid& grid = w.grid();
  const std::size_t n = grid.n;
  if (t_tilde.n != n || t_tilde.rows != w.rows()) {
    throw std::invalid_argument("newton_gd: time field dimension mismatch");
  }

  FixedPointField field;
  field.n = n;
  field.rows = w.rows();
  field.metric.assign(n * field.rows, 0.0);
  field.valid.assign(n * field.rows, 0);

  for (std::size_t k = 0; k < field.rows; ++k) {
    const cplx* wr = w.row(k);
    const cplx* wt = w_tpsi.row(k);
    const cplx* dwr = db_w.row(k);
    const cplx* dwt = db_w_tpsi.row(k);
    const double a = grid.a[k];
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t idx = k * n + j;
      if (!t_tilde.valid[idx]) continue;
      const cplx w2 = wr[j] * wr[j];
      // 1 - d_b t~ reduces to -a*(dbWTpsi*W - WTpsi*dbW)/W^2. A vanishing
      // denominator (stationary content) makes the Newton step diverge: the
      // clamp yields a finite, very large metric instead of an undefined one,
      // so the point stays comparable under any threshold.
      cplx denom = -a * (dwt[j] * wr[j] - wt[j] * dwr[j]) / w2;
      if (std::abs(denom) < cfg.denom_guard) denom = cplx(cfg.denom_guard, 0.0);
      const cplx diff_tilde = grid.b[j] - t_tilde.t[idx];
      const cplx t_bar = grid.b[j] - diff_tilde / denom;
      const cplx diff = grid.b[j] - t_bar;
      field.metric[idx] =
          cfg.real_part_metric ? std::abs(diff.real()) : std::abs(diff);
      field.valid[idx] = 1;
    }
  }
  return field;
}

Tfr reassign(const Tfr& w, const FixedPointField& field,
             const NtewtConfig& cfg) {
  cfg.validate();
  const std::size_t n = w.n();
  if (field.n != n || field.rows != w.rows()) {
    throw std::invalid_argument("reassign: field dimension mismatch");
  }
  const auto& ops = kernels::active();

  Tfr nte(TfrKind::NTe, w.grid());
  for (std::size_t k = 0; k < w.rows(); ++k) {
    const cplx* wr = w.row(k);
    cplx* out = nte.row(k);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t idx = k * n + j;
      if (field.valid[idx] && field.metric[idx] < cfg.epsilon) {
        out[j] = wr[j];
      }
    }
    const double kept_sq = ops.sumsq(out, n);
    if (kept_sq > 0.0) {
      const double w_sq = ops.sumsq(wr, n);
      ops.scale(out, std::sqrt(w_sq / kept_sq), n);
    }
  }
  return nte;
}

std::vector<double> export_fixed_point_log(const FixedPointField& field,
                                           double invalid_cap) {
  std::vector<double> out(field.metric.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!field.valid[i]) {
      out[i] = invalid_cap;
    } else {
      out[i] = std::log10(std::max(field.metric[i], 1e-300));
    }
  }
  return out;
}

}  // namespace ntewt
