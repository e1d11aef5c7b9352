#include "ntewt/filter.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "ntewt/fft.hpp"
#include "ntewt/kernels.hpp"
#include "ntewt/morlet.hpp"

namespace ntewt {

namespace {

// Per-thread scratch for the fused row pipeline.
struct RowWorkspace {
  explicit RowWorkspace(std::size_t n)
      : fft(n), psi(n), dpsi(n), kern(n), spec(n), row_w(n), row_wt(n),
        row_dbw(n), row_dbwt(n), atom(n), nte_row(n), acc(n) {}

  Fft fft;
  std::vector<double> psi, dpsi, kern;
  std::vector<cplx> spec, row_w, row_wt, row_dbw, row_dbwt, atom, nte_row;
  std::vector<cplx> acc;  // partial filtered signal, complex
};

// Processes scale row k: fills ws.nte_row and, when accumulate is set, adds
// the row's reconstruction contribution into ws.acc. Returns the number of
// surviving points.
std::size_t process_row(const ScaleGrid& grid, const WaveletParams& params,
                        const NtewtConfig& cfg, const std::vector<cplx>& xhat,
                        std::size_t k, bool accumulate, RowWorkspace& ws) {
  const std::size_t n = grid.n;
  const double a = grid.a[k];
  const auto& ops = kernels::active();

  // sampled wavelet spectrum and its frequency derivative
  morlet_spectrum(params, a, grid.omega, ws.psi);
  const double s2 = params.sigma * params.sigma;
  const double dfac =
      params.sigma5_derivative ? s2 * s2 * params.sigma : s2;
  for (std::size_t l = 0; l < n; ++l) {
    ws.dpsi[l] = -a * dfac * (a * grid.omega[l] - params.omega_psi) * ws.psi[l];
  }

  ops.cmul_real(xhat.data(), ws.psi.data(), ws.spec.data(), n);
  ws.fft.inverse(ws.spec, ws.row_w);

  ops.cmul_real_rot90(xhat.data(), ws.dpsi.data(), ws.spec.data(), n);
  ws.fft.inverse(ws.spec, ws.row_wt);

  for (std::size_t l = 0; l < n; ++l) ws.kern[l] = grid.omega[l] * ws.psi[l];
  ops.cmul_real_rot90(xhat.data(), ws.kern.data(), ws.spec.data(), n);
  ws.fft.inverse(ws.spec, ws.row_dbw);

  for (std::size_t l = 0; l < n; ++l) ws.kern[l] = -grid.omega[l] * ws.dpsi[l];
  ops.cmul_real(xhat.data(), ws.kern.data(), ws.spec.data(), n);
  ws.fft.inverse(ws.spec, ws.row_dbwt);

  double peak_sq = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    peak_sq = std::max(peak_sq, std::norm(ws.row_w[j]));
  }
  const double floor_sq = peak_sq * cfg.magnitude_guard * cfg.magnitude_guard;

  std::fill(ws.nte_row.begin(), ws.nte_row.end(), cplx(0.0, 0.0));
  std::size_t survivors = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double mag_sq = std::norm(ws.row_w[j]);
    if (!(mag_sq > floor_sq) || !(mag_sq > 0.0)) continue;
    // kept operation-for-operation identical to the unfused
    // complex_time_operator/newton_gd path
    const cplx w = ws.row_w[j];
    const cplx t_tilde = grid.b[j] + a * ws.row_wt[j] / w;
    const cplx w2 = w * w;
    cplx denom =
        -a * (ws.row_dbwt[j] * w - ws.row_wt[j] * ws.row_dbw[j]) / w2;
    if (std::abs(denom) < cfg.denom_guard) denom = cplx(cfg.denom_guard, 0.0);
    const cplx diff_tilde = grid.b[j] - t_tilde;
    const cplx t_bar = grid.b[j] - diff_tilde / denom;
    const cplx diff = grid.b[j] - t_bar;
    const double metric =
        cfg.real_part_metric ? std::abs(diff.real()) : std::abs(diff);
    if (metric < cfg.epsilon) {
      ws.nte_row[j] = w;
      ++survivors;
    }
  }

  if (survivors > 0) {
    const double kept_sq = ops.sumsq(ws.nte_row.data(), n);
    const double w_sq = ops.sumsq(ws.row_w.data(), n);
    ops.scale(ws.nte_row.data(), std::sqrt(w_sq / kept_sq), n);
  }

  if (accumulate && survivors > 0) {
    // the coefficient row convolved with the row wavelet: one FFT pair per
    // row, matching the staged reconstruction arithmetic exactly
    if (cfg.raw_accumulation) {
      for (std::size_t j = 0; j < n; ++j) {
        ws.atom[j] = ws.nte_row[j] == cplx(0.0, 0.0) ? cplx(0.0, 0.0)
                                                     : ws.row_w[j];
      }
      ws.fft.forward(ws.atom, ws.spec);
    } else {
      ws.fft.forward(ws.nte_row, ws.spec);
    }
    ops.cmul_real(ws.spec.data(), ws.psi.data(), ws.spec.data(), n);
    ws.fft.inverse(ws.spec, ws.atom);
    ops.axpy(cplx(a, 0.0), ws.atom.data(), ws.acc.data(), n);
  }
  return survivors;
}

struct PipelineResult {
  std::vector<cplx> acc;
  std::vector<std::size_t> survivors;
  Tfr nte;  // filled only when keep_tfr
};

PipelineResult run_pipeline(const Signal& x, const WaveletParams& params,
                            const NtewtConfig& cfg, bool parallel,
                            bool accumulate, bool keep_tfr) {
  x.validate();
  params.validate();
  cfg.validate();
  ScaleGrid grid(x.size(), params.omega_psi, x.sample_rate);
  const std::size_t n = grid.n;
  const std::size_t rows = grid.rows();

  std::vector<cplx> xhat = dft(std::span<const double>(x.samples));

  PipelineResult res;
  res.survivors.assign(rows, 0);
  if (keep_tfr) res.nte = Tfr(TfrKind::NTe, grid);

  std::size_t nthreads =
      parallel ? std::min<std::size_t>(std::thread::hardware_concurrency(),
                                       rows)
               : 1;
  if (nthreads <= 1) {
    RowWorkspace ws(n);
    std::fill(ws.acc.begin(), ws.acc.end(), cplx(0.0, 0.0));
    for (std::size_t k = 0; k < rows; ++k) {
      res.survivors[k] =
          process_row(grid, params, cfg, xhat, k, accumulate, ws);
      if (keep_tfr) {
        std::copy(ws.nte_row.begin(), ws.nte_row.end(), res.nte.row(k));
      }
    }
    res.acc = std::move(ws.acc);
  } else {
    // Each row writes its own partial; the reduction below runs in row
    // order, so the result does not depend on thread scheduling.
    std::vector<std::vector<cplx>> partials(
        accumulate ? rows : 0, std::vector<cplx>());
    std::vector<std::thread> pool;
    const std::size_t chunk = (rows + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(rows, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        RowWorkspace ws(n);
        for (std::size_t k = lo; k < hi; ++k) {
          std::fill(ws.acc.begin(), ws.acc.end(), cplx(0.0, 0.0));
          res.survivors[k] =
              process_row(grid, params, cfg, xhat, k, accumulate, ws);
          if (keep_tfr) {
            std::copy(ws.nte_row.begin(), ws.nte_row.end(), res.nte.row(k));
          }
          if (accumulate && res.survivors[k] > 0) partials[k] = ws.acc;
        }
      });
    }
    for (auto& th : pool) th.join();
    res.acc.assign(n, cplx(0.0, 0.0));
    if (accumulate) {
      const auto& ops = kernels::active();
      for (std::size_t k = 0; k < rows; ++k) {
        if (partials[k].empty()) continue;
        ops.axpy(cplx(1.0, 0.0), partials[k].data(), res.acc.data(), n);
      }
    }
  }
  return res;
}

}  // namespace

FilterResult ntewt_filter(const Signal& x, const WaveletParams& params,
                          const NtewtConfig& cfg, const FilterOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  PipelineResult pipe = run_pipeline(x, params, cfg, opts.parallel,
                                     /*accumulate=*/true, opts.keep_tfr);
  FilterResult result;
  result.filtered.sample_rate = x.sample_rate;
  result.filtered.samples.resize(x.size());
  for (std::size_t l = 0; l < x.size(); ++l) {
    result.filtered.samples[l] = 2.0 * pipe.acc[l].real();
  }
  result.row_survivors = std::move(pipe.survivors);
  if (opts.keep_tfr) result.nte = std::move(pipe.nte);
  result.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

Tfr ntewt_transform(const Signal& x, const WaveletParams& params,
                    const NtewtConfig& cfg, bool parallel) {
  PipelineResult pipe = run_pipeline(x, params, cfg, parallel,
                                     /*accumulate=*/false, /*keep_tfr=*/true);
  return std::move(pipe.nte);
}

}  // namespace ntewt
