#include "ntewt/cwt.hpp"

#include <stdexcept>
#include <thread>

#include "ntewt/fft.hpp"
#include "ntewt/kernels.hpp"

namespace ntewt {

namespace {

// Fills the length-n frequency-domain product for one (kind, scale) row.
void row_spectrum(TfrKind kind, const WaveletParams& params,
                  const ScaleGrid& grid, std::size_t k,
                  const std::vector<cplx>& xhat, std::vector<double>& kernel,
                  std::vector<cplx>& out) {
  const std::size_t n = grid.n;
  const auto& ops = kernels::active();
  switch (kind) {
    case TfrKind::W:
      morlet_spectrum(params, grid.a[k], grid.omega, kernel);
      ops.cmul_real(xhat.data(), kernel.data(), out.data(), n);
      break;
    case TfrKind::WTpsi:
      morlet_spectrum_derivative(params, grid.a[k], grid.omega, kernel);
      ops.cmul_real_rot90(xhat.data(), kernel.data(), out.data(), n);
      break;
    case TfrKind::DbW:
      morlet_spectrum(params, grid.a[k], grid.omega, kernel);
      for (std::size_t l = 0; l < n; ++l) kernel[l] *= grid.omega[l];
      ops.cmul_real_rot90(xhat.data(), kernel.data(), out.data(), n);
      break;
    case TfrKind::DbWTpsi:
      morlet_spectrum_derivative(params, grid.a[k], grid.omega, kernel);
      for (std::size_t l = 0; l < n; ++l) kernel[l] *= -grid.omega[l];
      ops.cmul_real(xhat.data(), kernel.data(), out.data(), n);
      break;
    case TfrKind::NTe:
      throw std::logic_error("row_spectrum: NTe is not a computable kind");
  }
}

void compute_rows(Tfr& tfr, const WaveletParams& params,
                  const std::vector<cplx>& xhat, std::size_t k_begin,
                  std::size_t k_end) {
  const ScaleGrid& grid = tfr.grid();
  Fft fft(grid.n);
  std::vector<double> kernel(grid.n);
  std::vector<cplx> spec(grid.n);
  for (std::size_t k = k_begin; k < k_end; ++k) {
    row_spectrum(tfr.kind(), params, grid, k, xhat, kernel, spec);
    fft.inverse(spec, std::span<cplx>(tfr.row(k), grid.n));
  }
}

Tfr compute_kind(const Signal& x, const WaveletParams& params, TfrKind kind,
                 bool parallel) {
  x.validate();
  params.validate();
  if (x.size() < 4) {
    throw std::invalid_argument("compute TFR: need n >= 4");
  }
  ScaleGrid grid(x.size(), params.omega_psi, x.sample_rate);
  Tfr tfr(kind, std::move(grid));

  std::vector<cplx> xhat = dft(std::span<const double>(x.samples));

  const std::size_t rows = tfr.rows();
  std::size_t nthreads =
      parallel ? std::min<std::size_t>(std::thread::hardware_concurrency(),
                                       rows)
               : 1;
  if (nthreads <= 1) {
    compute_rows(tfr, params, xhat, 0, rows);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (rows + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(rows, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&tfr, &params, &xhat, lo, hi] {
        compute_rows(tfr, params, xhat, lo, hi);
      });
    }
    for (auto& th : pool) th.join();
  }
  return tfr;
}

}  // namespace

Tfr compute_w(const Signal& x, const WaveletParams& params, bool parallel) {
  return compute_kind(x, params, TfrKind::W, parallel);
}

Tfr compute_w_tpsi(const Signal& x, const WaveletParams& params,
                   bool parallel) {
  return compute_kind(x, params, TfrKind::WTpsi, parallel);
}

Tfr compute_db_w(const Signal& x, const WaveletParams& params, bool parallel) {
  return compute_kind(x, params, TfrKind::DbW, parallel);
}

Tfr compute_db_w_tpsi(const Signal& x, const WaveletParams& params,
                      bool parallel) {
  return compute_kind(x, params, TfrKind::DbWTpsi, parallel);
}

Signal reconstruct_from_cwt(const Tfr& tfr, const WaveletParams& params) {
  if (tfr.kind() != TfrKind::W && tfr.kind() != TfrKind::NTe) {
    throw std::invalid_argument(
        "reconstruct_from_cwt: only W and NTe TFRs are invertible here");
  }
  params.validate();
  const ScaleGrid& grid = tfr.grid();
  const std::size_t n = grid.n;
  const auto& ops = kernels::active();

  Fft fft(n);
  std::vector<double> kernel(n);
  std::vector<cplx> spec(n), conv(n), acc(n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < tfr.rows(); ++k) {
    fft.forward(std::span<const cplx>(tfr.row(k), n), spec);
    morlet_spectrum(params, grid.a[k], grid.omega, kernel);
    ops.cmul_real(spec.data(), kernel.data(), spec.data(), n);
    fft.inverse(spec, conv);
    ops.axpy(cplx(grid.a[k], 0.0), conv.data(), acc.data(), n);
  }

  Signal out;
  out.sample_rate = grid.sample_rate;
  out.samples.resize(n);
  for (std::size_t l = 0; l < n; ++l) out.samples[l] = 2.0 * acc[l].real();
  return out;
}

std::vector<cplx> wavelet_atom(const ScaleGrid& grid,
                               const WaveletParams& params, std::size_t j,
                               std::size_t k) {
  if (j >= grid.n || k >= grid.rows()) {
    throw std::invalid_argument("wavelet_atom: index out of range");
  }
  std::vector<double> kernel = morlet_spectrum(params, grid.a[k], grid.omega);
  std::vector<cplx> spec(grid.n);
  for (std::size_t l = 0; l < grid.n; ++l) spec[l] = cplx(kernel[l], 0.0);
  std::vector<cplx> base = idft(spec);
  if (j == 0) return base;
  std::vector<cplx> shifted(grid.n);
  for (std::size_t l = 0; l < grid.n; ++l) {
    shifted[l] = base[(l + grid.n - j) % grid.n];
  }
  return shifted;
}

}  // namespace ntewt
