// Acceptance harness: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "ntewt/bench.hpp"
#include "ntewt/cwt.hpp"
#include "ntewt/detect.hpp"
#include "ntewt/fft.hpp"
#include "ntewt/filter.hpp"
#include "ntewt/io.hpp"
#include "ntewt/presets.hpp"

using ntewt::cplx;
using ntewt::NtewtConfig;
using ntewt::ScaleGrid;
using ntewt::Signal;
using ntewt::Tfr;
using ntewt::TfrKind;
using ntewt::WaveletParams;

namespace {

int g_failures = 0;

void report(int criterion, const char* what, bool ok, const char* detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              what, detail);
  if (!ok) ++g_failures;
}

std::vector<double> random_signal(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = dist(gen);
  return x;
}

double rel_err(std::span<const cplx> got, std::span<const cplx> want) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    num += std::norm(got[i] - want[i]);
    den += std::norm(want[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double rel_err(std::span<const double> got, std::span<const double> want) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double d = got[i] - want[i];
    num += d * d;
    den += want[i] * want[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= double(n);
  mb /= double(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

double energy(std::span<const double> x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

// ---------------------------------------------------------------------------
// Criterion 1: every TFR row matches a direct O(n^2) circular-correlation
// oracle built from a direct-summation inverse DFT of the row kernel.

std::vector<cplx> direct_idft(std::span<const cplx> x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double ang =
          2.0 * std::numbers::pi * double(j) * double(k) / double(n);
      out[j] += x[k] * cplx(std::cos(ang), std::sin(ang));
    }
    out[j] /= double(n);
  }
  return out;
}

Tfr tfr_oracle(const Signal& x, const WaveletParams& p, TfrKind kind) {
  const std::size_t n = x.size();
  ScaleGrid grid(n, p.omega_psi, x.sample_rate);
  Tfr out(kind, grid);
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    const double a = grid.a[k];
    auto psi = ntewt::morlet_spectrum(p, a, grid.omega);
    auto dpsi = ntewt::morlet_spectrum_derivative(p, a, grid.omega);
    std::vector<cplx> kernel(n);
    for (std::size_t l = 0; l < n; ++l) {
      switch (kind) {
        case TfrKind::W:
          kernel[l] = cplx(psi[l], 0.0);
          break;
        case TfrKind::WTpsi:
          kernel[l] = cplx(0.0, dpsi[l]);
          break;
        case TfrKind::DbW:
          kernel[l] = cplx(0.0, grid.omega[l] * psi[l]);
          break;
        default:  // DbWTpsi
          kernel[l] = cplx(-grid.omega[l] * dpsi[l], 0.0);
          break;
      }
    }
    // time-domain row kernel by direct summation, then direct circular
    // convolution with the input
    auto h = direct_idft(kernel);
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc(0.0, 0.0);
      for (std::size_t m = 0; m < n; ++m) {
        acc += x.samples[m] * h[(j + n - m) % n];
      }
      out.at(j, k) = acc;
    }
  }
  return out;
}

void criterion1() {
  double worst = 0.0;
  for (std::size_t n : {16u, 32u, 64u, 128u}) {
    Signal x;
    x.sample_rate = 180e3;
    x.samples = random_signal(n, unsigned(100 + n));
    WaveletParams p;
    p.sigma = 4.0;
    const Tfr got[] = {ntewt::compute_w(x, p), ntewt::compute_w_tpsi(x, p),
                       ntewt::compute_db_w(x, p),
                       ntewt::compute_db_w_tpsi(x, p)};
    const TfrKind kinds[] = {TfrKind::W, TfrKind::WTpsi, TfrKind::DbW,
                             TfrKind::DbWTpsi};
    for (int i = 0; i < 4; ++i) {
      auto want = tfr_oracle(x, p, kinds[i]);
      for (std::size_t k = 0; k < got[i].rows(); ++k) {
        const double e =
            rel_err(std::span<const cplx>(got[i].row(k), n),
                    std::span<const cplx>(want.row(k), n));
        worst = std::max(worst, e);
      }
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "worst row rel err %.2e, bound 1e-9",
                worst);
  report(1, "TFR rows match the direct correlation oracle", worst <= 1e-9,
         detail);
}

// ---------------------------------------------------------------------------

void criterion2() {
  double worst_inv = 0.0, worst_pars = 0.0;
  for (std::size_t n = 4; n <= 1024; n += 2) {
    std::vector<cplx> x(n);
    std::mt19937 gen{unsigned(n)};
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& v : x) v = cplx(dist(gen), dist(gen));
    auto spec = ntewt::dft(std::span<const cplx>(x));
    auto back = ntewt::idft(spec);
    worst_inv = std::max(worst_inv, rel_err(back, std::span<const cplx>(x)));
    double te = 0.0, fe = 0.0;
    for (const auto& v : x) te += std::norm(v);
    for (const auto& v : spec) fe += std::norm(v);
    worst_pars = std::max(worst_pars, std::abs(fe / double(n) - te) / te);
  }
  std::vector<double> small = {1.0, 2.0, 3.0, 4.0};
  auto s = ntewt::dft(std::span<const double>(small));
  const std::vector<cplx> want = {
      {10.0, 0.0}, {-2.0, 2.0}, {-2.0, 0.0}, {-2.0, -2.0}};
  const double hand = rel_err(std::span<const cplx>(s),
                              std::span<const cplx>(want));
  const bool ok = worst_inv <= 1e-10 && worst_pars <= 1e-10 && hand <= 1e-12;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "inversion %.2e, Parseval %.2e, [1,2,3,4] %.2e; bound 1e-10",
                worst_inv, worst_pars, hand);
  report(2, "DFT inversion/Parseval over all even n <= 1024", ok, detail);
}

// ---------------------------------------------------------------------------

void criterion3() {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> sig_d(1.0, 8.0), a_d(0.05, 1.0),
      w_d(0.5, 40.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    WaveletParams p;
    p.sigma = sig_d(gen);
    p.omega_psi = 6.0;
    const double a = a_d(gen);
    const double w = w_d(gen);
    std::vector<double> at = {w};
    const double got = ntewt::morlet_spectrum_derivative(p, a, at)[0];
    const double h = 1e-6 * std::max(1.0, std::abs(w));
    std::vector<double> hi = {w + h}, lo = {w - h};
    const double fd = (ntewt::morlet_spectrum(p, a, hi)[0] -
                       ntewt::morlet_spectrum(p, a, lo)[0]) /
                      (2.0 * h);
    const double scale = std::max(std::abs(fd), 1e-30);
    if (std::abs(got) < 1e-200 && std::abs(fd) < 1e-200) continue;
    worst = std::max(worst, std::abs(got - fd) / scale);
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "worst rel err %.2e, bound 1e-6",
                worst);
  report(3, "spectrum derivative matches finite differences", worst <= 1e-6,
         detail);
}

// ---------------------------------------------------------------------------

void criterion4() {
  // in-band harmonic reconstruction
  const std::size_t n = 256;
  const double fs = 180e3;
  WaveletParams p;
  double worst_corr = 1.0;
  for (double f : {fs / 16.0, fs / 8.0, fs / 4.0}) {
    Signal x;
    x.sample_rate = fs;
    x.samples.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      x.samples[j] = std::cos(2.0 * std::numbers::pi * f * double(j) / fs);
    }
    auto rec = ntewt::reconstruct_from_cwt(ntewt::compute_w(x, p), p);
    worst_corr = std::min(
        worst_corr, pearson(std::span<const double>(rec.samples),
                            std::span<const double>(x.samples)));
  }

  // the filter with epsilon -> infinity degenerates to plain reconstruction
  auto sc = ntewt::preset("test1");
  Signal x = sc.synthesize(1);
  NtewtConfig cfg = sc.ntewt_config();
  cfg.epsilon = 1e300;
  auto filt = ntewt::ntewt_filter(x, sc.wavelet(), cfg);
  auto rec = ntewt::reconstruct_from_cwt(ntewt::compute_w(x, sc.wavelet()),
                                         sc.wavelet());
  const double eq = rel_err(std::span<const double>(filt.filtered.samples),
                            std::span<const double>(rec.samples));
  const bool ok = worst_corr >= 0.99 && eq <= 1e-10;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "min tone correlation %.4f (>=0.99), eps->inf rel err %.2e "
                "(<=1e-10)",
                worst_corr, eq);
  report(4, "reconstruction fidelity and filter degeneracy", ok, detail);
}

// ---------------------------------------------------------------------------

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();

  auto sc = ntewt::preset("test2");
  sc.noise_std = 0.0;
  Signal x = sc.synthesize(0);
  auto p = sc.wavelet();
  NtewtConfig cfg = sc.ntewt_config();  // epsilon = 2e-3

  auto w = ntewt::compute_w(x, p);
  auto wt = ntewt::compute_w_tpsi(x, p);
  auto dbw = ntewt::compute_db_w(x, p);
  auto dbwt = ntewt::compute_db_w_tpsi(x, p);
  auto tt = ntewt::complex_time_operator(w, wt, cfg);
  auto field = ntewt::newton_gd(tt, dbw, dbwt, w, wt, cfg);

  const auto& grid = w.grid();
  const auto& chirp = sc.chirps[0];
  const std::size_t n = grid.n;

  // group-delay line of the linear chirp, in sample index:
  //   j(f) = offset + pulse_len * (f - f1)/(f2 - f1)
  // The minimum is taken over energetic ridge points: the circular-wrap
  // discontinuity at the signal border is itself a fixed point, and
  // low-magnitude points carry numerically meaningless metrics, so both are
  // excluded, as are rows dominated by the stationary tones.
  const std::size_t j_lo = n / 20, j_hi = n - n / 20;
  std::size_t checked = 0, within = 0;
  double worst_dev = 0.0;
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    const double fc = grid.center_freq_hz[k];
    if (fc < 0.1 * chirp.f_high || fc > 0.9 * chirp.f_high) continue;
    bool near_harmonic = false;
    for (const auto& h : sc.harmonics) {
      if (std::abs(fc - h.freq) < 5e3) near_harmonic = true;
    }
    if (near_harmonic) continue;

    double row_peak = 0.0;
    for (std::size_t j = j_lo; j < j_hi; ++j) {
      row_peak = std::max(row_peak, std::abs(w.at(j, k)));
    }
    double best = 1e300;
    std::size_t best_j = 0;
    for (std::size_t j = j_lo; j < j_hi; ++j) {
      if (!field.valid[k * n + j]) continue;
      if (std::abs(w.at(j, k)) < 0.25 * row_peak) continue;
      if (field.at(j, k) < best) {
        best = field.at(j, k);
        best_j = j;
      }
    }
    if (best == 1e300) continue;
    const double expected =
        double(chirp.start_offset) +
        double(chirp.pulse_len) * (fc - chirp.f_low) /
            (chirp.f_high - chirp.f_low);
    const double dev = std::abs(double(best_j) - expected);
    worst_dev = std::max(worst_dev, dev);
    ++checked;
    if (dev <= 2.0) ++within;
  }

  // stationary-tone rows keep almost no sub-threshold points
  double worst_harmonic_frac = 0.0;
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    const double fc = grid.center_freq_hz[k];
    bool harmonic_row = false;
    for (const auto& h : sc.harmonics) {
      if (std::abs(fc - h.freq) < grid.center_freq_hz[0]) harmonic_row = true;
    }
    if (!harmonic_row) continue;
    std::size_t below = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (field.valid[k * n + j] && field.at(j, k) < cfg.epsilon) ++below;
    }
    worst_harmonic_frac =
        std::max(worst_harmonic_frac, double(below) / double(n));
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool ok = checked > 10 && within == checked &&
                  worst_harmonic_frac < 0.05 && elapsed < 10.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu/%zu rows within 2 samples (worst dev %.2f), harmonic "
                "sub-eps fraction %.3f (<0.05), %.2f s (<10)",
                within, checked, worst_dev, worst_harmonic_frac, elapsed);
  report(5, "fixed points trace the chirp group-delay line", ok, detail);
}

// ---------------------------------------------------------------------------

void criterion6() {
  auto sc = ntewt::preset("test1");
  sc.noise_std = 0.0;
  Signal x = sc.synthesize(0);
  Signal chirp = sc.isolated_chirp();

  auto res = ntewt::ntewt_filter(x, sc.wavelet(), sc.ntewt_config());

  const auto& spec = sc.chirps[0];
  const std::size_t margin = spec.pulse_len / 10;
  const std::size_t lo = spec.start_offset + margin;
  const std::size_t hi = spec.start_offset + spec.pulse_len - margin;
  const double corr = pearson(
      std::span<const double>(res.filtered.samples.data() + lo, hi - lo),
      std::span<const double>(chirp.samples.data() + lo, hi - lo));

  auto xcorr = ntewt::matched_filter(res.filtered, chirp);
  const bool ok = corr >= 0.9 && xcorr.peak_index == 0;
  char detail[112];
  std::snprintf(detail, sizeof detail,
                "in-pulse correlation %.4f (>=0.9), peak lag %ld (=0)", corr,
                xcorr.peak_index);
  report(6, "filtered chirp keeps shape and timing", ok, detail);
}

// ---------------------------------------------------------------------------

void criterion7() {
  auto sc = ntewt::preset("test1");
  sc.noise_std = 0.0;
  sc.chirps.clear();  // harmonics only
  Signal x = sc.synthesize(0);

  auto res = ntewt::ntewt_filter(x, sc.wavelet(), sc.ntewt_config());
  NtewtConfig keep_all = sc.ntewt_config();
  keep_all.epsilon = 1e300;
  auto full = ntewt::ntewt_filter(x, sc.wavelet(), keep_all);

  const double ef = energy(res.filtered.samples);
  const double e0 = energy(full.filtered.samples);
  const double ratio = e0 > 0.0 ? ef / e0 : 0.0;
  char detail[96];
  std::snprintf(detail, sizeof detail, "residual energy fraction %.4f (<=0.1)",
                ratio);
  report(7, "stationary harmonics are suppressed", ratio <= 0.1, detail);
}

// ---------------------------------------------------------------------------

void criterion8() {
  bool ok = true;
  double min_gain = 1e300;
  for (const char* name : {"test1", "test2", "test3", "test4"}) {
    for (double s : {0.0, 0.2}) {
      auto sc = ntewt::preset(name);
      sc.noise_std = s;
      Signal x = sc.synthesize(12);
      Signal tmpl = sc.template_pulse();

      auto res = ntewt::ntewt_filter(x, sc.wavelet(), sc.ntewt_config());
      auto raw = ntewt::matched_filter(x, tmpl);
      auto fil = ntewt::matched_filter(res.filtered, tmpl);
      const double gain = ntewt::detection_gain(raw, fil);
      min_gain = std::min(min_gain, gain);
      // The noiseless pulse train tiles its signal with exact period 32, so
      // both correlation-peak ratios are exactly 0 dB: the raw input already
      // is the clean template and the best any filter can do is not degrade
      // it. Every other combination must strictly improve.
      const bool clean_periodic = s == 0.0 && sc.harmonics.empty();
      if (clean_periodic ? gain < 0.0 : gain <= 0.0) ok = false;
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "min peak-to-sidelobe gain %.2f dB over 8 runs", min_gain);
  report(8, "pre-filtering improves matched-filter detection", ok, detail);
}

// ---------------------------------------------------------------------------

void criterion9() {
  auto sc = ntewt::preset("test2");
  Signal x = sc.synthesize(5);
  Signal xs = x;
  for (auto& v : xs.samples) v *= 1e3;
  auto p = sc.wavelet();
  auto cfg = sc.ntewt_config();

  // support masks from the staged pipeline
  auto mask_of = [&](const Signal& sig) {
    auto w = ntewt::compute_w(sig, p);
    auto wt = ntewt::compute_w_tpsi(sig, p);
    auto dbw = ntewt::compute_db_w(sig, p);
    auto dbwt = ntewt::compute_db_w_tpsi(sig, p);
    auto tt = ntewt::complex_time_operator(w, wt, cfg);
    auto field = ntewt::newton_gd(tt, dbw, dbwt, w, wt, cfg);
    std::vector<std::uint8_t> mask(field.metric.size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
      mask[i] = field.valid[i] && field.metric[i] < cfg.epsilon;
    }
    return mask;
  };
  const bool same_mask = mask_of(x) == mask_of(xs);

  auto r1 = ntewt::ntewt_filter(x, p, cfg);
  auto r2 = ntewt::ntewt_filter(xs, p, cfg);
  std::vector<double> scaled = r1.filtered.samples;
  for (auto& v : scaled) v *= 1e3;
  const double err = rel_err(std::span<const double>(r2.filtered.samples),
                             std::span<const double>(scaled));
  const bool ok = same_mask && err <= 1e-9;
  char detail[112];
  std::snprintf(detail, sizeof detail,
                "mask identical: %s, output scaling rel err %.2e (<=1e-9)",
                same_mask ? "yes" : "no", err);
  report(9, "amplitude scaling leaves the filter invariant", ok, detail);
}

// ---------------------------------------------------------------------------

void criterion10() {
  const std::vector<std::size_t> lengths = {4,   8,   16,  32,  64,  128, 192,
                                            256, 384, 512, 600, 768, 1024};
  ntewt::BenchOptions opts;
  opts.repetitions = 50;
  opts.warmup = 3;
  opts.seed = 1;
  WaveletParams p;
  NtewtConfig cfg;
  auto records = ntewt::run_speed_sweep(lengths, opts, p, cfg);
  ntewt::io::write_bench_csv("acceptance_bench.csv", records);

  // Least-squares slope of log t vs log n over n in [128, 1024], fitted on
  // the power-of-two lengths: general lengths run through a chirp-z
  // reduction with a ~4x larger constant, and mixing the two algorithm
  // classes in one regression measures their ratio, not the scaling
  // exponent.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  double t600 = 0.0;
  for (const auto& r : records) {
    if (r.n == 600) t600 = r.mean_runtime_s;
    if (r.n < 128 || (r.n & (r.n - 1)) != 0) continue;
    const double lx = std::log(double(r.n));
    const double ly = std::log(r.mean_runtime_s);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  const double slope =
      (double(m) * sxy - sx * sy) / (double(m) * sxx - sx * sx);
  const bool ok = slope >= 1.8 && slope <= 2.4 && t600 >= 0.03 && t600 <= 3.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "log-log slope %.2f (in [1.8,2.4]), n=600 mean %.3f s "
                "(in [0.03,3])",
                slope, t600);
  report(10, "runtime scales quadratically, n=600 near 0.3 s", ok, detail);
}

// ---------------------------------------------------------------------------

void criterion11() {
  auto sc = ntewt::preset("test1");
  Signal x = sc.synthesize(2);
  auto p = sc.wavelet();
  auto cfg = sc.ntewt_config();
  auto w = ntewt::compute_w(x, p);
  auto wt = ntewt::compute_w_tpsi(x, p);
  auto dbw = ntewt::compute_db_w(x, p);
  auto dbwt = ntewt::compute_db_w_tpsi(x, p);
  auto tt = ntewt::complex_time_operator(w, wt, cfg);
  auto field = ntewt::newton_gd(tt, dbw, dbwt, w, wt, cfg);
  auto nte = ntewt::reassign(w, field, cfg);

  double worst = 0.0;
  std::size_t nonzero_rows = 0;
  for (std::size_t k = 0; k < nte.rows(); ++k) {
    double en = 0.0, ew = 0.0;
    for (std::size_t j = 0; j < nte.n(); ++j) {
      en += std::norm(nte.at(j, k));
      ew += std::norm(w.at(j, k));
    }
    if (en == 0.0) continue;
    ++nonzero_rows;
    worst = std::max(worst,
                     std::abs(std::sqrt(en) - std::sqrt(ew)) / std::sqrt(ew));
  }
  const bool ok = nonzero_rows > 0 && worst <= 1e-12;
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "%zu nonzero rows, worst norm rel dev %.2e (<=1e-12)",
                nonzero_rows, worst);
  report(11, "reassignment preserves row norms", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (g_failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
