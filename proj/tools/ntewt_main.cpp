// Command-line frontend: synthesize test signals, compute CWT/NTEWT
// scalograms and fixed-point metrics, run the reassignment filter, evaluate
// matched-filter detection, and benchmark runtimes.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ntewt/bench.hpp"
#include "ntewt/cwt.hpp"
#include "ntewt/detect.hpp"
#include "ntewt/filter.hpp"
#include "ntewt/io.hpp"
#include "ntewt/presets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitIo = 3;
constexpr int kExitDegenerate = 4;

struct CommonOpts {
  std::string preset;
  std::optional<std::size_t> n;
  std::optional<double> fs;
  std::optional<double> sigma;
  std::optional<double> omega_psi;
  std::optional<double> epsilon;
  std::optional<double> noise_std;
  std::uint64_t seed = 0;
  std::vector<std::string> chirp_args;
  std::vector<std::string> harmonic_args;
  bool paper_derivative = false;
  bool paper_accumulation = false;
  bool parallel = false;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset, "scenario preset: test1..test4");
  cmd->add_option("--n", o.n, "signal length (even)");
  cmd->add_option("--fs", o.fs, "sampling rate, Hz");
  cmd->add_option("--sigma", o.sigma, "Morlet width");
  cmd->add_option("--omega-psi", o.omega_psi, "Morlet central frequency, rad");
  cmd->add_option("--epsilon", o.epsilon, "reassignment tolerance");
  cmd->add_option("--noise-std", o.noise_std, "Gaussian noise std dev");
  cmd->add_option("--seed", o.seed, "noise generator seed");
  cmd->add_option("--chirp", o.chirp_args,
                  "chirp component f1:f2:len:offset (Hz, Hz, samples, samples)");
  cmd->add_option("--harmonic", o.harmonic_args, "harmonic component f:amp");
  cmd->add_flag("--paper-derivative", o.paper_derivative,
                "use the printed sigma^5 derivative factor");
  cmd->add_flag("--paper-accumulation", o.paper_accumulation,
                "accumulate pre-rescaling W coefficients in the filter");
  cmd->add_flag("--parallel", o.parallel, "row-parallel computation");
  cmd->add_option("--format", o.format, "output format: csv|bin|pgm");
}

ntewt::ChirpSpec parse_chirp(const std::string& arg) {
  ntewt::ChirpSpec spec;
  unsigned long len = 0, off = 0;
  if (std::sscanf(arg.c_str(), "%lf:%lf:%lu:%lu", &spec.f_low, &spec.f_high,
                  &len, &off) != 4) {
    throw CLI::ValidationError("--chirp", "expected f1:f2:len:offset");
  }
  spec.pulse_len = len;
  spec.start_offset = off;
  return spec;
}

ntewt::HarmonicSpec parse_harmonic(const std::string& arg) {
  ntewt::HarmonicSpec spec;
  if (std::sscanf(arg.c_str(), "%lf:%lf", &spec.freq, &spec.amplitude) != 2) {
    throw CLI::ValidationError("--harmonic", "expected f:amp");
  }
  return spec;
}

// Preset (when named) with field-level overrides applied on top.
ntewt::ScenarioConfig resolve_scenario(const CommonOpts& o) {
  ntewt::ScenarioConfig cfg;
  if (!o.preset.empty()) {
    cfg = ntewt::preset(o.preset);
  } else {
    cfg.name = "custom";
    cfg.n = 0;
    cfg.chirps.clear();
    cfg.harmonics.clear();
  }
  if (o.n) cfg.n = *o.n;
  if (o.fs) cfg.sample_rate = *o.fs;
  if (o.sigma) cfg.sigma = *o.sigma;
  if (o.omega_psi) cfg.omega_psi = *o.omega_psi;
  if (o.epsilon) cfg.epsilon = *o.epsilon;
  if (o.noise_std) cfg.noise_std = *o.noise_std;
  if (!o.chirp_args.empty()) {
    cfg.chirps.clear();
    for (const auto& arg : o.chirp_args) cfg.chirps.push_back(parse_chirp(arg));
  }
  if (!o.harmonic_args.empty()) {
    cfg.harmonics.clear();
    for (const auto& arg : o.harmonic_args) {
      cfg.harmonics.push_back(parse_harmonic(arg));
    }
  }
  return cfg;
}

ntewt::WaveletParams wavelet_from(const CommonOpts& o,
                                  const ntewt::ScenarioConfig& cfg) {
  ntewt::WaveletParams p = cfg.wavelet();
  p.sigma5_derivative = o.paper_derivative;
  return p;
}

ntewt::NtewtConfig ntewt_cfg_from(const CommonOpts& o,
                                  const ntewt::ScenarioConfig& cfg) {
  ntewt::NtewtConfig c = cfg.ntewt_config();
  c.raw_accumulation = o.paper_accumulation;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton time-extracting wavelet transform toolkit"};
  app.require_subcommand(1);

  CommonOpts synth_o, analyze_o, filter_o, match_o, bench_o;

  auto* synth = app.add_subcommand("synth", "synthesize a test signal");
  add_common(synth, synth_o);
  std::string synth_out;
  synth->add_option("--out", synth_out, "output signal file")->required();

  auto* analyze =
      app.add_subcommand("analyze", "compute CWT/NTEWT/fixed-point exports");
  add_common(analyze, analyze_o);
  std::string analyze_in, out_cwt, out_nte, out_fixed;
  analyze->add_option("--in", analyze_in, "input signal file")->required();
  analyze->add_option("--cwt", out_cwt, "CWT scalogram output");
  analyze->add_option("--ntewt", out_nte, "NTEWT scalogram output");
  analyze->add_option("--fixedpoint", out_fixed,
                      "log10 fixed-point metric output (CSV)");

  auto* filter = app.add_subcommand("filter", "NTEWT-based filtering");
  add_common(filter, filter_o);
  std::string filter_in, filter_out, filter_stats;
  filter->add_option("--in", filter_in, "input signal file")->required();
  filter->add_option("--out", filter_out, "filtered signal output")->required();
  filter->add_option("--stats", filter_stats, "per-row survivor stats output");

  auto* match = app.add_subcommand("match", "matched-filter detection");
  add_common(match, match_o);
  std::string match_in, match_tmpl, match_out;
  match->add_option("--in", match_in, "input signal file")->required();
  match->add_option("--template", match_tmpl,
                    "template signal file (defaults to the preset's chirp pulse)");
  match->add_option("--out", match_out, "output prefix")->required();

  auto* bench = app.add_subcommand("bench", "runtime vs signal length sweep");
  add_common(bench, bench_o);
  std::vector<std::size_t> bench_lengths;
  std::size_t bench_reps = 50, bench_warmup = 3;
  bool bench_tfr_only = false;
  std::string bench_out;
  bench->add_option("--lengths", bench_lengths,
                    "even signal lengths (default: all even in [4,1024])");
  bench->add_option("--reps", bench_reps, "repetitions per length");
  bench->add_option("--warmup", bench_warmup, "warm-up iterations (untimed)");
  bench->add_flag("--tfr-only", bench_tfr_only,
                  "time the TFR computation without reconstruction");
  bench->add_option("--out", bench_out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParam;
  }

  try {
    if (synth->parsed()) {
      auto cfg = resolve_scenario(synth_o);
      ntewt::Signal sig = cfg.synthesize(synth_o.seed);
      if (synth_o.format == "bin") {
        ntewt::io::write_signal_bin(synth_out, sig);
      } else if (synth_o.format == "csv") {
        ntewt::io::write_signal_csv(synth_out, sig);
      } else {
        throw std::invalid_argument("synth: format must be csv or bin");
      }
      std::cout << "wrote " << sig.size() << " samples to " << synth_out
                << " (noise: " << ntewt::kNoiseAlgorithm
                << ", seed " << synth_o.seed << ")\n";
    } else if (analyze->parsed()) {
      auto cfg = resolve_scenario(analyze_o);
      ntewt::Signal sig = ntewt::io::read_signal(analyze_in, cfg.sample_rate);
      auto params = wavelet_from(analyze_o, cfg);
      auto ncfg = ntewt_cfg_from(analyze_o, cfg);
      if (out_cwt.empty() && out_nte.empty() && out_fixed.empty()) {
        throw std::invalid_argument(
            "analyze: need at least one of --cwt/--ntewt/--fixedpoint");
      }
      const bool pgm = analyze_o.format == "pgm";
      if (!out_cwt.empty()) {
        ntewt::Tfr w = ntewt::compute_w(sig, params, analyze_o.parallel);
        pgm ? ntewt::io::write_scalogram_pgm(out_cwt, w)
            : ntewt::io::write_scalogram_csv(out_cwt, w);
      }
      if (!out_nte.empty()) {
        ntewt::Tfr nte =
            ntewt::ntewt_transform(sig, params, ncfg, analyze_o.parallel);
        pgm ? ntewt::io::write_scalogram_pgm(out_nte, nte)
            : ntewt::io::write_scalogram_csv(out_nte, nte);
      }
      if (!out_fixed.empty()) {
        ntewt::Tfr w = ntewt::compute_w(sig, params, analyze_o.parallel);
        ntewt::Tfr wt = ntewt::compute_w_tpsi(sig, params, analyze_o.parallel);
        ntewt::Tfr dbw = ntewt::compute_db_w(sig, params, analyze_o.parallel);
        ntewt::Tfr dbwt =
            ntewt::compute_db_w_tpsi(sig, params, analyze_o.parallel);
        auto tt = ntewt::complex_time_operator(w, wt, ncfg);
        auto field = ntewt::newton_gd(tt, dbw, dbwt, w, wt, ncfg);
        auto log_metric = ntewt::export_fixed_point_log(field);
        ntewt::io::write_matrix_csv(out_fixed, log_metric, w.grid());
      }
    } else if (filter->parsed()) {
      auto cfg = resolve_scenario(filter_o);
      ntewt::Signal sig = ntewt::io::read_signal(filter_in, cfg.sample_rate);
      auto params = wavelet_from(filter_o, cfg);
      auto ncfg = ntewt_cfg_from(filter_o, cfg);
      ntewt::FilterOptions fopts;
      fopts.parallel = filter_o.parallel;
      ntewt::FilterResult res = ntewt::ntewt_filter(sig, params, ncfg, fopts);
      if (filter_o.format == "bin") {
        ntewt::io::write_signal_bin(filter_out, res.filtered);
      } else {
        ntewt::io::write_signal_csv(filter_out, res.filtered);
      }
      if (!filter_stats.empty()) {
        std::ofstream stats(filter_stats);
        if (!stats) throw std::runtime_error(filter_stats + ": cannot open");
        stats << "runtime_s=" << res.runtime_s << '\n';
        for (std::size_t k = 0; k < res.row_survivors.size(); ++k) {
          stats << k << ',' << res.row_survivors[k] << '\n';
        }
      }
      std::cout << "filtered " << sig.size() << " samples in " << res.runtime_s
                << " s\n";
    } else if (match->parsed()) {
      auto cfg = resolve_scenario(match_o);
      ntewt::Signal sig = ntewt::io::read_signal(match_in, cfg.sample_rate);
      ntewt::Signal tmpl =
          match_tmpl.empty()
              ? cfg.template_pulse()
              : ntewt::io::read_signal(match_tmpl, cfg.sample_rate);
      ntewt::DetectionReport report = ntewt::matched_filter(sig, tmpl);
      if (report.peak_value == 0.0) {
        throw std::domain_error("match: all-zero matched-filter response");
      }
      ntewt::io::write_detection_report(match_out + ".txt",
                                        match_out + "_response.csv", report);
      std::cout << "peak lag " << report.peak_index << ", peak/sidelobe "
                << report.peak_to_sidelobe_db << " dB\n";
    } else if (bench->parsed()) {
      auto cfg = resolve_scenario(bench_o);
      auto params = wavelet_from(bench_o, cfg);
      auto ncfg = ntewt_cfg_from(bench_o, cfg);
      ntewt::BenchOptions opts;
      opts.repetitions = bench_reps;
      opts.warmup = bench_warmup;
      opts.parallel = bench_o.parallel;
      opts.tfr_only = bench_tfr_only;
      opts.seed = bench_o.seed;
      opts.sample_rate = cfg.sample_rate;
      std::vector<std::size_t> lengths =
          bench_lengths.empty() ? ntewt::default_sweep_lengths()
                                : bench_lengths;
      auto records = ntewt::run_speed_sweep(lengths, opts, params, ncfg);
      ntewt::io::write_bench_csv(bench_out, records);
      std::cout << "wrote " << records.size() << " records to " << bench_out
                << '\n';
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitParam;
  } catch (const std::domain_error& e) {
    std::cerr << "degenerate result: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
