#include "ntewt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ntewt/filter.hpp"
#include "ntewt/signal.hpp"

namespace ntewt {

std::vector<std::size_t> default_sweep_lengths() {
  std::vector<std::size_t> lengths;
  for (std::size_t n = 4; n <= 1024; n += 2) lengths.push_back(n);
  return lengths;
}

std::vector<BenchRecord> run_speed_sweep(std::span<const std::size_t> lengths,
                                         const BenchOptions& opts,
                                         const WaveletParams& params,
                                         const NtewtConfig& cfg) {
  if (opts.repetitions < 1) {
    throw std::invalid_argument("run_speed_sweep: repetitions must be >= 1");
  }
  std::vector<std::size_t> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t n : sorted) {
    if (n < 4 || n % 2 != 0) {
      throw std::invalid_argument("run_speed_sweep: lengths must be even, >= 4");
    }
  }

  std::vector<BenchRecord> records;
  records.reserve(sorted.size());
  FilterOptions fopts;
  fopts.parallel = opts.parallel;

  for (std::size_t n : sorted) {
    double total = 0.0;
    const std::size_t passes = opts.warmup + opts.repetitions;
    for (std::size_t rep = 0; rep < passes; ++rep) {
      NoiseSpec noise;
      noise.std_dev = 1.0;
      noise.seed = opts.seed + rep;
      Signal x = synth_composite({}, {}, noise, n, opts.sample_rate);

      // timing covers the filtering algorithm only, not synthesis or I/O
      double elapsed;
      if (opts.tfr_only) {
        const auto start = std::chrono::steady_clock::now();
        Tfr nte = ntewt_transform(x, params, cfg, opts.parallel);
        elapsed = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        (void)nte;
      } else {
        FilterResult res = ntewt_filter(x, params, cfg, fopts);
        elapsed = res.runtime_s;
      }
      if (rep >= opts.warmup) total += elapsed;
    }
    BenchRecord rec;
    rec.n = n;
    rec.repetitions = opts.repetitions;
    rec.mean_runtime_s = total / double(opts.repetitions);
    rec.max_realtime_fs_hz = double(n) / rec.mean_runtime_s;
    records.push_back(rec);
  }
  return records;
}

}  // namespace ntewt
