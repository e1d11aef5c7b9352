#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ntewt/morlet.hpp"
#include "ntewt/reassign.hpp"

namespace ntewt {

struct BenchRecord {
  std::size_t n = 0;
  double mean_runtime_s = 0.0;
  double max_realtime_fs_hz = 0.0;  // n / mean_runtime_s
  std::size_t repetitions = 0;
};

struct BenchOptions {
  std::size_t repetitions = 50;
  std::size_t warmup = 3;  // excluded from the averages
  bool parallel = false;   // single-threaded by default for stable timing
  bool tfr_only = false;   // time the reassigned-TFR computation, no
                           // reconstruction accumulation
  std::uint64_t seed = 1;
  double sample_rate = 180e3;
};

// Times the end-to-end filter over fresh random Gaussian signals, one per
// repetition, and averages. Records are emitted in ascending n.
std::vector<BenchRecord> run_speed_sweep(std::span<const std::size_t> lengths,
                                         const BenchOptions& opts,
                                         const WaveletParams& params,
                                         const NtewtConfig& cfg);

// All even lengths in [4, 1024], the default sweep.
std::vector<std::size_t> default_sweep_lengths();

}  // namespace ntewt
