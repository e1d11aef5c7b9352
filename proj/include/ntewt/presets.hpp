#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntewt/morlet.hpp"
#include "ntewt/reassign.hpp"
#include "ntewt/signal.hpp"

namespace ntewt {

// Named synthetic-scenario bundles; every field can be overridden from the
// command line.
struct ScenarioConfig {
  std::string name;
  std::size_t n = 0;
  double sample_rate = 180e3;
  std::vector<ChirpSpec> chirps;
  std::vector<HarmonicSpec> harmonics;
  double noise_std = 0.0;
  double sigma = 5.0;
  double omega_psi = 6.0;
  double epsilon = 1e-3;

  WaveletParams wavelet() const {
    WaveletParams p;
    p.sigma = sigma;
    p.omega_psi = omega_psi;
    return p;
  }

  NtewtConfig ntewt_config() const {
    NtewtConfig cfg;
    cfg.epsilon = epsilon;
    return cfg;
  }

  Signal synthesize(std::uint64_t seed) const;

  // The scenario's noiseless chirp component alone (the matched-filter
  // template is its first pulse).
  Signal isolated_chirp() const;
  Signal template_pulse() const;
};

// Presets test1..test4. Throws std::invalid_argument for unknown names.
ScenarioConfig preset(std::string_view name);

}  // namespace ntewt
