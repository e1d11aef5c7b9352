#include "ntewt/presets.hpp"

#include <stdexcept>

namespace ntewt {

Signal ScenarioConfig::synthesize(std::uint64_t seed) const {
  NoiseSpec noise;
  noise.std_dev = noise_std;
  noise.seed = seed;
  return synth_composite(chirps, harmonics, noise, n, sample_rate);
}

Signal ScenarioConfig::isolated_chirp() const {
  return synth_composite(chirps, {}, NoiseSpec{}, n, sample_rate);
}

Signal ScenarioConfig::template_pulse() const {
  if (chirps.empty()) {
    throw std::invalid_argument("template_pulse: scenario has no chirp");
  }
  ChirpSpec pulse = chirps.front();
  pulse.start_offset = 0;
  return synth_chirp(pulse, pulse.pulse_len + (pulse.pulse_len % 2),
                     sample_rate);
}

ScenarioConfig preset(std::string_view name) {
  ScenarioConfig cfg;
  cfg.name = std::string(name);
  // The source experiments leave the pulse placement and the harmonic
  // amplitudes unstated; pulses are centered and the two tones sum to unit
  // peak amplitude, comparable to the unit chirp.
  if (name == "test1") {
    cfg.n = 1024;
    cfg.chirps = {{0.0, 90e3, 512, 256, 1.0}};
    cfg.harmonics = {{30e3, 0.5}, {60e3, 0.5}};
    cfg.sigma = 5.0;
    cfg.epsilon = 1e-3;
  } else if (name == "test2") {
    cfg.n = 1024;
    cfg.chirps = {{0.0, 90e3, 32, 496, 1.0}};
    cfg.harmonics = {{30e3, 0.5}, {60e3, 0.5}};
    cfg.sigma = 5.0;
    cfg.epsilon = 2e-3;
  } else if (name == "test3") {
    cfg.n = 128;
    cfg.chirps = {{0.0, 90e3, 32, 48, 1.0}};
    cfg.harmonics = {{30e3, 0.5}, {60e3, 0.5}};
    cfg.sigma = 3.0;
    cfg.epsilon = 1e-2;
  } else if (name == "test4") {
    // four concatenated pulses, repetition interval equal to the pulse length
    cfg.n = 128;
    cfg.chirps = {{30e3, 60e3, 32, 0, 1.0},
                  {30e3, 60e3, 32, 32, 1.0},
                  {30e3, 60e3, 32, 64, 1.0},
                  {30e3, 60e3, 32, 96, 1.0}};
    cfg.sigma = 3.0;
    cfg.epsilon = 1e-2;
  } else {
    throw std::invalid_argument("unknown preset: " + std::string(name));
  }
  return cfg;
}

}  // namespace ntewt
