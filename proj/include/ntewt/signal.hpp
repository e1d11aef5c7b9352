#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ntewt {

// Real discrete signal with sampling-rate metadata.
struct Signal {
  std::vector<double> samples;
  double sample_rate = 1.0;  // Hz

  std::size_t size() const { return samples.size(); }

  // n >= 2 and even, sample_rate > 0.
  void validate() const;
};

// Linear chirp pulse: zero outside [start_offset, start_offset + pulse_len),
// A*sin(phi(t)) inside, with quadratic phase
//   phi(t) = 2*pi*t*f_low + pi*t^2*(f_high - f_low)/T,  t = (j - start)/fs.
struct ChirpSpec {
  double f_low = 0.0;    // Hz
  double f_high = 0.0;   // Hz
  std::size_t pulse_len = 0;     // samples
  std::size_t start_offset = 0;  // samples
  double amplitude = 1.0;

  void validate(std::size_t n, double sample_rate) const;
};

struct HarmonicSpec {
  double freq = 0.0;  // Hz
  double amplitude = 1.0;

  void validate(double sample_rate) const;
};

// Gaussian noise drawn sample by sample from a seeded mt19937_64 through a
// Box-Muller transform (cosine branch, two uniform draws per sample), so a
// fixed seed reproduces the same signal bit for bit on any platform.
struct NoiseSpec {
  double std_dev = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// Identifier of the noise generator algorithm, stored alongside outputs.
inline constexpr const char* kNoiseAlgorithm = "mt19937_64+box-muller-cos";

Signal synth_chirp(const ChirpSpec& spec, std::size_t n, double sample_rate);

Signal synth_composite(std::span<const ChirpSpec> chirps,
                       std::span<const HarmonicSpec> harmonics,
                       const NoiseSpec& noise, std::size_t n,
                       double sample_rate);

}  // namespace ntewt
