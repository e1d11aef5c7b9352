#include "ntewt/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ntewt {

void Signal::validate() const {
  if (samples.size() < 2 || samples.size() % 2 != 0) {
    throw std::invalid_argument("Signal: length must be even and >= 2");
  }
  if (!(sample_rate > 0.0)) {
    throw std::invalid_argument("Signal: sample_rate must be > 0");
  }
}

void ChirpSpec::validate(std::size_t n, double sample_rate) const {
  if (pulse_len < 1) throw std::invalid_argument("ChirpSpec: pulse_len must be >= 1");
  if (start_offset + pulse_len > n) {
    throw std::invalid_argument("ChirpSpec: pulse does not fit in the signal");
  }
  const double nyquist = sample_rate / 2.0;
  if (f_low < 0.0 || f_low > nyquist || f_high < 0.0 || f_high > nyquist) {
    throw std::invalid_argument("ChirpSpec: frequencies must lie in [0, fs/2]");
  }
  if (!(amplitude > 0.0)) {
    throw std::invalid_argument("ChirpSpec: amplitude must be > 0");
  }
}

void HarmonicSpec::validate(double sample_rate) const {
  if (freq < 0.0 || freq > sample_rate / 2.0) {
    throw std::invalid_argument("HarmonicSpec: freq must lie in [0, fs/2]");
  }
}

void NoiseSpec::validate() const {
  if (std_dev < 0.0) throw std::invalid_argument("NoiseSpec: std_dev must be >= 0");
}

namespace {

// Phase evaluated in double precision from the closed form; no accumulator.
double chirp_phase(const ChirpSpec& spec, double t, double duration) {
  return 2.0 * std::numbers::pi * t * spec.f_low +
         std::numbers::pi * t * t * (spec.f_high - spec.f_low) / duration;
}

}  // namespace

Signal synth_chirp(const ChirpSpec& spec, std::size_t n, double sample_rate) {
  if (!(sample_rate > 0.0)) {
    throw std::invalid_argument("synth_chirp: sample_rate must be > 0");
  }
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("synth_chirp: length must be even and >= 2");
  }
  spec.validate(n, sample_rate);
  Signal sig;
  sig.sample_rate = sample_rate;
  sig.samples.assign(n, 0.0);
  const double duration = double(spec.pulse_len) / sample_rate;
  for (std::size_t j = 0; j < spec.pulse_len; ++j) {
    const double t = double(j) / sample_rate;
    sig.samples[spec.start_offset + j] =
        spec.amplitude * std::sin(chirp_phase(spec, t, duration));
  }
  return sig;
}

Signal synth_composite(std::span<const ChirpSpec> chirps,
                       std::span<const HarmonicSpec> harmonics,
                       const NoiseSpec& noise, std::size_t n,
                       double sample_rate) {
  if (!(sample_rate > 0.0)) {
    throw std::invalid_argument("synth_composite: sample_rate must be > 0");
  }
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(
        "synth_composite: length must be even and >= 2");
  }
  for (const auto& c : chirps) c.validate(n, sample_rate);
  for (const auto& h : harmonics) h.validate(sample_rate);
  noise.validate();

  Signal sig;
  sig.sample_rate = sample_rate;
  sig.samples.assign(n, 0.0);

  for (const auto& c : chirps) {
    const double duration = double(c.pulse_len) / sample_rate;
    for (std::size_t j = 0; j < c.pulse_len; ++j) {
      const double t = double(j) / sample_rate;
      sig.samples[c.start_offset + j] +=
          c.amplitude * std::sin(chirp_phase(c, t, duration));
    }
  }
  for (const auto& h : harmonics) {
    for (std::size_t j = 0; j < n; ++j) {
      sig.samples[j] += h.amplitude * std::cos(2.0 * std::numbers::pi * h.freq *
                                               double(j) / sample_rate);
    }
  }
  if (noise.std_dev > 0.0) {
    std::mt19937_64 gen(noise.seed);
    // Box-Muller, cosine branch only: reproducible across standard libraries,
    // unlike std::normal_distribution.
    auto uniform = [&gen]() {
      // (0, 1]: avoids log(0)
      return (double(gen() >> 11) + 1.0) * 0x1.0p-53;
    };
    for (std::size_t j = 0; j < n; ++j) {
      const double u1 = uniform();
      const double u2 = uniform();
      const double z = std::sqrt(-2.0 * std::log(u1)) *
                       std::cos(2.0 * std::numbers::pi * u2);
      sig.samples[j] += noise.std_dev * z;
    }
  }
  return sig;
}

}  // namespace ntewt
