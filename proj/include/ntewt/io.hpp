#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "ntewt/bench.hpp"
#include "ntewt/detect.hpp"
#include "ntewt/signal.hpp"
#include "ntewt/tfr.hpp"

namespace ntewt::io {

// Signal formats.
//   CSV: one decimal sample per line.
//   Binary: magic "NTESIG01", u32 LE n, f64 LE sample_rate, n f64 LE samples.
// CSV carries no sample rate; readers take it as a parameter.
void write_signal_csv(const std::filesystem::path& path, const Signal& sig);
Signal read_signal_csv(const std::filesystem::path& path, double sample_rate);
void write_signal_bin(const std::filesystem::path& path, const Signal& sig);
Signal read_signal_bin(const std::filesystem::path& path);

// Autodetects binary vs CSV by the magic bytes.
Signal read_signal(const std::filesystem::path& path, double csv_sample_rate);

// TFR binary: magic "NTETFR01", u32 LE n, u32 LE n_rows, u8 kind tag, then
// scale-row-major f64 LE (re, im) pairs. The grid is reconstructed from
// (n, omega_psi, sample_rate) passed by the reader.
void write_tfr_bin(const std::filesystem::path& path, const Tfr& tfr);
Tfr read_tfr_bin(const std::filesystem::path& path, double omega_psi,
                 double sample_rate);

// Scalogram (|coeffs|) as a CSV matrix: one row per scale in ascending
// center frequency, prefixed by a header line of center frequencies in Hz.
void write_scalogram_csv(const std::filesystem::path& path, const Tfr& tfr);

// Same layout for a real matrix (e.g. the log fixed-point metric).
void write_matrix_csv(const std::filesystem::path& path,
                      std::span<const double> values, const ScaleGrid& grid);

// 8-bit grayscale PGM of |coeffs|, normalized to the global peak; row 0 is
// the highest-frequency scale so the image reads like the usual scalogram
// plots.
void write_scalogram_pgm(const std::filesystem::path& path, const Tfr& tfr);

void write_bench_csv(const std::filesystem::path& path,
                     std::span<const BenchRecord> records);

// Key-value text record plus the response vector as CSV.
void write_detection_report(const std::filesystem::path& report_path,
                            const std::filesystem::path& response_path,
                            const DetectionReport& report);

}  // namespace ntewt::io
