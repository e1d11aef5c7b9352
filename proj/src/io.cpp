#include "ntewt/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ntewt::io {

namespace {

constexpr char kSignalMagic[8] = {'N', 'T', 'E', 'S', 'I', 'G', '0', '1'};
constexpr char kTfrMagic[8] = {'N', 'T', 'E', 'T', 'F', 'R', '0', '1'};

[[noreturn]] void io_fail(const std::filesystem::path& path,
                          const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) io_fail(path, "cannot open for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) io_fail(path, "cannot open for reading");
  return in;
}

// Little-endian scalar I/O; byte-swaps on big-endian hosts.
template <typename T>
void put_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes, bytes + sizeof(T));
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  in.read(reinterpret_cast<char*>(bytes), sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes, bytes + sizeof(T));
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

void write_double_text(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

void write_signal_csv(const std::filesystem::path& path, const Signal& sig) {
  auto out = open_out(path, false);
  for (double v : sig.samples) {
    write_double_text(out, v);
    out << '\n';
  }
  if (!out) io_fail(path, "write error");
}

Signal read_signal_csv(const std::filesystem::path& path, double sample_rate) {
  auto in = open_in(path, false);
  Signal sig;
  sig.sample_rate = sample_rate;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    while (end && (*end == ' ' || *end == '\r' || *end == '\t')) ++end;
    if (end == line.c_str() || (end && *end != '\0')) {
      io_fail(path, "parse error at line " + std::to_string(lineno));
    }
    sig.samples.push_back(v);
  }
  if (sig.samples.empty()) io_fail(path, "no samples");
  return sig;
}

void write_signal_bin(const std::filesystem::path& path, const Signal& sig) {
  auto out = open_out(path, true);
  out.write(kSignalMagic, sizeof(kSignalMagic));
  put_le<std::uint32_t>(out, std::uint32_t(sig.samples.size()));
  put_le<double>(out, sig.sample_rate);
  for (double v : sig.samples) put_le<double>(out, v);
  if (!out) io_fail(path, "write error");
}

Signal read_signal_bin(const std::filesystem::path& path) {
  auto in = open_in(path, true);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kSignalMagic, sizeof(magic)) != 0) {
    io_fail(path, "bad magic (not an NTESIG01 file)");
  }
  const auto n = get_le<std::uint32_t>(in);
  Signal sig;
  sig.sample_rate = get_le<double>(in);
  sig.samples.resize(n);
  for (auto& v : sig.samples) v = get_le<double>(in);
  if (!in) io_fail(path, "truncated file");
  return sig;
}

Signal read_signal(const std::filesystem::path& path, double csv_sample_rate) {
  {
    auto in = open_in(path, true);
    char magic[8] = {};
    in.read(magic, sizeof(magic));
    if (in && std::memcmp(magic, kSignalMagic, sizeof(magic)) == 0) {
      return read_signal_bin(path);
    }
  }
  return read_signal_csv(path, csv_sample_rate);
}

void write_tfr_bin(const std::filesystem::path& path, const Tfr& tfr) {
  auto out = open_out(path, true);
  out.write(kTfrMagic, sizeof(kTfrMagic));
  put_le<std::uint32_t>(out, std::uint32_t(tfr.n()));
  put_le<std::uint32_t>(out, std::uint32_t(tfr.rows()));
  put_le<std::uint8_t>(out, std::uint8_t(tfr.kind()));
  for (std::size_t k = 0; k < tfr.rows(); ++k) {
    const cplx* row = tfr.row(k);
    for (std::size_t j = 0; j < tfr.n(); ++j) {
      put_le<double>(out, row[j].real());
      put_le<double>(out, row[j].imag());
    }
  }
  if (!out) io_fail(path, "write error");
}

Tfr read_tfr_bin(const std::filesystem::path& path, double omega_psi,
                 double sample_rate) {
  auto in = open_in(path, true);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kTfrMagic, sizeof(magic)) != 0) {
    io_fail(path, "bad magic (not an NTETFR01 file)");
  }
  const auto n = get_le<std::uint32_t>(in);
  const auto rows = get_le<std::uint32_t>(in);
  const auto kind = get_le<std::uint8_t>(in);
  if (kind > std::uint8_t(TfrKind::NTe)) io_fail(path, "bad kind tag");
  if (n < 4 || n % 2 != 0 || rows != n / 2) io_fail(path, "bad dimensions");
  Tfr tfr(TfrKind(kind), ScaleGrid(n, omega_psi, sample_rate));
  for (std::size_t k = 0; k < tfr.rows(); ++k) {
    cplx* row = tfr.row(k);
    for (std::size_t j = 0; j < n; ++j) {
      const double re = get_le<double>(in);
      const double im = get_le<double>(in);
      row[j] = cplx(re, im);
    }
  }
  if (!in) io_fail(path, "truncated file");
  return tfr;
}

void write_scalogram_csv(const std::filesystem::path& path, const Tfr& tfr) {
  auto out = open_out(path, false);
  const ScaleGrid& grid = tfr.grid();
  // center frequencies ascend with k, so rows are emitted in k order
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    if (k) out << ',';
    write_double_text(out, grid.center_freq_hz[k]);
  }
  out << '\n';
  for (std::size_t k = 0; k < tfr.rows(); ++k) {
    const cplx* row = tfr.row(k);
    for (std::size_t j = 0; j < tfr.n(); ++j) {
      if (j) out << ',';
      write_double_text(out, std::abs(row[j]));
    }
    out << '\n';
  }
  if (!out) io_fail(path, "write error");
}

void write_matrix_csv(const std::filesystem::path& path,
                      std::span<const double> values, const ScaleGrid& grid) {
  if (values.size() != grid.rows() * grid.n) {
    throw std::invalid_argument("write_matrix_csv: size mismatch");
  }
  auto out = open_out(path, false);
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    if (k) out << ',';
    write_double_text(out, grid.center_freq_hz[k]);
  }
  out << '\n';
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    for (std::size_t j = 0; j < grid.n; ++j) {
      if (j) out << ',';
      write_double_text(out, values[k * grid.n + j]);
    }
    out << '\n';
  }
  if (!out) io_fail(path, "write error");
}

void write_scalogram_pgm(const std::filesystem::path& path, const Tfr& tfr) {
  auto out = open_out(path, true);
  double peak = 0.0;
  for (const cplx& v : tfr.data()) peak = std::max(peak, std::abs(v));
  out << "P5\n" << tfr.n() << ' ' << tfr.rows() << "\n255\n";
  for (std::size_t k = tfr.rows(); k-- > 0;) {
    const cplx* row = tfr.row(k);
    for (std::size_t j = 0; j < tfr.n(); ++j) {
      const double v = peak > 0.0 ? std::abs(row[j]) / peak : 0.0;
      out.put(char(std::lround(v * 255.0)));
    }
  }
  if (!out) io_fail(path, "write error");
}

void write_bench_csv(const std::filesystem::path& path,
                     std::span<const BenchRecord> records) {
  auto out = open_out(path, false);
  out << "n,mean_runtime_s,max_realtime_fs_hz\n";
  for (const auto& rec : records) {
    out << rec.n << ',';
    write_double_text(out, rec.mean_runtime_s);
    out << ',';
    write_double_text(out, rec.max_realtime_fs_hz);
    out << '\n';
  }
  if (!out) io_fail(path, "write error");
}

void write_detection_report(const std::filesystem::path& report_path,
                            const std::filesystem::path& response_path,
                            const DetectionReport& report) {
  {
    auto out = open_out(report_path, false);
    out << "peak_index=" << report.peak_index << '\n';
    out << "peak_value=";
    write_double_text(out, report.peak_value);
    out << '\n';
    out << "peak_to_sidelobe_db=";
    write_double_text(out, report.peak_to_sidelobe_db);
    out << '\n';
    if (!out) io_fail(report_path, "write error");
  }
  auto out = open_out(response_path, false);
  for (double v : report.response) {
    write_double_text(out, v);
    out << '\n';
  }
  if (!out) io_fail(response_path, "write error");
}

}  // namespace ntewt::io
