#include "ntewt/detect.hpp"

#include <cmath>
#include <stdexcept>

#include "ntewt/kernels.hpp"

namespace ntewt {

DetectionReport matched_filter(const Signal& x, const Signal& tmpl) {
  const std::size_t n = x.size();
  const std::size_t m = tmpl.size();
  if (m == 0) throw std::invalid_argument("matched_filter: empty template");
  if (m > n) {
    throw std::invalid_argument("matched_filter: template longer than signal");
  }
  const auto& ops = kernels::active();

  DetectionReport report;
  report.response.resize(n + m - 1);
  // linear (zero-padded) correlation: lag runs from -(m-1) to n-1
  for (std::size_t i = 0; i < report.response.size(); ++i) {
    const long lag = long(i) - long(m - 1);
    const std::size_t x_start = lag > 0 ? std::size_t(lag) : 0;
    const std::size_t t_start = lag > 0 ? 0 : std::size_t(-lag);
    const std::size_t len = std::min(n - x_start, m - t_start);
    report.response[i] = ops.dot_real(x.samples.data() + x_start,
                                      tmpl.samples.data() + t_start, len);
  }

  std::size_t peak_i = 0;
  double peak_abs = -1.0;
  for (std::size_t i = 0; i < report.response.size(); ++i) {
    const double v = std::abs(report.response[i]);
    if (v > peak_abs) {
      peak_abs = v;
      peak_i = i;
    }
  }
  report.peak_index = long(peak_i) - long(m - 1);
  report.peak_value = peak_abs;

  double sidelobe = 0.0;
  bool has_sidelobe = false;
  for (std::size_t i = 0; i < report.response.size(); ++i) {
    const std::size_t dist = i > peak_i ? i - peak_i : peak_i - i;
    if (dist <= m) continue;
    sidelobe = std::max(sidelobe, std::abs(report.response[i]));
    has_sidelobe = true;
  }
  if (!has_sidelobe || peak_abs == 0.0) {
    report.peak_to_sidelobe_db = 0.0;
  } else if (sidelobe == 0.0) {
    report.peak_to_sidelobe_db = std::numeric_limits<double>::infinity();
  } else {
    report.peak_to_sidelobe_db = 20.0 * std::log10(peak_abs / sidelobe);
  }
  return report;
}

double detection_gain(const DetectionReport& raw,
                      const DetectionReport& filtered) {
  if (raw.peak_value == 0.0 || filtered.peak_value == 0.0) {
    throw std::domain_error("detection_gain: degenerate (all-zero) response");
  }
  return filtered.peak_to_sidelobe_db - raw.peak_to_sidelobe_db;
}

}  // namespace ntewt
