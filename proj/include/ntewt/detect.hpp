#pragma once

#include <vector>

#include "ntewt/signal.hpp"

namespace ntewt {

// Matched-filter output. response[i] is the full linear cross-correlation of
// x with the template at lag i - (template length - 1); lags run from
// -(m-1) to n-1. peak_index is the lag of the largest |response|.
// peak_to_sidelobe_db excludes a window of one template length on each side
// of the peak.
struct DetectionReport {
  std::vector<double> response;
  long peak_index = 0;
  double peak_value = 0.0;
  double peak_to_sidelobe_db = 0.0;
};

DetectionReport matched_filter(const Signal& x, const Signal& tmpl);

// Difference of peak-to-sidelobe ratios, filtered minus raw, in dB. Throws
// std::domain_error when either response is degenerate (all zero).
double detection_gain(const DetectionReport& raw,
                      const DetectionReport& filtered);

}  // namespace ntewt
