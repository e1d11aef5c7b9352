#pragma once

#include <optional>

#include "ntewt/morlet.hpp"
#include "ntewt/reassign.hpp"
#include "ntewt/signal.hpp"

namespace ntewt {

struct FilterOptions {
  bool parallel = false;
  bool keep_tfr = false;  // also return the NTe TFR
};

struct FilterResult {
  Signal filtered;
  std::optional<Tfr> nte;
  std::vector<std::size_t> row_survivors;  // surviving points per scale row
  double runtime_s = 0.0;
};

// Single-pass reassignment filter. Per scale row: compute the four TFR rows,
// the Newton group-delay metric, threshold against epsilon, renormalize the
// surviving row, and accumulate a[k]*NTe[j,k]*psi[j,k] into the output,
// which is equivalent to reconstruct_from_cwt(reassign(...)). With
// cfg.raw_accumulation the pre-rescaling W coefficient is accumulated
// instead of the renormalized one.
FilterResult ntewt_filter(const Signal& x, const WaveletParams& params,
                          const NtewtConfig& cfg,
                          const FilterOptions& opts = {});

// Reassigned TFR only (no reconstruction), same fused row pipeline.
Tfr ntewt_transform(const Signal& x, const WaveletParams& params,
                    const NtewtConfig& cfg, bool parallel = false);

}  // namespace ntewt
