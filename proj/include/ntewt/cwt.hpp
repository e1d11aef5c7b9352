#pragma once

#include "ntewt/morlet.hpp"
#include "ntewt/signal.hpp"
#include "ntewt/tfr.hpp"

namespace ntewt {

// Row-wise FFT evaluation of the four TFRs. For scale row k the frequency-
// domain product is inverse-transformed back to time:
//   W       : idft( xhat[l] *        psi_hat(a[k]*w[l]) )
//   WTpsi   : idft( xhat[l] * i *  D_w psi_hat(a[k]*w[l]) )
//   DbW     : idft( xhat[l] * i * w[l] * psi_hat(a[k]*w[l]) )
//   DbWTpsi : idft( xhat[l] * (-w[l]) * D_w psi_hat(a[k]*w[l]) )
// Rows are independent; with parallel=true they are computed by a thread
// pool, each row writing only its own slot, so results do not depend on
// scheduling.
Tfr compute_w(const Signal& x, const WaveletParams& params,
              bool parallel = false);
Tfr compute_w_tpsi(const Signal& x, const WaveletParams& params,
                   bool parallel = false);
Tfr compute_db_w(const Signal& x, const WaveletParams& params,
                 bool parallel = false);
Tfr compute_db_w_tpsi(const Signal& x, const WaveletParams& params,
                      bool parallel = false);

// Coefficient-wise reconstruction
//   x_rec[l] = 2*Re( sum_j sum_k a[k] * coeffs[j,k] * psi[j,k][l] ),
// evaluated per scale row as a circular convolution of the coefficient row
// with the time-domain wavelet. The result is defined up to a scaling
// constant; compare via correlation or a least-squares amplitude fit.
// Accepts only W or NTe kinds.
Signal reconstruct_from_cwt(const Tfr& tfr, const WaveletParams& params);

// Time-domain wavelet atom psi[j,k]: inverse DFT of the sampled Morlet
// spectrum at scale a[k], circularly shifted so the atom is centered at
// time index j. Atoms at fixed k differ only by circular shift.
std::vector<cplx> wavelet_atom(const ScaleGrid& grid,
                               const WaveletParams& params, std::size_t j,
                               std::size_t k);

}  // namespace ntewt
