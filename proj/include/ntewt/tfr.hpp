#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ntewt {

using cplx = std::complex<double>;

// Discrete scale/time/frequency grids:
//   a[k] = 1/(k+1), k = 0..n/2-1
//   b[j] = j/n,     j = 0..n-1
//   w[l] = 2*pi*l,  l = 0..n-1
// center_freq_hz[k] maps scale row k to a physical frequency:
// a[k]*w = omega_psi at bin resolution fs/n gives
//   f_center[k] = (k+1) * omega_psi/(2*pi) * (fs/n).
struct ScaleGrid {
  std::size_t n = 0;
  double sample_rate = 1.0;
  double omega_psi = 6.0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> omega;
  std::vector<double> center_freq_hz;

  ScaleGrid() = default;
  ScaleGrid(std::size_t n, double omega_psi, double sample_rate);

  std::size_t rows() const { return n / 2; }
};

enum class TfrKind : std::uint8_t {
  W = 0,        // wavelet TFR
  WTpsi = 1,    // TFR against t*psi
  DbW = 2,      // time derivative of W
  DbWTpsi = 3,  // time derivative of WTpsi
  NTe = 4,      // reassigned TFR
};

// Dense complex TFR, n/2 scale rows by n time columns. Stored scale-major:
// row k is contiguous over time index j.
class Tfr {
 public:
  Tfr() = default;
  Tfr(TfrKind kind, ScaleGrid grid)
      : kind_(kind), grid_(std::move(grid)),
        data_(grid_.rows() * grid_.n, cplx(0.0, 0.0)) {}

  TfrKind kind() const { return kind_; }
  const ScaleGrid& grid() const { return grid_; }
  std::size_t n() const { return grid_.n; }
  std::size_t rows() const { return grid_.rows(); }

  cplx* row(std::size_t k) { return data_.data() + k * grid_.n; }
  const cplx* row(std::size_t k) const { return data_.data() + k * grid_.n; }

  cplx& at(std::size_t j, std::size_t k) { return data_[k * grid_.n + j]; }
  const cplx& at(std::size_t j, std::size_t k) const {
    return data_[k * grid_.n + j];
  }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

 private:
  TfrKind kind_ = TfrKind::W;
  ScaleGrid grid_;
  std::vector<cplx> data_;
};

}  // namespace ntewt
