#include "ntewt/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ntewt {

namespace detail {

struct FftTables {
  std::size_t n = 0;
  bool pow2 = false;

  // radix-2 path
  std::vector<std::size_t> bitrev;
  std::vector<cplx> twiddle;  // exp(-2*pi*i*k/n), k < n/2

  // Bluestein path
  std::size_t m = 0;  // padded power-of-two length, m >= 2n-1
  std::vector<cplx> chirp;     // exp(-i*pi*j^2/n)
  std::vector<cplx> chirp_fft;  // FFT_m of the wrapped conjugate chirp
  std::shared_ptr<const FftTables> inner;
};

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void pow2_transform(const FftTables& t, cplx* data, bool invert) {
  const std::size_t n = t.n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = t.bitrev[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        cplx w = t.twiddle[k * stride];
        if (invert) w = std::conj(w);
        const cplx u = data[start + k];
        const cplx v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

std::shared_ptr<const FftTables> get_tables(std::size_t n);

std::shared_ptr<const FftTables> build_tables(std::size_t n) {
  auto t = std::make_shared<FftTables>();
  t->n = n;
  t->pow2 = is_pow2(n);
  if (t->pow2) {
    t->bitrev.resize(n);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t bit = 0; bit < log2n; ++bit) {
        r |= ((i >> bit) & 1u) << (log2n - 1 - bit);
      }
      t->bitrev[i] = r;
    }
    t->twiddle.resize(n / 2 > 0 ? n / 2 : 1);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double ang = -2.0 * std::numbers::pi * double(k) / double(n);
      t->twiddle[k] = cplx(std::cos(ang), std::sin(ang));
    }
  } else {
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    t->m = m;
    t->inner = get_tables(m);
    t->chirp.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      // j^2 reduced mod 2n keeps the twiddle angles small and exact
      const auto q = static_cast<unsigned long long>(j) * j % (2 * n);
      const double ang = -std::numbers::pi * double(q) / double(n);
      t->chirp[j] = cplx(std::cos(ang), std::sin(ang));
    }
    std::vector<cplx> b(m, cplx(0.0, 0.0));
    b[0] = std::conj(t->chirp[0]);
    for (std::size_t j = 1; j < n; ++j) {
      b[j] = std::conj(t->chirp[j]);
      b[m - j] = b[j];
    }
    pow2_transform(*t->inner, b.data(), false);
    t->chirp_fft = std::move(b);
  }
  return t;
}

std::shared_ptr<const FftTables> get_tables(std::size_t n) {
  static std::mutex mtx;
  static std::map<std::size_t, std::shared_ptr<const FftTables>> cache;
  {
    std::scoped_lock lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto t = build_tables(n);
  std::scoped_lock lock(mtx);
  auto [it, inserted] = cache.emplace(n, std::move(t));
  return it->second;
}

}  // namespace

}  // namespace detail

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Fft: length must be nonzero");
  tables_ = detail::get_tables(n);
  if (!tables_->pow2) {
    work_a_.resize(tables_->m);
    work_b_.resize(tables_->m);
  }
}

void Fft::pow2_transform(cplx* data, bool invert) const {
  detail::pow2_transform(*tables_, data, invert);
}

void Fft::bluestein(std::span<const cplx> in, std::span<cplx> out,
                    bool invert) {
  const auto& t = *tables_;
  const std::size_t n = n_;
  const std::size_t m = t.m;
  std::fill(work_a_.begin(), work_a_.end(), cplx(0.0, 0.0));
  if (invert) {
    for (std::size_t j = 0; j < n; ++j) {
      work_a_[j] = std::conj(in[j]) * t.chirp[j];
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) work_a_[j] = in[j] * t.chirp[j];
  }
  detail::pow2_transform(*t.inner, work_a_.data(), false);
  for (std::size_t k = 0; k < m; ++k) work_a_[k] *= t.chirp_fft[k];
  detail::pow2_transform(*t.inner, work_a_.data(), true);
  const double inv_m = 1.0 / double(m);
  if (invert) {
    const double inv_n = 1.0 / double(n);
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = std::conj(work_a_[k] * t.chirp[k] * inv_m) * inv_n;
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = work_a_[k] * t.chirp[k] * inv_m;
    }
  }
}

void Fft::forward(std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != n_ || out.size() != n_) {
    throw std::invalid_argument("Fft::forward: size mismatch");
  }
  if (tables_->pow2) {
    if (out.data() != in.data()) std::copy(in.begin(), in.end(), out.begin());
    pow2_transform(out.data(), false);
  } else {
    bluestein(in, out, false);
  }
}

void Fft::inverse(std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != n_ || out.size() != n_) {
    throw std::invalid_argument("Fft::inverse: size mismatch");
  }
  if (tables_->pow2) {
    if (out.data() != in.data()) std::copy(in.begin(), in.end(), out.begin());
    pow2_transform(out.data(), true);
    const double inv_n = 1.0 / double(n_);
    for (auto& v : out) v *= inv_n;
  } else {
    bluestein(in, out, true);
  }
}

std::vector<cplx> dft(std::span<const double> x) {
  std::vector<cplx> in(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) in[i] = cplx(x[i], 0.0);
  return dft(std::span<const cplx>(in));
}

std::vector<cplx> dft(std::span<const cplx> x) {
  if (x.empty()) throw std::invalid_argument("dft: empty input");
  Fft fft(x.size());
  std::vector<cplx> out(x.size());
  fft.forward(x, out);
  return out;
}

std::vector<cplx> idft(std::span<const cplx> x) {
  if (x.empty()) throw std::invalid_argument("idft: empty input");
  Fft fft(x.size());
  std::vector<cplx> out(x.size());
  fft.inverse(x, out);
  return out;
}

}  // namespace ntewt
