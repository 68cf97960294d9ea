#include "mrisamp/tensor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mrisamp {

namespace {

// In-place 1-D unitary-free DFT of `v` (length n), sign = -1 forward,
// +1 inverse. Radix-2 Cooley-Tukey when n is a power of two, otherwise a
// direct O(n^2) transform (grids here are <= 64 wide).
void dft1(std::vector<cplx> &v, int sign) {
  const std::size_t n = v.size();
  if (n <= 1) return;
  if ((n & (n - 1)) == 0) {
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
      const cplx wlen(std::cos(ang), std::sin(ang));
      for (std::size_t i = 0; i < n; i += len) {
        cplx w(1.0, 0.0);
        for (std::size_t k = 0; k < len / 2; ++k) {
          const cplx u = v[i + k];
          const cplx t = v[i + k + len / 2] * w;
          v[i + k] = u + t;
          v[i + k + len / 2] = u - t;
          w *= wlen;
        }
      }
    }
  } else {
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k * j) /
                           static_cast<double>(n);
        out[k] += v[j] * cplx(std::cos(ang), std::sin(ang));
      }
    }
    v = std::move(out);
  }
}

// Centered 2-D transform core: ifftshift -> row/col DFT -> fftshift, then
// scale by 1/sqrt(HW). `sign` as in dft1.
std::vector<cplx> fft2_core(const std::vector<cplx> &in, int h, int w, int sign) {
  if (h < 1 || w < 1) throw std::invalid_argument("fft2: zero-size grid");
  const std::size_t n = static_cast<std::size_t>(h) * w;
  std::vector<cplx> buf(n);

  // ifftshift: move the centered origin (h/2, w/2) to (0, 0).
  const int r0 = h / 2, c0 = w / 2;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      buf[static_cast<std::size_t>(r) * w + c] =
          in[static_cast<std::size_t>((r + r0) % h) * w + (c + c0) % w];

  std::vector<cplx> line;
  line.reserve(static_cast<std::size_t>(std::max(h, w)));
  for (int r = 0; r < h; ++r) {
    line.assign(buf.begin() + static_cast<std::ptrdiff_t>(r) * w,
                buf.begin() + static_cast<std::ptrdiff_t>(r + 1) * w);
    dft1(line, sign);
    std::copy(line.begin(), line.end(), buf.begin() + static_cast<std::ptrdiff_t>(r) * w);
  }
  for (int c = 0; c < w; ++c) {
    line.resize(static_cast<std::size_t>(h));
    for (int r = 0; r < h; ++r) line[static_cast<std::size_t>(r)] = buf[static_cast<std::size_t>(r) * w + c];
    dft1(line, sign);
    for (int r = 0; r < h; ++r) buf[static_cast<std::size_t>(r) * w + c] = line[static_cast<std::size_t>(r)];
  }

  // fftshift: move origin (0,0) back to the centered position.
  std::vector<cplx> out(n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  const int r1 = (h + 1) / 2, c1 = (w + 1) / 2;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      out[static_cast<std::size_t>(r) * w + c] =
          buf[static_cast<std::size_t>((r + r1) % h) * w + (c + c1) % w] * s;
  return out;
}

} // namespace

KSpaceGrid fft2_centered(const ComplexImage &img) {
  KSpaceGrid g(img.h, img.w);
  g.data = fft2_core(img.data, img.h, img.w, -1);
  return g;
}

ComplexImage ifft2_centered(const KSpaceGrid &grid) {
  ComplexImage img(grid.h, grid.w);
  img.data = fft2_core(grid.data, grid.h, grid.w, +1);
  return img;
}

ComplexImage gaussian_complex(Rng &rng, int h, int w, double std) {
  if (std < 0.0) throw std::invalid_argument("gaussian_complex: std < 0");
  return gaussian_channels(rng, h, w, std / std::numbers::sqrt2);
}

ComplexImage gaussian_channels(Rng &rng, int h, int w, double std) {
  ComplexImage out(h, w);
  if (std == 0.0) return out;
  for (auto &z : out.data) z = cplx(std * rng.normal(), std * rng.normal());
  return out;
}

void axpy(cplx a, const ComplexImage &x, ComplexImage &y) {
  for (std::size_t i = 0; i < x.data.size(); ++i) y.data[i] += a * x.data[i];
}

ComplexImage add(const ComplexImage &a, const ComplexImage &b) {
  ComplexImage out(a.h, a.w);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
  return out;
}

ComplexImage sub(const ComplexImage &a, const ComplexImage &b) {
  ComplexImage out(a.h, a.w);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
  return out;
}

ComplexImage scale(const ComplexImage &a, double s) {
  ComplexImage out(a.h, a.w);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * s;
  return out;
}

namespace {
template <typename T> double dot_real_impl(const T &a, const T &b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    acc += a.data[i].real() * b.data[i].real() + a.data[i].imag() * b.data[i].imag();
  return acc;
}
template <typename T> cplx dot_cplx_impl(const T &a, const T &b) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.data.size(); ++i) acc += std::conj(a.data[i]) * b.data[i];
  return acc;
}
} // namespace

double dot_real(const ComplexImage &a, const ComplexImage &b) { return dot_real_impl(a, b); }
double dot_real(const KSpaceGrid &a, const KSpaceGrid &b) { return dot_real_impl(a, b); }
cplx dot_cplx(const ComplexImage &a, const ComplexImage &b) { return dot_cplx_impl(a, b); }
cplx dot_cplx(const KSpaceGrid &a, const KSpaceGrid &b) { return dot_cplx_impl(a, b); }

double norm2(const ComplexImage &a) { return std::sqrt(dot_real(a, a)); }
double norm2(const KSpaceGrid &a) { return std::sqrt(dot_real(a, a)); }

bool all_finite(const ComplexImage &a) {
  for (const auto &z : a.data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

} // namespace mrisamp
