#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mrisamp/rng.hpp"

namespace mrisamp {

using cplx = std::complex<double>;

/// H x W complex image stored row-major. Equivalently two real channels
/// (real and imaginary); every real-valued gradient in this codebase is
/// packaged the same way: grad.real = dL/d(Re x), grad.imag = dL/d(Im x).
struct ComplexImage {
  int h = 0;
  int w = 0;
  std::vector<cplx> data;

  ComplexImage() = default;
  ComplexImage(int h_, int w_) : h(h_), w(w_), data(static_cast<std::size_t>(h_) * w_) {}

  cplx &at(int r, int c) { return data[static_cast<std::size_t>(r) * w + c]; }
  const cplx &at(int r, int c) const { return data[static_cast<std::size_t>(r) * w + c]; }
  std::size_t size() const { return data.size(); }
};

/// H x W complex Fourier-domain grid, DC-centered: the zero-frequency
/// coefficient lives at (floor(H/2), floor(W/2)). Every producer and
/// consumer of k-space in this project uses this layout.
struct KSpaceGrid {
  int h = 0;
  int w = 0;
  std::vector<cplx> data;

  KSpaceGrid() = default;
  KSpaceGrid(int h_, int w_) : h(h_), w(w_), data(static_cast<std::size_t>(h_) * w_) {}

  cplx &at(int r, int c) { return data[static_cast<std::size_t>(r) * w + c]; }
  const cplx &at(int r, int c) const { return data[static_cast<std::size_t>(r) * w + c]; }
  std::size_t size() const { return data.size(); }
};

/// Orthonormal centered 2-D DFT: unitary (1/sqrt(HW) both directions),
/// DC-centered output. Throws std::invalid_argument on zero-size input.
KSpaceGrid fft2_centered(const ComplexImage &img);

/// Exact inverse of fft2_centered (same normalization).
ComplexImage ifft2_centered(const KSpaceGrid &grid);

/// i.i.d. complex Gaussian noise: real and imaginary parts each
/// N(0, std^2/2) so the per-complex-entry variance is std^2.
ComplexImage gaussian_complex(Rng &rng, int h, int w, double std);

/// i.i.d. Gaussian noise with per-channel std: real and imaginary parts
/// each N(0, std^2). This is the convention of the diffusion process
/// x_t = x_0 + sigma * eps over two-channel real images; equals
/// gaussian_complex with std * sqrt(2).
ComplexImage gaussian_channels(Rng &rng, int h, int w, double std);

// Elementwise helpers over the flat storage. Shapes must agree.
void axpy(cplx a, const ComplexImage &x, ComplexImage &y);   // y += a*x
ComplexImage add(const ComplexImage &a, const ComplexImage &b);
ComplexImage sub(const ComplexImage &a, const ComplexImage &b);
ComplexImage scale(const ComplexImage &a, double s);

/// Real inner product over the 2*H*W real coordinates:
/// sum_i Re(conj(a_i) * b_i).
double dot_real(const ComplexImage &a, const ComplexImage &b);
double dot_real(const KSpaceGrid &a, const KSpaceGrid &b);

/// Complex inner product <a, b> = sum conj(a_i) b_i.
cplx dot_cplx(const ComplexImage &a, const ComplexImage &b);
cplx dot_cplx(const KSpaceGrid &a, const KSpaceGrid &b);

/// l2 norm over all real coordinates (= sqrt of sum of |.|^2).
double norm2(const ComplexImage &a);
double norm2(const KSpaceGrid &a);

bool all_finite(const ComplexImage &a);

} // namespace mrisamp
