#pragma once

#include "bhf/grid.hpp"

namespace bhf {

// Unitary transform f^(p) = (2 pi)^{-d/2} int f(x) e^{-i p x} dx sampled on grid.frequencies().
// Periodic grids use the FFT with the node offset folded into the phase; radial grids use the
// sine transform f^(p) = (2 pi)^{-3/2} (4 pi / p) int f(r) sin(p r) r dr.
CVec fourier(const CVec& f, const Grid& grid);
CVec fourier(const Vec& f, const Grid& grid);
CVec inverse_fourier(const CVec& fh, const Grid& grid);

// (a * a)(x) = int a(y) a(x - y) dy through the transform, (a*a)^ = (2 pi)^{d/2} a^2.
Vec self_convolution(const Vec& a, const Grid& grid);

// Raw periodic FFT helpers (no normalisation), forward sign -1.
CVec fft(const CVec& x);
CVec ifft(const CVec& x);  // includes the 1/n

// Band-limited interpolation of periodic samples onto the half-step grid (2n points,
// node s sits at -L/2 + s dx/2). The Nyquist coefficient is split evenly so real input stays real.
Vec interpolate_half(const Vec& f);
// Keep every second point of a half-step sample vector.
Vec restrict_half(const Vec& f2);

// Spectral -d^2/dx^2 applied to periodic samples.
Vec apply_neg_laplacian(const Vec& f, double length);
// Spectral derivative of periodic samples (Nyquist mode dropped).
Vec apply_derivative(const Vec& f, double length);

// Plain Riemann-sum evaluation of the transform at arbitrary frequencies; used for refinement
// and as a cross-check of the fast paths.
CVec fourier_direct(const Vec& f, const Grid& grid, const Vec& p);

}  // namespace bhf
