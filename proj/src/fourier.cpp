#include "bhf/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace bhf {

using std::numbers::pi;

namespace {

// FFTW planning is not thread safe; execution is.
std::mutex plan_mutex;

void run_dft(CVec& x, int sign) {
  const int n = static_cast<int>(x.size());
  auto* p = reinterpret_cast<fftw_complex*>(x.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lk(plan_mutex);
    plan = fftw_plan_dft_1d(n, p, p, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lk(plan_mutex);
  fftw_destroy_plan(plan);
}

// Y_j = 2 sum_k X_k sin(pi (j+1)(k+1)/(n+1))
Vec dst1(const Vec& x) {
  const int n = static_cast<int>(x.size());
  Vec y = x;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lk(plan_mutex);
    plan = fftw_plan_r2r_1d(n, y.data(), y.data(), FFTW_RODFT00, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lk(plan_mutex);
  fftw_destroy_plan(plan);
  return y;
}

Vec radial_forward(const Vec& f, const Grid& g) {
  const Vec r = g.nodes(), p = g.frequencies();
  const Vec y = dst1(f.cwiseProduct(r));
  const double c = std::pow(2 * pi, -1.5) * 4 * pi * g.spacing() / 2;
  return (c * y.array() / p.array()).matrix();
}

Vec radial_inverse(const Vec& fh, const Grid& g) {
  const Vec r = g.nodes(), p = g.frequencies();
  const Vec y = dst1(fh.cwiseProduct(p));
  const double c = std::pow(2 * pi, -1.5) * 4 * pi * g.dp() / 2;
  return (c * y.array() / r.array()).matrix();
}

}  // namespace

CVec fft(const CVec& x) {
  CVec y = x;
  run_dft(y, FFTW_FORWARD);
  return y;
}

CVec ifft(const CVec& x) {
  CVec y = x;
  run_dft(y, FFTW_BACKWARD);
  return y / static_cast<double>(x.size());
}

CVec fourier(const CVec& f, const Grid& g) {
  if (g.dim == Dim::Radial3) {
    CVec out(g.n);
    const Vec re = radial_forward(f.real(), g), im = radial_forward(f.imag(), g);
    for (int j = 0; j < g.n; ++j) out[j] = cplx(re[j], im[j]);
    return out;
  }
  if (g.dim != Dim::One) throw ConfigError("fourier: Cartesian 3D grids are not supported");
  const int n = g.n;
  CVec x = f;
  run_dft(x, FFTW_FORWARD);
  // output index j holds p = (j - n/2) dp, i.e. DFT bin (j - n/2) mod n
  CVec out(n);
  const double c = g.spacing() / std::sqrt(2 * pi);
  for (int j = 0; j < n; ++j) {
    const int m = j - n / 2;
    const int bin = (m + n) % n;
    out[j] = c * (m % 2 ? -1.0 : 1.0) * x[bin];
  }
  return out;
}

CVec fourier(const Vec& f, const Grid& g) { return fourier(CVec(f.cast<cplx>()), g); }

CVec inverse_fourier(const CVec& fh, const Grid& g) {
  if (g.dim == Dim::Radial3) {
    CVec out(g.n);
    const Vec re = radial_inverse(fh.real(), g), im = radial_inverse(fh.imag(), g);
    for (int k = 0; k < g.n; ++k) out[k] = cplx(re[k], im[k]);
    return out;
  }
  if (g.dim != Dim::One) throw ConfigError("fourier: Cartesian 3D grids are not supported");
  const int n = g.n;
  CVec x(n);
  for (int j = 0; j < n; ++j) {
    const int m = j - n / 2;
    x[(m + n) % n] = (m % 2 ? -1.0 : 1.0) * fh[j];
  }
  run_dft(x, FFTW_BACKWARD);
  const double c = g.dp() / std::sqrt(2 * pi);
  CVec out(n);
  for (int k = 0; k < n; ++k) out[k] = c * x[k];
  return out;
}

Vec self_convolution(const Vec& a, const Grid& g) {
  const double c = std::pow(2 * pi, 0.5 * spatial_dim(g.dim));
  const CVec ah = fourier(a, g);
  return inverse_fourier(CVec(c * ah.array().square()), g).real();
}

CVec fourier_direct(const Vec& f, const Grid& g, const Vec& p) {
  const Vec x = g.nodes();
  const double dx = g.spacing();
  CVec out(p.size());
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    if (g.dim == Dim::Radial3) {
      double s = 0;
      for (int k = 0; k < g.n; ++k) s += f[k] * x[k] * std::sin(p[j] * x[k]);
      out[j] = std::pow(2 * pi, -1.5) * 4 * pi * dx * s / p[j];
    } else {
      cplx s = 0;
      for (int k = 0; k < g.n; ++k) s += f[k] * std::exp(cplx(0, -p[j] * x[k]));
      out[j] = dx / std::sqrt(2 * pi) * s;
    }
  }
  return out;
}

Vec interpolate_half(const Vec& f) {
  const int n = static_cast<int>(f.size());
  const CVec fh = fft(CVec(f.cast<cplx>()));
  CVec big = CVec::Zero(2 * n);
  for (int m = 0; m < n / 2; ++m) big[m] = fh[m];
  for (int m = 1; m < n / 2; ++m) big[2 * n - m] = fh[n - m];
  big[n / 2] = 0.5 * fh[n / 2];
  big[2 * n - n / 2] = 0.5 * fh[n / 2];
  return (2.0 * ifft(big)).real();
}

Vec restrict_half(const Vec& f2) {
  const Eigen::Index n = f2.size() / 2;
  Vec f(n);
  for (Eigen::Index k = 0; k < n; ++k) f[k] = f2[2 * k];
  return f;
}

Vec apply_neg_laplacian(const Vec& f, double length) {
  const int n = static_cast<int>(f.size());
  CVec fh = fft(CVec(f.cast<cplx>()));
  for (int b = 0; b < n; ++b) {
    const int m = b < n / 2 ? b : b - n;
    const double p = 2 * pi * m / length;
    fh[b] *= p * p;
  }
  return ifft(fh).real();
}

Vec apply_derivative(const Vec& f, double length) {
  const int n = static_cast<int>(f.size());
  CVec fh = fft(CVec(f.cast<cplx>()));
  for (int b = 0; b < n; ++b) {
    const int m = b < n / 2 ? b : b - n;
    fh[b] *= b == n / 2 ? cplx(0) : cplx(0, 2 * pi * m / length);
  }
  return ifft(fh).real();
}

}  // namespace bhf
