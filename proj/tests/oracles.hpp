#pragma once

// Independent reference values used by the tests. Nothing here calls the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using std::numbers::pi;

// Scalar root by bisection, f(lo) and f(hi) of opposite sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// s-wave bound state of -2u'' + V u with V = -depth on r < a: k cot(ka) = -q,
// k = sqrt((depth - E_b)/2), q = sqrt(E_b/2). Returns the deepest root.
inline double square_well_binding(double depth, double a) {
  auto f = [&](double eb) {
    const double k = std::sqrt((depth - eb) / 2), q = std::sqrt(eb / 2);
    return std::cos(k * a) * k + q * std::sin(k * a);
  };
  // scan downward from depth for the first sign change (ground state = largest E_b)
  const int m = 20000;
  double prev = depth * (1 - 1e-12);
  double fprev = f(prev);
  for (int i = m - 1; i > 0; --i) {
    const double eb = depth * i / m;
    const double fe = f(eb);
    if ((fe < 0) != (fprev < 0)) return bisect(f, eb, prev);
    prev = eb;
    fprev = fe;
  }
  return 0;
}

// Same bound state by RK4 shooting of u'' = (V - E)/2 u from u(0)=0 to the well edge, with E
// chosen so the log-derivative matches the decaying tail e^{-q r}.
inline double square_well_shooting(double depth, double a, int steps = 20000) {
  auto tail_mismatch = [&](double eb) {
    const double E = -eb;
    auto acc = [&](double r, double u) { return ((r < a ? -depth : 0.0) - E) / 2 * u; };
    double r = 0, u = 0, v = 1;
    const double h = a / steps;
    while (r < a - 0.5 * h) {
      const double k1u = v, k1v = acc(r, u);
      const double k2u = v + 0.5 * h * k1v, k2v = acc(r + 0.5 * h, u + 0.5 * h * k1u);
      const double k3u = v + 0.5 * h * k2v, k3v = acc(r + 0.5 * h, u + 0.5 * h * k2u);
      const double k4u = v + h * k3v, k4v = acc(r + h, u + h * k3u);
      u += h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
      v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
      r += h;
    }
    const double q = std::sqrt(eb / 2);
    return v + q * u;
  };
  // bracket: scan from the top
  const int m = 4000;
  double prev = depth * (1 - 1e-9), fprev = tail_mismatch(prev);
  for (int i = m - 1; i > 0; --i) {
    const double eb = depth * i / m;
    const double fe = tail_mismatch(eb);
    if ((fe < 0) != (fprev < 0)) return bisect(tail_mismatch, eb, prev, 100);
    prev = eb;
    fprev = fe;
  }
  return 0;
}

// unitary 3D transform of the ball indicator
inline double ball_fourier(double p, double a) {
  return std::pow(2 * pi, -1.5) * 4 * pi * (std::sin(p * a) - p * a * std::cos(p * a)) / (p * p * p);
}

// int_R3 e^{-a r^2} d^3x
inline double gauss3(double a) { return std::pow(pi / a, 1.5); }


// Lowest eigenpair of the symmetric tridiagonal (d, e): Sturm bisection, then inverse iteration.
inline double tridiag_lowest(const std::vector<double>& d, const std::vector<double>& e, std::vector<double>& vec) {
  const size_t n = d.size();
  auto count_below = [&](double x) {
    int c = 0;
    double q = d[0] - x;
    if (q < 0) ++c;
    for (size_t k = 1; k < n; ++k) {
      q = d[k] - x - e[k - 1] * e[k - 1] / (q == 0 ? 1e-300 : q);
      if (q < 0) ++c;
    }
    return c;
  };
  double lo = 1e300, hi = -1e300;
  for (size_t k = 0; k < n; ++k) {
    const double rad = (k > 0 ? std::abs(e[k - 1]) : 0) + (k + 1 < n ? std::abs(e[k]) : 0);
    lo = std::min(lo, d[k] - rad);
    hi = std::max(hi, d[k] + rad);
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (count_below(mid) >= 1 ? hi : lo) = mid;
  }
  const double lam = 0.5 * (lo + hi), shift = lam - 1e-10 * std::max(1.0, std::abs(lam));
  vec.assign(n, 1.0);
  for (int it = 0; it < 3; ++it) {
    std::vector<double> c(n), rhs = vec, diag(n);
    for (size_t k = 0; k < n; ++k) diag[k] = d[k] - shift;
    c[0] = e[0] / diag[0];
    rhs[0] /= diag[0];
    for (size_t k = 1; k < n; ++k) {
      const double m = diag[k] - e[k - 1] * c[k - 1];
      if (k + 1 < n) c[k] = e[k] / m;
      rhs[k] = (rhs[k] - e[k - 1] * rhs[k - 1]) / m;
    }
    for (size_t k = n - 1; k-- > 0;) rhs[k] -= c[k] * rhs[k + 1];
    double nn = 0;
    for (double v : rhs) nn += v * v;
    nn = std::sqrt(nn);
    for (size_t k = 0; k < n; ++k) vec[k] = rhs[k] / nn;
  }
  return lam;
}

// GP ground-state energy for W = r^2/4 on the radial u-grid r_k = (k+1) R/n by damped
// self-consistent iteration of the linearised operator (second-order differences, Neumann
// wall half a cell past the last node).
inline double gp_scf_radial(int n, double R, double g) {
  const double dr = R / n;
  std::vector<double> r(n), u(n), e(n - 1, -0.5 / (dr * dr)), d(n), v;
  for (int k = 0; k < n; ++k) {
    r[k] = (k + 1) * dr;
    u[k] = r[k] * std::exp(-r[k] * r[k] / 2);
  }
  auto normalise = [&](std::vector<double>& f) {
    double s = 0;
    for (double x : f) s += x * x * dr;
    for (double& x : f) x /= std::sqrt(s);
  };
  auto energy = [&] {
    double kin = 0, trap = 0, quart = 0, prev = 0;
    for (int k = 0; k < n; ++k) {
      kin += (u[k] - prev) * (u[k] - prev);
      prev = u[k];
      trap += r[k] * r[k] / 2 * u[k] * u[k] * dr;
      const double rho = u[k] * u[k] / (4 * pi * r[k] * r[k]);
      quart += g * rho * rho * 4 * pi * r[k] * r[k] * dr;
    }
    return 0.5 * kin / dr + trap + quart;
  };
  normalise(u);
  double last = 0;
  for (int it = 0; it < 5000; ++it) {
    for (int k = 0; k < n; ++k)
      d[k] = (k + 1 < n ? 1.0 : 0.5) / (dr * dr) + r[k] * r[k] / 2 + 2 * g * u[k] * u[k] / (4 * pi * r[k] * r[k]);
    tridiag_lowest(d, e, v);
    double sgn = 0;
    for (int k = 0; k < n; ++k) sgn += v[k];
    for (int k = 0; k < n; ++k) u[k] = 0.7 * u[k] + 0.3 * v[k] / std::sqrt(dr) * (sgn < 0 ? -1 : 1);
    normalise(u);
    const double E = energy();
    if (it > 10 && std::abs(E - last) < 1e-14 * E) break;
    last = E;
  }
  return energy();
}

// Thomas-Fermi energy for W = r^2/4 in 3D: |psi|^2 = (mu - 2W)_+ / (2g), mu fixed by the norm.
inline double thomas_fermi_harmonic(double g) {
  auto profile_integral = [&](double mu, int which) {
    const double R = std::sqrt(2 * mu);
    const int m = 200000;
    double s = 0;
    for (int i = 0; i < m; ++i) {
      const double r = (i + 0.5) * R / m;
      const double rho = (mu - r * r / 2) / (2 * g);
      const double w = 4 * pi * r * r * R / m;
      s += which == 0 ? rho * w : (r * r / 2 * rho + g * rho * rho) * w;
    }
    return s;
  };
  const double mu = bisect([&](double m) { return profile_integral(m, 0) - 1; }, 1e-3, 100);
  return profile_integral(mu, 1);
}

}  // namespace oracle
