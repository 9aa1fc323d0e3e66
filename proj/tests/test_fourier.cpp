#include <cmath>
#include <numbers>
#include <random>

#include "bhf/fourier.hpp"
#include "bhf/gp.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bhf;
using std::numbers::pi;

namespace {

double l2sq(const CVec& f, const Vec& w) { return (f.cwiseAbs2().array() * w.array()).sum(); }

}  // namespace

TEST_CASE("1D gaussian is a fixed point of the unitary transform") {
  Grid g = Grid::periodic(256, 40);
  const Vec x = g.nodes(), p = g.frequencies();
  Vec f(g.n);
  for (int k = 0; k < g.n; ++k) f[k] = std::pow(pi, -0.25) * std::exp(-x[k] * x[k] / 2);
  const CVec fh = fourier(f, g);
  double err = 0;
  for (int j = 0; j < g.n; ++j) err = std::max(err, std::abs(fh[j] - std::pow(pi, -0.25) * std::exp(-p[j] * p[j] / 2)));
  CHECK(err <= 1e-8);
}

TEST_CASE("fast transform matches direct summation") {
  Grid g = Grid::periodic(64, 7);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  Vec f(g.n);
  for (auto& v : f) v = nd(rng);
  const CVec a = fourier(f, g), b = fourier_direct(f, g, g.frequencies());
  CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);

  Grid r = Grid::radial(64, 7);
  const CVec c = fourier(f, r), d = fourier_direct(f, r, r.frequencies());
  CHECK((c - d).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("Parseval and inversion") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (Grid g : {Grid::periodic(128, 9.0), Grid::radial(200, 9.0)}) {
    Vec f(g.n);
    for (auto& v : f) v = nd(rng);
    const CVec fh = fourier(f, g);
    const double lhs = l2sq(fh, g.freq_weights()), rhs = f.cwiseAbs2().dot(g.weights());
    CHECK(std::abs(lhs - rhs) <= 1e-8 * rhs);
    const CVec back = inverse_fourier(fh, g);
    CHECK((back.real() - f).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(back.imag().cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("ball indicator, radial transform") {
  const double a = 1;
  Grid rc = Grid::radial(8192, 16);  // r = a is a node
  const Vec f = [&] {
    Vec v(rc.n);
    for (int k = 0; k < rc.n; ++k) {
      const double x = rc.node(k);
      v[k] = x < a ? 1.0 : (x == a ? 0.5 : 0.0);
    }
    return v;
  }();
  const CVec fh = fourier(f, rc);
  const Vec p = rc.frequencies();
  double err = 0;
  for (int j = 0; j < rc.n; ++j)
    if (p[j] < 20) err = std::max(err, std::abs(fh[j].real() - oracle::ball_fourier(p[j], a)));
  CHECK(err <= 1e-5);
}

TEST_CASE("self convolution") {
  SUBCASE("value at zero is the squared norm") {
    Grid g = Grid::periodic(256, 30);
    const Vec x = g.nodes();
    Vec a(g.n);
    for (int k = 0; k < g.n; ++k) a[k] = std::exp(-std::abs(x[k])) * (1 + 0.3 * std::cos(x[k]));
    a /= std::sqrt(a.squaredNorm() * g.spacing());
    const Vec c = self_convolution(a, g);
    CHECK(std::abs(c[g.n / 2] - 1) <= 1e-8);
  }
  SUBCASE("1D gaussian width sigma -> width sigma sqrt 2") {
    Grid g = Grid::periodic(512, 60);
    const Vec x = g.nodes();
    const double s = 1.3;
    Vec a(g.n);
    for (int k = 0; k < g.n; ++k) a[k] = std::exp(-x[k] * x[k] / (2 * s * s));
    const Vec c = self_convolution(a, g);
    double err = 0;
    for (int k = 0; k < g.n; ++k)
      err = std::max(err, std::abs(c[k] - std::sqrt(pi) * s * std::exp(-x[k] * x[k] / (4 * s * s))));
    CHECK(err <= 1e-8);
  }
  SUBCASE("3D gaussian") {
    Grid r = Grid::radial(1024, 20);
    const Vec x = r.nodes();
    const double s = 0.9;
    Vec a(r.n);
    for (int k = 0; k < r.n; ++k) a[k] = std::exp(-x[k] * x[k] / (2 * s * s));
    const Vec c = self_convolution(a, r);
    double err = 0;
    for (int k = 0; k < r.n; ++k)
      err = std::max(err, std::abs(c[k] - std::pow(pi * s * s, 1.5) * std::exp(-x[k] * x[k] / (4 * s * s))));
    CHECK(err <= 1e-8);
  }
  SUBCASE("convolution theorem") {
    for (Grid g : {Grid::periodic(256, 30.0), Grid::radial(512, 25.0)}) {
      const Vec x = g.nodes();
      Vec a(g.n);
      for (int k = 0; k < g.n; ++k) a[k] = std::exp(-0.7 * x[k] * x[k]) * (1 + 0.2 * x[k] * x[k]);
      const Vec c = self_convolution(a, g);
      const CVec ch = fourier(c, g), ah = fourier(a, g);
      const double k = std::pow(2 * pi, 0.5 * spatial_dim(g.dim));
      CHECK((ch - k * CVec(ah.array().square())).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("half-step interpolation") {
  Grid g = Grid::periodic(64, 2 * pi);
  const Vec x = g.nodes();
  Vec f(g.n);
  for (int k = 0; k < g.n; ++k) f[k] = std::sin(3 * x[k]) + std::cos(5 * x[k]) + 0.25;
  const Vec f2 = interpolate_half(f);
  double err = 0;
  for (int s = 0; s < 2 * g.n; ++s) {
    const double y = -pi + s * g.spacing() / 2;
    err = std::max(err, std::abs(f2[s] - (std::sin(3 * y) + std::cos(5 * y) + 0.25)));
  }
  CHECK(err <= 1e-12);
  CHECK((restrict_half(f2) - f).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("spectral derivatives on a plane wave") {
  Grid g = Grid::periodic(32, 3.0);
  const Vec x = g.nodes();
  const double p = 2 * pi * 4 / 3.0;
  Vec f(g.n), fd(g.n);
  for (int k = 0; k < g.n; ++k) {
    f[k] = std::cos(p * x[k]);
    fd[k] = -p * std::sin(p * x[k]);
  }
  CHECK((apply_neg_laplacian(f, g.length) - p * p * f).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((apply_derivative(f, g.length) - fd).cwiseAbs().maxCoeff() <= 1e-11);
}
