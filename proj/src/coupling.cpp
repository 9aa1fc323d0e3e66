#include "bhf/coupling.hpp"

#include <cmath>
#include <numbers>

#include "bhf/fourier.hpp"

namespace bhf {

using std::numbers::pi;

namespace {

struct FreqSamples {
  Vec p, w;
  CVec ah;
};

FreqSamples frequency_samples(const BoundState& bs, int refine) {
  const Grid& g = bs.grid;
  if (refine <= 1) return {g.frequencies(), g.freq_weights(), bs.alpha0_hat};
  const double dp = g.dp() / refine;
  FreqSamples s;
  if (g.dim == Dim::Radial3) {
    const int m = g.n * refine;
    s.p.resize(m);
    for (int j = 0; j < m; ++j) s.p[j] = (j + 1) * dp;
    s.w = (4 * pi * dp) * s.p.array().square();
  } else {
    const int m = g.n * refine;
    s.p.resize(m);
    for (int j = 0; j < m; ++j) s.p[j] = (j - m / 2) * dp;
    s.w = Vec::Constant(m, dp);
  }
  s.ah = fourier_direct(bs.alpha0, g, s.p);
  return s;
}

}  // namespace

BcsIntegral g_bcs_integral(const BoundState& bs, int refine) {
  const FreqSamples s = frequency_samples(bs, refine);
  const double c = std::pow(2 * pi, spatial_dim(bs.grid.dim));
  const double pmax = s.p.cwiseAbs().maxCoeff();
  BcsIntegral out;
  double coarse = 0;
  for (Eigen::Index j = 0; j < s.p.size(); ++j) {
    const double a2 = std::norm(s.ah[j]);
    const double f = c * a2 * a2 * (2 * s.p[j] * s.p[j] + bs.E_b) * s.w[j];
    out.value += f;
    if (std::abs(s.p[j]) > 0.5 * pmax) out.tail += f;
    if (j % 2 == 0) coarse += 2 * f;
  }
  out.halving_diff = std::abs(out.value - coarse);
  if (out.tail > 1e-6 * out.value)
    throw ResolutionError("g_bcs: frequency grid truncates the integrand (top-octave share " +
                          std::to_string(out.tail / out.value) + ")");
  return out;
}

double g_bcs(const BoundState& bs, int refine) { return g_bcs_integral(bs, refine).value; }

double g_dir(const Vec& V, const Grid& grid) {
  if (V.size() != grid.n) throw ConfigError("g_dir: samples do not match the grid");
  return 2 * V.dot(grid.weights());
}

double g_ex(const Vec& V, const BoundState& bs) {
  const Grid& g = bs.grid;
  if (V.size() != g.n) throw ConfigError("g_ex: potential and bound state live on different grids");
  const Vec c = self_convolution(bs.alpha0, g);
  return -(c.array().square() * V.array() * g.weights().array()).sum();
}

CouplingConstants coupling_total(const Vec& V, const BoundState& bs, const Vec* U, const StabilityTolerances& tol) {
  CouplingConstants cc;
  cc.dimension = spatial_dim(bs.grid.dim);
  const BcsIntegral b = g_bcs_integral(bs);
  cc.g_bcs = b.value;
  cc.g_dir = g_dir(V, bs.grid);
  cc.g_ex = g_ex(V, bs);
  cc.g = cc.g_bcs + cc.g_dir + cc.g_ex;
  cc.quadrature_error_estimate = b.tail;
  if (U) cc.assumption2_passed = check_assumption2(V, *U, bs.grid, tol).passed;
  if (cc.g_dir + cc.g_ex < -1e-9) cc.warning = "g_dir + g_ex < 0: the direct/exchange pair is not stable";
  return cc;
}

}  // namespace bhf
