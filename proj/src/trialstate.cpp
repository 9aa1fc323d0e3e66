#include "bhf/trialstate.hpp"

#include <cmath>

#include "bhf/fourier.hpp"
#include "bhf/linalg.hpp"

namespace bhf {

double particle_number(double h, int d) { return std::pow(h, 2 - d); }
double kernel_prefactor(double h, int d) { return std::pow(h, 1 - d); }
double energy_unit(double h, int d) { return std::pow(h, 3 - d); }

Grid micro_grid(const Grid& macro, double h) { return Grid::periodic(macro.n, macro.length / h); }

double pair_resolution(const BoundState& bs) {
  const Vec x = bs.grid.nodes();
  const double dr = bs.grid.spacing();
  const double r2 = (x.array().square() * bs.alpha0.array().square()).sum() * dr;
  return 2 * std::sqrt(r2) / dr;
}

Mat pair_kernel(const Vec& psi_half, const BoundState& bs, double c_h) {
  const int n = bs.grid.n;
  if (psi_half.size() != 2 * n) throw ConfigError("pair_kernel: psi must be sampled on the half-step grid");
  Mat a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int m = ((i - j + n / 2) % n + n) % n - n / 2;
      if (m == -n / 2) {
        a(i, j) = 0;
        continue;
      }
      const int s = ((2 * j + m) % (2 * n) + 2 * n) % (2 * n);
      a(i, j) = c_h * psi_half[s] * bs.alpha0[m + n / 2];
    }
  return a;
}

namespace {

void check_geometry(double h, const Grid& macro, const BoundState& bs, double min_points) {
  if (!(h > 0 && h <= 0.5)) throw ConfigError("trial state needs 0 < h <= 1/2");
  if (macro.dim != Dim::One) throw ConfigError("lattice trial states are one-dimensional");
  if (!same_geometry(bs.grid, micro_grid(macro, h)))
    throw InconsistentInput("pair state must be solved on the micro lattice (n, L/h)");
  const double pts = pair_resolution(bs);
  if (pts < min_points) {
    const int need = static_cast<int>(std::ceil(macro.n * min_points / pts));
    throw ResolutionError("microscale unresolved: pair diameter spans " + std::to_string(pts) +
                          " points; need n >= " + std::to_string(need + (need % 2)));
  }
}

Mat gamma_from_alpha(const Mat& A, double slack) {
  const Mat a2 = A * A;
  return a2 + slack * (a2 * a2);
}

}  // namespace

TrialState build_trial(double h, const CondensateState& psi, const BoundState& bs, const TrialOptions& opts) {
  check_geometry(h, psi.grid, bs, opts.min_points);
  TrialState ts;
  ts.h = h;
  ts.c_h = kernel_prefactor(h, 1);
  ts.slack_exponent = opts.slack_exponent;
  ts.psi = psi;
  ts.bound_state = bs;
  const double dx = psi.grid.spacing();
  ts.alpha = pair_kernel(interpolate_half(psi.psi), bs, ts.c_h);
  ts.gamma = gamma_from_alpha(ts.alpha * dx, 1 + std::pow(h, opts.slack_exponent)) / dx;
  return ts;
}

TrialState rescale_trial(const TrialState& ts, double lambda) {
  TrialState out = ts;
  out.lambda = ts.lambda * lambda;
  const double dx = ts.spacing();
  out.alpha = ts.alpha * lambda;
  out.gamma = gamma_from_alpha(out.alpha * dx, 1 + std::pow(ts.h, ts.slack_exponent)) / dx;
  return out;
}

Mat block_gamma(const Mat& G, const Mat& A) {
  const Eigen::Index n = G.rows();
  Mat b(2 * n, 2 * n);
  b.topLeftCorner(n, n) = G;
  b.topRightCorner(n, n) = A;
  b.bottomLeftCorner(n, n) = A.transpose();
  b.bottomRightCorner(n, n) = Mat::Identity(n, n) - G;
  return b;
}

AdmissibilityReport check_admissibility(const TrialState& ts, double tol_psd) {
  const double dx = ts.spacing();
  const double slack = 1 + std::pow(ts.h, ts.slack_exponent);
  // gamma is a polynomial in a = alpha alpha^bar, so everything follows from the spectrum of alpha
  const Vec e = sym_eigvals(ts.alpha * dx);
  AdmissibilityReport r;
  r.guara_min = 0;
  for (Eigen::Index k = 0; k < e.size(); ++k) {
    const double a = e[k] * e[k];
    const double g = a + slack * a * a;
    r.alpha_opnorm = std::max(r.alpha_opnorm, std::abs(e[k]));
    r.gamma_opnorm = std::max(r.gamma_opnorm, g);
    r.guara_min = std::min(r.guara_min, g - g * g - a);
    r.alpha_hs2 += a;
    r.alpha_s4 += a * a;
  }
  r.passed = r.guara_min >= -tol_psd;
  return r;
}

double trace_scale(double t2, double t4, double target, double slack) {
  if (!(t2 > 0) || target < 0) throw InconsistentInput("trace_scale: need ||alpha||_2 > 0");
  const double disc = std::sqrt(t2 * t2 + 4 * slack * t4 * target);
  return 2 * target / (t2 + disc);
}

double normalize_for_trace(const TrialState& ts) {
  const auto r = check_admissibility(ts);
  const double slack = 1 + std::pow(ts.h, ts.slack_exponent);
  const double lam = std::sqrt(trace_scale(r.alpha_hs2, r.alpha_s4, particle_number(ts.h), slack));
  if (!(lam >= 0.5 && lam <= 2))
    throw InconsistentInput("trace normalisation needs lambda = " + std::to_string(lam) + " outside [1/2, 2]");
  return lam;
}

double trace_equation_residual(const TrialState& ts, double lambda) {
  const auto r = check_admissibility(ts);
  const double slack = 1 + std::pow(ts.h, ts.slack_exponent);
  const double q = lambda * lambda;
  return q * r.alpha_hs2 + slack * q * q * r.alpha_s4 - particle_number(ts.h);
}

double predict_expansion(double h, const Vec& psi, const Vec& W, const Grid& grid, const CouplingConstants& cc,
                         double E_b) {
  if (cc.dimension != spatial_dim(grid.dim)) throw InconsistentInput("coupling constants and psi differ in dimension");
  return -E_b / (2 * h) + 0.5 * h * gp_energy(psi, W, cc.g, grid).total;
}

}  // namespace bhf
