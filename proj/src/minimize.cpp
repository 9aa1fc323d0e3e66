#include "bhf/minimize.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "bhf/linalg.hpp"
#include "bhf/trialstate.hpp"

namespace bhf {

namespace {

struct ShiftedSpectrum {
  double mu = 0;
  EigenPairs ep;
  double trace = 0;
};

class TraceFunction {
 public:
  TraceFunction(const Mat& G, const Mat& A) : n_(G.rows()), base_(block_gamma(G, A)) {}

  ShiftedSpectrum eval(double mu) {
    Mat b = base_;
    b.diagonal().head(n_).array() -= mu;
    b.diagonal().tail(n_).array() += mu;
    ShiftedSpectrum s;
    s.mu = mu;
    s.ep = sym_eig(b);
    for (Eigen::Index k = 0; k < 2 * n_; ++k) {
      const double c = std::clamp(s.ep.values[k], 0.0, 1.0);
      if (c > 0) s.trace += c * s.ep.vectors.col(k).head(n_).squaredNorm();
    }
    ++evaluations;
    return s;
  }

  int evaluations = 0;

 private:
  Eigen::Index n_;
  Mat base_;
};

}  // namespace

FeasibleState project_feasible(const Mat& G, const Mat& A, double target, double mu_hint) {
  const Eigen::Index n = G.rows();
  if (G.cols() != n || A.rows() != n || A.cols() != n) throw ConfigError("project_feasible: block sizes differ");
  if (!(target >= 0) || target > static_cast<double>(n))
    throw InfeasibleError("trace target " + std::to_string(target) + " is outside [0, " + std::to_string(n) + "]");

  TraceFunction f(0.5 * (G + G.transpose()), 0.5 * (A + A.transpose()));
  const double ftol = 1e-14 * std::max(1.0, target);
  ShiftedSpectrum best = f.eval(mu_hint);
  auto better = [&](const ShiftedSpectrum& s) {
    if (std::abs(s.trace - target) < std::abs(best.trace - target)) best = s;
  };

  if (std::abs(best.trace - target) > ftol) {
    // bracket the root of the decreasing function tr G(mu) - target
    const double dir = best.trace > target ? 1.0 : -1.0;
    double lo = mu_hint, flo = best.trace - target, step = 1e-3;
    double hi = lo, fhi = flo;
    for (int k = 0; k < 80; ++k) {
      hi = lo + dir * step;
      const ShiftedSpectrum s = f.eval(hi);
      better(s);
      fhi = s.trace - target;
      if ((fhi > 0) != (flo > 0) || std::abs(fhi) <= ftol) break;
      // secant guess for the next trial, never less than a fourfold expansion
      const double slope = (fhi - flo) / (hi - lo);
      double next = 4 * step;
      if (slope < 0) next = std::max(next, 1.5 * std::abs(fhi / slope));
      lo = hi;
      flo = fhi;
      step = next;
    }
    if (std::abs(fhi) > ftol) {
      if ((fhi > 0) == (flo > 0)) throw InfeasibleError("project_feasible: could not bracket the trace multiplier");
      double a = std::min(lo, hi), b = std::max(lo, hi);
      double fa = a == lo ? flo : fhi, fb = a == lo ? fhi : flo;
      boost::uintmax_t iters = 100;
      auto fn = [&](double mu) {
        const ShiftedSpectrum s = f.eval(mu);
        better(s);
        const double v = s.trace - target;
        return std::abs(v) <= ftol ? 0.0 : v;
      };
      boost::math::tools::toms748_solve(fn, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), iters);
    }
  }

  const ShiftedSpectrum& s = best;
  Vec c(2 * n);
  for (Eigen::Index k = 0; k < 2 * n; ++k) c[k] = std::clamp(s.ep.values[k], 0.0, 1.0);
  const Mat gam = (s.ep.vectors * c.asDiagonal()) * s.ep.vectors.transpose();
  FeasibleState out;
  out.G = 0.5 * (gam.topLeftCorner(n, n) + Mat::Identity(n, n) - gam.bottomRightCorner(n, n));
  out.G = 0.5 * (out.G + out.G.transpose()).eval();
  out.A = 0.5 * (gam.topRightCorner(n, n) + gam.bottomLeftCorner(n, n).transpose());
  out.A = 0.5 * (out.A + out.A.transpose()).eval();
  out.mu = s.mu;
  out.evaluations = f.evaluations;
  out.trace_error = std::abs(out.G.trace() - target);
  return out;
}

std::pair<double, double> block_spectrum_bounds(const Mat& G, const Mat& A) {
  const Vec e = sym_eigvals(block_gamma(G, A));
  return {e.minCoeff(), e.maxCoeff()};
}

MinimizeResult minimize_bhf(const LatticeModel& model, const BHFState& initial, double target,
                            const MinimizeOptions& opts) {
  const double dx = model.grid.spacing();
  FeasibleState x = project_feasible(initial.gamma * dx, initial.alpha * dx, target);
  Mat G = x.G, A = x.A;
  double mu = x.mu;
  EnergyBreakdown E = bhf_energy_ops(G, A, model);
  BHFGradient grad = bhf_gradient(G, A, model);

  MinimizeResult res;
  auto record = [&](int it, double step, double stat) {
    IterationRecord r;
    r.iter = it;
    r.energy = E;
    r.constraint_residual = std::abs(G.trace() - target) / target;
    r.step = step;
    r.stationarity = stat;
    res.history.push_back(r);
  };
  record(0, 0, std::numeric_limits<double>::quiet_NaN());

  double t = opts.step > 0 ? opts.step : model.unit / model.kinetic_symbol.maxCoeff();
  const double t_max = 1e6 * t;
  double stat = std::numeric_limits<double>::infinity();
  int it = 0;
  bool stalled = false;
  while (it < opts.max_iter) {
    FeasibleState c;
    EnergyBreakdown Ec;
    for (;;) {
      c = project_feasible(G - t * grad.dG, A - t * grad.dA, target, mu);
      Ec = bhf_energy_ops(c.G, c.A, model);
      const double moved2 = (c.G - G).squaredNorm() + (c.A - A).squaredNorm();
      if (Ec.total <= E.total - 1e-4 * moved2 / t) break;
      if (moved2 == 0) break;
      t *= 0.5;
      if (t < opts.min_step) {
        stalled = true;
        break;
      }
    }
    if (stalled) break;
    const Mat sG = c.G - G, sA = c.A - A;
    stat = std::sqrt(sG.squaredNorm() + sA.squaredNorm()) / t;
    const BHFGradient gnew = bhf_gradient(c.G, c.A, model);
    const double ss = sG.squaredNorm() + sA.squaredNorm();
    const double sy = (sG.array() * (gnew.dG - grad.dG).array()).sum() + (sA.array() * (gnew.dA - grad.dA).array()).sum();
    G = c.G;
    A = c.A;
    mu = c.mu;
    E = Ec;
    grad = gnew;
    ++it;
    record(it, t, stat);
    if (stat <= opts.tol) break;
    t = sy > 0 ? std::min(ss / sy, t_max) : std::min(2 * t, t_max);
  }

  res.state = to_kernels(G, A, dx);
  res.energy = E;
  res.iterations = it;
  res.stationarity = stat;
  res.converged = stat <= opts.tol;
  res.trace_error = std::abs(G.trace() - target) / target;
  std::tie(res.spectrum_min, res.spectrum_max) = block_spectrum_bounds(G, A);
  return res;
}

}  // namespace bhf
