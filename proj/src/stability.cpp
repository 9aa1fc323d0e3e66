#include "bhf/stability.hpp"

#include <cmath>
#include <limits>

#include "bhf/fourier.hpp"
#include "bhf/pairstate.hpp"

namespace bhf {

StablePair construct_stable_potential(const PotentialSpec& u, const Grid& grid) {
  return stable_from_certificate(self_convolution(eval_potential(u, grid), grid));
}

StablePair stable_from_certificate(const Vec& U) {
  StablePair out;
  out.U = U;
  out.V.resize(out.U.size());
  for (Eigen::Index k = 0; k < out.U.size(); ++k) {
    const double x = out.U[k];
    out.V[k] = x > 0 ? 2 * x : x;
  }
  // transform round-off leaves ~1e-17 negative dust in the tails of a nonnegative U
  if (out.U.minCoeff() >= -1e-14 * out.U.cwiseAbs().maxCoeff()) {
    out.attractive_tail = false;
    out.warning = "U nonnegative; no attractive tail";
  }
  return out;
}

StabilityReport check_assumption2(const Vec& V, const Vec& U, const Grid& grid, const StabilityTolerances& tol) {
  if (V.size() != grid.n || U.size() != grid.n) throw ConfigError("check_assumption2: samples do not match the grid");
  StabilityReport r;
  r.pointwise_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid.n; ++k) {
    const double m = V[k] - 0.5 * std::max(V[k], 0.0) - U[k];
    if (m < r.pointwise_margin) {
      r.pointwise_margin = m;
      r.witness_x = grid.node(k);
    }
  }
  const CVec uh = fourier(U, grid);
  const Vec p = grid.frequencies();
  r.fourier_min = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.n; ++j)
    if (uh[j].real() < r.fourier_min) {
      r.fourier_min = uh[j].real();
      r.witness_p = p[j];
    }
  r.passed = r.pointwise_margin >= -tol.pointwise && r.fourier_min >= -tol.fourier;
  return r;
}

ThresholdResult binding_threshold(const PotentialSpec& V, const Grid& grid, double lo, double hi, double eps_bind,
                                  double rtol) {
  return binding_threshold(eval_potential(V, grid), grid, lo, hi, eps_bind, rtol);
}

ThresholdResult binding_threshold(const Vec& base, const Grid& grid, double lo, double hi, double eps_bind,
                                  double rtol) {
  auto bound = [&](double lam) { return lowest_energy(lam * base, grid) < -eps_bind; };
  if (!(lo < hi)) throw BracketError("binding_threshold: empty bracket");
  if (bound(lo) || !bound(hi))
    throw BracketError("binding_threshold: no binding transition inside [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  ThresholdResult r;
  while (hi - lo > rtol * hi) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) ? hi : lo) = mid;
    ++r.iterations;
    if (r.iterations > 200) break;
  }
  r.lo = lo;
  r.hi = hi;
  r.lambda_c = 0.5 * (lo + hi);
  return r;
}

}  // namespace bhf
