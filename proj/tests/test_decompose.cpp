#include <cmath>
#include <numbers>
#include <random>

#include "bhf/decompose.hpp"
#include "bhf/pairstate.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bhf;
using std::numbers::pi;

namespace {

struct Setup {
  Grid macro, micro;
  BoundState bs;
  double h;
};

Setup setup(int n, double h) {
  const Config cfg = fixture::default_config();
  Setup s;
  s.h = h;
  s.macro = Grid::periodic(n, 2.4);
  s.micro = micro_grid(s.macro, h);
  s.bs = solve_ground_state(sample_potential(cfg.potential, s.micro), s.micro);
  return s;
}

CondensateState smooth_psi(const Grid& g) {
  CondensateState c;
  c.grid = g;
  const Vec x = g.nodes();
  c.psi = ((-x.array().square() / 0.09).exp() * (1 + 0.3 * x.array())).matrix();
  c.psi /= std::sqrt(c.psi.squaredNorm() * g.spacing());
  return c;
}

}  // namespace

TEST_CASE("decomposition of an exact trial kernel recovers psi with no remainder") {
  for (double h : {0.125, 0.0625}) {
    const Setup s = setup(256, h);
    const CondensateState psi = smooth_psi(s.macro);
    const TrialState ts = build_trial(h, psi, s.bs);
    const DecompositionResult d = decompose_alpha(ts.alpha, s.bs, h, s.macro);
    CHECK(d.xi_norm <= 1e-10);
    CHECK((d.psi - psi.psi).cwiseAbs().maxCoeff() <= 1e-10 * psi.psi.cwiseAbs().maxCoeff());
    CHECK(d.orthogonality_residual <= 1e-10);
  }
}

TEST_CASE("remainder is orthogonal to alpha0 along every centre of mass, for arbitrary kernels") {
  std::mt19937 rng(99);
  const Setup s = setup(128, 0.125);
  for (int k = 0; k < 5; ++k) {
    const Mat alpha = fixture::random_symmetric(128, rng);
    const DecompositionResult d = decompose_alpha(alpha, s.bs, s.h, s.macro);
    CHECK(d.orthogonality_residual <= 1e-10);
  }
}

TEST_CASE("decomposition is linear and splits off an orthogonal perturbation") {
  std::mt19937 rng(4);
  const Setup s = setup(128, 0.125);
  const TrialState ts = build_trial(s.h, smooth_psi(s.macro), s.bs);
  const Mat noise = fixture::random_symmetric(128, rng) * 1e-3;
  const DecompositionResult dn = decompose_alpha(noise, s.bs, s.h, s.macro);
  const DecompositionResult dsum = decompose_alpha(ts.alpha + dn.xi, s.bs, s.h, s.macro);
  // adding a pure remainder leaves psi unchanged and returns that remainder
  CHECK((dsum.psi - decompose_alpha(ts.alpha, s.bs, s.h, s.macro).psi).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((dsum.xi - dn.xi).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("a priori diagnostics of the trial state") {
  const Setup s = setup(256, 0.125);
  const TrialState ts = build_trial(s.h, smooth_psi(s.macro), s.bs);
  LatticeModel m;
  m.grid = s.macro;
  m.h = s.h;
  m.bound_state = s.bs;
  m.E_b = s.bs.E_b;
  m.kinetic = s.h * s.h * periodic_neg_laplacian(256, 2.4);
  const DiagnosticsReport r = apriori_diagnostics({ts.gamma, ts.alpha}, m);
  const double dx = s.macro.spacing();
  const Mat A = ts.alpha * dx, G = ts.gamma * dx;
  // gamma - alpha alpha^bar = (1 + h^{1/2}) a^2 for the trial state
  CHECK(r.depletion == doctest::Approx((1 + std::sqrt(s.h)) * (A * A * A * A).trace()).epsilon(1e-10));
  CHECK(r.gamma2 == doctest::Approx((G * G).trace()).epsilon(1e-12));
  CHECK(r.xi_norm <= 1e-10);
  CHECK(r.guara_min >= -1e-10);
  CHECK(r.psi_norm == doctest::Approx(1.0).epsilon(1e-10));
}
