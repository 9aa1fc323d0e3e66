#include <chrono>
#include <cmath>

#include "bhf/fourier.hpp"
#include "bhf/pairstate.hpp"
#include "bhf/potential.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bhf;

TEST_CASE("oracles agree with each other") {
  const double a = oracle::square_well_binding(10, 1), b = oracle::square_well_shooting(10, 1);
  CHECK(std::abs(a - b) / a < 1e-9);
  CHECK(a > 0);
}

TEST_CASE("3D square well, depth 10 radius 1") {
  Grid r = Grid::radial(2048, 16);
  const Vec V = eval_potential(PotentialSpec{{SquareWell{10, 1}}}, r);
  const auto t0 = std::chrono::steady_clock::now();
  const BoundState bs = solve_ground_state(V, r);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double ref = oracle::square_well_binding(10, 1);
  CHECK(std::abs(bs.E_b - ref) / ref <= 1e-6);
  CHECK(secs < 1.0);
  CHECK(std::abs(bs.norm - 1) <= 1e-10);
  CHECK(bs.residual <= 1e-8);
  CHECK(bs.spectral_gap > 0);
  CHECK(bs.alpha0.minCoeff() >= 0);
  // Parseval for alpha0
  const double ph = (bs.alpha0_hat.cwiseAbs2().array() * r.freq_weights().array()).sum();
  CHECK(std::abs(ph - 1) <= 1e-8);
  // -Delta + V/2 shares the eigenvector with energy -E_b/2 (certified against the discrete eigenvalue)
  BoundState raw = bs;
  raw.E_b = -bs.eigenvalue;
  CHECK(std::abs(half_scaled_expectation(V, raw)) <= 1e-8);
}

TEST_CASE("below threshold there is no bound state") {
  Grid r = Grid::radial(1024, 32);
  const Vec V = eval_potential(PotentialSpec{{SquareWell{1, 1}}}, r);  // threshold pi^2/2 ~ 4.93
  CHECK_THROWS_AS(solve_ground_state(V, r), NoBoundState);
}

TEST_CASE("second-order convergence on a smooth radial well") {
  const PotentialSpec s{{Gaussian{-20, 1}}};
  double prev = 0, prev_change = 0;
  for (int n : {256, 512, 1024}) {
    Grid r = Grid::radial(n, 16);
    // fine-grid discrete eigenvalue (no extrapolation) shows the raw order
    const double e = solve_ground_state(eval_potential(s, r), r).eigenvalue;
    if (prev != 0) {
      const double change = std::abs(e - prev);
      if (prev_change != 0) CHECK(change <= 4 * prev_change);
      prev_change = change;
    }
    prev = e;
  }
}

TEST_CASE("1D periodic ground state") {
  Grid g = Grid::periodic(256, 30);
  const Vec V = eval_potential(PotentialSpec{{DiffGaussians{6, 0.5, 1, 1.5}}, 32}, g);
  const BoundState bs = solve_ground_state(V, g);
  CHECK(bs.E_b > 0);
  CHECK(std::abs(bs.norm - 1) <= 1e-10);
  CHECK(bs.residual <= 1e-8);
  CHECK(std::abs(half_scaled_expectation(V, bs)) <= 1e-8);
  CHECK(bs.spectral_gap > 0);
  for (int k = 1; k < g.n; ++k) CHECK(bs.alpha0[k] == doctest::Approx(bs.alpha0[g.n - k]).epsilon(1e-12));
  CHECK(bs.alpha0.sum() > 0);
  const double ph = (bs.alpha0_hat.cwiseAbs2().array() * g.freq_weights().array()).sum();
  CHECK(std::abs(ph - 1) <= 1e-8);
}

TEST_CASE("box too small for the bound state") {
  Grid g = Grid::periodic(64, 6);
  const Vec V = eval_potential(PotentialSpec{{Gaussian{-1, 1}}}, g);
  CHECK_THROWS_AS(solve_ground_state(V, g), ResolutionError);
}

TEST_CASE("narrow 1D well approaches the delta limit c^2/8") {
  // gaussian of area -c and width w; E_b(w) = c^2/8 + O(w)
  const double c = 4, L = 36;
  double errs[3];
  double eb[3];
  const double widths[3] = {0.2, 0.1, 0.05};
  for (int i = 0; i < 3; ++i) {
    const double w = widths[i];
    const int n = 2 * static_cast<int>(std::ceil(L / (w / 4) / 2));
    Grid g = Grid::periodic(n, L);
    const Vec V = eval_potential(PotentialSpec{{Gaussian{-c / (w * std::sqrt(2 * M_PI)), w}}}, g);
    eb[i] = solve_ground_state(V, g).E_b;
    errs[i] = std::abs(eb[i] - c * c / 8);
  }
  CHECK(errs[1] < errs[0]);
  CHECK(errs[2] < errs[1]);
  // two Richardson stages in w (corrections are O(w) and O(w^2))
  const double r1 = 2 * eb[1] - eb[0], r2 = 2 * eb[2] - eb[1];
  const double extrap = (4 * r2 - r1) / 3;
  CHECK(std::abs(extrap - c * c / 8) < 0.1 * errs[2]);
}
