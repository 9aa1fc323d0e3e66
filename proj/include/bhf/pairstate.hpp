#pragma once

#include "bhf/grid.hpp"

namespace bhf {

struct PairOptions {
  double eps_bind = 1e-10;   // "bound" means lowest eigenvalue < -eps_bind
  double decay_tol = 1e-6;   // |alpha0(edge)| / max|alpha0|
};

// Ground state of -2 Delta + V. The same function is the ground state of -Delta + V/2 with
// energy -E_b/2; half_energy() exposes that scaling.
struct BoundState {
  Grid grid;
  double E_b = 0;
  double spectral_gap = 0;  // kappa, measured for -Delta + V/2
  Vec alpha0;               // alpha0(x) (radial: alpha0(r) = u(r) / (sqrt(4 pi) r))
  CVec alpha0_hat;          // on grid.frequencies()
  double norm = 0;
  double eigenvalue = 0;    // raw discrete lowest eigenvalue of the fine operator
  double residual = 0;      // ||(H - eigenvalue) alpha0||

  double half_energy() const { return -0.5 * E_b; }
};

// Best estimate of the lowest s-wave / even eigenvalue of -2 Delta + V on the grid.
// Radial grids: second-order finite differences, outer Neumann wall, Richardson-extrapolated
// against the 2*spacing grid. 1D periodic: spectral Laplacian, even sector.
double lowest_energy(const Vec& V, const Grid& grid);

BoundState solve_ground_state(const Vec& V, const Grid& grid, const PairOptions& opts = {});

// ||(-2 Delta + V) alpha0 + E alpha0|| with the discrete operator used by the solver.
double eigen_residual(const Vec& V, const Grid& grid, const Vec& alpha0, double E);

// <alpha0, (-Delta + V/2 + E_b/2) alpha0> with the discrete operator.
double half_scaled_expectation(const Vec& V, const BoundState& bs);

}  // namespace bhf
