#pragma once

#include <vector>

#include "bhf/grid.hpp"

namespace bhf {

// E(psi) = 1/2 ||grad psi||^2 + 2 int W |psi|^2 + g ||psi||_4^4 (pair normalisation)
struct GPEnergyBreakdown {
  double kinetic = 0, trap = 0, quartic = 0, total = 0;
};

struct CondensateState {
  Grid grid;
  Vec psi;  // real samples; radial grids store psi(r), not r psi
  double norm = 0;
  double energy = 0;
  double mu = 0;
  double residual = 0;
  bool converged = false;
  int iterations = 0;
  std::vector<double> energy_history;
  std::vector<double> residual_history;
};

struct GPOptions {
  double step = 1.0;           // initial step of the preconditioned flow
  int max_iter = 50000;
  double tol = 1e-8;           // Euler-Lagrange residual target
  double boundary_tol = 1e-6;  // allowed |psi|^2 mass in the outer 5% of the box
};

struct GPResidual {
  double mu = 0, residual = 0;
};

GPEnergyBreakdown gp_energy(const Vec& psi, const Vec& W, double g, const Grid& grid);

// H psi = (-1/2 Delta + 2W + 2g|psi|^2) psi with the same discretisation as gp_energy.
Vec gp_apply_h(const Vec& psi, const Vec& W, double g, const Grid& grid);

GPResidual gp_residual(const Vec& psi, const Vec& W, double g, const Grid& grid);

double l2_norm(const Vec& f, const Grid& grid);
double l4_norm4(const Vec& f, const Grid& grid);
double boundary_mass(const Vec& psi, const Grid& grid);

// Normalised, preconditioned gradient flow with backtracking.
CondensateState gp_minimize(const Vec& W, double g, const Grid& grid, const GPOptions& opts = {});

// Gaussian matched to the harmonic approximation of W at its minimum (flat if W is not convex there).
Vec gp_initial_guess(const Vec& W, const Grid& grid);

}  // namespace bhf
