#pragma once

#include <vector>

#include "bhf/lattice.hpp"

namespace bhf {

struct FeasibleState {
  Mat G, A;            // operators
  double mu = 0;       // shift applied to the gamma block
  int evaluations = 0; // eigendecompositions used
  double trace_error = 0;
};

// Nearest (Frobenius) block operator [[G, A], [A, 1 - G]] with spectrum in [0, 1] and
// tr G = trace_target. The trace multiplier shifts the gamma block by -mu and the hole block by
// +mu; clipping then keeps the particle-hole structure, so G and A come back symmetric.
FeasibleState project_feasible(const Mat& G, const Mat& A, double trace_target, double mu_hint = 0);

// Extreme eigenvalues of the block operator.
std::pair<double, double> block_spectrum_bounds(const Mat& G, const Mat& A);

struct MinimizeOptions {
  int max_iter = 200;
  double tol = 1e-6;   // projected-gradient residual ||P(X - t grad) - X|| / t
  double step = 0;     // first step; 0 picks 1/max|kinetic symbol| in energy units
  double min_step = 1e-16;
};

struct IterationRecord {
  int iter = 0;
  EnergyBreakdown energy;
  double constraint_residual = 0;  // |tr gamma - target| / target
  double step = 0;
  double stationarity = 0;
};

struct MinimizeResult {
  BHFState state;
  EnergyBreakdown energy;
  int iterations = 0;
  bool converged = false;
  double stationarity = 0;
  double trace_error = 0;    // relative
  double spectrum_min = 0, spectrum_max = 0;
  std::vector<IterationRecord> history;
};

// Projected gradient descent with Barzilai-Borwein steps and monotone backtracking.
MinimizeResult minimize_bhf(const LatticeModel& model, const BHFState& initial, double trace_target,
                            const MinimizeOptions& opts = {});

}  // namespace bhf
