#pragma once

#include "bhf/coupling.hpp"
#include "bhf/gp.hpp"
#include "bhf/pairstate.hpp"

namespace bhf {

// Kernels on the 1D lattice are stored as values k(x_i, x_j); the operator they define is the
// matrix k * dx, so (AB)(x,z) = sum_y A(x,y) B(y,z) dx and tr A = sum_i A(x_i,x_i) dx.
//
// Scaling: tr gamma = h^{2-d} and alpha_psi(x,y) = h^{1-d} psi((x+y)/2) alpha0((x-y)/h), so
// every term of the functional is of order h^{3-d}; energies are reported in that unit.

double particle_number(double h, int d = 1);  // h^{2-d}
double kernel_prefactor(double h, int d = 1);  // h^{1-d}
double energy_unit(double h, int d = 1);       // h^{3-d}

struct TrialOptions {
  double slack_exponent = 0.5;  // gamma = a + (1 + h^s) a^2 with a = alpha alpha^bar
  double min_points = 8;        // pair diameter (2 rms) in micro-lattice points
};

struct TrialState {
  double h = 0;
  int dimension = 1;
  double c_h = 1;
  double lambda = 1;  // psi was multiplied by lambda before the kernels were built
  double slack_exponent = 0.5;
  CondensateState psi;
  BoundState bound_state;
  Mat alpha;  // kernel samples, symmetric
  Mat gamma;  // kernel samples
  double spacing() const { return psi.grid.spacing(); }
};

struct AdmissibilityReport {
  double alpha_opnorm = 0;  // largest singular value of the operator alpha
  double gamma_opnorm = 0;
  double guara_min = 0;     // min eigenvalue of gamma - gamma^2 - alpha alpha^bar
  double alpha_hs2 = 0;     // ||alpha||_2^2
  double alpha_s4 = 0;      // ||alpha||_4^4
  bool passed = false;
};

// Micro lattice the pair state must live on: same n, length L/h.
Grid micro_grid(const Grid& macro, double h);

// Pair diameter 2 sqrt(<r^2>) of alpha0 in units of its grid spacing.
double pair_resolution(const BoundState& bs);

// alpha(x_i, x_j) = c_h psi_half(2j + m) alpha0(m dr), m the minimal-image offset i - j.
// Pairs at exactly half the box (m = -n/2) have two midpoints and are set to zero; the
// pair-state decay check keeps alpha0 there below 1e-6 of its peak.
Mat pair_kernel(const Vec& psi_half, const BoundState& bs, double c_h);

TrialState build_trial(double h, const CondensateState& psi, const BoundState& bs, const TrialOptions& opts = {});
// Same construction with psi scaled by lambda.
TrialState rescale_trial(const TrialState& ts, double lambda);

AdmissibilityReport check_admissibility(const TrialState& ts, double tol_psd = 1e-9);

// Smallest lambda^2 > 0 with lambda^2 t2 + slack lambda^4 t4 = target (stable closed form).
double trace_scale(double t2, double t4, double target, double slack);
// lambda such that tr gamma of the rescaled trial state equals the particle number.
// Throws InconsistentInput unless 1/2 <= lambda <= 2.
double normalize_for_trace(const TrialState& ts);
// lambda^2 t2 + slack lambda^4 t4 - target
double trace_equation_residual(const TrialState& ts, double lambda);

// -E_b/(2h) + (h/2) E^GP(psi) in the energy unit above.
double predict_expansion(double h, const Vec& psi, const Vec& W, const Grid& grid, const CouplingConstants& cc,
                         double E_b);

// Block matrix [[gamma, alpha], [alpha^bar, 1 - gamma^bar]] of the operators (2n x 2n).
Mat block_gamma(const Mat& G, const Mat& A);

}  // namespace bhf
