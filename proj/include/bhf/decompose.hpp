#pragma once

#include "bhf/lattice.hpp"

namespace bhf {

// alpha = c_h psi(X) alpha0(r/h) + xi, with psi(X) the least-squares coefficient of alpha0 along
// each anti-diagonal X = (x_i + x_j)/2 of the lattice (2n anti-diagonals on the half-step grid).
struct DecompositionResult {
  Vec psi_half;   // 2n samples
  Vec psi;        // restricted to the primary grid
  Mat xi;         // kernel samples
  double orthogonality_residual = 0;  // max_X |sum_r xi alpha0| dx
  double xi_norm = 0;                 // ||xi||_2 (Hilbert-Schmidt)
};

DecompositionResult decompose_alpha(const Mat& alpha, const BoundState& bs, double h, const Grid& grid);

struct DiagnosticsReport {
  double gap_energy = 0;  // tr[(-h^2 Delta + E_b/2)(gamma - alpha alpha^bar)]
  double depletion = 0;   // tr(gamma - alpha alpha^bar)
  double gamma2 = 0;      // tr gamma^2
  double psi_norm = 0, grad_psi_norm = 0;
  double xi_norm = 0, grad_X_xi_norm = 0, grad_r_xi_norm = 0;
  double alpha4 = 0;      // tr (alpha alpha^bar)^2
  double guara_min = 0;   // min eigenvalue of gamma - gamma^2 - alpha alpha^bar
};

// Raw operator traces (no energy unit).
DiagnosticsReport apriori_diagnostics(const BHFState& state, const LatticeModel& model);

}  // namespace bhf
