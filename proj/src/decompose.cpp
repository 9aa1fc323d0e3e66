#include "bhf/decompose.hpp"

#include <cmath>

#include "bhf/fourier.hpp"
#include "bhf/linalg.hpp"
#include "bhf/trialstate.hpp"

namespace bhf {

namespace {

inline int offset(int i, int j, int n) { return ((i - j + n / 2) % n + n) % n - n / 2; }
inline int anti_diagonal(int j, int m, int n) { return ((2 * j + m) % (2 * n) + 2 * n) % (2 * n); }

}  // namespace

DecompositionResult decompose_alpha(const Mat& alpha, const BoundState& bs, double h, const Grid& grid) {
  const int n = grid.n;
  if (alpha.rows() != n || alpha.cols() != n) throw ConfigError("decompose_alpha: kernel does not match the grid");
  if (bs.grid.n != n) throw InconsistentInput("decompose_alpha: pair state lives on a different lattice");
  const double c = kernel_prefactor(h, 1);
  const Vec& a0 = bs.alpha0;

  Vec num = Vec::Zero(2 * n), den = Vec::Zero(2 * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int m = offset(i, j, n);
      if (m == -n / 2) continue;
      const int s = anti_diagonal(j, m, n);
      num[s] += alpha(i, j) * a0[m + n / 2];
      den[s] += a0[m + n / 2] * a0[m + n / 2];
    }
  DecompositionResult r;
  r.psi_half = Vec::Zero(2 * n);
  for (int s = 0; s < 2 * n; ++s)
    if (den[s] > 0) r.psi_half[s] = num[s] / (c * den[s]);
  r.psi = restrict_half(r.psi_half);

  r.xi = alpha;
  Vec orth = Vec::Zero(2 * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int m = offset(i, j, n);
      if (m == -n / 2) continue;
      const int s = anti_diagonal(j, m, n);
      r.xi(i, j) -= c * r.psi_half[s] * a0[m + n / 2];
      orth[s] += r.xi(i, j) * a0[m + n / 2];
    }
  const double dx = grid.spacing();
  r.orthogonality_residual = orth.cwiseAbs().maxCoeff() * dx;
  r.xi_norm = r.xi.norm() * dx;
  return r;
}

DiagnosticsReport apriori_diagnostics(const BHFState& state, const LatticeModel& model) {
  const Grid& g = model.grid;
  const double dx = g.spacing();
  const Mat G = state.gamma * dx, A = state.alpha * dx;
  const Mat a = A * A.transpose();
  const Mat d = G - a;
  DiagnosticsReport r;
  r.depletion = d.trace();
  r.gap_energy = (model.kinetic.array() * d.transpose().array()).sum() + 0.5 * model.E_b * r.depletion;
  r.gamma2 = (G * G).trace();
  r.alpha4 = (a * a).trace();
  r.guara_min = sym_eigvals(0.5 * (d - G * G + (d - G * G).transpose())).minCoeff();

  const auto dec = decompose_alpha(state.alpha, model.bound_state, model.h, g);
  r.psi_norm = std::sqrt(dec.psi.squaredNorm() * dx);
  r.grad_psi_norm = std::sqrt(apply_derivative(dec.psi, g.length).squaredNorm() * dx);
  r.xi_norm = dec.xi_norm;
  const Mat D = periodic_derivative(g.n, g.length);
  const Mat dxi = D * dec.xi, xid = dec.xi * D.transpose();
  r.grad_X_xi_norm = (dxi + xid).norm() * dx;
  r.grad_r_xi_norm = 0.5 * (dxi - xid).norm() * dx;
  return r;
}

}  // namespace bhf
