#include "bhf/lattice.hpp"

#include <cmath>
#include <numbers>

#include "bhf/linalg.hpp"
#include "bhf/trialstate.hpp"

namespace bhf {

Mat minimal_image_matrix(const Vec& v) {
  const int n = static_cast<int>(v.size());
  Mat out(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int m = ((i - j + n / 2) % n + n) % n - n / 2;
      out(i, j) = v[m + n / 2];
    }
  return out;
}

LatticeModel assemble(double h, const Grid& grid, const Vec& V_micro, const Vec& W, const BoundState& bs) {
  if (grid.dim != Dim::One) throw ConfigError("the lattice functional is one-dimensional");
  if (!(h > 0 && h <= 0.5)) throw ConfigError("lattice needs 0 < h <= 1/2");
  if (W.size() != grid.n || V_micro.size() != grid.n) throw ConfigError("assemble: samples do not match the grid");
  if (!same_geometry(bs.grid, micro_grid(grid, h)))
    throw InconsistentInput("pair state must be solved on the micro lattice (n, L/h)");
  const double pts = pair_resolution(bs);
  if (pts < 8) throw ResolutionError("microscale unresolved: pair diameter spans " + std::to_string(pts) + " points");
  const double vmax = V_micro.cwiseAbs().maxCoeff();
  if (std::abs(V_micro[0]) > 1e-4 * vmax)
    throw ResolutionError("V(L/(2h)) is " + std::to_string(std::abs(V_micro[0]) / vmax) +
                          " of max|V|: the interaction wraps around the box");

  LatticeModel m;
  m.grid = grid;
  m.h = h;
  m.kinetic = h * h * periodic_neg_laplacian(grid.n, grid.length);
  m.kinetic_symbol.resize(grid.n);
  for (int b = 0; b < grid.n; ++b) {
    const int k = b < grid.n / 2 ? b : b - grid.n;
    const double p = 2 * std::numbers::pi * k / grid.length;
    m.kinetic_symbol[b] = h * h * p * p;
  }
  m.W_diag = h * h * W;
  m.V_pair = minimal_image_matrix(V_micro);
  m.E_b = bs.E_b;
  m.bound_state = bs;
  m.unit = energy_unit(h, 1);
  m.particles = particle_number(h, 1);
  return m;
}

LatticeModel assemble(double h, const Grid& grid, const PotentialSpec& V, const PotentialSpec& W,
                      const BoundState& bs) {
  return assemble(h, grid, eval_potential(V, bs.grid), eval_potential(W, grid), bs);
}

EnergyBreakdown bhf_energy_ops(const Mat& G, const Mat& A, const LatticeModel& m) {
  if (G.rows() != m.grid.n || A.rows() != m.grid.n) throw ConfigError("state does not match the lattice");
  const Vec g = G.diagonal();
  EnergyBreakdown e;
  e.kinetic = (m.kinetic.array() * G.transpose().array()).sum() / m.unit;
  e.external = m.W_diag.dot(g) / m.unit;
  e.pairing = 0.5 * (m.V_pair.array() * A.array().square()).sum() / m.unit;
  e.exchange = -0.5 * (m.V_pair.array() * G.array().square()).sum() / m.unit;
  e.direct = g.dot(m.V_pair * g) / m.unit;
  e.total = e.kinetic + e.external + e.pairing + e.exchange + e.direct;
  return e;
}

EnergyBreakdown bhf_energy(const BHFState& s, const LatticeModel& m) {
  const double dx = m.grid.spacing();
  return bhf_energy_ops(s.gamma * dx, s.alpha * dx, m);
}

BHFGradient bhf_gradient(const Mat& G, const Mat& A, const LatticeModel& m) {
  BHFGradient d;
  const Vec g = G.diagonal();
  d.dG = m.kinetic - (m.V_pair.array() * G.array()).matrix();
  d.dG.diagonal() += m.W_diag + 2 * (m.V_pair * g);
  d.dG /= m.unit;
  d.dA = (m.V_pair.array() * A.array()).matrix() / m.unit;
  return d;
}

double pair_channel_energy(const Mat& G, const Mat& A, const LatticeModel& m) {
  return (m.kinetic.array() * G.transpose().array()).sum() + 0.5 * (m.V_pair.array() * A.array().square()).sum() +
         0.5 * m.E_b * G.trace();
}

std::array<Mat, 6> gamma_pieces(const Mat& G, const Mat& A) {
  const Mat a = A * A.transpose();
  const Mat d = G - a;
  return {a, a * a, d - G * G, d * d, a * d, d * a};
}

BHFState to_kernels(const Mat& G, const Mat& A, double dx) { return {G / dx, A / dx}; }

KernelInequalityReport kernel_inequality_check(const Mat& sigma, const Mat& delta, const Mat& V) {
  const Eigen::Index n = sigma.rows();
  if (delta.rows() != n || V.rows() != n) throw ConfigError("kernel_inequality_check: size mismatch");
  if (sym_eigvals(sigma).minCoeff() < -1e-10 || sym_eigvals(delta).minCoeff() < -1e-10)
    throw PreconditionError("kernel_inequality_check needs positive semidefinite sigma and delta");
  const Mat tot = sigma + delta;
  double dir = 0, ex = 0, rhs = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      dir += V(i, j) * (tot(i, i) * tot(j, j) - sigma(i, i) * sigma(j, j));
      ex += V(i, j) * (tot(i, j) * tot(i, j) - sigma(i, j) * sigma(i, j));
      rhs += std::abs(V(i, j)) * tot(i, i) * delta(j, j);
    }
  KernelInequalityReport r;
  r.lhs_dir = std::abs(dir);
  r.lhs_ex = std::abs(ex);
  r.rhs_dir = r.rhs_ex = 2 * rhs;
  r.passed = r.lhs_dir <= r.rhs_dir + 1e-10 && r.lhs_ex <= r.rhs_ex + 1e-10;
  return r;
}

}  // namespace bhf
