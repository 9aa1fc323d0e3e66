#include "bhf/gp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhf/fourier.hpp"

namespace bhf {

using std::numbers::pi;

namespace {

void check_dims(const Vec& psi, const Vec& W, const Grid& g) {
  if (g.dim != Dim::One && g.dim != Dim::Radial3) throw ConfigError("GP supports 1D periodic and 3D radial grids");
  if (psi.size() != g.n || W.size() != g.n) throw ConfigError("GP: samples do not match the grid");
}

// radial: u = sqrt(4 pi) r psi, so ||psi||_{L2(d^3x)} = ||u||_{L2(dr)}
Vec to_u(const Vec& psi, const Grid& g) { return std::sqrt(4 * pi) * psi.cwiseProduct(g.nodes()); }
Vec from_u(const Vec& u, const Grid& g) { return (u.array() / (std::sqrt(4 * pi) * g.nodes().array())).matrix(); }

// -u'' with u(0) = 0 and a Neumann wall half a cell past the last node
Vec radial_neg_d2(const Vec& u, double dr) {
  const Eigen::Index n = u.size();
  Vec out(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double left = k > 0 ? u[k - 1] : 0.0;
    out[k] = k + 1 < n ? 2 * u[k] - left - u[k + 1] : u[k] - left;
  }
  return out / (dr * dr);
}

double kinetic(const Vec& psi, const Grid& g) {
  const double dx = g.spacing();
  if (g.dim == Dim::Radial3) {
    const Vec u = to_u(psi, g);
    double s = u[0] * u[0];
    for (Eigen::Index k = 1; k < u.size(); ++k) s += (u[k] - u[k - 1]) * (u[k] - u[k - 1]);
    return 0.5 * s / dx;
  }
  return 0.5 * psi.dot(apply_neg_laplacian(psi, g.length)) * dx;
}

// Thomas algorithm for 1/2(-D2) + diag(c) on the radial u-grid
Vec radial_precondition(const Vec& r, const Vec& c, double dr) {
  const Eigen::Index n = r.size();
  const double off = -0.5 / (dr * dr);
  Vec diag(n), rhs = r, cp(n);
  for (Eigen::Index k = 0; k < n; ++k) diag[k] = (k + 1 < n ? 1.0 : 0.5) / (dr * dr) + c[k];
  cp[0] = off / diag[0];
  rhs[0] /= diag[0];
  for (Eigen::Index k = 1; k < n; ++k) {
    const double m = diag[k] - off * cp[k - 1];
    cp[k] = off / m;
    rhs[k] = (rhs[k] - off * rhs[k - 1]) / m;
  }
  for (Eigen::Index k = n - 1; k-- > 0;) rhs[k] -= cp[k] * rhs[k + 1];
  return rhs;
}

Vec periodic_precondition(const Vec& r, double shift, double length) {
  const int n = static_cast<int>(r.size());
  CVec rh = fft(CVec(r.cast<cplx>()));
  for (int b = 0; b < n; ++b) {
    const int m = b < n / 2 ? b : b - n;
    const double p = 2 * pi * m / length;
    rh[b] /= 0.5 * p * p + shift;
  }
  return ifft(rh).real();
}

}  // namespace

double l2_norm(const Vec& f, const Grid& g) { return std::sqrt(f.cwiseAbs2().dot(g.weights())); }

double l4_norm4(const Vec& f, const Grid& g) { return f.array().square().square().matrix().dot(g.weights()); }

double boundary_mass(const Vec& psi, const Grid& g) {
  const int band = std::max(1, g.n / 20);
  const Vec w = g.weights();
  double m = 0;
  if (g.dim == Dim::Radial3) {
    for (int k = g.n - band; k < g.n; ++k) m += psi[k] * psi[k] * w[k];
  } else {
    for (int k = 0; k < band; ++k) m += psi[k] * psi[k] * w[k] + psi[g.n - 1 - k] * psi[g.n - 1 - k] * w[g.n - 1 - k];
  }
  return m;
}

GPEnergyBreakdown gp_energy(const Vec& psi, const Vec& W, double g, const Grid& grid) {
  check_dims(psi, W, grid);
  GPEnergyBreakdown e;
  const Vec w = grid.weights();
  e.kinetic = kinetic(psi, grid);
  e.trap = 2 * (W.array() * psi.array().square() * w.array()).sum();
  e.quartic = g * l4_norm4(psi, grid);
  e.total = e.kinetic + e.trap + e.quartic;
  return e;
}

Vec gp_apply_h(const Vec& psi, const Vec& W, double g, const Grid& grid) {
  check_dims(psi, W, grid);
  const Vec pot = 2 * W.array() + 2 * g * psi.array().square();
  if (grid.dim == Dim::Radial3) {
    const Vec u = to_u(psi, grid);
    const Vec hu = 0.5 * radial_neg_d2(u, grid.spacing()) + pot.cwiseProduct(u);
    return from_u(hu, grid);
  }
  return 0.5 * apply_neg_laplacian(psi, grid.length) + pot.cwiseProduct(psi);
}

GPResidual gp_residual(const Vec& psi, const Vec& W, double g, const Grid& grid) {
  const Vec hp = gp_apply_h(psi, W, g, grid);
  const Vec w = grid.weights();
  GPResidual r;
  r.mu = (psi.array() * hp.array() * w.array()).sum();
  const Vec res = hp - r.mu * psi;
  r.residual = std::sqrt(res.cwiseAbs2().dot(w));
  return r;
}

Vec gp_initial_guess(const Vec& W, const Grid& grid) {
  const Vec x = grid.nodes();
  Eigen::Index k0 = 0;
  W.minCoeff(&k0);
  double curv = 0, x0 = 0;
  if (grid.dim == Dim::Radial3) {
    // W ~ a + b r^2 near the origin
    curv = 2 * (W[1] - W[0]) / (x[1] * x[1] - x[0] * x[0]);
  } else {
    const int n = grid.n;
    const Eigen::Index km = (k0 + n - 1) % n, kp = (k0 + 1) % n;
    curv = (W[kp] - 2 * W[k0] + W[km]) / (grid.spacing() * grid.spacing());
    x0 = x[k0];
  }
  Vec psi(grid.n);
  if (curv > 0) {
    // -1/2 psi'' + 2 * (curv/2) (x - x0)^2 psi: frequency omega = sqrt(2 curv)
    const double omega = std::sqrt(2 * curv);
    for (int k = 0; k < grid.n; ++k) psi[k] = std::exp(-0.5 * omega * (x[k] - x0) * (x[k] - x0));
  } else {
    psi.setOnes();
  }
  return psi / l2_norm(psi, grid);
}

CondensateState gp_minimize(const Vec& W, double g, const Grid& grid, const GPOptions& opts) {
  if (g < 0) throw ConfigError("gp_minimize needs g >= 0");
  check_dims(Vec::Zero(grid.n), W, grid);

  CondensateState st;
  st.grid = grid;
  Vec psi = gp_initial_guess(W, grid);
  double E = gp_energy(psi, W, g, grid).total;
  GPResidual res = gp_residual(psi, W, g, grid);
  st.energy_history.push_back(E);
  st.residual_history.push_back(res.residual);

  const double wmin = W.minCoeff();
  double t = opts.step;
  int it = 0;
  for (; it < opts.max_iter && res.residual > opts.tol; ++it) {
    const Vec r = gp_apply_h(psi, W, g, grid) - res.mu * psi;
    const double shift = std::max(res.mu - 2 * wmin, 1.0);
    Vec d;
    if (grid.dim == Dim::Radial3) {
      const Vec c = (2 * (W.array() - wmin) + shift).matrix();
      d = -from_u(radial_precondition(to_u(r, grid), c, grid.spacing()), grid);
    } else {
      d = -periodic_precondition(r, shift, grid.length);
    }
    // once energy changes drop to round-off the residual takes over as the merit function
    const double noise = 1e-14 * (1 + std::abs(E));
    const double slack = std::min(1e-12, noise);
    Vec cand;
    double Ec = 0;
    GPResidual rc;
    bool stalled = false;
    for (;;) {
      cand = psi + t * d;
      cand /= l2_norm(cand, grid);
      Ec = gp_energy(cand, W, g, grid).total;
      if (Ec <= E - noise) {
        rc = gp_residual(cand, W, g, grid);
        break;
      }
      if (Ec <= E + slack) {
        rc = gp_residual(cand, W, g, grid);
        if (rc.residual < res.residual) break;
      }
      t *= 0.5;
      if (t < 1e-10) {
        stalled = true;
        break;
      }
    }
    if (stalled) break;
    psi = cand;
    E = Ec;
    res = rc;
    st.energy_history.push_back(E);
    st.residual_history.push_back(res.residual);
    t = std::min(1.25 * t, 2.0);
  }

  const double bm = boundary_mass(psi, grid);
  if (bm > opts.boundary_tol)
    throw ResolutionError("grid too small: GP boundary mass " + std::to_string(bm) + " > " +
                          std::to_string(opts.boundary_tol));

  st.psi = psi;
  st.norm = l2_norm(psi, grid);
  st.energy = E;
  st.mu = res.mu;
  st.residual = res.residual;
  st.converged = res.residual <= opts.tol;
  st.iterations = it;
  return st;
}

}  // namespace bhf
