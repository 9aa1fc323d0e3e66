#include "bhf/pairstate.hpp"

#include <cmath>
#include <numbers>

#include "bhf/fourier.hpp"
#include "bhf/linalg.hpp"

namespace bhf {

using std::numbers::pi;

namespace {

// -2 u'' + V u on r_k = (k+1) dr, u(0) = 0, u'(R + dr/2) = 0
struct Tridiag {
  Vec d, e;
};

Tridiag radial_operator(const Vec& V, double dr) {
  const int n = static_cast<int>(V.size());
  Tridiag t{Vec(n), Vec::Constant(n - 1, -2 / (dr * dr))};
  for (int k = 0; k < n; ++k) t.d[k] = 4 / (dr * dr) + V[k];
  t.d[n - 1] -= 2 / (dr * dr);
  return t;
}

Vec apply_radial(const Vec& V, double dr, const Vec& u) {
  const Tridiag t = radial_operator(V, dr);
  const int n = static_cast<int>(u.size());
  Vec out = t.d.cwiseProduct(u);
  for (int k = 0; k + 1 < n; ++k) {
    out[k] += t.e[k] * u[k + 1];
    out[k + 1] += t.e[k] * u[k];
  }
  return out;
}

Vec coarse_samples(const Vec& V) {
  Vec c(V.size() / 2);
  for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = V[2 * k + 1];
  return c;
}

// Even-sector restriction of a parity-symmetric periodic operator. Basis: delta_0, delta_{n/2},
// and (delta_k + delta_{n-k})/sqrt 2 for 0 < k < n/2, stored as indices 0..n/2.
Mat even_block(const Mat& h) {
  const int n = static_cast<int>(h.rows()), m = n / 2;
  auto fixed = [&](int a) { return a == 0 || a == m; };
  Mat e(m + 1, m + 1);
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      if (fixed(a) && fixed(b)) e(a, b) = h(a, b);
      else if (fixed(a)) e(a, b) = std::sqrt(2.0) * h(a, b);
      else if (fixed(b)) e(a, b) = std::sqrt(2.0) * h(a, b);
      else e(a, b) = h(a, b) + h(a, n - b);
    }
  return e;
}

Vec even_expand(const Vec& w, int n) {
  const int m = n / 2;
  Vec v(n);
  v[0] = w[0];
  v[m] = w[m];
  for (int k = 1; k < m; ++k) v[k] = v[n - k] = w[k] / std::sqrt(2.0);
  return v;
}

Mat periodic_operator(const Vec& V, const Grid& g) {
  Mat h = 2 * periodic_neg_laplacian(g.n, g.length);
  h.diagonal() += V;
  return h;
}

struct RawPair {
  double e0, e1;
  Vec u;  // unit Euclidean norm
};

RawPair radial_raw(const Vec& V, double dr) {
  const Tridiag t = radial_operator(V, dr);
  EigenPairs ep = tridiag_eig_range(t.d, t.e, 0, 1);
  return {ep.values[0], ep.values[1], ep.vectors.col(0)};
}

RawPair periodic_raw(const Vec& V, const Grid& g) {
  EigenPairs ep = sym_eig_range(even_block(periodic_operator(V, g)), 0, 1);
  return {ep.values[0], ep.values[1], even_expand(ep.vectors.col(0), g.n)};
}

double richardson(const Vec& V, const Grid& g, double fine) {
  if (g.n % 2 || g.n < 32) return fine;
  const double coarse = radial_raw(coarse_samples(V), 2 * g.spacing()).e0;
  return (4 * fine - coarse) / 3;
}

}  // namespace

double lowest_energy(const Vec& V, const Grid& g) {
  if (V.size() != g.n) throw ConfigError("potential samples do not match the grid");
  if (g.dim == Dim::Radial3) return richardson(V, g, radial_raw(V, g.spacing()).e0);
  if (g.dim == Dim::One) return periodic_raw(V, g).e0;
  throw ConfigError("pair solver supports 1D periodic and 3D radial grids");
}

double eigen_residual(const Vec& V, const Grid& g, const Vec& alpha0, double E) {
  if (g.dim == Dim::Radial3) {
    const Vec r = g.nodes();
    const Vec u = std::sqrt(4 * pi) * alpha0.cwiseProduct(r);
    const Vec res = apply_radial(V, g.spacing(), u) - E * u;
    return std::sqrt(res.squaredNorm() * g.spacing());
  }
  const Vec res = periodic_operator(V, g) * alpha0 - E * alpha0;
  return std::sqrt(res.squaredNorm() * g.spacing());
}

double half_scaled_expectation(const Vec& V, const BoundState& bs) {
  const Grid& g = bs.grid;
  Vec h_a;
  if (g.dim == Dim::Radial3) {
    const Vec r = g.nodes();
    const Vec u = std::sqrt(4 * pi) * bs.alpha0.cwiseProduct(r);
    return 0.5 * (u.dot(apply_radial(V, g.spacing(), u)) * g.spacing()) + 0.5 * bs.E_b * u.squaredNorm() * g.spacing();
  }
  h_a = periodic_operator(V, g) * bs.alpha0;
  return 0.5 * bs.alpha0.dot(h_a) * g.spacing() + 0.5 * bs.E_b * bs.alpha0.squaredNorm() * g.spacing();
}

BoundState solve_ground_state(const Vec& V, const Grid& g, const PairOptions& opts) {
  if (V.size() != g.n) throw ConfigError("potential samples do not match the grid");
  if (g.dim != Dim::One && g.dim != Dim::Radial3) throw ConfigError("pair solver supports 1D periodic and 3D radial grids");

  const double dx = g.spacing();
  BoundState bs;
  bs.grid = g;
  RawPair raw = g.dim == Dim::Radial3 ? radial_raw(V, dx) : periodic_raw(V, g);
  const double e0 = g.dim == Dim::Radial3 ? richardson(V, g, raw.e0) : raw.e0;
  if (!(e0 < -opts.eps_bind))
    throw NoBoundState("no bound state: lowest eigenvalue " + std::to_string(e0) + " >= -" + std::to_string(opts.eps_bind));

  bs.E_b = -e0;
  bs.eigenvalue = raw.e0;
  bs.spectral_gap = 0.5 * (std::min(raw.e1, 0.0) - raw.e0);

  Vec a = raw.u / std::sqrt(dx);  // unit L2(dr) or L2(dx)
  if (g.dim == Dim::Radial3) {
    const Vec r = g.nodes();
    if (a.sum() < 0) a = -a;
    bs.alpha0 = (a.array() / (std::sqrt(4 * pi) * r.array())).matrix();
  } else {
    if (a.sum() < 0) a = -a;
    bs.alpha0 = a;
  }
  const Vec w = g.weights();
  bs.norm = std::sqrt(bs.alpha0.cwiseAbs2().dot(w));

  const double peak = bs.alpha0.cwiseAbs().maxCoeff();
  const double edge = g.dim == Dim::Radial3 ? std::abs(bs.alpha0[g.n - 1]) : std::abs(bs.alpha0[0]);
  if (edge > opts.decay_tol * peak)
    throw ResolutionError("grid too small: alpha0 at the boundary is " + std::to_string(edge / peak) +
                          " of its peak (need <= " + std::to_string(opts.decay_tol) + ")");

  bs.alpha0_hat = fourier(bs.alpha0, g);
  bs.residual = eigen_residual(V, g, bs.alpha0, raw.e0);
  return bs;
}

}  // namespace bhf
