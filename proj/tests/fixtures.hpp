#pragma once

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <random>

#include "bhf/config.hpp"
#include "bhf/lattice.hpp"
#include "bhf/linalg.hpp"
#include "bhf/trialstate.hpp"

namespace fixture {

using bhf::Mat;
using bhf::Vec;

// Same physics as config/default.yaml.
inline const char* kDefaultYaml = R"(
potential:
  construct: certificate
  terms: [{kind: diff_gaussians, a1: 6, w1: 0.5, a2: 1, w2: 1.5}]
  lambda: 32
trap:
  terms: [{kind: polynomial, coeffs: [0, 0, 700]}]
grid: {dimension: 1d, n: 512, length: 2.4}
)";

inline bhf::Config default_config() { return bhf::parse_config(kDefaultYaml); }

inline Mat random_orthogonal(int n, std::mt19937& rng) {
  std::normal_distribution<double> N;
  Mat g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = N(rng);
  Eigen::HouseholderQR<Mat> qr(g);
  return qr.householderQ() * Mat::Identity(n, n);
}

inline Mat random_symmetric(int n, std::mt19937& rng) {
  std::normal_distribution<double> N;
  Mat g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = N(rng);
  return 0.5 * (g + g.transpose());
}

// Operators (G, A) with 0 <= [[G, A], [A, 1 - G]] <= 1: a common eigenbasis, occupations l_k
// and pairing amplitudes a_k with a_k^2 <= l_k (1 - l_k) (each 2x2 block then has spectrum in [0, 1]).
struct OpPair {
  Mat G, A;
};
inline OpPair random_admissible(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> U(0, 1), S(-1, 1);
  const Mat Q = random_orthogonal(n, rng);
  Vec l(n), a(n);
  for (int k = 0; k < n; ++k) {
    l[k] = U(rng);
    a[k] = S(rng) * std::sqrt(l[k] * (1 - l[k]));
  }
  return {Q * l.asDiagonal() * Q.transpose(), Q * a.asDiagonal() * Q.transpose()};
}

// Lattice model without the pair-state checks, for small n. V is evaluated on the micro lattice.
inline bhf::LatticeModel small_model(int n, double length, double h, const bhf::PotentialSpec& V,
                                     const bhf::PotentialSpec& W) {
  const bhf::Grid macro = bhf::Grid::periodic(n, length);
  bhf::LatticeModel m;
  m.grid = macro;
  m.h = h;
  m.kinetic = h * h * bhf::periodic_neg_laplacian(n, length);
  m.kinetic_symbol.resize(n);
  for (int b = 0; b < n; ++b) {
    const int k = b < n / 2 ? b : b - n;
    const double p = 2 * std::numbers::pi * k / length;
    m.kinetic_symbol[b] = h * h * p * p;
  }
  m.W_diag = h * h * bhf::eval_potential(W, macro);
  m.V_pair = bhf::minimal_image_matrix(bhf::eval_potential(V, bhf::micro_grid(macro, h)));
  m.unit = bhf::energy_unit(h, 1);
  m.particles = bhf::particle_number(h, 1);
  return m;
}

}  // namespace fixture
