#pragma once

#include <array>

#include "bhf/pairstate.hpp"
#include "bhf/potential.hpp"

namespace bhf {

// Operators of the 1D lattice functional. Matrices act on the measure-weighted kernels
// (kernel * dx); V_pair(i,j) = V(m dr) with m the minimal-image offset and dr = dx/h.
struct LatticeModel {
  Grid grid;
  double h = 0;
  Mat kinetic;        // -h^2 Delta (spectral)
  Vec kinetic_symbol; // h^2 p^2 on the FFT ordering
  Vec W_diag;         // h^2 W(x_i)
  Mat V_pair;
  double E_b = 0;
  BoundState bound_state;
  double unit = 1;      // energies are divided by h^{3-d}
  double particles = 0; // trace target h^{2-d}
};

// Kernel samples gamma(x_i,x_j), alpha(x_i,x_j).
struct BHFState {
  Mat gamma, alpha;
};

struct EnergyBreakdown {
  double kinetic = 0, external = 0, pairing = 0, exchange = 0, direct = 0, total = 0;
};

// V(m dr) for the minimal-image offset m = i - j (mod n) in [-n/2, n/2).
Mat minimal_image_matrix(const Vec& micro_samples);

LatticeModel assemble(double h, const Grid& grid, const Vec& V_micro, const Vec& W, const BoundState& bs);
LatticeModel assemble(double h, const Grid& grid, const PotentialSpec& V, const PotentialSpec& W,
                      const BoundState& bs);

EnergyBreakdown bhf_energy(const BHFState& state, const LatticeModel& model);
// Same functional on the operators G = gamma dx, A = alpha dx.
EnergyBreakdown bhf_energy_ops(const Mat& G, const Mat& A, const LatticeModel& model);

struct BHFGradient {
  Mat dG, dA;  // derivatives of the reported total with respect to the entries of G and A
};
BHFGradient bhf_gradient(const Mat& G, const Mat& A, const LatticeModel& model);

// tr(-h^2 Delta gamma) + pairing + (E_b/2) tr gamma, raw (not divided by the energy unit).
double pair_channel_energy(const Mat& G, const Mat& A, const LatticeModel& model);

// gamma = a + a^2 + (gamma - a - gamma^2) + (gamma - a)^2 + a (gamma - a) + (gamma - a) a, a = A A^T
std::array<Mat, 6> gamma_pieces(const Mat& G, const Mat& A);

BHFState to_kernels(const Mat& G, const Mat& A, double dx);

struct KernelInequalityReport {
  double lhs_dir = 0, rhs_dir = 0, lhs_ex = 0, rhs_ex = 0;
  bool passed = false;
};
// Both sides of the direct and exchange difference bounds for PSD sigma, delta and a
// symmetric interaction matrix V(x_i - x_j). Plain sums (unit measure).
KernelInequalityReport kernel_inequality_check(const Mat& sigma, const Mat& delta, const Mat& V);

}  // namespace bhf
