#pragma once

#include <optional>
#include <string>

#include "bhf/pairstate.hpp"
#include "bhf/stability.hpp"

namespace bhf {

struct CouplingConstants {
  double g_bcs = 0, g_dir = 0, g_ex = 0, g = 0;
  int dimension = 3;
  double quadrature_error_estimate = 0;
  std::optional<bool> assumption2_passed;  // only known when a certificate U is supplied
  std::string warning;
};

struct BcsIntegral {
  double value = 0;
  double tail = 0;          // contribution of the top frequency octave
  double halving_diff = 0;  // |value - value on every second frequency node|
};

// (2 pi)^d int |a0^(p)|^4 (2 p^2 + E_b) d^dp. refine > 1 re-samples a0^ on a frequency grid
// refine times finer (same cutoff) by direct summation.
BcsIntegral g_bcs_integral(const BoundState& bs, int refine = 1);
double g_bcs(const BoundState& bs, int refine = 1);

// 2 int V
double g_dir(const Vec& V, const Grid& grid);

// -int |(a0 * a0)(x)|^2 V(x) dx
double g_ex(const Vec& V, const BoundState& bs);

CouplingConstants coupling_total(const Vec& V, const BoundState& bs, const Vec* U = nullptr,
                                 const StabilityTolerances& tol = {});

}  // namespace bhf
