#pragma once

#include <string>

#include "bhf/potential.hpp"

namespace bhf {

struct StablePair {
  Vec V, U;
  bool attractive_tail = true;  // false when U >= 0 everywhere
  std::string warning;
};

// U = u * u(-.), V = 2 U_+ - U_-; then V - V_+/2 = U holds sample by sample.
StablePair construct_stable_potential(const PotentialSpec& u, const Grid& grid);
// V = 2U_+ - U_- from given certificate samples U.
StablePair stable_from_certificate(const Vec& U);

struct StabilityReport {
  double pointwise_margin = 0;  // min_x (V - V_+/2 - U)
  double fourier_min = 0;       // min_p U^(p)
  bool passed = false;
  double witness_x = 0;         // where the pointwise margin is attained
  double witness_p = 0;         // where the Fourier minimum is attained
};

struct StabilityTolerances {
  double pointwise = 1e-9;
  double fourier = 1e-9;
};

StabilityReport check_assumption2(const Vec& V, const Vec& U, const Grid& grid, const StabilityTolerances& tol = {});

struct ThresholdResult {
  double lambda_c = 0;
  double lo = 0, hi = 0;  // final bracket
  int iterations = 0;
};

// Bisection on "lowest eigenvalue of -2 Delta + lambda V is below -eps_bind".
ThresholdResult binding_threshold(const PotentialSpec& V, const Grid& grid, double lambda_lo, double lambda_hi,
                                  double eps_bind = 1e-10, double rtol = 1e-6);
// Same on fixed samples: the coupling multiplies V.
ThresholdResult binding_threshold(const Vec& V, const Grid& grid, double lambda_lo, double lambda_hi,
                                  double eps_bind = 1e-10, double rtol = 1e-6);

}  // namespace bhf
