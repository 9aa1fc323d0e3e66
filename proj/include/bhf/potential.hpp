#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "bhf/grid.hpp"

namespace bhf {

// -depth inside, -depth/2 exactly on the edge, 0 outside
struct SquareWell {
  double depth = 1, radius = 1;
};
// amplitude * exp(-r^2 / (2 width^2))
struct Gaussian {
  double amplitude = 1, width = 1;
};
struct DiffGaussians {
  double a1 = 1, w1 = 1, a2 = 1, w2 = 1;
};
// linear interpolation in |x|, zero beyond the last abscissa
struct Tabulated {
  std::vector<double> r, v;
};
// sum_k c_k min(r, cutoff)^k
struct PolynomialWell {
  std::vector<double> coeffs;
  double cutoff = 0;  // <= 0 means no cutoff
};

using Term = std::variant<SquareWell, Gaussian, DiffGaussians, Tabulated, PolynomialWell>;

struct PotentialSpec {
  std::vector<Term> terms;
  double lambda = 1;
  std::optional<Dim> dimension;  // set when the spec only makes sense in one geometry

  double operator()(double r) const;
  bool bounded() const;
  PotentialSpec scaled(double s) const;
};

using TrapSpec = PotentialSpec;

// Samples at the grid nodes; Dim::Three returns n^3 values in x-fastest order.
Vec eval_potential(const PotentialSpec& spec, const Grid& grid);

// Logs (once per call) when the spec is unbounded, e.g. a polynomial trap without cutoff.
Vec eval_trap(const TrapSpec& spec, const Grid& grid);

}  // namespace bhf
