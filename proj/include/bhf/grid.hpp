#pragma once

#include "bhf/types.hpp"

namespace bhf {

enum class Dim { One, Radial3, Three };

const char* dim_name(Dim d);
Dim dim_from_name(const std::string& s);
int spatial_dim(Dim d);

// Uniform grid. Periodic grids (One, Three) have nodes -length/2 + k*spacing,
// radial grids have r_k = (k+1)*spacing so r = 0 is never a node.
struct Grid {
  Dim dim = Dim::One;
  int n = 0;
  double length = 0;

  Grid() = default;
  Grid(Dim d, int n_, double len);

  static Grid periodic(int n, double length) { return Grid(Dim::One, n, length); }
  static Grid radial(int n, double length) { return Grid(Dim::Radial3, n, length); }

  double spacing() const { return length / n; }
  double node(int k) const;
  Vec nodes() const;
  bool periodic() const { return dim != Dim::Radial3; }

  // conjugate frequency grid: ascending p for periodic, p_j = (j+1) pi/((n+1) dr) for radial
  double dp() const;
  Vec frequencies() const;

  // quadrature weights of the d-dimensional measure (dx, or 4 pi r^2 dr)
  Vec weights() const;
  Vec freq_weights() const;
};

bool same_geometry(const Grid& a, const Grid& b, double rtol = 1e-12);

}  // namespace bhf
