#pragma once

#include "bhf/types.hpp"

namespace bhf {

struct EigenPairs {
  Vec values;  // ascending
  Mat vectors;
};

// Full symmetric eigendecomposition (LAPACK divide and conquer).
EigenPairs sym_eig(const Mat& a);
Vec sym_eigvals(const Mat& a);

// Eigenpairs il..iu (0-based, inclusive) of a dense symmetric matrix.
EigenPairs sym_eig_range(const Mat& a, int il, int iu);

// Eigenpairs il..iu of the symmetric tridiagonal matrix (diag d, off-diagonal e).
EigenPairs tridiag_eig_range(const Vec& d, const Vec& e, int il, int iu);

// Spectral (band-limited) second-derivative matrix -d^2/dx^2 on a periodic grid.
Mat periodic_neg_laplacian(int n, double length);
// Spectral first derivative d/dx on a periodic grid (Nyquist mode dropped).
Mat periodic_derivative(int n, double length);

}  // namespace bhf
