#include "bhf/linalg.hpp"

#include <lapacke.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace bhf {

EigenPairs sym_eig(const Mat& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  EigenPairs out{Vec(n), a};
  if (n == 0) return out;
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n, out.values.data());
  if (info != 0) throw Error("dsyevd failed, info = " + std::to_string(info));
  return out;
}

Vec sym_eigvals(const Mat& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Mat work = a;
  Vec w(n);
  if (n == 0) return w;
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data());
  if (info != 0) throw Error("dsyevd failed, info = " + std::to_string(info));
  return w;
}

EigenPairs sym_eig_range(const Mat& a, int il, int iu) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Mat work = a;
  const lapack_int k = iu - il + 1;
  Vec w(n);
  Mat z(n, k);
  std::vector<lapack_int> isuppz(2 * static_cast<size_t>(k));
  lapack_int m = 0;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0, il + 1, iu + 1,
                                         0.0, &m, w.data(), z.data(), n, isuppz.data());
  if (info != 0 || m != k) throw Error("dsyevr failed, info = " + std::to_string(info));
  return {w.head(k), z};
}

EigenPairs tridiag_eig_range(const Vec& d, const Vec& e, int il, int iu) {
  const lapack_int n = static_cast<lapack_int>(d.size());
  Vec dd = d;
  Vec ee(n);
  ee.head(n - 1) = e;
  ee[n - 1] = 0;
  const lapack_int k = iu - il + 1;
  Vec w(n);
  Mat z(n, k);
  std::vector<lapack_int> isuppz(2 * static_cast<size_t>(k));
  lapack_int m = 0;
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, dd.data(), ee.data(), 0.0, 0.0, il + 1, iu + 1,
                                         0.0, &m, w.data(), z.data(), n, isuppz.data());
  if (info != 0 || m != k) throw Error("dstevr failed, info = " + std::to_string(info));
  return {w.head(k), z};
}

Mat periodic_neg_laplacian(int n, double length) {
  using std::numbers::pi;
  const double dx = length / n;
  Vec row(n);
  for (int o = 0; o < n; ++o) {
    double s = 0;
    for (int m = -n / 2; m < n / 2; ++m) {
      const double p = 2 * pi * m / length;
      s += p * p * std::cos(p * o * dx);
    }
    row[o] = s / n;
  }
  Mat k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i, j) = row[(i - j + n) % n];
  return k;
}

Mat periodic_derivative(int n, double length) {
  using std::numbers::pi;
  const double dx = length / n;
  Vec row(n);
  for (int o = 0; o < n; ++o) {
    double s = 0;
    for (int m = -n / 2 + 1; m < n / 2; ++m) {
      const double p = 2 * pi * m / length;
      s -= p * std::sin(p * o * dx);
    }
    row[o] = s / n;
  }
  Mat d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = row[(i - j + n) % n];
  return d;
}

}  // namespace bhf
