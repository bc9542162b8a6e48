#pragma once

#include <vector>

#include "oracles.hpp"
#include "orbitope/algebra.hpp"
#include "orbitope/harness.hpp"

namespace testing_support {

using namespace orbitope;

inline std::vector<AlgebraFamily> desk_families() {
  return {AlgebraFamily::sl_r(3), AlgebraFamily::sl_r(4), AlgebraFamily::so_mn(3, 2),
          AlgebraFamily::so_mn(2, 2), AlgebraFamily::sl_h(2)};
}

inline std::vector<AlgebraFamily> wide_families() {
  return {AlgebraFamily::sl_r(2), AlgebraFamily::sl_r(3), AlgebraFamily::sl_r(4),
          AlgebraFamily::so_mn(2, 1), AlgebraFamily::so_mn(3, 2), AlgebraFamily::so_mn(2, 2),
          AlgebraFamily::so_mn(3, 3), AlgebraFamily::so_mn(4, 2), AlgebraFamily::so_mn(2, 4),
          AlgebraFamily::sl_h(2), AlgebraFamily::sl_h(3)};
}

inline PointP so_point(int m, int n, const Mat& B) {
  const AlgebraFamily f = AlgebraFamily::so_mn(m, n);
  CMat X = CMat::Zero(m + n, m + n);
  X.topRightCorner(m, n) = B.cast<cplx>();
  X.bottomLeftCorner(n, m) = B.transpose().cast<cplx>();
  return PointP::from_matrix(f, X);
}

inline PointP sl_r_diag(const Vec& d) {
  const AlgebraFamily f = AlgebraFamily::sl_r(static_cast<int>(d.size()));
  CMat X = CMat::Zero(d.size(), d.size());
  X.diagonal() = d.cast<cplx>();
  return PointP::from_matrix(f, X);
}

inline Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

/// Chamber coordinates computed without the library's eigensolvers.
inline Vec oracle_chamber(const PointP& x) {
  const AlgebraFamily& f = x.family();
  const CMat& X = x.matrix();
  switch (f.kind()) {
    case FamilyKind::SlR: return oracle::jacobi_eigenvalues(X.real());
    case FamilyKind::SoMN: {
      // Internal storage keeps m >= n, so B is the top-right m x n block.
      const Mat B = X.real().block(0, f.m(), f.m(), f.n());
      Vec s = oracle::singular_values(B);
      if (f.m() == f.n() && B.determinant() < 0) s(s.size() - 1) = -s(s.size() - 1);
      return s;
    }
    case FamilyKind::SlH: {
      const Vec doubled = oracle::hermitian_eigenvalues(X);
      Vec out(f.m());
      for (int i = 0; i < f.m(); ++i) out(i) = 0.5 * (doubled(2 * i) + doubled(2 * i + 1));
      return out;
    }
  }
  return {};
}

/// Ambient spectrum of the natural representation at x, by the oracle eigensolver.
inline Vec oracle_natural_spectrum(const PointP& x) {
  const AlgebraFamily& f = x.family();
  if (f.kind() != FamilyKind::SoMN) return oracle::hermitian_eigenvalues(x.matrix());
  const int m = f.m(), n = f.n();
  CMat J = CMat::Identity(m + n, m + n);
  for (int i = 0; i < m; ++i) J(i, i) = cplx(0, 1);
  return oracle::hermitian_eigenvalues(J * x.matrix() * J.inverse());
}

}  // namespace testing_support
