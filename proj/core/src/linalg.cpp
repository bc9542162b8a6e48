#include "orbitope/linalg.hpp"

#include <algorithm>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "orbitope/errors.hpp"

namespace orbitope {

Vec hermitian_eigenvalues(const CMat& A) {
  const CMat H = (A + A.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> solver(H, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ComputationError("Hermitian eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

double max_hermitian_eigenvalue(const CMat& A) {
  if (A.size() == 0) return 0.0;
  return hermitian_eigenvalues(A)(0);
}

double min_hermitian_eigenvalue(const CMat& A) {
  if (A.size() == 0) return 0.0;
  const Vec ev = hermitian_eigenvalues(A);
  return ev(ev.size() - 1);
}

Vec symmetric_eigenvalues(const Mat& A) {
  const Mat S = (A + A.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(S, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ComputationError("symmetric eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

double trace_form(const CMat& X, const CMat& Y) {
  return (X.array() * Y.conjugate().array()).sum().real();
}

double max_abs(const CMat& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMat& A, double tol) {
  return A.rows() == A.cols() && max_abs(A - A.adjoint()) <= tol;
}

CMat commutator(const CMat& X, const CMat& Y) { return X * Y - Y * X; }

CMat matrix_exp(const CMat& A) { return A.exp(); }

int affine_dimension(const std::vector<Vec>& points, double tol) {
  if (points.size() <= 1) return 0;
  const Eigen::Index dim = points.front().size();
  Mat diffs(dim, static_cast<Eigen::Index>(points.size() - 1));
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.col(static_cast<Eigen::Index>(i - 1)) = points[i] - points[0];
  if (diffs.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(diffs);
  const Vec& s = svd.singularValues();
  const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * scale) ++rank;
  return rank;
}

Vec sorted_descending(const Vec& v) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(v.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return v(a) > v(b); });
  Vec out(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out(static_cast<Eigen::Index>(i)) = v(idx[i]);
  return out;
}

}  // namespace orbitope
