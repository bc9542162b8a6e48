#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace orbitope {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;

/// Numerical tolerances shared across modules. Defaults follow the library's
/// documented policy; every routine that compares against zero takes one.
struct Tolerances {
  double structural = 1e-10;  // algebra / 𝔭-shape membership
  double chamber = 1e-9;      // closed-chamber inequalities
  double witness = 1e-9;      // conjugation witness lands in 𝔞
  double membership = 1e-9;   // verdict threshold on the margin
  double consistency = 1e-7;  // analytic vs matrix path agreement
};

/// Eigenvalues of the Hermitian part of A, sorted descending.
Vec hermitian_eigenvalues(const CMat& A);
double max_hermitian_eigenvalue(const CMat& A);
double min_hermitian_eigenvalue(const CMat& A);
Vec symmetric_eigenvalues(const Mat& A);  // descending

/// Re tr(X Y*), the real trace form used as inner product on 𝔭.
double trace_form(const CMat& X, const CMat& Y);

double max_abs(const CMat& A);
bool is_hermitian(const CMat& A, double tol);

CMat commutator(const CMat& X, const CMat& Y);
CMat matrix_exp(const CMat& A);

/// Affine dimension of a point cloud (rank of the centred differences).
int affine_dimension(const std::vector<Vec>& points, double tol = 1e-9);

/// Stable descending sort of values; ties keep their original order.
Vec sorted_descending(const Vec& v);

}  // namespace orbitope
