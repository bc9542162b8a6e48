#include "orbitope/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "orbitope/errors.hpp"

namespace orbitope {

namespace {

const cplx kI{0.0, 1.0};

CMat unit(int rows, int cols, int i, int j) {
  CMat E = CMat::Zero(rows, cols);
  E(i, j) = 1.0;
  return E;
}

// [[A, B], [-conj(B), conj(A)]]
CMat quaternionic(const CMat& A, const CMat& B) {
  const Eigen::Index m = A.rows();
  CMat X(2 * m, 2 * m);
  X.topLeftCorner(m, m) = A;
  X.topRightCorner(m, m) = B;
  X.bottomLeftCorner(m, m) = -B.conjugate();
  X.bottomRightCorner(m, m) = A.conjugate();
  return X;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Multiplicities of equal entries (exact comparison) in v.
std::vector<int> multiplicities(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    out.push_back(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

Vec clean_zero(Vec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) == 0.0) v(i) = 0.0;
  return v;
}

}  // namespace

const char* to_string(WeylType t) noexcept {
  switch (t) {
    case WeylType::A: return "A";
    case WeylType::B: return "B";
    case WeylType::D: return "D";
  }
  return "?";
}

// --- AlgebraFamily ----------------------------------------------------------

AlgebraFamily AlgebraFamily::sl_r(int n) {
  if (n < 2) throw ShapeError("sl_r(n) requires n >= 2");
  return AlgebraFamily(FamilyKind::SlR, n, n, false);
}

AlgebraFamily AlgebraFamily::so_mn(int m, int n) {
  if (m < 1 || n < 1 || m + n < 3)
    throw ShapeError("so_mn(m,n) requires m, n >= 1 and m + n >= 3");
  if (m < n) return AlgebraFamily(FamilyKind::SoMN, n, m, true);
  return AlgebraFamily(FamilyKind::SoMN, m, n, false);
}

AlgebraFamily AlgebraFamily::sl_h(int m) {
  if (m < 2) throw ShapeError("sl_h(m) requires 2m >= 4");
  return AlgebraFamily(FamilyKind::SlH, m, m, false);
}

int AlgebraFamily::ambient_size() const noexcept {
  switch (kind_) {
    case FamilyKind::SlR: return n_;
    case FamilyKind::SoMN: return m_ + n_;
    case FamilyKind::SlH: return 2 * m_;
  }
  return 0;
}

int AlgebraFamily::restricted_rank() const noexcept {
  switch (kind_) {
    case FamilyKind::SlR: return n_ - 1;
    case FamilyKind::SoMN: return n_;
    case FamilyKind::SlH: return m_ - 1;
  }
  return 0;
}

WeylType AlgebraFamily::weyl_type() const noexcept {
  if (kind_ == FamilyKind::SoMN) return m_ > n_ ? WeylType::B : WeylType::D;
  return WeylType::A;
}

int AlgebraFamily::dim_p() const noexcept {
  switch (kind_) {
    case FamilyKind::SlR: return n_ * (n_ + 1) / 2 - 1;
    case FamilyKind::SoMN: return m_ * n_;
    case FamilyKind::SlH: return m_ * (2 * m_ - 1) - 1;
  }
  return 0;
}

int AlgebraFamily::dim_k() const noexcept {
  switch (kind_) {
    case FamilyKind::SlR: return n_ * (n_ - 1) / 2;
    case FamilyKind::SoMN: return m_ * (m_ - 1) / 2 + n_ * (n_ - 1) / 2;
    case FamilyKind::SlH: return m_ * (2 * m_ + 1);
  }
  return 0;
}

int AlgebraFamily::a_dim() const noexcept {
  return kind_ == FamilyKind::SlH ? m_ : n_;
}

int AlgebraFamily::complex_rank() const noexcept {
  return kind_ == FamilyKind::SoMN ? (m_ + n_) / 2 : ambient_size() - 1;
}

std::string AlgebraFamily::name() const {
  std::ostringstream os;
  switch (kind_) {
    case FamilyKind::SlR: os << "sl_r:" << n_; break;
    case FamilyKind::SoMN:
      if (transposed_) os << "so_mn:" << n_ << "," << m_;
      else os << "so_mn:" << m_ << "," << n_;
      break;
    case FamilyKind::SlH: os << "sl_h:" << m_; break;
  }
  return os.str();
}

// --- bases -------------------------------------------------------------------

std::vector<CMat> p_basis(const AlgebraFamily& f) {
  std::vector<CMat> basis;
  basis.reserve(static_cast<std::size_t>(f.dim_p()));
  const int N = f.ambient_size();
  switch (f.kind()) {
    case FamilyKind::SlR: {
      const int n = f.n();
      for (int i = 0; i + 1 < n; ++i) basis.push_back(unit(n, n, i, i) - unit(n, n, n - 1, n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) basis.push_back(unit(n, n, i, j) + unit(n, n, j, i));
      break;
    }
    case FamilyKind::SoMN: {
      const int m = f.m(), n = f.n();
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < n; ++q) basis.push_back(unit(N, N, p, m + q) + unit(N, N, m + q, p));
      break;
    }
    case FamilyKind::SlH: {
      const int m = f.m();
      const CMat Z = CMat::Zero(m, m);
      for (int i = 0; i + 1 < m; ++i)
        basis.push_back(quaternionic(unit(m, m, i, i) - unit(m, m, m - 1, m - 1), Z));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          basis.push_back(quaternionic(unit(m, m, i, j) + unit(m, m, j, i), Z));
          basis.push_back(quaternionic(kI * (unit(m, m, i, j) - unit(m, m, j, i)), Z));
        }
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          basis.push_back(quaternionic(Z, unit(m, m, i, j) - unit(m, m, j, i)));
          basis.push_back(quaternionic(Z, kI * (unit(m, m, i, j) - unit(m, m, j, i))));
        }
      break;
    }
  }
  return basis;
}

std::vector<CMat> k_basis(const AlgebraFamily& f) {
  std::vector<CMat> basis;
  basis.reserve(static_cast<std::size_t>(f.dim_k()));
  const int N = f.ambient_size();
  switch (f.kind()) {
    case FamilyKind::SlR:
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) basis.push_back(unit(N, N, i, j) - unit(N, N, j, i));
      break;
    case FamilyKind::SoMN: {
      const int m = f.m();
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) basis.push_back(unit(N, N, i, j) - unit(N, N, j, i));
      for (int i = m; i < N; ++i)
        for (int j = i + 1; j < N; ++j) basis.push_back(unit(N, N, i, j) - unit(N, N, j, i));
      break;
    }
    case FamilyKind::SlH: {
      const int m = f.m();
      const CMat Z = CMat::Zero(m, m);
      for (int j = 0; j < m; ++j) basis.push_back(quaternionic(kI * unit(m, m, j, j), Z));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          basis.push_back(quaternionic(unit(m, m, i, j) - unit(m, m, j, i), Z));
          basis.push_back(quaternionic(kI * (unit(m, m, i, j) + unit(m, m, j, i)), Z));
        }
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          CMat S = unit(m, m, i, j);
          if (i != j) S += unit(m, m, j, i);
          basis.push_back(quaternionic(Z, S));
          basis.push_back(quaternionic(Z, kI * S));
        }
      break;
    }
  }
  return basis;
}

bool in_algebra(const AlgebraFamily& f, const CMat& X, double tol) {
  const int N = f.ambient_size();
  if (X.rows() != N || X.cols() != N) return false;
  const double scaled = tol * std::max(1.0, max_abs(X));
  switch (f.kind()) {
    case FamilyKind::SlR:
      return X.imag().cwiseAbs().maxCoeff() <= scaled && std::abs(X.trace()) <= scaled;
    case FamilyKind::SoMN: {
      if (X.imag().cwiseAbs().maxCoeff() > scaled) return false;
      Mat Ipq = Mat::Identity(N, N);
      Ipq.bottomRightCorner(f.n(), f.n()) *= -1.0;
      const Mat R = X.real();
      return (R.transpose() * Ipq + Ipq * R).cwiseAbs().maxCoeff() <= scaled;
    }
    case FamilyKind::SlH: {
      const int m = f.m();
      const CMat A = X.topLeftCorner(m, m), B = X.topRightCorner(m, m);
      return max_abs(X - quaternionic(A, B)) <= scaled && std::abs(A.trace().real()) <= scaled;
    }
  }
  return false;
}

// --- PointP ------------------------------------------------------------------

PointP PointP::from_coords(const AlgebraFamily& f, Vec c) {
  if (c.size() != f.dim_p()) throw ShapeError("coordinate vector has wrong length for " + f.name());
  const int N = f.ambient_size();
  CMat X = CMat::Zero(N, N);
  Eigen::Index k = 0;
  switch (f.kind()) {
    case FamilyKind::SlR: {
      const int n = f.n();
      double last = 0.0;
      for (int i = 0; i + 1 < n; ++i) {
        X(i, i) = c(k);
        last -= c(k++);
      }
      X(n - 1, n - 1) = last;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          X(i, j) = c(k);
          X(j, i) = c(k++);
        }
      break;
    }
    case FamilyKind::SoMN: {
      const int m = f.m(), n = f.n();
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < n; ++q) {
          X(p, m + q) = c(k);
          X(m + q, p) = c(k++);
        }
      break;
    }
    case FamilyKind::SlH: {
      const int m = f.m();
      CMat A = CMat::Zero(m, m), B = CMat::Zero(m, m);
      double last = 0.0;
      for (int i = 0; i + 1 < m; ++i) {
        A(i, i) = c(k);
        last -= c(k++);
      }
      A(m - 1, m - 1) = last;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          const cplx v{c(k), c(k + 1)};
          k += 2;
          A(i, j) = v;
          A(j, i) = std::conj(v);
        }
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          const cplx v{c(k), c(k + 1)};
          k += 2;
          B(i, j) = v;
          B(j, i) = -v;
        }
      X = quaternionic(A, B);
      break;
    }
  }
  return PointP(f, std::move(X), std::move(c));
}

PointP PointP::from_matrix(const AlgebraFamily& f, const CMat& X, double tol) {
  const int N = f.ambient_size();
  if (X.rows() != N || X.cols() != N)
    throw ShapeError("matrix has wrong size for " + f.name());
  const double scaled = tol * std::max(1.0, max_abs(X));
  Vec c(f.dim_p());
  Eigen::Index k = 0;
  switch (f.kind()) {
    case FamilyKind::SlR: {
      const int n = f.n();
      if (X.imag().cwiseAbs().maxCoeff() > scaled || max_abs(X - X.transpose()) > scaled ||
          std::abs(X.trace()) > scaled)
        throw ShapeError("sl_r point must be real symmetric with trace 0");
      for (int i = 0; i + 1 < n; ++i) c(k++) = X(i, i).real();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c(k++) = X(i, j).real();
      break;
    }
    case FamilyKind::SoMN: {
      const int m = f.m(), n = f.n();
      const double diag_blocks =
          std::max(max_abs(X.topLeftCorner(m, m)), max_abs(X.bottomRightCorner(n, n)));
      if (X.imag().cwiseAbs().maxCoeff() > scaled || diag_blocks > scaled ||
          max_abs(X - X.transpose()) > scaled)
        throw ShapeError("so_mn point must have the form [[0,B],[B^T,0]] with B real");
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < n; ++q) c(k++) = X(p, m + q).real();
      break;
    }
    case FamilyKind::SlH: {
      const int m = f.m();
      const CMat A = X.topLeftCorner(m, m), B = X.topRightCorner(m, m);
      if (max_abs(X - quaternionic(A, B)) > scaled || !is_hermitian(X, scaled) ||
          max_abs(B + B.transpose()) > scaled || std::abs(A.trace()) > scaled)
        throw ShapeError("sl_h point must be [[A,B],[-conj B, conj A]] with A Hermitian traceless, B antisymmetric");
      for (int i = 0; i + 1 < m; ++i) c(k++) = A(i, i).real();
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          c(k++) = A(i, j).real();
          c(k++) = A(i, j).imag();
        }
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          c(k++) = B(i, j).real();
          c(k++) = B(i, j).imag();
        }
      break;
    }
  }
  return from_coords(f, std::move(c));
}

PointP PointP::zero(const AlgebraFamily& f) { return from_coords(f, Vec::Zero(f.dim_p())); }

PointP PointP::operator+(const PointP& o) const {
  if (!(family_ == o.family_)) throw FamilyMismatch("adding points of different families");
  return from_coords(family_, coords_ + o.coords_);
}

PointP PointP::operator-(const PointP& o) const {
  if (!(family_ == o.family_)) throw FamilyMismatch("subtracting points of different families");
  return from_coords(family_, coords_ - o.coords_);
}

PointP PointP::operator*(double s) const { return from_coords(family_, coords_ * s); }

// --- Cartan decomposition ----------------------------------------------------

CartanParts cartan_decompose(const CMat& X, const AlgebraFamily& f, const Tolerances& tol) {
  if (!in_algebra(f, X, tol.structural))
    throw ShapeError("matrix does not lie in the Lie algebra " + f.name());
  CMat theta;
  if (f.kind() == FamilyKind::SlH) theta = -X.adjoint();
  else theta = -X.transpose();
  CMat k_part = (X + theta) / 2.0;
  CMat p_part = (X - theta) / 2.0;
  return CartanParts{std::move(k_part), PointP::from_matrix(f, p_part, tol.structural)};
}

// --- chamber -------------------------------------------------------------------

namespace {

ChamberPoint chamber_sl_r(const PointP& x) {
  const Mat S = x.matrix().real();
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  if (es.info() != Eigen::Success) throw ComputationError("symmetric eigensolver failed");
  const Eigen::Index n = S.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // eigenvalues come ascending; reverse then stable-sort descending
  std::reverse(order.begin(), order.end());
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return es.eigenvalues()(a) > es.eigenvalues()(b);
  });
  Mat V(n, n);
  Vec a(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    V.col(i) = es.eigenvectors().col(order[static_cast<std::size_t>(i)]);
    a(i) = es.eigenvalues()(order[static_cast<std::size_t>(i)]);
  }
  if (V.determinant() < 0) V.col(n - 1) *= -1.0;
  return ChamberPoint{x.family(), a, CMat(V.transpose().cast<cplx>())};
}

ChamberPoint chamber_so_mn(const PointP& x) {
  const AlgebraFamily& f = x.family();
  const int m = f.m(), n = f.n();
  const Mat B = x.matrix().real().block(0, m, m, n);
  Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat U = svd.matrixU(), V = svd.matrixV();
  Vec d = svd.singularValues();
  if (V.determinant() < 0) {
    V.col(n - 1) *= -1.0;
    d(n - 1) = -d(n - 1);
  }
  if (m > n) {
    if (d(n - 1) < 0) {
      U.col(n - 1) *= -1.0;
      d(n - 1) = -d(n - 1);
    }
    if (U.determinant() < 0) U.col(m - 1) *= -1.0;
  } else if (U.determinant() < 0) {
    U.col(n - 1) *= -1.0;
    d(n - 1) = -d(n - 1);
  }
  if (d(n - 1) == 0.0) d(n - 1) = 0.0;
  CMat k = CMat::Zero(m + n, m + n);
  k.topLeftCorner(m, m) = U.transpose().cast<cplx>();
  k.bottomRightCorner(n, n) = V.transpose().cast<cplx>();
  return ChamberPoint{f, d, k};
}

ChamberPoint chamber_sl_h(const PointP& x) {
  const AlgebraFamily& f = x.family();
  const int m = f.m();
  const CMat& X = x.matrix();
  Eigen::SelfAdjointEigenSolver<CMat> es((X + X.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) throw ComputationError("Hermitian eigensolver failed");
  std::vector<CMat> chosen;  // alternating v, J'conj(v)
  std::vector<Eigen::Index> firsts;
  CMat U(2 * m, 2 * m);
  int found = 0;
  for (Eigen::Index idx = 2 * m - 1; idx >= 0 && found < m; --idx) {
    Eigen::VectorXcd w = es.eigenvectors().col(idx);
    for (int c = 0; c < 2 * found; ++c) {
      const Eigen::VectorXcd col = (c % 2 == 0) ? U.col(c / 2) : U.col(m + c / 2);
      w -= col * col.dot(w);
    }
    const double nrm = w.norm();
    if (nrm < 0.5) continue;
    w /= nrm;
    Eigen::VectorXcd partner(2 * m);
    partner.head(m) = -w.tail(m).conjugate();
    partner.tail(m) = w.head(m).conjugate();
    U.col(found) = w;
    U.col(m + found) = partner;
    ++found;
  }
  if (found < m) throw ComputationError("quaternionic diagonalization failed");
  Vec a(m);
  for (int i = 0; i < m; ++i) a(i) = U.col(i).dot(X * U.col(i)).real();
  // enforce descending order (stable), permuting both column blocks alike
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return a(p) > a(q); });
  CMat Us(2 * m, 2 * m);
  Vec as(m);
  for (int i = 0; i < m; ++i) {
    Us.col(i) = U.col(order[static_cast<std::size_t>(i)]);
    Us.col(m + i) = U.col(m + order[static_cast<std::size_t>(i)]);
    as(i) = a(order[static_cast<std::size_t>(i)]);
  }
  as.array() -= as.mean();  // exact trace-zero representative
  return ChamberPoint{f, as, CMat(Us.adjoint())};
}

}  // namespace

ChamberPoint chamber(const PointP& x, const Tolerances& tol) {
  ChamberPoint cp = [&] {
    switch (x.family().kind()) {
      case FamilyKind::SlR: return chamber_sl_r(x);
      case FamilyKind::SoMN: return chamber_so_mn(x);
      case FamilyKind::SlH: return chamber_sl_h(x);
    }
    throw ComputationError("unknown family");
  }();
  if (cp.family.traceless_a()) cp.a.array() -= cp.a.mean();
  const CMat& k = *cp.witness;
  const CMat image = k * x.matrix() * k.adjoint();
  const CMat target = embed_a(x.family(), cp.a).matrix();
  if (max_abs(image - target) > tol.witness * std::max(1.0, max_abs(x.matrix())))
    throw ComputationError("chamber witness does not conjugate the point into 𝔞");
  cp.a = clean_zero(cp.a);
  return cp;
}

Vec normalize_to_chamber(const AlgebraFamily& f, const Vec& z) {
  if (z.size() != f.a_dim()) throw ShapeError("𝔞-vector has wrong length for " + f.name());
  Vec out;
  switch (f.weyl_type()) {
    case WeylType::A:
      out = sorted_descending(z);
      break;
    case WeylType::B:
      out = sorted_descending(z.cwiseAbs());
      break;
    case WeylType::D: {
      out = sorted_descending(z.cwiseAbs());
      const auto negatives = (z.array() < 0.0).count();
      if (negatives % 2 == 1) out(out.size() - 1) = -out(out.size() - 1);
      break;
    }
  }
  return clean_zero(out);
}

bool in_chamber(const AlgebraFamily& f, const Vec& a, double tol) {
  if (a.size() != f.a_dim()) return false;
  const Eigen::Index r = a.size();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double t = tol * scale;
  switch (f.weyl_type()) {
    case WeylType::A:
      for (Eigen::Index i = 0; i + 1 < r; ++i)
        if (a(i) < a(i + 1) - t) return false;
      return std::abs(a.sum()) <= t;
    case WeylType::B:
      for (Eigen::Index i = 0; i + 1 < r; ++i)
        if (a(i) < a(i + 1) - t) return false;
      return a(r - 1) >= -t;
    case WeylType::D:
      for (Eigen::Index i = 0; i + 2 < r; ++i)
        if (a(i) < a(i + 1) - t) return false;
      return a(r - 2) >= std::abs(a(r - 1)) - t;
  }
  return false;
}

ChamberPoint make_chamber_point(const AlgebraFamily& f, const Vec& a, double tol) {
  if (!in_chamber(f, a, tol)) throw ChamberError("vector is not in the closed Weyl chamber");
  return ChamberPoint{f, a, std::nullopt};
}

PointP embed_a(const AlgebraFamily& f, const Vec& z) {
  if (z.size() != f.a_dim()) throw ShapeError("𝔞-vector has wrong length for " + f.name());
  switch (f.kind()) {
    case FamilyKind::SlR: {
      const double scale = std::max(1.0, z.cwiseAbs().maxCoeff());
      if (std::abs(z.sum()) > 1e-10 * scale) throw ShapeError("𝔞-vector of sl_r must sum to 0");
      Vec c = Vec::Zero(f.dim_p());
      c.head(f.n() - 1) = z.head(f.n() - 1);
      return PointP::from_coords(f, c);
    }
    case FamilyKind::SoMN: {
      Vec c = Vec::Zero(f.dim_p());
      for (int q = 0; q < f.n(); ++q) c(q * f.n() + q) = z(q);
      return PointP::from_coords(f, c);
    }
    case FamilyKind::SlH: {
      const double scale = std::max(1.0, z.cwiseAbs().maxCoeff());
      if (std::abs(z.sum()) > 1e-10 * scale) throw ShapeError("𝔞-vector of sl_h must sum to 0");
      Vec c = Vec::Zero(f.dim_p());
      c.head(f.m() - 1) = z.head(f.m() - 1);
      return PointP::from_coords(f, c);
    }
  }
  throw ShapeError("unknown family");
}

Vec kostant_project(const PointP& x) {
  const AlgebraFamily& f = x.family();
  const CMat& X = x.matrix();
  Vec out(f.a_dim());
  switch (f.kind()) {
    case FamilyKind::SlR:
      for (int i = 0; i < f.n(); ++i) out(i) = X(i, i).real();
      break;
    case FamilyKind::SoMN:
      for (int q = 0; q < f.n(); ++q) out(q) = X(q, f.m() + q).real();
      break;
    case FamilyKind::SlH:
      for (int i = 0; i < f.m(); ++i) out(i) = X(i, i).real();
      break;
  }
  return out;
}

Vec fundamental_weight_values(const AlgebraFamily& f, const Vec& a, double tol) {
  if (!in_chamber(f, a, tol)) throw ChamberError("fundamental weights need a chamber point");
  const Eigen::Index r = a.size();
  switch (f.weyl_type()) {
    case WeylType::A: {
      Vec s = a;
      if (f.kind() == FamilyKind::SlH) {
        s.resize(2 * r);
        for (Eigen::Index i = 0; i < r; ++i) s(2 * i) = s(2 * i + 1) = a(i);
      }
      Vec out(s.size() - 1);
      double acc = 0.0;
      for (Eigen::Index p = 0; p + 1 < s.size(); ++p) out(p) = (acc += s(p));
      return out;
    }
    case WeylType::B: {
      Vec out(r);
      double acc = 0.0;
      for (Eigen::Index p = 0; p < r; ++p) out(p) = (acc += a(p));
      out(r - 1) = acc / 2.0;
      return out;
    }
    case WeylType::D: {
      Vec out(r);
      double acc = 0.0;
      for (Eigen::Index p = 0; p + 2 < r; ++p) out(p) = (acc += a(p));
      const double head = acc + a(r - 2);
      out(r - 2) = (head - a(r - 1)) / 2.0;
      out(r - 1) = (head + a(r - 1)) / 2.0;
      return out;
    }
  }
  return {};
}

Vec fundamental_weight_values(const ChamberPoint& a, double tol) {
  return fundamental_weight_values(a.family, a.a, tol);
}

Vec ambient_spectrum(const ChamberPoint& cp) {
  const AlgebraFamily& f = cp.family;
  switch (f.kind()) {
    case FamilyKind::SlR: return sorted_descending(cp.a);
    case FamilyKind::SlH: {
      Vec s(2 * cp.a.size());
      for (Eigen::Index i = 0; i < cp.a.size(); ++i) s(2 * i) = s(2 * i + 1) = cp.a(i);
      return sorted_descending(s);
    }
    case FamilyKind::SoMN: {
      Vec s = Vec::Zero(f.ambient_size());
      for (int q = 0; q < f.n(); ++q) {
        s(q) = cp.a(q);
        s(f.n() + q) = -cp.a(q);
      }
      return sorted_descending(s);
    }
  }
  return {};
}

std::vector<Vec> simple_roots(const AlgebraFamily& f) {
  const int L = f.a_dim();
  std::vector<Vec> roots;
  auto e = [L](int i) {
    Vec v = Vec::Zero(L);
    v(i) = 1.0;
    return v;
  };
  for (int i = 0; i + 1 < L; ++i) roots.push_back(e(i) - e(i + 1));
  if (f.weyl_type() == WeylType::B) roots.push_back(e(L - 1));
  if (f.weyl_type() == WeylType::D) roots.push_back(e(L - 2) + e(L - 1));
  return roots;
}

// --- Weyl group ----------------------------------------------------------------

Vec SignedPerm::apply(const Vec& z) const {
  Vec out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i)
    out(i) = sign[static_cast<std::size_t>(i)] * z(perm[static_cast<std::size_t>(i)]);
  return clean_zero(out);
}

SignedPerm SignedPerm::compose(const SignedPerm& inner) const {
  SignedPerm out;
  out.perm.resize(perm.size());
  out.sign.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto p = static_cast<std::size_t>(perm[i]);
    out.perm[i] = inner.perm[p];
    out.sign[i] = sign[i] * inner.sign[p];
  }
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  out.perm.resize(perm.size());
  out.sign.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto p = static_cast<std::size_t>(perm[i]);
    out.perm[p] = static_cast<int>(i);
    out.sign[p] = sign[i];
  }
  return out;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm s;
  s.perm.resize(static_cast<std::size_t>(n));
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.sign.assign(static_cast<std::size_t>(n), 1);
  return s;
}

std::size_t weyl_group_order(const AlgebraFamily& f) {
  const int L = f.a_dim();
  const double perms = factorial(L);
  double order = perms;
  if (f.weyl_type() == WeylType::B) order = perms * std::ldexp(1.0, L);
  if (f.weyl_type() == WeylType::D) order = perms * std::ldexp(1.0, L - 1);
  return order > 1e18 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(order);
}

std::vector<SignedPerm> weyl_group(const AlgebraFamily& f, std::size_t cap) {
  const std::size_t order = weyl_group_order(f);
  if (order > cap) throw SizeError("Weyl group of " + f.name() + " exceeds the configured cap");
  const int L = f.a_dim();
  const WeylType type = f.weyl_type();
  std::vector<SignedPerm> out;
  out.reserve(order);
  std::vector<int> perm(static_cast<std::size_t>(L));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (type == WeylType::A) {
      out.push_back(SignedPerm{perm, std::vector<int>(static_cast<std::size_t>(L), 1)});
      continue;
    }
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
      if (type == WeylType::D && std::popcount(mask) % 2 == 1) continue;
      std::vector<int> sign(static_cast<std::size_t>(L));
      for (int i = 0; i < L; ++i) sign[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
      out.push_back(SignedPerm{perm, std::move(sign)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t weyl_orbit_size(const AlgebraFamily& f, const Vec& a) {
  const int L = static_cast<int>(a.size());
  std::vector<double> vals(a.data(), a.data() + a.size());
  if (f.weyl_type() == WeylType::A) {
    double size = factorial(L);
    for (int k : multiplicities(vals)) size /= factorial(k);
    return static_cast<std::size_t>(std::llround(size));
  }
  std::vector<double> absvals;
  int zeros = 0;
  for (double v : vals) {
    if (v == 0.0) ++zeros;
    else absvals.push_back(std::abs(v));
  }
  double size = factorial(L) / factorial(zeros);
  for (int k : multiplicities(absvals)) size /= factorial(k);
  size *= std::ldexp(1.0, L - zeros);
  if (f.weyl_type() == WeylType::D && zeros == 0) size /= 2.0;
  return static_cast<std::size_t>(std::llround(size));
}

std::vector<Vec> weyl_orbit(const ChamberPoint& cp, std::size_t cap) {
  const AlgebraFamily& f = cp.family;
  const Vec a = clean_zero(cp.a);
  if (weyl_orbit_size(f, a) > cap) throw SizeError("Weyl orbit exceeds the configured cap");
  const int L = static_cast<int>(a.size());
  std::set<std::vector<double>> multisets;
  if (f.weyl_type() == WeylType::A) {
    multisets.insert(std::vector<double>(a.data(), a.data() + L));
  } else {
    std::vector<int> nonzero;
    for (int i = 0; i < L; ++i)
      if (a(i) != 0.0) nonzero.push_back(i);
    const bool has_zero = static_cast<int>(nonzero.size()) < L;
    const auto count = static_cast<unsigned>(nonzero.size());
    for (unsigned long mask = 0; mask < (1ul << count); ++mask) {
      if (f.weyl_type() == WeylType::D && !has_zero) {
        // parity of flips must keep the product of signs of the anchor
        if (std::popcount(mask) % 2 == 1) continue;
      }
      std::vector<double> v(static_cast<std::size_t>(L));
      for (int i = 0; i < L; ++i) v[static_cast<std::size_t>(i)] = a(i);
      for (unsigned b = 0; b < count; ++b)
        if ((mask >> b) & 1ul) v[static_cast<std::size_t>(nonzero[b])] *= -1.0;
      std::sort(v.begin(), v.end());
      multisets.insert(std::move(v));
    }
  }
  std::vector<std::vector<double>> orbit;
  for (auto v : multisets) {
    std::sort(v.begin(), v.end());
    do orbit.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  }
  std::sort(orbit.begin(), orbit.end(), std::greater<>());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  std::vector<Vec> out;
  out.reserve(orbit.size());
  for (const auto& v : orbit)
    out.push_back(clean_zero(Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()))));
  return out;
}

CMat weyl_witness(const AlgebraFamily& f, const SignedPerm& sigma) {
  const int L = f.a_dim();
  if (static_cast<int>(sigma.perm.size()) != L) throw RangeError("signed permutation has wrong size");
  const int negatives = static_cast<int>(std::count(sigma.sign.begin(), sigma.sign.end(), -1));
  Mat P = Mat::Zero(L, L);
  for (int i = 0; i < L; ++i) P(i, sigma.perm[static_cast<std::size_t>(i)]) = 1.0;
  switch (f.kind()) {
    case FamilyKind::SlR: {
      if (negatives != 0) throw RangeError("type A Weyl elements have no sign changes");
      if (P.determinant() < 0) P.row(0) *= -1.0;
      return P.cast<cplx>();
    }
    case FamilyKind::SlH: {
      if (negatives != 0) throw RangeError("type A Weyl elements have no sign changes");
      CMat k = CMat::Zero(2 * L, 2 * L);
      k.topLeftCorner(L, L) = P.cast<cplx>();
      k.bottomRightCorner(L, L) = P.cast<cplx>();
      return k;
    }
    case FamilyKind::SoMN: {
      const int m = f.m(), n = f.n();
      if (m == n && negatives % 2 == 1)
        throw RangeError("type D Weyl elements change an even number of signs");
      Mat h = P;
      if (P.determinant() < 0) h.row(n - 1) *= -1.0;
      Mat g = Mat::Identity(m, m);
      g.topLeftCorner(n, n) = P;
      for (int i = 0; i < n; ++i)
        g.row(i) *= sigma.sign[static_cast<std::size_t>(i)] * (h.row(i).sum() < 0 ? -1.0 : 1.0);
      if (g.determinant() < 0) g(m - 1, m - 1) = -1.0;  // m > n here
      CMat k = CMat::Zero(m + n, m + n);
      k.topLeftCorner(m, m) = g.cast<cplx>();
      k.bottomRightCorner(n, n) = h.cast<cplx>();
      return k;
    }
  }
  throw RangeError("unknown family");
}

PointP adjoint(const CMat& k, const PointP& x) {
  const CMat M = k * x.matrix() * k.adjoint();
  return PointP::from_matrix(x.family(), M, 1e-8);
}

}  // namespace orbitope
