#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace oracle {

namespace {

Vec sort_desc(Vec v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<>());
  return v;
}

// Orthonormal basis of the span of the columns, by modified Gram-Schmidt.
std::vector<Vec> orthonormal_span(const std::vector<Vec>& vs, double tol) {
  std::vector<Vec> basis;
  for (Vec v : vs) {
    for (const Vec& b : basis) v -= v.dot(b) * b;
    for (const Vec& b : basis) v -= v.dot(b) * b;
    const double n = v.norm();
    if (n > tol) basis.push_back(v / n);
  }
  return basis;
}

double det(Mat M) {
  const int n = static_cast<int>(M.rows());
  double d = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(M(r, c)) > std::abs(M(piv, c))) piv = r;
    if (M(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      M.row(piv).swap(M.row(c));
      d = -d;
    }
    d *= M(c, c);
    for (int r = c + 1; r < n; ++r) M.row(r) -= (M(r, c) / M(c, c)) * M.row(c);
  }
  return d;
}

void project_to_simplex(Vec& w) {
  Vec u = sort_desc(w);
  double cumulative = 0.0, theta = 0.0;
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    cumulative += u(j);
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u(j) - t > 0) theta = t;
  }
  for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = std::max(0.0, w(j) - theta);
}

}  // namespace

Vec jacobi_eigenvalues(Mat A) {
  const int n = static_cast<int>(A.rows());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (off < 1e-30 * std::max(1.0, A.squaredNorm())) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(A(p, q)) < 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  return sort_desc(A.diagonal());
}

Vec hermitian_eigenvalues(const CMat& A) {
  const Eigen::Index n = A.rows();
  Mat R(2 * n, 2 * n);
  const Mat re = 0.5 * (A + A.adjoint()).real();
  const Mat im = 0.5 * (A + A.adjoint()).imag();
  R << re, -im, im, re;
  const Vec doubled = jacobi_eigenvalues(R);
  Vec out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = 0.5 * (doubled(2 * i) + doubled(2 * i + 1));
  return out;
}

Vec singular_values(const Mat& B) {
  const Mat G = B.rows() >= B.cols() ? Mat(B.transpose() * B) : Mat(B * B.transpose());
  Vec e = jacobi_eigenvalues(G);
  for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = std::sqrt(std::max(0.0, e(i)));
  return e;
}

Vec subset_sums(const Vec& v, int p) {
  const int n = static_cast<int>(v.size());
  std::vector<double> sums;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + p, true);
  do {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s += v(i);
    sums.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  Vec out = Eigen::Map<Vec>(sums.data(), static_cast<Eigen::Index>(sums.size()));
  return sort_desc(out);
}

double top_sum(const Vec& v, int p) { return sort_desc(v).head(p).sum(); }

std::vector<Vec> weyl_orbit(Weyl type, const Vec& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::map<std::vector<long long>, Vec> seen;
  const int masks = type == Weyl::A ? 1 : (1 << n);
  do {
    for (int mask = 0; mask < masks; ++mask) {
      if (type == Weyl::D && __builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
      Vec z(n);
      for (int i = 0; i < n; ++i) z(i) = ((mask >> i) & 1 ? -1.0 : 1.0) * a(perm[static_cast<std::size_t>(i)]);
      std::vector<long long> key;
      for (int i = 0; i < n; ++i) key.push_back(std::llround(z(i) * 1e9));
      seen.emplace(key, z);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Vec> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

double hull_distance(const std::vector<Vec>& points, const Vec& y, int iterations) {
  const Eigen::Index k = static_cast<Eigen::Index>(points.size());
  Mat P(y.size(), k);
  for (Eigen::Index i = 0; i < k; ++i) P.col(i) = points[static_cast<std::size_t>(i)];
  const double L = std::max(1e-12, jacobi_eigenvalues(P.transpose() * P)(0));
  Vec w = Vec::Constant(k, 1.0 / static_cast<double>(k));
  Vec prev = w;
  double t = 1.0;
  for (int it = 0; it < iterations; ++it) {
    // Accelerated projected gradient (FISTA) on 0.5 |P w - y|^2 over the simplex.
    Vec g = P.transpose() * (P * w - y);
    Vec next = w - g / L;
    project_to_simplex(next);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    w = next + ((t - 1.0) / t_next) * (next - prev);
    project_to_simplex(w);
    prev = next;
    t = t_next;
  }
  return (P * prev - y).norm();
}

int affine_dim(const std::vector<Vec>& points, double tol) {
  if (points.empty()) return -1;
  std::vector<Vec> diffs;
  for (const Vec& p : points) diffs.push_back(p - points[0]);
  return static_cast<int>(orthonormal_span(diffs, tol).size());
}

std::set<std::vector<int>> brute_faces(const std::vector<Vec>& points) {
  const int count = static_cast<int>(points.size());
  std::vector<int> all(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) all[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> faces{all};
  std::vector<Vec> diffs;
  for (const Vec& p : points) diffs.push_back(p - points[0]);
  const std::vector<Vec> basis = orthonormal_span(diffs, 1e-9);
  const int d = static_cast<int>(basis.size());
  if (d == 0) return faces;
  // Coordinates inside the affine hull.
  std::vector<Vec> q;
  for (const Vec& p : points) {
    Vec c(d);
    for (int j = 0; j < d; ++j) c(j) = (p - points[0]).dot(basis[static_cast<std::size_t>(j)]);
    q.push_back(c);
  }
  std::set<std::vector<int>> facets;
  std::vector<bool> pick(static_cast<std::size_t>(count), false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    std::vector<int> sub;
    for (int i = 0; i < count; ++i)
      if (pick[static_cast<std::size_t>(i)]) sub.push_back(i);
    // Normal to the hyperplane through q[sub] by generalized cross product.
    Mat D(d - 1 > 0 ? d - 1 : 0, d);
    for (int r = 1; r < d; ++r) D.row(r - 1) = (q[static_cast<std::size_t>(sub[static_cast<std::size_t>(r)])] - q[static_cast<std::size_t>(sub[0])]).transpose();
    Vec normal(d);
    for (int c = 0; c < d; ++c) {
      Mat minor(d - 1, d - 1);
      for (int r = 0; r < d - 1; ++r) {
        int cc = 0;
        for (int j = 0; j < d; ++j)
          if (j != c) minor(r, cc++) = D(r, j);
      }
      normal(c) = ((c % 2) ? -1.0 : 1.0) * (d == 1 ? 1.0 : det(minor));
    }
    if (normal.norm() < 1e-9) continue;
    normal.normalize();
    const double level = normal.dot(q[static_cast<std::size_t>(sub[0])]);
    int above = 0, below = 0;
    std::vector<int> on;
    for (int i = 0; i < count; ++i) {
      const double s = normal.dot(q[static_cast<std::size_t>(i)]) - level;
      if (s > 1e-9) ++above;
      else if (s < -1e-9) ++below;
      else on.push_back(i);
    }
    if (above == 0 || below == 0) facets.insert(on);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  // Close under intersection.
  std::set<std::vector<int>> closed = facets;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<int>> current(closed.begin(), closed.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (const auto& f : facets) {
        std::vector<int> meet;
        std::set_intersection(current[i].begin(), current[i].end(), f.begin(), f.end(), std::back_inserter(meet));
        if (!meet.empty() && closed.insert(meet).second) grew = true;
      }
  }
  faces.insert(closed.begin(), closed.end());
  return faces;
}

double majorization_margin(const Vec& x_spec, const Vec& y_spec) {
  const Vec xs = sort_desc(x_spec), ys = sort_desc(y_spec);
  double margin = std::numeric_limits<double>::infinity();
  double sx = 0.0, sy = 0.0;
  for (Eigen::Index p = 0; p + 1 < xs.size(); ++p) {
    sx += xs(p);
    sy += ys(p);
    margin = std::min(margin, sx - sy);
  }
  return margin;
}

}  // namespace oracle
