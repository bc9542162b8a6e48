#include "orbitope/orbitope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitope/errors.hpp"

namespace orbitope {

namespace {

void check_weights(const PointP& p, const ChamberPoint& cp, const Tolerances& tol) {
  for (const FundamentalRep& rep : fundamental_reps(p.family())) {
    const double numeric = max_eigenvalue(rep, p);
    const double predicted = highest_weight_value(rep, cp);
    if (std::abs(numeric - predicted) > tol.consistency * std::max(1.0, std::abs(predicted)))
      throw ConsistencyError("representation " + rep.label() + " of " + p.family().name() +
                             ": top eigenvalue " + std::to_string(numeric) +
                             " disagrees with weight value " + std::to_string(predicted));
  }
}

}  // namespace

MembershipResult member(const PointP& x, const PointP& y, const MembershipOptions& opts) {
  if (!(x.family() == y.family())) throw FamilyMismatch("member: x and y belong to different families");
  const ChamberPoint cx = chamber(x, opts.tol);
  const ChamberPoint cy = chamber(y, opts.tol);
  MembershipResult r;
  r.weights_x = fundamental_weight_values(cx, opts.tol.chamber);
  r.weights_y = fundamental_weight_values(cy, opts.tol.chamber);
  const Vec slack = r.weights_x - r.weights_y;
  Eigen::Index arg = 0;
  r.margin = slack.minCoeff(&arg);
  r.tight_index = static_cast<int>(arg);
  r.tight_rep = weight_rep_tag(x.family(), r.tight_index);
  r.verdict = r.margin >= -opts.tol.membership;
  if (opts.matrix_check) {
    check_weights(x, cx, opts.tol);
    check_weights(y, cy, opts.tol);
  }
  return r;
}

// --- pencils -------------------------------------------------------------------

CMat LinearPencil::evaluate(const Vec& y) const {
  if (y.size() != static_cast<Eigen::Index>(coeffs.size()))
    throw ShapeError("pencil evaluated at a vector of wrong length");
  CMat out = C;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (y(static_cast<Eigen::Index>(k)) != 0.0) out -= y(static_cast<Eigen::Index>(k)) * coeffs[k];
  return out;
}

double LinearPencil::min_eigenvalue(const Vec& y) const { return min_hermitian_eigenvalue(evaluate(y)); }

bool LinearPencil::is_real(double tol) const {
  if (C.imag().cwiseAbs().maxCoeff() > tol) return false;
  return std::all_of(coeffs.begin(), coeffs.end(), [tol](const CMat& A) {
    return A.imag().cwiseAbs().maxCoeff() <= tol;
  });
}

Mat RealPencil::evaluate(const Vec& y) const {
  if (y.size() != static_cast<Eigen::Index>(coeffs.size()))
    throw ShapeError("pencil evaluated at a vector of wrong length");
  Mat out = C;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out -= y(static_cast<Eigen::Index>(k)) * coeffs[k];
  return out;
}

double RealPencil::min_eigenvalue(const Vec& y) const {
  const Vec ev = symmetric_eigenvalues(evaluate(y));
  return ev.size() ? ev(ev.size() - 1) : 0.0;
}

LinearPencil build_pencil(const FundamentalRep& rep, const PointP& x) {
  if (!(rep.family() == x.family())) throw FamilyMismatch("pencil representation and point differ in family");
  LinearPencil p;
  p.rep = rep.tag();
  p.constant = max_eigenvalue(rep, x);
  p.C = p.constant * CMat::Identity(rep.dim(), rep.dim());
  for (const CMat& E : p_basis(x.family())) {
    const PointP e = PointP::from_matrix(x.family(), E);
    CMat A = rep.hermitian_image(e);
    p.coeffs.push_back((A + A.adjoint()) / 2.0);
  }
  return p;
}

std::vector<LinearPencil> build_pencils(const PointP& x) {
  std::vector<LinearPencil> out;
  for (const FundamentalRep& rep : fundamental_reps(x.family())) out.push_back(build_pencil(rep, x));
  return out;
}

Mat realify(const CMat& A) {
  const Eigen::Index n = A.rows();
  Mat R(2 * n, 2 * n);
  R.topLeftCorner(n, n) = A.real();
  R.topRightCorner(n, n) = A.imag();
  R.bottomLeftCorner(n, n) = -A.imag();
  R.bottomRightCorner(n, n) = A.real();
  return R;
}

RealPencil realify(const LinearPencil& p) {
  RealPencil r;
  r.rep = p.rep;
  r.C = realify(p.C);
  for (const CMat& A : p.coeffs) r.coeffs.push_back(realify(A));
  return r;
}

double pencils_min_eigenvalue(const std::vector<LinearPencil>& pencils, const Vec& y) {
  double lo = std::numeric_limits<double>::infinity();
  for (const LinearPencil& p : pencils) lo = std::min(lo, p.min_eigenvalue(y));
  return lo;
}

bool pencils_feasible(const std::vector<LinearPencil>& pencils, const Vec& y, double tol) {
  return pencils_min_eigenvalue(pencils, y) >= -tol;
}

// --- momentum polytope ----------------------------------------------------------

double a_inner_scale(const AlgebraFamily& f) { return f.kind() == FamilyKind::SlR ? 1.0 : 2.0; }

MomentumPolytope momentum_polytope(const ChamberPoint& anchor, std::size_t cap) {
  MomentumPolytope poly{ChamberPoint{anchor.family, anchor.a, std::nullopt}, weyl_orbit(anchor, cap), {}};
  const double scale = a_inner_scale(anchor.family);
  for (const Vec& alpha : simple_roots(anchor.family)) poly.cone_generators.push_back(alpha / scale);
  return poly;
}

MomentumPolytope momentum_polytope(const PointP& x, std::size_t cap) {
  return momentum_polytope(chamber(x), cap);
}

bool momentum_member(const MomentumPolytope& poly, const Vec& z, double tol) {
  const AlgebraFamily& f = poly.anchor.family;
  if (z.size() != f.a_dim()) throw ShapeError("𝔞-vector has wrong length");
  if (f.traceless_a() && std::abs(z.sum() - poly.anchor.a.sum()) > tol * std::max(1.0, z.cwiseAbs().maxCoeff()))
    return false;
  Vec zh = normalize_to_chamber(f, z);
  if (f.traceless_a()) zh.array() -= zh.mean();
  const Vec lx = fundamental_weight_values(f, poly.anchor.a);
  const Vec lz = fundamental_weight_values(f, zh);
  return ((lx - lz).array() >= -tol).all();
}

bool cone_member(const MomentumPolytope& poly, const Vec& z, double tol) {
  const AlgebraFamily& f = poly.anchor.family;
  if (z.size() != f.a_dim()) throw ShapeError("𝔞-vector has wrong length");
  const Vec diff = poly.anchor.a - normalize_to_chamber(f, z);
  const auto r = static_cast<Eigen::Index>(poly.cone_generators.size());
  if (r == 0) return diff.cwiseAbs().maxCoeff() <= tol;
  Mat G(diff.size(), r);
  for (Eigen::Index i = 0; i < r; ++i) G.col(i) = poly.cone_generators[static_cast<std::size_t>(i)];
  const Vec c = G.colPivHouseholderQr().solve(diff);
  const double residual = (G * c - diff).cwiseAbs().maxCoeff();
  return residual <= tol * std::max(1.0, diff.cwiseAbs().maxCoeff()) && (c.array() >= -tol).all();
}

bool restrict_to_a(const PointP& x, const Vec& z, const MembershipOptions& opts) {
  const bool orbitope_side = member(x, embed_a(x.family(), z), opts).verdict;
  const bool polytope_side = momentum_member(momentum_polytope(x), z, opts.tol.membership);
  if (orbitope_side != polytope_side)
    throw ConsistencyError("O_x ∩ 𝔞 and the momentum polytope disagree");
  return orbitope_side;
}

SchurHornResult schur_horn_member(const Mat& M, const Mat& Y, const MembershipOptions& opts) {
  if (M.rows() != M.cols() || Y.rows() != M.rows() || Y.cols() != M.cols())
    throw ShapeError("Schur-Horn inputs must be square of equal size");
  const int n = static_cast<int>(M.rows());
  const AlgebraFamily f = AlgebraFamily::sl_r(n);
  SchurHornResult r;
  r.shift_x = M.trace() / n;
  r.shift_y = Y.trace() / n;
  const Mat I = Mat::Identity(n, n);
  const PointP x = PointP::from_matrix(f, (M - r.shift_x * I).cast<cplx>(), opts.tol.structural);
  const PointP y = PointP::from_matrix(f, (Y - r.shift_y * I).cast<cplx>(), opts.tol.structural);
  const double scale = std::max({1.0, M.cwiseAbs().maxCoeff(), Y.cwiseAbs().maxCoeff()});
  r.trace_match = std::abs(M.trace() - Y.trace()) <= opts.tol.membership * scale * n;
  const MembershipResult inner = member(x, y, opts);
  r.margin = inner.margin;
  r.verdict = r.trace_match && inner.verdict;
  return r;
}

}  // namespace orbitope
