#pragma once

#include <optional>
#include <vector>

#include "orbitope/algebra.hpp"
#include "orbitope/reps.hpp"

namespace orbitope {

#ifdef NDEBUG
inline constexpr bool kMatrixCheckDefault = false;
#else
inline constexpr bool kMatrixCheckDefault = true;
#endif

struct MembershipOptions {
  Tolerances tol{};
  /// Also evaluate every representation numerically and compare with the
  /// weight formulas; a disagreement raises ConsistencyError.
  bool matrix_check = kMatrixCheckDefault;
};

struct MembershipResult {
  bool verdict = false;
  /// min_i λ_i(x̂) − λ_i(ŷ); negative means y lies outside O_x.
  double margin = 0.0;
  /// Index of the weight attaining the margin and its representation.
  int tight_index = 0;
  RepTag tight_rep{};
  Vec weights_x;
  Vec weights_y;
};

/// Is y in the orbitope conv(Ad_K x)?
MembershipResult member(const PointP& x, const PointP& y, const MembershipOptions& opts = {});

/// y ↦ C − Σ_k y_k A_k with C = c·I, one per representation.
struct LinearPencil {
  RepTag rep{};
  double constant = 0.0;
  CMat C;
  std::vector<CMat> coeffs;

  int dim() const { return static_cast<int>(C.rows()); }
  CMat evaluate(const Vec& y) const;
  double min_eigenvalue(const Vec& y) const;
  /// True when C and every A_k have vanishing imaginary part.
  bool is_real(double tol = 0.0) const;
};

struct RealPencil {
  RepTag rep{};
  Mat C;
  std::vector<Mat> coeffs;

  int dim() const { return static_cast<int>(C.rows()); }
  Mat evaluate(const Vec& y) const;
  double min_eigenvalue(const Vec& y) const;
};

std::vector<LinearPencil> build_pencils(const PointP& x);
/// Pencil for a single representation (used to compare spin with ⋀^r).
LinearPencil build_pencil(const FundamentalRep& rep, const PointP& x);

/// [[Re A, Im A], [−Im A, Re A]].
Mat realify(const CMat& A);
RealPencil realify(const LinearPencil& p);

/// Whether every pencil is positive semidefinite at y to −tol.
bool pencils_feasible(const std::vector<LinearPencil>& pencils, const Vec& y, double tol = 1e-7);
double pencils_min_eigenvalue(const std::vector<LinearPencil>& pencils, const Vec& y);

struct MomentumPolytope {
  ChamberPoint anchor;
  std::vector<Vec> vertices;
  /// x_i with ⟨x_i, ·⟩ = α_i under the trace form restricted to 𝔞.
  std::vector<Vec> cone_generators;
};

MomentumPolytope momentum_polytope(const ChamberPoint& anchor, std::size_t cap = kDefaultOrbitCap);
MomentumPolytope momentum_polytope(const PointP& x, std::size_t cap = kDefaultOrbitCap);

/// Trace-form scale on 𝔞: ⟨embed(z), embed(w)⟩ = scale · z·w.
double a_inner_scale(const AlgebraFamily& family);

/// z ∈ conv(W·anchor) via the fundamental-weight inequalities.
bool momentum_member(const MomentumPolytope& poly, const Vec& z, double tol = 1e-9);
/// Same question via anchor − ẑ ∈ cone(cone_generators) by least squares.
bool cone_member(const MomentumPolytope& poly, const Vec& z, double tol = 1e-9);

/// member(x, embed(z)), cross-checked against momentum_member.
bool restrict_to_a(const PointP& x, const Vec& z, const MembershipOptions& opts = {});

struct SchurHornResult {
  bool verdict = false;
  double margin = 0.0;
  bool trace_match = false;
  double shift_x = 0.0;  // tr/n removed from each input
  double shift_y = 0.0;
};

/// Membership in conv(SO(n)·M) for arbitrary real symmetric M and Y: both are
/// centred by their trace, traces must agree, then the sl_r test applies.
SchurHornResult schur_horn_member(const Mat& M, const Mat& Y, const MembershipOptions& opts = {});

}  // namespace orbitope
