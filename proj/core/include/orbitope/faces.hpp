#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitope/orbitope.hpp"

namespace orbitope {

/// Face of a momentum polytope, exposed by the functional l at level α:
/// l·v = α on `vertices`, l·v < α on the remaining orbit points.
struct Face {
  Vec l;
  double alpha = 0.0;
  std::vector<int> vertices;  // sorted indices into MomentumPolytope::vertices
  int dim = 0;
};

Face exposed_face(const MomentumPolytope& poly, const Vec& l, double tol = 1e-9);

/// All nonempty faces, including the polytope itself (l = 0, α = 0), sorted
/// by (dim, vertex indices).
std::vector<Face> enumerate_faces(const MomentumPolytope& poly);

struct FaceOrbit {
  Face representative;
  std::vector<int> members;  // indices into the face list
};

/// Partition of `faces` into W-orbits; representatives are sorted by (dim, indices).
std::vector<FaceOrbit> face_orbits(const MomentumPolytope& poly, const std::vector<Face>& faces);
std::vector<Face> face_orbit_representatives(const MomentumPolytope& poly);

/// Image of a vertex index set under σ (sorted).
std::vector<int> act_on_vertices(const MomentumPolytope& poly, const SignedPerm& sigma,
                                 const std::vector<int>& vertices);

/// Face of O_x lying over a face f of Π_x: member(x, y) and l(y) = α.
class LiftedFace {
 public:
  LiftedFace(PointP x, Face face, MembershipOptions opts, double level_tol);

  const Face& face() const noexcept { return face_; }
  /// l(y) = l(P(y)) evaluated through the trace form on 𝔭.
  double functional(const PointP& y) const;
  bool accepts(const PointP& y) const;

 private:
  PointP x_;
  Face face_;
  CMat embedded_;
  double scale_;
  MembershipOptions opts_;
  double level_tol_;
};

LiftedFace lift_face(const PointP& x, const Face& f, const MembershipOptions& opts = {},
                     double level_tol = 1e-8);

/// Basis of the centralizer {u ∈ 𝔨 : [u, L] = 0}.
std::vector<CMat> centralizer_k(const AlgebraFamily& family, const CMat& L, double tol = 1e-9);

struct ClauseTally {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failure notes
};

struct CorrespondenceReport {
  int trials = 0;
  int face_count = 0;
  int orbit_count = 0;
  std::vector<ClauseTally> clauses;

  int failures() const;
};

CorrespondenceReport verify_correspondence(const PointP& x, int trials, std::uint64_t seed);

}  // namespace orbitope
