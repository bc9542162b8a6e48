#include <gtest/gtest.h>

#include <map>
#include <set>

#include "common.hpp"
#include "orbitope/errors.hpp"
#include "orbitope/faces.hpp"

using namespace orbitope;
using namespace testing_support;

namespace {

MomentumPolytope poly_of(const AlgebraFamily& f, const Vec& a) { return momentum_polytope(make_chamber_point(f, a)); }

std::map<int, std::vector<int>> orbit_sizes_by_dim(const MomentumPolytope& poly) {
  const std::vector<Face> faces = enumerate_faces(poly);
  std::map<int, std::vector<int>> out;
  for (const FaceOrbit& o : face_orbits(poly, faces))
    out[o.representative.dim].push_back(static_cast<int>(o.members.size()));
  for (auto& [d, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

TEST(ExposedFace, SquareEdge) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::so_mn(3, 2), vec({2, 1}));
  const Face f = exposed_face(poly, vec({1, 0}));
  EXPECT_EQ(f.dim, 1);
  EXPECT_NEAR(f.alpha, 2.0, 1e-15);
  std::set<std::pair<double, double>> got;
  for (int i : f.vertices) got.insert({poly.vertices[static_cast<std::size_t>(i)](0), poly.vertices[static_cast<std::size_t>(i)](1)});
  EXPECT_EQ(got, (std::set<std::pair<double, double>>{{2, 1}, {2, -1}}));
}

TEST(ExposedFace, GenericFunctionalPicksVertex) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::sl_r(4), vec({3, 1, -1, -3}));
  Rng rng = stream_rng(61, 0);
  for (int t = 0; t < 20; ++t) {
    const Face f = exposed_face(poly, gaussian_vector(rng, 4));
    EXPECT_EQ(f.dim, 0);
    EXPECT_EQ(f.vertices.size(), 1u);
  }
}

TEST(ExposedFace, ZeroFunctionalRejected) {
  EXPECT_THROW(exposed_face(poly_of(AlgebraFamily::sl_r(3), vec({1, 0, -1})), Vec::Zero(3)), ZeroFunctional);
}

TEST(Faces, HexagonOrbits) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::sl_r(3), vec({1, 0, -1}));
  const auto sizes = orbit_sizes_by_dim(poly);
  EXPECT_EQ(sizes.at(0), (std::vector<int>{6}));
  EXPECT_EQ(sizes.at(1), (std::vector<int>{3, 3}));
  EXPECT_EQ(sizes.at(2), (std::vector<int>{1}));
}

TEST(Faces, RotatedSquareOrbits) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::so_mn(3, 2), vec({1, 1}));
  EXPECT_EQ(poly.vertices.size(), 4u);
  const auto sizes = orbit_sizes_by_dim(poly);
  EXPECT_EQ(sizes.at(0), (std::vector<int>{4}));
  EXPECT_EQ(sizes.at(1), (std::vector<int>{4}));
  EXPECT_EQ(sizes.at(2), (std::vector<int>{1}));
}

TEST(Faces, DTypeSquareOrbits) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::so_mn(2, 2), vec({2, 1}));
  const auto sizes = orbit_sizes_by_dim(poly);
  EXPECT_EQ(sizes.at(0), (std::vector<int>{4}));
  EXPECT_EQ(sizes.at(1), (std::vector<int>{2, 2}));
}

TEST(Faces, ZeroAnchorHasSingleFace) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::sl_r(3), Vec::Zero(3));
  const auto faces = enumerate_faces(poly);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].dim, 0);
  EXPECT_EQ(face_orbit_representatives(poly).size(), 1u);
}

TEST(Faces, MatchBruteForceEnumeration) {
  const std::vector<std::pair<AlgebraFamily, Vec>> cases = {
      {AlgebraFamily::sl_r(3), vec({1, 0, -1})},      {AlgebraFamily::sl_r(3), vec({2, -1, -1})},
      {AlgebraFamily::sl_r(4), vec({3, 1, -1, -3})},  {AlgebraFamily::sl_r(4), vec({1, 1, -1, -1})},
      {AlgebraFamily::so_mn(3, 2), vec({2, 1})},      {AlgebraFamily::so_mn(2, 2), vec({2, 1})},
      {AlgebraFamily::so_mn(4, 3), vec({3, 2, 1})},   {AlgebraFamily::so_mn(3, 3), vec({3, 2, 1})},
      {AlgebraFamily::so_mn(3, 3), vec({2, 1, -1})},  {AlgebraFamily::sl_h(3), vec({1, 0.5, -1.5})},
  };
  for (const auto& [f, a] : cases) {
    const MomentumPolytope poly = poly_of(f, a);
    std::set<std::vector<int>> ours;
    for (const Face& face : enumerate_faces(poly)) ours.insert(face.vertices);
    EXPECT_EQ(ours, oracle::brute_faces(poly.vertices)) << f.name();
  }
}

TEST(Faces, EveryFaceIsExposedByItsFunctional) {
  for (const auto& [f, a] : std::vector<std::pair<AlgebraFamily, Vec>>{
           {AlgebraFamily::sl_r(4), vec({3, 1, -1, -3})}, {AlgebraFamily::so_mn(4, 3), vec({3, 2, 1})}}) {
    const MomentumPolytope poly = poly_of(f, a);
    for (const Face& face : enumerate_faces(poly)) {
      for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
        const double s = face.l.dot(poly.vertices[v]);
        const bool on = std::binary_search(face.vertices.begin(), face.vertices.end(), static_cast<int>(v));
        if (on) EXPECT_NEAR(s, face.alpha, 1e-9);
        else EXPECT_LT(s, face.alpha - 1e-9);
      }
      EXPECT_EQ(face.dim, oracle::affine_dim([&] {
        std::vector<Vec> pts;
        for (int i : face.vertices) pts.push_back(poly.vertices[static_cast<std::size_t>(i)]);
        return pts;
      }()));
      if (face.l.norm() > 0) EXPECT_EQ(exposed_face(poly, face.l).vertices, face.vertices);
    }
  }
}

TEST(Faces, WeylActionPermutesFacesAndOrbitsPartition) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::so_mn(4, 3), vec({3, 2, 1}));
  const std::vector<Face> faces = enumerate_faces(poly);
  std::set<std::vector<int>> all;
  for (const Face& f : faces) all.insert(f.vertices);
  for (const SignedPerm& s : weyl_group(poly.anchor.family))
    for (const Face& f : faces) EXPECT_TRUE(all.count(act_on_vertices(poly, s, f.vertices)));
  std::vector<int> seen(faces.size(), 0);
  for (const FaceOrbit& o : face_orbits(poly, faces))
    for (int m : o.members) ++seen[static_cast<std::size_t>(m)];
  for (int c : seen) EXPECT_EQ(c, 1);
}

TEST(Faces, RepresentativesSortedAndDeterministic) {
  const MomentumPolytope poly = poly_of(AlgebraFamily::sl_r(4), vec({3, 1, -1, -3}));
  const auto a = face_orbit_representatives(poly);
  const auto b = face_orbit_representatives(poly);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].vertices, b[i].vertices);
  for (std::size_t i = 1; i < a.size(); ++i)
    EXPECT_TRUE(a[i - 1].dim < a[i].dim || (a[i - 1].dim == a[i].dim && a[i - 1].vertices < a[i].vertices));
}

TEST(Faces, DeskScaleLimit) {
  EXPECT_THROW(enumerate_faces(poly_of(AlgebraFamily::sl_r(6), vec({5, 3, 1, -1, -3, -5}))), SizeError);
}

TEST(LiftedFace, WholePolytopeAcceptsOrbitope) {
  const PointP x = embed_a(AlgebraFamily::so_mn(3, 2), vec({2, 1}));
  const MomentumPolytope poly = momentum_polytope(x);
  const std::vector<Face> faces = enumerate_faces(poly);
  const Face& whole = faces.back();
  ASSERT_EQ(whole.vertices.size(), poly.vertices.size());
  const LiftedFace lf = lift_face(x, whole);
  SampleConfig cfg;
  cfg.count = 20;
  for (const CMat& k : sample_K(x.family(), cfg)) EXPECT_TRUE(lf.accepts(adjoint(k, x)));
}

TEST(LiftedFace, VertexFaceContainsOnlyStabilizerImages) {
  const AlgebraFamily f = AlgebraFamily::sl_r(3);
  const PointP x = sl_r_diag(vec({1, 0, -1}));
  const MomentumPolytope poly = momentum_polytope(x);
  const Face vertex = exposed_face(poly, poly.vertices[0]);
  ASSERT_EQ(vertex.vertices, std::vector<int>{0});
  const LiftedFace lf = lift_face(x, vertex);
  EXPECT_TRUE(lf.accepts(x));
  SampleConfig cfg;
  cfg.count = 200;
  cfg.exp_scale = 0.01;
  for (const CMat& k : sample_K(f, cfg)) {
    const PointP y = adjoint(k, x);
    if (lf.accepts(y)) EXPECT_LT((kostant_project(y) - poly.vertices[0]).norm(), 1e-6);
  }
}

TEST(LiftedFace, EdgeOfSquareAcceptsSegment) {
  const AlgebraFamily f = AlgebraFamily::so_mn(3, 2);
  const PointP x = embed_a(f, vec({1, 1}));
  const MomentumPolytope poly = momentum_polytope(x);
  const Face edge = exposed_face(poly, vec({1, 0}));
  ASSERT_EQ(edge.dim, 1);
  const LiftedFace lf = lift_face(x, edge);
  const Vec v1 = poly.vertices[static_cast<std::size_t>(edge.vertices[0])];
  const Vec v2 = poly.vertices[static_cast<std::size_t>(edge.vertices[1])];
  for (double t = 0.0; t <= 1.0; t += 0.125) EXPECT_TRUE(lf.accepts(embed_a(f, t * v1 + (1 - t) * v2)));
  EXPECT_FALSE(lf.accepts(embed_a(f, 0.5 * v1)));
}

TEST(LiftedFace, RejectsNonFaces) {
  const PointP x = sl_r_diag(vec({1, 0, -1}));
  Face bogus = exposed_face(momentum_polytope(x), vec({1, 0, -1}));
  bogus.alpha += 0.5;
  EXPECT_THROW(lift_face(x, bogus), NotAFace);
}

TEST(Correspondence, ZeroTrialsIsEmptyPass) {
  const CorrespondenceReport r = verify_correspondence(sl_r_diag(vec({1, 0, -1})), 0, 1);
  EXPECT_EQ(r.failures(), 0);
  for (const ClauseTally& c : r.clauses) EXPECT_EQ(c.passed + c.failed, 0);
}

TEST(Correspondence, DeskCasesPass) {
  const std::vector<PointP> xs = {sl_r_diag(vec({1, 0, -1})), embed_a(AlgebraFamily::so_mn(3, 2), vec({2, 1})),
                                  embed_a(AlgebraFamily::so_mn(2, 2), vec({2, 1})),
                                  embed_a(AlgebraFamily::sl_h(2), vec({1, -1}))};
  for (const PointP& x : xs) {
    const CorrespondenceReport r = verify_correspondence(x, 60, 7);
    EXPECT_EQ(r.failures(), 0) << x.family().name();
    ASSERT_EQ(r.clauses.size(), 4u);
    for (const ClauseTally& c : r.clauses) EXPECT_GT(c.passed, 0) << x.family().name() << " " << c.name;
  }
}

TEST(Centralizer, GenericDiagonalHasTrivialCentralizer) {
  const AlgebraFamily f = AlgebraFamily::sl_r(3);
  EXPECT_TRUE(centralizer_k(f, sl_r_diag(vec({1, 0, -1})).matrix()).empty());
  EXPECT_EQ(centralizer_k(f, sl_r_diag(vec({1, 1, -2})).matrix()).size(), 1u);
}
