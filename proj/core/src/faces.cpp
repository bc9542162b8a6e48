#include "orbitope/faces.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "orbitope/errors.hpp"
#include "orbitope/harness.hpp"

namespace orbitope {

namespace {

constexpr std::size_t kMaxVertices = 384;
using VertexSet = std::bitset<kMaxVertices>;

std::vector<int> to_indices(const VertexSet& s, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (s.test(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Vec> select(const std::vector<Vec>& pts, const std::vector<int>& idx) {
  std::vector<Vec> out;
  for (int i : idx) out.push_back(pts[static_cast<std::size_t>(i)]);
  return out;
}

bool face_less(const Face& a, const Face& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.vertices < b.vertices;
}

std::vector<long long> grid_key(const Vec& v) {
  std::vector<long long> key(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    key[static_cast<std::size_t>(i)] = std::llround(v(i) * 1e9);
  return key;
}

// l ∈ 𝔞* as an element of 𝔭 through the trace form (no trace constraint on l).
CMat embedded_functional(const AlgebraFamily& f, const Vec& l) {
  const int N = f.ambient_size();
  CMat E = CMat::Zero(N, N);
  for (int i = 0; i < f.a_dim(); ++i) {
    switch (f.kind()) {
      case FamilyKind::SlR: E(i, i) = l(i); break;
      case FamilyKind::SoMN:
        E(i, f.m() + i) = l(i);
        E(f.m() + i, i) = l(i);
        break;
      case FamilyKind::SlH:
        E(i, i) = l(i);
        E(f.m() + i, f.m() + i) = l(i);
        break;
    }
  }
  return E;
}

struct Ray {
  Vec h;
  VertexSet zero;
};

// Extreme rays of {h ∈ R^{d+1} : A h ≥ 0} by the double description method.
std::vector<Ray> extreme_rays(const Mat& A) {
  const Eigen::Index rows = A.rows(), dim = A.cols();
  auto eps_for = [&](Eigen::Index r) { return 1e-9 * std::max(1.0, A.row(r).norm()); };

  // initial simplicial cone from dim independent rows
  std::vector<Eigen::Index> base;
  Mat chosen(0, dim);
  for (Eigen::Index r = 0; r < rows && static_cast<Eigen::Index>(base.size()) < dim; ++r) {
    Mat trial(chosen.rows() + 1, dim);
    trial << chosen, A.row(r);
    Eigen::FullPivLU<Mat> lu(trial);
    lu.setThreshold(1e-10);
    if (lu.rank() == trial.rows()) {
      chosen = trial;
      base.push_back(r);
    }
  }
  if (static_cast<Eigen::Index>(base.size()) < dim) throw ComputationError("vertex configuration is not full-dimensional");
  const Mat inv = chosen.inverse();
  std::vector<Ray> rays;
  std::vector<char> processed(static_cast<std::size_t>(rows), 0);
  for (Eigen::Index r : base) processed[static_cast<std::size_t>(r)] = 1;
  for (Eigen::Index j = 0; j < dim; ++j) {
    Ray ray{inv.col(j).normalized(), {}};
    for (std::size_t b = 0; b < base.size(); ++b)
      if (static_cast<Eigen::Index>(b) != j) ray.zero.set(static_cast<std::size_t>(base[b]));
    rays.push_back(std::move(ray));
  }

  for (Eigen::Index r = 0; r < rows; ++r) {
    if (processed[static_cast<std::size_t>(r)]) continue;
    const double eps = eps_for(r);
    std::vector<double> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = A.row(r).dot(rays[i].h);
      if (val[i] > eps) pos.push_back(i);
      else if (val[i] < -eps) neg.push_back(i);
      else {
        Ray z = rays[i];
        z.zero.set(static_cast<std::size_t>(r));
        next.push_back(std::move(z));
      }
    }
    for (std::size_t i : pos) next.push_back(rays[i]);
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        const VertexSet common = rays[p].zero & rays[q].zero;
        if (static_cast<Eigen::Index>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != q && (rays[o].zero & common) == common) adjacent = false;
        if (!adjacent) continue;
        Ray fresh{(val[p] * rays[q].h - val[q] * rays[p].h).normalized(), common};
        fresh.zero.set(static_cast<std::size_t>(r));
        next.push_back(std::move(fresh));
      }
    rays = std::move(next);
    processed[static_cast<std::size_t>(r)] = 1;
  }
  for (Ray& ray : rays) {
    ray.zero.reset();
    for (Eigen::Index r = 0; r < rows; ++r)
      if (std::abs(A.row(r).dot(ray.h)) <= eps_for(r)) ray.zero.set(static_cast<std::size_t>(r));
  }
  return rays;
}

}  // namespace

Face exposed_face(const MomentumPolytope& poly, const Vec& l, double tol) {
  if (l.size() != poly.anchor.family.a_dim()) throw ShapeError("functional has wrong length");
  if (l.cwiseAbs().maxCoeff() == 0.0) throw ZeroFunctional("exposed_face needs a nonzero functional");
  std::vector<double> values;
  values.reserve(poly.vertices.size());
  double alpha = -std::numeric_limits<double>::infinity();
  double spread = 1.0;
  for (const Vec& v : poly.vertices) {
    values.push_back(l.dot(v));
    alpha = std::max(alpha, values.back());
    spread = std::max(spread, std::abs(values.back()));
  }
  Face f;
  f.l = l;
  f.alpha = alpha;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] >= alpha - tol * spread) f.vertices.push_back(static_cast<int>(i));
  f.dim = affine_dimension(select(poly.vertices, f.vertices));
  return f;
}

std::vector<Face> enumerate_faces(const MomentumPolytope& poly) {
  const AlgebraFamily& fam = poly.anchor.family;
  const std::size_t nv = poly.vertices.size();
  if (fam.restricted_rank() > 4) throw SizeError("face enumeration is limited to rank <= 4");
  if (nv > kMaxVertices) throw SizeError("face enumeration is limited to 384 vertices");
  const Eigen::Index L = fam.a_dim();

  std::vector<int> all(nv);
  std::iota(all.begin(), all.end(), 0);
  Vec center = Vec::Zero(L);
  for (const Vec& v : poly.vertices) center += v / static_cast<double>(nv);
  Mat diffs(L, static_cast<Eigen::Index>(nv));
  for (std::size_t i = 0; i < nv; ++i) diffs.col(static_cast<Eigen::Index>(i)) = poly.vertices[i] - center;
  Eigen::JacobiSVD<Mat> svd(diffs, Eigen::ComputeThinU);
  const Vec& s = svd.singularValues();
  const double cut = 1e-9 * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index d = 0;
  while (d < s.size() && s(d) > cut) ++d;

  Face full;
  full.l = Vec::Zero(L);
  full.alpha = 0.0;
  full.vertices = all;
  full.dim = static_cast<int>(d);
  if (d == 0) return {full};

  const Mat Q = svd.matrixU().leftCols(d);
  Mat A(static_cast<Eigen::Index>(nv), d + 1);
  for (std::size_t i = 0; i < nv; ++i) {
    A(static_cast<Eigen::Index>(i), 0) = 1.0;
    A.row(static_cast<Eigen::Index>(i)).tail(d) = (Q.transpose() * (poly.vertices[i] - center)).transpose();
  }

  struct Facet {
    VertexSet set;
    Vec l;
    double alpha;
  };
  std::vector<Facet> facets;
  std::set<std::string> seen;
  for (const Ray& ray : extreme_rays(A)) {
    if (!seen.insert(ray.zero.to_string()).second) continue;
    Vec l = -Q * ray.h.tail(d);
    double alpha = ray.h(0) + l.dot(center);
    const double nrm = l.norm();
    if (nrm <= 1e-12) continue;
    facets.push_back({ray.zero, l / nrm, alpha / nrm});
  }

  std::vector<VertexSet> lattice;
  std::set<std::string> known;
  for (const Facet& f : facets)
    if (known.insert(f.set.to_string()).second) lattice.push_back(f.set);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (const Facet& f : facets) {
      const VertexSet meet = lattice[i] & f.set;
      if (meet.none()) continue;
      if (known.insert(meet.to_string()).second) lattice.push_back(meet);
    }

  std::vector<Face> faces;
  for (const VertexSet& set : lattice) {
    Face face;
    face.l = Vec::Zero(L);
    for (const Facet& f : facets)
      if ((f.set & set) == set) {
        face.l += f.l;
        face.alpha += f.alpha;
      }
    face.vertices = to_indices(set, nv);
    face.dim = affine_dimension(select(poly.vertices, face.vertices));
    faces.push_back(std::move(face));
  }
  faces.push_back(full);
  std::sort(faces.begin(), faces.end(), face_less);
  return faces;
}

std::vector<int> act_on_vertices(const MomentumPolytope& poly, const SignedPerm& sigma,
                                 const std::vector<int>& vertices) {
  std::map<std::vector<long long>, int> where;
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) where.emplace(grid_key(poly.vertices[i]), static_cast<int>(i));
  std::vector<int> out;
  for (int v : vertices) {
    auto it = where.find(grid_key(sigma.apply(poly.vertices[static_cast<std::size_t>(v)])));
    if (it == where.end()) throw ComputationError("Weyl image of a vertex is not a vertex");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FaceOrbit> face_orbits(const MomentumPolytope& poly, const std::vector<Face>& faces) {
  const std::vector<SignedPerm> W = weyl_group(poly.anchor.family);
  std::map<std::vector<long long>, int> where;
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) where.emplace(grid_key(poly.vertices[i]), static_cast<int>(i));
  std::vector<std::vector<int>> images;
  images.reserve(W.size());
  for (const SignedPerm& sigma : W) {
    std::vector<int> img(poly.vertices.size());
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
      auto it = where.find(grid_key(sigma.apply(poly.vertices[i])));
      if (it == where.end()) throw ComputationError("Weyl image of a vertex is not a vertex");
      img[i] = it->second;
    }
    images.push_back(std::move(img));
  }
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < faces.size(); ++i) index_of.emplace(faces[i].vertices, static_cast<int>(i));

  std::map<std::vector<int>, std::vector<int>> by_key;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::vector<int> best;
    for (const auto& img : images) {
      std::vector<int> mapped;
      for (int v : faces[i].vertices) mapped.push_back(img[static_cast<std::size_t>(v)]);
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped < best) best = std::move(mapped);
    }
    by_key[best].push_back(static_cast<int>(i));
  }
  std::vector<FaceOrbit> orbits;
  for (auto& [key, members] : by_key) {
    auto it = index_of.find(key);
    const Face& rep = it != index_of.end() ? faces[static_cast<std::size_t>(it->second)]
                                           : faces[static_cast<std::size_t>(members.front())];
    orbits.push_back(FaceOrbit{rep, members});
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const FaceOrbit& a, const FaceOrbit& b) { return face_less(a.representative, b.representative); });
  return orbits;
}

std::vector<Face> face_orbit_representatives(const MomentumPolytope& poly) {
  std::vector<Face> reps;
  for (const FaceOrbit& o : face_orbits(poly, enumerate_faces(poly))) reps.push_back(o.representative);
  return reps;
}

// --- lifted faces -----------------------------------------------------------------

LiftedFace::LiftedFace(PointP x, Face face, MembershipOptions opts, double level_tol)
    : x_(std::move(x)), face_(std::move(face)), opts_(opts), level_tol_(level_tol) {
  const AlgebraFamily& f = x_.family();
  embedded_ = embedded_functional(f, face_.l);
  scale_ = a_inner_scale(f);
}

double LiftedFace::functional(const PointP& y) const { return trace_form(embedded_, y.matrix()) / scale_; }

bool LiftedFace::accepts(const PointP& y) const {
  if (!member(x_, y, opts_).verdict) return false;
  if (face_.l.cwiseAbs().maxCoeff() == 0.0) return true;
  return std::abs(functional(y) - face_.alpha) <= level_tol_ * std::max(1.0, std::abs(face_.alpha));
}

LiftedFace lift_face(const PointP& x, const Face& f, const MembershipOptions& opts, double level_tol) {
  const MomentumPolytope poly = momentum_polytope(x);
  if (f.l.size() != x.family().a_dim()) throw NotAFace("face functional has wrong length");
  if (f.l.cwiseAbs().maxCoeff() == 0.0) {
    std::vector<int> all(poly.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    if (f.vertices != all) throw NotAFace("zero functional must describe the whole polytope");
    return LiftedFace(x, f, opts, level_tol);
  }
  const Face check = exposed_face(poly, f.l);
  const double spread = std::max(1.0, std::abs(check.alpha));
  if (check.vertices != f.vertices || std::abs(check.alpha - f.alpha) > 1e-9 * spread)
    throw NotAFace("functional does not expose the given vertex set");
  return LiftedFace(x, f, opts, level_tol);
}

std::vector<CMat> centralizer_k(const AlgebraFamily& family, const CMat& L, double tol) {
  const std::vector<CMat> kb = k_basis(family);
  if (kb.empty()) return {};
  const Eigen::Index N = L.rows();
  Mat A(2 * N * N, static_cast<Eigen::Index>(kb.size()));
  for (std::size_t j = 0; j < kb.size(); ++j) {
    const CMat c = commutator(kb[j], L);
    const auto col = static_cast<Eigen::Index>(j);
    for (Eigen::Index e = 0; e < N * N; ++e) {
      A(e, col) = c(e % N, e / N).real();
      A(N * N + e, col) = c(e % N, e / N).imag();
    }
  }
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  const Vec& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  std::vector<CMat> out;
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    if (j < s.size() && s(j) > cut) continue;
    CMat u = CMat::Zero(N, N);
    for (std::size_t i = 0; i < kb.size(); ++i) u += svd.matrixV()(static_cast<Eigen::Index>(i), j) * kb[i];
    out.push_back(std::move(u));
  }
  return out;
}

// --- correspondence suite --------------------------------------------------------

int CorrespondenceReport::failures() const {
  int total = 0;
  for (const ClauseTally& c : clauses) total += c.failed;
  return total;
}

namespace {

struct TrialOutcome {
  bool ok[4] = {true, true, true, true};
  std::string note[4];
};

Vec combination(const std::vector<Vec>& vertices, const std::vector<int>& idx, Rng& rng) {
  const Vec w = simplex_weights(rng, static_cast<Eigen::Index>(idx.size()));
  Vec z = Vec::Zero(vertices.front().size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    z += w(static_cast<Eigen::Index>(i)) * vertices[static_cast<std::size_t>(idx[i])];
  return z;
}

Vec barycenter(const std::vector<Vec>& vertices, const std::vector<int>& idx) {
  Vec z = Vec::Zero(vertices.front().size());
  for (int i : idx) z += vertices[static_cast<std::size_t>(i)];
  return z / static_cast<double>(idx.size());
}

bool on_face(const Face& f, const Vec& z, double tol) {
  if (f.l.cwiseAbs().maxCoeff() == 0.0) return true;
  return std::abs(f.l.dot(z) - f.alpha) <= tol * std::max(1.0, std::abs(f.alpha));
}

}  // namespace

CorrespondenceReport verify_correspondence(const PointP& x, int trials, std::uint64_t seed) {
  CorrespondenceReport report;
  report.trials = std::max(0, trials);
  report.clauses = {{"face_image", 0, 0, {}},
                    {"weyl_transport", 0, 0, {}},
                    {"orbit_uniqueness", 0, 0, {}},
                    {"sigma_into_face", 0, 0, {}}};
  const AlgebraFamily& fam = x.family();
  const MomentumPolytope poly = momentum_polytope(x);
  const std::vector<Face> faces = enumerate_faces(poly);
  report.face_count = static_cast<int>(faces.size());
  report.orbit_count = static_cast<int>(face_orbits(poly, faces).size());
  if (report.trials == 0) return report;

  const std::vector<SignedPerm> W = weyl_group(fam);
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < faces.size(); ++i) index_of.emplace(faces[i].vertices, static_cast<int>(i));
  const double scale = a_inner_scale(fam);
  const double tol = 1e-8;
  MembershipOptions opts;
  opts.matrix_check = false;

  std::vector<LiftedFace> lifted;
  for (const Face& f : faces) lifted.push_back(lift_face(x, f, opts, tol));
  std::vector<std::vector<CMat>> stabilizers;
  for (const Face& f : faces) stabilizers.push_back(centralizer_k(fam, embedded_functional(fam, f.l)));

  auto in_f = [&](const Face& f, const Vec& z) { return momentum_member(poly, z, tol) && on_face(f, z, tol); };

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(report.trials));
  parallel_for(outcomes.size(), [&](std::size_t t) {
    Rng rng = stream_rng(seed, t);
    TrialOutcome& out = outcomes[t];
    std::uniform_int_distribution<std::size_t> pick_face(0, faces.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_w(0, W.size() - 1);
    auto fail = [&](int clause, const std::string& why) {
      if (out.ok[clause]) out.note[clause] = "trial " + std::to_string(t) + ": " + why;
      out.ok[clause] = false;
    };

    // A supporting functional on 𝔭, conjugated into 𝔞, exposes a face of Π_x.
    {
      const PointP A = random_point(fam, rng);
      const ChamberPoint ca = chamber(A);
      const CMat& k = *ca.witness;
      const Face f = exposed_face(poly, ca.a);
      if (!index_of.count(f.vertices)) fail(0, "argmax set is not an enumerated face");
      const CMat La = embed_a(fam, ca.a).matrix();
      for (int s = 0; s < 4; ++s) {
        const PointP z = adjoint(random_k(fam, rng, 1.0), x);
        if (trace_form(La, z.matrix()) > scale * f.alpha + tol * std::max(1.0, scale * std::abs(f.alpha)))
          fail(0, "orbit point exceeds the support value");
        const double lhs = trace_form(adjoint(k, A).matrix(), z.matrix());
        const double rhs = trace_form(A.matrix(), adjoint(CMat(k.adjoint()), z).matrix());
        if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(lhs))) fail(0, "trace form is not Ad-invariant");
      }
      const std::vector<CMat> stab = centralizer_k(fam, La);
      for (int s = 0; s < 2; ++s) {
        PointP y = embed_a(fam, combination(poly.vertices, f.vertices, rng));
        if (!stab.empty()) y = adjoint(random_exp(stab, rng, 1.0), y);
        const Vec py = kostant_project(y);
        const bool attains = std::abs(trace_form(La, y.matrix()) / scale - f.alpha) <= tol * std::max(1.0, std::abs(f.alpha));
        if (!member(x, y, opts).verdict || !attains || !in_f(f, py))
          fail(0, "point of the lifted face does not project into f");
      }
    }

    // Weyl witnesses transport lifted faces.
    {
      const std::size_t fi = pick_face(rng);
      const SignedPerm& sigma = W[pick_w(rng)];
      const CMat ks = weyl_witness(fam, sigma);
      const auto image = index_of.find(act_on_vertices(poly, sigma, faces[fi].vertices));
      if (image == index_of.end()) {
        fail(1, "Weyl image of a face is not a face");
      } else {
        const LiftedFace& F = lifted[fi];
        const LiftedFace& G = lifted[static_cast<std::size_t>(image->second)];
        for (int s = 0; s < 6; ++s) {
          PointP q = x;
          const bool positive = s < 3;
          if (positive) {
            q = embed_a(fam, combination(poly.vertices, faces[fi].vertices, rng));
            if (!stabilizers[fi].empty()) q = adjoint(random_exp(stabilizers[fi], rng, 1.0), q);
          } else if (s == 3) {
            q = adjoint(random_k(fam, rng, 1.0), x);
          } else {
            const Vec w = simplex_weights(rng, 2);
            q = adjoint(random_k(fam, rng, 1.0), x) * w(0) + adjoint(random_k(fam, rng, 1.0), x) * w(1);
          }
          const bool a = F.accepts(q);
          if (positive && !a) fail(1, "lifted face rejects its own points");
          if (a != G.accepts(adjoint(ks, q))) fail(1, "accept_f(q) differs from accept_σf(Ad_k q)");
        }
      }
    }

    // Faces related by some k ∈ K lie over W-conjugate faces.
    {
      const std::size_t fi = pick_face(rng);
      const Face& f = faces[fi];
      const SignedPerm& sigma = W[pick_w(rng)];
      CMat k = weyl_witness(fam, sigma);
      if (!stabilizers[fi].empty()) k = k * random_exp(stabilizers[fi], rng, 1.0);
      const Vec zb = barycenter(poly.vertices, f.vertices);
      const auto image = index_of.find(act_on_vertices(poly, sigma, f.vertices));
      if (image == index_of.end()) {
        fail(2, "Weyl image of a face is not a face");
      } else {
        const Face& fp = faces[static_cast<std::size_t>(image->second)];
        const Vec y = kostant_project(adjoint(k, embed_a(fam, zb)));
        Vec zh = normalize_to_chamber(fam, zb);
        if (fam.traceless_a()) zh.array() -= zh.mean();
        const MomentumPolytope pz = momentum_polytope(ChamberPoint{fam, zh, std::nullopt});
        if (!in_f(fp, y)) fail(2, "P(Ad_k z) is not in σf");
        if (!momentum_member(pz, y, tol)) fail(2, "P(Ad_k z) is not in Π_z");
        bool found = false;
        for (const SignedPerm& s2 : W) {
          if (!on_face(fp, s2.apply(zb), tol)) continue;
          found = true;
          if (act_on_vertices(poly, s2, f.vertices) != fp.vertices) fail(2, "σ'f differs from f'");
          break;
        }
        if (!found) fail(2, "no σ' maps z into f'");
      }
    }

    // y ∈ f, z ∈ Π_x, y ∈ Π_z ⇒ some σz lies in f
    {
      const Face& f = faces[pick_face(rng)];
      const Vec y = combination(poly.vertices, f.vertices, rng);
      Vec yh = normalize_to_chamber(fam, y);
      if (fam.traceless_a()) yh.array() -= yh.mean();
      const double tt = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      Vec z = tt * poly.anchor.a + (1.0 - tt) * yh;
      z = W[pick_w(rng)].apply(z);
      Vec zh = normalize_to_chamber(fam, z);
      if (fam.traceless_a()) zh.array() -= zh.mean();
      const MomentumPolytope pz = momentum_polytope(ChamberPoint{fam, zh, std::nullopt});
      if (!momentum_member(poly, z, tol) || !momentum_member(pz, y, tol)) {
        fail(3, "sampled z does not satisfy the hypotheses");
      } else {
        const bool found = std::any_of(W.begin(), W.end(), [&](const SignedPerm& s) { return on_face(f, s.apply(z), tol); });
        if (!found) fail(3, "no σ with σz ∈ f");
      }
    }
  });

  for (const TrialOutcome& o : outcomes)
    for (int c = 0; c < 4; ++c) {
      ClauseTally& tally = report.clauses[static_cast<std::size_t>(c)];
      if (o.ok[c]) {
        ++tally.passed;
      } else {
        ++tally.failed;
        if (tally.failures.size() < 5) tally.failures.push_back(o.note[c]);
      }
    }
  return report;
}

}  // namespace orbitope
