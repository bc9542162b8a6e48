#include "orbitope/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "orbitope/errors.hpp"

namespace orbitope {

namespace {

constexpr std::uint64_t kSaltConvex = 0x636f6e766578ULL;
constexpr std::uint64_t kSaltMember = 0x6d656d626572ULL;
constexpr std::uint64_t kSaltOutside = 0x6f75747369ULL;
constexpr std::uint64_t kSaltSearch = 0x736561726368ULL;

Rng salted(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  return stream_rng(splitmix64(seed ^ salt), index);
}

std::vector<Vec> coords_of(const std::vector<PointP>& pts) {
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (const PointP& p : pts) out.push_back(p.coords());
  return out;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) + index));
}

Vec gaussian_vector(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

Vec simplex_weights(Rng& rng, Eigen::Index n) {
  std::exponential_distribution<double> expo(1.0);
  Vec w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = expo(rng);
  return w / w.sum();
}

PointP random_point(const AlgebraFamily& family, Rng& rng, double scale) {
  return PointP::from_coords(family, scale * gaussian_vector(rng, family.dim_p()));
}

CMat random_exp(const std::vector<CMat>& basis, Rng& rng, double exp_scale) {
  if (basis.empty()) return CMat::Identity(1, 1);
  const Vec g = gaussian_vector(rng, static_cast<Eigen::Index>(basis.size()));
  CMat u = CMat::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) u += (exp_scale * g(static_cast<Eigen::Index>(i))) * basis[i];
  return matrix_exp(u);
}

CMat random_k(const AlgebraFamily& family, Rng& rng, double exp_scale) {
  const std::vector<CMat> basis = k_basis(family);
  if (basis.empty()) return CMat::Identity(family.ambient_size(), family.ambient_size());
  return random_exp(basis, rng, exp_scale);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void validate(const SampleConfig& cfg) {
  if (cfg.count < 1) throw InputError("sample count must be at least 1");
  if (!(cfg.exp_scale > 0.0)) throw InputError("exp_scale must be positive");
}

bool in_group_K(const AlgebraFamily& family, const CMat& k, double tol) {
  const int N = family.ambient_size();
  if (k.rows() != N || k.cols() != N) return false;
  if (max_abs(k * k.adjoint() - CMat::Identity(N, N)) > tol) return false;
  switch (family.kind()) {
    case FamilyKind::SlR:
      return k.imag().cwiseAbs().maxCoeff() <= tol && std::abs(k.real().determinant() - 1.0) <= tol;
    case FamilyKind::SoMN: {
      const int m = family.m(), n = family.n();
      if (k.imag().cwiseAbs().maxCoeff() > tol) return false;
      if (max_abs(k.topRightCorner(m, n)) > tol || max_abs(k.bottomLeftCorner(n, m)) > tol) return false;
      return std::abs(k.real().topLeftCorner(m, m).determinant() - 1.0) <= tol &&
             std::abs(k.real().bottomRightCorner(n, n).determinant() - 1.0) <= tol;
    }
    case FamilyKind::SlH: {
      const int m = family.m();
      CMat J = CMat::Zero(N, N);
      J.topRightCorner(m, m) = CMat::Identity(m, m);
      J.bottomLeftCorner(m, m) = -CMat::Identity(m, m);
      return max_abs(J * k.conjugate() - k * J) <= tol;
    }
  }
  return false;
}

std::vector<CMat> sample_K(const AlgebraFamily& family, const SampleConfig& cfg) {
  validate(cfg);
  std::vector<CMat> out(static_cast<std::size_t>(cfg.count));
  parallel_for(out.size(), [&](std::size_t i) {
    Rng rng = stream_rng(cfg.seed, i);
    out[i] = random_k(family, rng, cfg.exp_scale);
    if (!in_group_K(family, out[i], 1e-9))
      throw NumericalError("sampled element violates the defining relations of K");
  });
  return out;
}

// --- LP ------------------------------------------------------------------------

bool hull_member_lp(const std::vector<Vec>& points, const Vec& y, double tol) {
  if (points.empty()) throw ShapeError("hull_member_lp needs at least one point");
  const Eigen::Index D = y.size();
  const Eigen::Index m = D + 1;
  const auto n = static_cast<Eigen::Index>(points.size());
  double scale = std::max(1.0, y.size() ? y.cwiseAbs().maxCoeff() : 0.0);
  for (const Vec& p : points) {
    if (p.size() != D) throw ShapeError("hull_member_lp: point dimensions differ");
    if (D) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  }
  const Eigen::Index cols = n + m + 1;
  const Eigen::Index rhs = n + m;
  Mat T = Mat::Zero(m + 1, cols);
  for (Eigen::Index j = 0; j < n; ++j) {
    T.block(0, j, D, 1) = points[static_cast<std::size_t>(j)] / scale;
    T(D, j) = 1.0;
  }
  T.block(0, rhs, D, 1) = y / scale;
  T(D, rhs) = 1.0;
  for (Eigen::Index r = 0; r < m; ++r) {
    if (T(r, rhs) < 0) T.row(r) *= -1.0;
    T(r, n + r) = 1.0;
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) basis[static_cast<std::size_t>(r)] = n + r;
  for (Eigen::Index j = 0; j < n; ++j) T(m, j) = -T.block(0, j, m, 1).sum();
  T(m, rhs) = -T.block(0, rhs, m, 1).sum();

  constexpr double eps = 1e-12;
  const long cap = 50 * static_cast<long>(n + m) + 1000;
  bool bland = false;
  int stall = 0;
  double best = -T(m, rhs);
  long iter = 0;
  for (; iter < cap; ++iter) {
    Eigen::Index enter = -1;
    if (bland) {
      for (Eigen::Index j = 0; j < n + m; ++j)
        if (T(m, j) < -eps) {
          enter = j;
          break;
        }
    } else {
      double most = -eps;
      for (Eigen::Index j = 0; j < n + m; ++j)
        if (T(m, j) < most) {
          most = T(m, j);
          enter = j;
        }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    double ratio = 0.0;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (T(r, enter) <= eps) continue;
      const double q = T(r, rhs) / T(r, enter);
      if (leave < 0 || q < ratio - 1e-15 ||
          (q <= ratio + 1e-15 && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
        leave = r;
        ratio = q;
      }
    }
    if (leave < 0) break;
    T.row(leave) /= T(leave, enter);
    for (Eigen::Index r = 0; r <= m; ++r)
      if (r != leave && T(r, enter) != 0.0) T.row(r) -= T(r, enter) * T.row(leave);
    basis[static_cast<std::size_t>(leave)] = enter;
    const double w = -T(m, rhs);
    if (w < best - 1e-13) {
      best = w;
      stall = 0;
    } else if (++stall > 50) {
      bland = true;
    }
  }
  if (iter >= cap) throw NumericalError("simplex iteration cap reached");
  return -T(m, rhs) <= tol;
}

// --- verifiers ------------------------------------------------------------------

Theorem1Report verify_theorem1(const PointP& x, const SampleConfig& cfg) {
  validate(cfg);
  const AlgebraFamily& f = x.family();
  MembershipOptions opts;
  opts.tol = cfg.tol;
  opts.matrix_check = false;
  const std::vector<CMat> ks = sample_K(f, cfg);
  const auto count = static_cast<std::size_t>(cfg.count);

  Theorem1Report rep;
  rep.samples = cfg.count;
  std::vector<PointP> orbit(count, x);
  rep.margins.assign(count, 0.0);
  std::vector<char> ok_a(count, 0), ok_b(count, 0);
  parallel_for(count, [&](std::size_t i) {
    orbit[i] = adjoint(ks[i], x);
    const MembershipResult r = member(x, orbit[i], opts);
    rep.margins[i] = r.margin;
    ok_a[i] = r.verdict;
  });
  parallel_for(count, [&](std::size_t i) {
    Rng rng = salted(cfg.seed, kSaltConvex, i);
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    const Vec w = simplex_weights(rng, 3);
    PointP y = orbit[pick(rng)] * w(0) + orbit[pick(rng)] * w(1) + orbit[pick(rng)] * w(2);
    ok_b[i] = member(x, y, opts).verdict;
  });
  for (std::size_t i = 0; i < count; ++i) {
    (ok_a[i] ? rep.orbit_pass : rep.orbit_fail)++;
    (ok_b[i] ? rep.convex_pass : rep.convex_fail)++;
  }
  rep.orbit_min_margin = *std::min_element(rep.margins.begin(), rep.margins.end());

  const std::vector<Vec> cloud = coords_of(orbit);
  const MomentumPolytope poly = momentum_polytope(x);
  const auto probes = static_cast<std::size_t>(std::max(0, cfg.lp_checks));
  std::vector<char> c_member(probes, 0), c_rejected(probes, 0);
  std::vector<char> d_tested(probes, 0), d_rejected(probes, 0);
  parallel_for(probes, [&](std::size_t i) {
    Rng rng = salted(cfg.seed, kSaltMember, i);
    const Vec w = simplex_weights(rng, static_cast<Eigen::Index>(poly.vertices.size()));
    Vec z = Vec::Zero(f.a_dim());
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) z += w(static_cast<Eigen::Index>(v)) * poly.vertices[v];
    const PointP q = adjoint(random_k(f, rng, cfg.exp_scale), embed_a(f, z));
    if (member(x, q, opts).verdict) {
      c_member[i] = 1;
      c_rejected[i] = !hull_member_lp(cloud, q.coords());
    }
    Rng rng2 = salted(cfg.seed, kSaltOutside, i);
    const double size = std::max(1e-3, x.coords().norm());
    PointP out = (i % 2 == 0)
                     ? orbit[i % count] * std::uniform_real_distribution<double>(1.05, 1.5)(rng2)
                     : random_point(f, rng2, size / std::sqrt(static_cast<double>(f.dim_p())));
    const MembershipResult r = member(x, out, opts);
    if (r.margin < -10.0 * cfg.tol.membership) {
      d_tested[i] = 1;
      d_rejected[i] = !hull_member_lp(cloud, out.coords());
    }
  });
  for (std::size_t i = 0; i < probes; ++i) {
    rep.lp_probe_members += c_member[i];
    rep.lp_probe_rejected += c_rejected[i];
    rep.outside_tested += d_tested[i];
    rep.outside_rejected += d_rejected[i];
  }
  return rep;
}

KostantReport verify_kostant(const PointP& x, const SampleConfig& cfg) {
  validate(cfg);
  const AlgebraFamily& f = x.family();
  const double tol = 1e-8;
  const std::vector<CMat> ks = sample_K(f, cfg);
  const MomentumPolytope poly = momentum_polytope(x);
  const auto count = static_cast<std::size_t>(cfg.count);

  KostantReport rep;
  rep.samples = cfg.count;
  std::vector<char> cone(count), weight(count), lp(count);
  parallel_for(count, [&](std::size_t i) {
    const Vec z = kostant_project(adjoint(ks[i], x));
    cone[i] = cone_member(poly, z, tol);
    weight[i] = momentum_member(poly, z, tol);
    lp[i] = hull_member_lp(poly.vertices, z, tol);
  });
  for (std::size_t i = 0; i < count; ++i) {
    (cone[i] ? rep.cone_pass : rep.cone_fail)++;
    (weight[i] ? rep.weight_pass : rep.weight_fail)++;
    (lp[i] ? rep.lp_pass : rep.lp_fail)++;
  }

  // Surjectivity: approach random targets of conv(W·x) by a (1+1) evolution
  // strategy over K started from the Weyl witness of the nearest vertex.
  const PointP base = embed_a(f, poly.anchor.a);
  const std::vector<SignedPerm> W = weyl_group(f);
  const std::vector<CMat> kb = k_basis(f);
  const auto targets = static_cast<std::size_t>(std::max(0, cfg.search_targets));
  std::vector<double> best(targets, 0.0), vertex_gap(targets, 0.0);
  parallel_for(targets, [&](std::size_t t) {
    Rng rng = salted(cfg.seed, kSaltSearch, t);
    const Vec w = simplex_weights(rng, static_cast<Eigen::Index>(poly.vertices.size()));
    Vec target = Vec::Zero(f.a_dim());
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) target += w(static_cast<Eigen::Index>(v)) * poly.vertices[v];

    const SignedPerm& tau = W[std::uniform_int_distribution<std::size_t>(0, W.size() - 1)(rng)];
    const CMat k_tau = weyl_witness(f, tau);
    vertex_gap[t] = (kostant_project(adjoint(k_tau, base)) - tau.apply(poly.anchor.a)).norm();

    std::size_t start = 0;
    double start_dist = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < W.size(); ++s) {
      const double d = (W[s].apply(poly.anchor.a) - target).norm();
      if (d < start_dist) {
        start_dist = d;
        start = s;
      }
    }
    CMat k = weyl_witness(f, W[start]);
    double dist = (kostant_project(adjoint(k, base)) - target).norm();
    double step = 0.3;
    for (int it = 0; it < cfg.search_steps && !kb.empty(); ++it) {
      const CMat cand = k * random_exp(kb, rng, step);
      const double d = (kostant_project(adjoint(cand, base)) - target).norm();
      if (d < dist) {
        dist = d;
        k = cand;
        step *= 1.5;
      } else {
        step *= 0.9;
      }
      step = std::clamp(step, 1e-6, 1.0);
    }
    best[t] = dist;
  });
  rep.targets = static_cast<int>(targets);
  for (std::size_t t = 0; t < targets; ++t) {
    rep.best_distance_mean += best[t] / static_cast<double>(targets);
    rep.best_distance_max = std::max(rep.best_distance_max, best[t]);
    rep.vertex_witness_distance = std::max(rep.vertex_witness_distance, vertex_gap[t]);
  }
  return rep;
}

}  // namespace orbitope
