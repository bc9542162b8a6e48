#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "orbitope/orbitope.hpp"

namespace orbitope {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Independent generator for work item `index` of a run seeded with `seed`.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

Vec gaussian_vector(Rng& rng, Eigen::Index n);
/// Uniform point of the probability simplex (flat Dirichlet).
Vec simplex_weights(Rng& rng, Eigen::Index n);
PointP random_point(const AlgebraFamily& family, Rng& rng, double scale = 1.0);
CMat random_k(const AlgebraFamily& family, Rng& rng, double exp_scale);
/// exp of a Gaussian combination of `basis` (elements of 𝔨).
CMat random_exp(const std::vector<CMat>& basis, Rng& rng, double exp_scale);

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0: hardware).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

struct SampleConfig {
  std::uint64_t seed = 1;
  int count = 1000;
  double exp_scale = 1.0;
  Tolerances tol{};
  int lp_checks = 100;      // LP-backed probes in verify_theorem1 (c)/(d)
  int search_targets = 8;   // surjectivity targets in verify_kostant
  int search_steps = 300;
};

/// Validates cfg (count >= 1, exp_scale > 0).
void validate(const SampleConfig& cfg);

/// k_i = exp(exp_scale · u_i), u_i Gaussian over k_basis; checked against the
/// group relations of K to 1e-9.
std::vector<CMat> sample_K(const AlgebraFamily& family, const SampleConfig& cfg);
/// Whether k satisfies the defining relations of K for the family.
bool in_group_K(const AlgebraFamily& family, const CMat& k, double tol = 1e-9);

/// Feasibility of Σ t_i p_i = y, Σ t_i = 1, t ≥ 0 by a phase-one simplex.
bool hull_member_lp(const std::vector<Vec>& points, const Vec& y, double tol = 1e-7);

struct Theorem1Report {
  int samples = 0;
  int orbit_pass = 0, orbit_fail = 0;              // (a)
  double orbit_min_margin = 0.0;
  int convex_pass = 0, convex_fail = 0;            // (b)
  int lp_probe_members = 0, lp_probe_rejected = 0; // (c), statistic only
  int outside_tested = 0, outside_rejected = 0;    // (d)
  std::vector<double> margins;                     // per orbit sample
  bool passed() const { return orbit_fail == 0 && convex_fail == 0 && outside_rejected == outside_tested; }
};

Theorem1Report verify_theorem1(const PointP& x, const SampleConfig& cfg);

struct KostantReport {
  int samples = 0;
  int cone_pass = 0, cone_fail = 0;
  int weight_pass = 0, weight_fail = 0;
  int lp_pass = 0, lp_fail = 0;
  int targets = 0;
  double best_distance_mean = 0.0;
  double best_distance_max = 0.0;
  double vertex_witness_distance = 0.0;
  bool passed() const { return cone_fail == 0 && weight_fail == 0 && lp_fail == 0; }
};

KostantReport verify_kostant(const PointP& x, const SampleConfig& cfg);

}  // namespace orbitope
