#include "orbitope/reps.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "orbitope/errors.hpp"

namespace orbitope {

namespace {

const cplx kI{0.0, 1.0};

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

CMat kron(const CMat& A, const CMat& B) {
  CMat out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

std::vector<int> so_slots(const AlgebraFamily& f) {
  const int m = f.m(), n = f.n();
  std::vector<int> slots(static_cast<std::size_t>(m + n));
  for (int q = 0; q < n; ++q) {
    slots[static_cast<std::size_t>(q)] = 2 * q;
    slots[static_cast<std::size_t>(m + q)] = 2 * q + 1;
  }
  for (int t = n; t < m; ++t) slots[static_cast<std::size_t>(t)] = n + t;
  return slots;
}

// Hermitian matrix <-> d² real parameters (diagonal, upper re, upper im).
Vec hermitian_to_params(const CMat& M) {
  const Eigen::Index d = M.rows();
  Vec v(d * d);
  Eigen::Index k = 0;
  for (Eigen::Index a = 0; a < d; ++a) v(k++) = M(a, a).real();
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a + 1; b < d; ++b) {
      v(k++) = M(a, b).real();
      v(k++) = M(a, b).imag();
    }
  return v;
}

CMat params_to_hermitian(const Vec& v, Eigen::Index d) {
  CMat M = CMat::Zero(d, d);
  Eigen::Index k = 0;
  for (Eigen::Index a = 0; a < d; ++a) M(a, a) = v(k++);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a + 1; b < d; ++b) {
      M(a, b) = cplx{v(k), v(k + 1)};
      M(b, a) = cplx{v(k), -v(k + 1)};
      k += 2;
    }
  return M;
}

bool compact_action_skew(const FundamentalRep& rep, const std::vector<CMat>& basis) {
  for (const CMat& u : basis) {
    const CMat F = rep.act_natural(u);
    if (max_abs(F + F.adjoint()) > 1e-10 * std::max(1.0, max_abs(F))) return false;
  }
  return true;
}

}  // namespace

// --- tags ----------------------------------------------------------------------

std::string RepTag::label() const {
  switch (kind) {
    case RepKind::Compound: return "wedge" + std::to_string(p);
    case RepKind::Spin: return "spin";
    case RepKind::HalfSpinPlus: return "halfspin+";
    case RepKind::HalfSpinMinus: return "halfspin-";
  }
  return "?";
}

RepTag RepTag::parse(const std::string& label) {
  if (label == "spin") return spin();
  if (label == "halfspin+") return half_spin_plus();
  if (label == "halfspin-") return half_spin_minus();
  if (label.rfind("wedge", 0) == 0 && label.size() > 5) {
    try {
      std::size_t used = 0;
      const int p = std::stoi(label.substr(5), &used);
      if (used == label.size() - 5) return compound(p);
    } catch (const std::exception&) {
    }
  }
  throw InputError("unknown representation label '" + label + "'");
}

// --- natural realization ----------------------------------------------------------

CMat to_natural(const AlgebraFamily& f, const CMat& X) {
  if (f.kind() != FamilyKind::SoMN) return X;
  const int m = f.m();
  CMat Y = X;
  const Eigen::Index N = X.rows();
  for (Eigen::Index a = 0; a < N; ++a)
    for (Eigen::Index b = 0; b < N; ++b) {
      if (a < m && b >= m) Y(a, b) *= kI;
      else if (a >= m && b < m) Y(a, b) *= -kI;
    }
  return Y;
}

CMat natural_matrix(const PointP& y) { return to_natural(y.family(), y.matrix()); }

std::vector<CMat> compact_basis(const AlgebraFamily& f) {
  std::vector<CMat> out;
  for (const CMat& k : k_basis(f)) out.push_back(to_natural(f, k));
  for (const CMat& p : p_basis(f)) out.push_back(kI * to_natural(f, p));
  return out;
}

// --- compound --------------------------------------------------------------------

CMat compound_matrix(const CMat& M, int p, int cap) {
  if (M.rows() != M.cols()) throw ShapeError("compound_matrix needs a square matrix");
  const int N = static_cast<int>(M.rows());
  if (p < 1 || p > N) throw RangeError("exterior degree outside [1, N]");
  if (N > 62) throw SizeError("compound_matrix supports N <= 62");
  const long long dim = binomial(N, p);
  if (dim > cap) throw SizeError("compound dimension C(N,p) exceeds the configured cap");

  std::vector<std::uint64_t> subsets;
  subsets.reserve(static_cast<std::size_t>(dim));
  std::vector<int> idx(static_cast<std::size_t>(p));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    subsets.push_back(mask);
    int k = p - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == N - p + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < p; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::unordered_map<std::uint64_t, Eigen::Index> position;
  position.reserve(subsets.size() * 2);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    position.emplace(subsets[i], static_cast<Eigen::Index>(i));

  CMat out = CMat::Zero(dim, dim);
  for (std::size_t col = 0; col < subsets.size(); ++col) {
    const std::uint64_t I = subsets[col];
    const auto c = static_cast<Eigen::Index>(col);
    for (int i = 0; i < N; ++i) {
      if (!((I >> i) & 1u)) continue;
      const std::uint64_t rest = I & ~(std::uint64_t{1} << i);
      out(c, c) += M(i, i);
      for (int j = 0; j < N; ++j) {
        if ((I >> j) & 1u) continue;
        const cplx v = M(j, i);
        if (v == cplx{0.0, 0.0}) continue;
        const int lo = std::min(i, j), hi = std::max(i, j);
        const std::uint64_t between =
            rest & (((std::uint64_t{1} << hi) - 1) & ~((std::uint64_t{1} << (lo + 1)) - 1));
        const double sign = std::popcount(between) % 2 == 0 ? 1.0 : -1.0;
        out(position.at(rest | (std::uint64_t{1} << j)), c) += sign * v;
      }
    }
  }
  return out;
}

// --- spin --------------------------------------------------------------------------

std::vector<CMat> gamma_matrices(int M) {
  if (M < 1) throw RangeError("gamma_matrices needs M >= 1");
  if (M > 14) throw SizeError("spinor dimension exceeds the cap");
  const int r = M / 2;
  CMat I2 = CMat::Identity(2, 2), X(2, 2), Y(2, 2), Z(2, 2);
  X << 0, 1, 1, 0;
  Y << 0, -kI, kI, 0;
  Z << 1, 0, 0, -1;
  auto chain = [&](int k, const CMat& site) {
    CMat out = CMat::Identity(1, 1);
    for (int s = 0; s < r; ++s) out = kron(out, s < k ? Z : (s == k ? site : I2));
    return out;
  };
  std::vector<CMat> gammas;
  for (int k = 0; k < r; ++k) {
    gammas.push_back(chain(k, X));
    gammas.push_back(chain(k, Y));
  }
  if (M % 2 == 1) gammas.push_back(chain(r, I2));  // Z on every site
  return gammas;
}

CMat spin_matrix(const CMat& X, RepKind variant, const std::vector<int>& slots) {
  if (X.rows() != X.cols()) throw ShapeError("spin_matrix needs a square matrix");
  const int M = static_cast<int>(X.rows());
  if (M < 1) throw ShapeError("spin_matrix needs M >= 1");
  if (M > 14) throw SizeError("spinor dimension exceeds the cap (M <= 14)");
  if (max_abs(X + X.transpose()) > 1e-10 * std::max(1.0, max_abs(X)))
    throw ShapeError("spin_matrix needs X^T + X = 0");
  if (variant == RepKind::Compound) throw RangeError("spin_matrix variant must be a spin kind");
  const bool half = variant != RepKind::Spin;
  if (half && M % 2 == 1) throw ShapeError("half-spin representations need even M");

  std::vector<int> s = slots;
  if (s.empty()) {
    s.resize(static_cast<std::size_t>(M));
    std::iota(s.begin(), s.end(), 0);
  }
  if (static_cast<int>(s.size()) != M) throw ShapeError("slot map has wrong length");
  {
    std::vector<int> check = s;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < M; ++i)
      if (check[static_cast<std::size_t>(i)] != i) throw ShapeError("slot map is not a permutation");
  }

  const std::vector<CMat> g = gamma_matrices(M);
  const Eigen::Index d = g.front().rows();
  CMat sigma = CMat::Zero(d, d);
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j) {
      const cplx v = X(i, j);
      if (v == cplx{0.0, 0.0}) continue;
      // distinct gammas anticommute, so [γ_a, γ_b] = 2 γ_a γ_b
      sigma += (0.5 * v) * (g[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] *
                            g[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])]);
    }
  if (!half) return sigma;

  const int r = M / 2;
  const int want = variant == RepKind::HalfSpinPlus ? 1 : -1;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index b = 0; b < d; ++b) {
    const int gamma = ((r + std::popcount(static_cast<std::uint64_t>(b))) % 2 == 0) ? 1 : -1;
    if (gamma == want) keep.push_back(b);
  }
  const auto h = static_cast<Eigen::Index>(keep.size());
  CMat out(h, h);
  for (Eigen::Index a = 0; a < h; ++a)
    for (Eigen::Index b = 0; b < h; ++b)
      out(a, b) = sigma(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
  return out;
}

// --- FundamentalRep ------------------------------------------------------------

FundamentalRep::FundamentalRep(const AlgebraFamily& family, RepTag tag)
    : family_(family), tag_(tag) {
  const int N = family.ambient_size();
  const int L = family.a_dim();
  weight_coeffs_ = Vec::Zero(L);
  switch (tag.kind) {
    case RepKind::Compound: {
      if (tag.p < 1 || tag.p > N) throw RangeError("exterior degree outside [1, N]");
      const long long d = binomial(N, tag.p);
      if (d > kCompoundCap) throw SizeError("compound dimension exceeds the cap");
      dim_ = static_cast<int>(d);
      for (int i = 0; i < L; ++i) {
        if (family.kind() == FamilyKind::SlH) weight_coeffs_(i) = std::clamp(tag.p - 2 * i, 0, 2);
        else weight_coeffs_(i) = i < tag.p ? 1.0 : 0.0;
      }
      substitute_ = family.kind() == FamilyKind::SoMN && N % 2 == 1 && tag.p == N / 2;
      break;
    }
    case RepKind::Spin:
    case RepKind::HalfSpinPlus:
    case RepKind::HalfSpinMinus: {
      if (family.kind() != FamilyKind::SoMN)
        throw RangeError("spin representations exist only for so_mn families");
      const bool half = tag.kind != RepKind::Spin;
      if (half != (N % 2 == 0))
        throw RangeError(half ? "half-spin representations need m+n even"
                              : "the spin representation needs m+n odd");
      if (N > 14) throw SizeError("spinor dimension exceeds the cap");
      const int r = N / 2;
      dim_ = 1 << (half ? r - 1 : r);
      weight_coeffs_.setConstant(0.5);
      if (tag.kind == RepKind::HalfSpinMinus && r == family.n()) weight_coeffs_(L - 1) = -0.5;
      slots_ = so_slots(family);
      break;
    }
  }
  tag_.p = tag.kind == RepKind::Compound ? tag.p : 0;
  gram_ = CMat::Identity(dim_, dim_);
  gram_sqrt_ = gram_;
  gram_isqrt_ = gram_;
  gram_identity_ = true;
  if (!compact_action_skew(*this, compact_basis(family))) set_gram(unitarize(*this));
}

CMat FundamentalRep::act_natural(const CMat& X) const {
  CMat base = tag_.kind == RepKind::Compound ? compound_matrix(X, tag_.p)
                                             : spin_matrix(X, tag_.kind, slots_);
  if (conj_) return *conj_ * base * *conj_inv_;
  return base;
}

CMat FundamentalRep::act(const PointP& y) const {
  if (!(y.family() == family_)) throw FamilyMismatch("point and representation families differ");
  return act_natural(natural_matrix(y));
}

CMat FundamentalRep::hermitian_image(const PointP& y) const {
  const CMat M = act(y);
  if (gram_identity_) return M;
  return gram_sqrt_ * M * gram_isqrt_;
}

void FundamentalRep::set_gram(CMat H) {
  Eigen::SelfAdjointEigenSolver<CMat> es(H);
  if (es.info() != Eigen::Success) throw ComputationError("Gram eigensolver failed");
  const Vec ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0) throw SolveError("Gram matrix is not positive definite");
  const CMat& V = es.eigenvectors();
  gram_sqrt_ = V * ev.cwiseSqrt().cast<cplx>().asDiagonal() * V.adjoint();
  gram_isqrt_ = V * ev.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() * V.adjoint();
  gram_identity_ = max_abs(H - CMat::Identity(dim_, dim_)) <= 1e-12;
  gram_ = std::move(H);
}

FundamentalRep FundamentalRep::conjugated(const CMat& S) const {
  if (S.rows() != dim_ || S.cols() != dim_) throw ShapeError("conjugator has wrong size");
  Eigen::FullPivLU<CMat> lu(S);
  if (!lu.isInvertible()) throw ShapeError("conjugator is singular");
  FundamentalRep out = *this;
  const CMat inner = conj_ ? *conj_ : CMat::Identity(dim_, dim_);
  const CMat inner_inv = conj_inv_ ? *conj_inv_ : CMat::Identity(dim_, dim_);
  out.conj_ = S * inner;
  out.conj_inv_ = inner_inv * lu.inverse();
  out.set_gram(unitarize(out));
  return out;
}

// --- unitarize -------------------------------------------------------------------

CMat unitarize(const FundamentalRep& rep) {
  const Eigen::Index d = rep.dim();
  if (d > kUnitarizeCap) throw SizeError("unitarize supports dimensions up to 32");
  const Eigen::Index P = d * d;
  Mat normal = Mat::Zero(P, P);
  for (const CMat& u : compact_basis(rep.family())) {
    const CMat F = rep.act_natural(u);
    const CMat Fa = F.adjoint();
    Mat A(P, P);
    Eigen::Index col = 0;
    auto add_column = [&](Eigen::Index a, Eigen::Index b, cplx w) {
      // B = w E_ab + conj(w) E_ba (plain w E_aa on the diagonal)
      CMat R = CMat::Zero(d, d);
      R.row(a) += w * F.row(b);
      R.col(b) += Fa.col(a) * w;
      if (a != b) {
        R.row(b) += std::conj(w) * F.row(a);
        R.col(a) += Fa.col(b) * std::conj(w);
      }
      A.col(col++) = hermitian_to_params(R);
    };
    for (Eigen::Index a = 0; a < d; ++a) add_column(a, a, 1.0);
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = a + 1; b < d; ++b) {
        add_column(a, b, 1.0);
        add_column(a, b, cplx{0.0, 1.0});
      }
    normal.selfadjointView<Eigen::Lower>().rankUpdate(A.transpose());
  }
  normal = normal.selfadjointView<Eigen::Lower>();
  Eigen::SelfAdjointEigenSolver<Mat> es(normal);
  if (es.info() != Eigen::Success) throw SolveError("eigensolver failed on the invariance system");
  const double top = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Vec target = Vec::Zero(P);
  target.head(d).setOnes();
  Vec h = Vec::Zero(P);
  int nullity = 0;
  for (Eigen::Index i = 0; i < P; ++i) {
    if (es.eigenvalues()(i) > 1e-9 * top) continue;
    const Vec v = es.eigenvectors().col(i);
    h += v.dot(target) * v;
    ++nullity;
  }
  if (nullity == 0) throw SolveError("no invariant Hermitian form exists");
  CMat H = params_to_hermitian(h, d);
  double tr = H.trace().real();
  if (std::abs(tr) < 1e-12) throw SolveError("invariant forms are orthogonal to the identity");
  if (tr < 0) {
    H = -H;
    tr = -tr;
  }
  H *= static_cast<double>(d) / tr;
  H = (H + H.adjoint()) / 2.0;
  const Vec ev = hermitian_eigenvalues(H);
  if (ev(ev.size() - 1) <= 1e-8 * ev(0)) throw SolveError("invariant form is not positive definite");
  return H;
}

// --- rep lists and evaluation ----------------------------------------------------

std::vector<FundamentalRep> fundamental_reps(const AlgebraFamily& f) {
  using Key = std::tuple<int, int, int, bool>;
  static std::mutex mutex;
  static std::map<Key, std::vector<FundamentalRep>> cache;
  const Key key{static_cast<int>(f.kind()), f.m(), f.n(), f.transposed()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<FundamentalRep> reps;
  const int N = f.ambient_size();
  if (f.kind() != FamilyKind::SoMN) {
    for (int p = 1; p < N; ++p) reps.emplace_back(f, RepTag::compound(p));
  } else if (N % 2 == 1) {
    for (int p = 1; p <= N / 2; ++p) reps.emplace_back(f, RepTag::compound(p));
    reps.emplace_back(f, RepTag::spin());
  } else {
    for (int p = 1; p <= N / 2 - 2; ++p) reps.emplace_back(f, RepTag::compound(p));
    reps.emplace_back(f, RepTag::half_spin_minus());
    reps.emplace_back(f, RepTag::half_spin_plus());
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(reps)).first->second;
}

RepTag weight_rep_tag(const AlgebraFamily& f, int index) {
  const int count = f.weyl_type() == WeylType::A ? f.ambient_size() - 1 : f.n();
  if (index < 0 || index >= count) throw RangeError("fundamental weight index out of range");
  switch (f.weyl_type()) {
    case WeylType::A: return RepTag::compound(index + 1);
    case WeylType::B:
      if (index < f.n() - 1) return RepTag::compound(index + 1);
      return f.ambient_size() % 2 == 1 ? RepTag::spin() : RepTag::half_spin_plus();
    case WeylType::D:
      if (index < f.n() - 2) return RepTag::compound(index + 1);
      return index == f.n() - 2 ? RepTag::half_spin_minus() : RepTag::half_spin_plus();
  }
  throw RangeError("unknown Weyl type");
}

double max_eigenvalue(const FundamentalRep& rep, const PointP& y) {
  return max_hermitian_eigenvalue(rep.hermitian_image(y));
}

Vec rep_eigenvalues(const FundamentalRep& rep, const PointP& y) {
  return hermitian_eigenvalues(rep.hermitian_image(y));
}

double highest_weight_value(const FundamentalRep& rep, const ChamberPoint& a) {
  if (!(a.family == rep.family())) throw FamilyMismatch("chamber point and representation families differ");
  return rep.weight_coeffs().dot(a.a);
}

}  // namespace orbitope
