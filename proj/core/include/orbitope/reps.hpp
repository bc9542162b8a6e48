#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitope/algebra.hpp"

namespace orbitope {

enum class RepKind { Compound, Spin, HalfSpinPlus, HalfSpinMinus };

struct RepTag {
  RepKind kind = RepKind::Compound;
  int p = 1;  // exterior degree, meaningful for Compound only

  static RepTag compound(int p) { return {RepKind::Compound, p}; }
  static RepTag spin() { return {RepKind::Spin, 0}; }
  static RepTag half_spin_plus() { return {RepKind::HalfSpinPlus, 0}; }
  static RepTag half_spin_minus() { return {RepKind::HalfSpinMinus, 0}; }

  /// "wedge2", "spin", "halfspin+", "halfspin-".
  std::string label() const;
  static RepTag parse(const std::string& label);
  friend bool operator==(const RepTag&, const RepTag&) = default;
};

inline constexpr int kCompoundCap = 4096;
inline constexpr int kSpinorCap = 128;
inline constexpr int kUnitarizeCap = 32;

/// Complex representation of 𝔤^ℂ realized by matrices, together with a Gram
/// matrix H for which the compact form 𝔨 ⊕ i𝔭 acts skew-adjointly.
class FundamentalRep {
 public:
  FundamentalRep(const AlgebraFamily& family, RepTag tag);

  const AlgebraFamily& family() const noexcept { return family_; }
  const RepTag& tag() const noexcept { return tag_; }
  std::string label() const { return tag_.label(); }
  int dim() const noexcept { return dim_; }
  /// Highest weight as coefficients over the 𝔞-coordinates of a chamber point.
  const Vec& weight_coeffs() const noexcept { return weight_coeffs_; }
  const CMat& gram() const noexcept { return gram_; }
  bool gram_is_identity() const noexcept { return gram_identity_; }
  /// ⋀^r on B-type families, kept alongside the spin representation.
  bool is_substitute() const noexcept { return substitute_; }

  /// Image of an element of 𝔤^ℂ given in the natural (complexified) realization.
  CMat act_natural(const CMat& X) const;
  CMat act(const PointP& y) const;

  /// φ'(X) = S φ(X) S⁻¹ with a freshly solved Gram matrix.
  FundamentalRep conjugated(const CMat& S) const;

  /// Hermitian matrix similar to act(y): H^{1/2} φ(y) H^{-1/2}.
  CMat hermitian_image(const PointP& y) const;

 private:
  void set_gram(CMat H);

  AlgebraFamily family_;
  RepTag tag_;
  int dim_ = 0;
  Vec weight_coeffs_;
  bool substitute_ = false;
  std::vector<int> slots_;
  std::optional<CMat> conj_;
  std::optional<CMat> conj_inv_;
  CMat gram_;
  CMat gram_sqrt_;
  CMat gram_isqrt_;
  bool gram_identity_ = true;
};

/// Fundamental representations in weight order (see weight_rep_tag):
///   sl_r(n):  ⋀^1 .. ⋀^{n-1}
///   sl_h(m):  ⋀^1 .. ⋀^{2m-1}
///   so_mn, N = m+n odd:  ⋀^1 .. ⋀^r, spin   (⋀^r flagged as substitute)
///   so_mn, N even:       ⋀^1 .. ⋀^{r-2}, halfspin-, halfspin+
std::vector<FundamentalRep> fundamental_reps(const AlgebraFamily& family);

/// Representation whose top eigenvalue is the i-th entry of fundamental_weight_values.
RepTag weight_rep_tag(const AlgebraFamily& family, int index);

/// φ_1: 𝔤 → natural complex realization (J X J⁻¹ for so_mn, identity otherwise).
CMat to_natural(const AlgebraFamily& family, const CMat& X);
CMat natural_matrix(const PointP& y);

/// Basis of the compact real form 𝔨 ⊕ i𝔭 in the natural realization.
std::vector<CMat> compact_basis(const AlgebraFamily& family);

/// Additive p-th compound over lexicographically ordered p-subsets.
CMat compound_matrix(const CMat& M, int p, int cap = kCompoundCap);

/// Hermitian Jordan–Wigner gamma matrices γ_1..γ_M of size 2^{⌊M/2⌋}.
std::vector<CMat> gamma_matrices(int M);

/// σ(X) = ¼ Σ_{i<j} X_ij [γ_s(i), γ_s(j)] where s is `slots` (identity if empty).
/// Half-spin variants restrict to the (−1)^r Z⊗…⊗Z = ±1 eigenspaces (M even).
CMat spin_matrix(const CMat& X, RepKind variant, const std::vector<int>& slots = {});

/// Gram matrix H ≻ 0 with H φ(u) + φ(u)* H = 0 on compact_basis, trace normalized to dim.
CMat unitarize(const FundamentalRep& rep);

/// Largest eigenvalue of φ(y) in the H-inner product.
double max_eigenvalue(const FundamentalRep& rep, const PointP& y);
/// Full spectrum of φ(y), descending.
Vec rep_eigenvalues(const FundamentalRep& rep, const PointP& y);

/// weight_coeffs · a, the top eigenvalue predicted by the highest weight.
double highest_weight_value(const FundamentalRep& rep, const ChamberPoint& a);

}  // namespace orbitope
