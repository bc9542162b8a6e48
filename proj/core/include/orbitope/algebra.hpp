#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitope/linalg.hpp"

namespace orbitope {

enum class FamilyKind { SlR, SoMN, SlH };
enum class WeylType { A, B, D };

const char* to_string(WeylType t) noexcept;

/// One of the three classical real forms handled by the library:
///
///   sl_r(n)     sl_n(R),        K = SO(n),          𝔭 = traceless symmetric
///   so_mn(m,n)  so_{m,n}(R),    K = SO(m) x SO(n),  𝔭 = [[0,B],[B^T,0]]
///   sl_h(m)     sl_m(H) ⊂ gl_2m(C), K = Sp(m),      𝔭 = [[A,B],[-B̄,Ā]], A = A*, tr A = 0, B = -B^T
///
/// so_mn always stores m >= n; a family built from m < n records the swap so
/// serializers can present B in the caller's orientation.
class AlgebraFamily {
 public:
  static AlgebraFamily sl_r(int n);
  static AlgebraFamily so_mn(int m, int n);
  static AlgebraFamily sl_h(int m);

  FamilyKind kind() const noexcept { return kind_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  bool transposed() const noexcept { return transposed_; }

  int ambient_size() const noexcept;
  int restricted_rank() const noexcept;
  WeylType weyl_type() const noexcept;
  int dim_p() const noexcept;
  int dim_k() const noexcept;
  /// Length of the coordinate vector used for 𝔞 (n for sl_r, n for so_mn, m for sl_h).
  int a_dim() const noexcept;
  /// Rank of the complexified algebra (number of complex fundamental representations).
  int complex_rank() const noexcept;
  /// True for families whose 𝔞-coordinates are constrained to sum to zero.
  bool traceless_a() const noexcept { return kind_ != FamilyKind::SoMN; }

  std::string name() const;

  friend bool operator==(const AlgebraFamily&, const AlgebraFamily&) = default;

 private:
  AlgebraFamily(FamilyKind kind, int m, int n, bool transposed)
      : kind_(kind), m_(m), n_(n), transposed_(transposed) {}

  FamilyKind kind_;
  int m_;
  int n_;
  bool transposed_;
};

/// Fixed basis of 𝔭. Order: sl_r diagonal (E_ii - E_nn) then upper triangle
/// row-major; so_mn B entries row-major; sl_h A diagonal, A upper triangle
/// (re, im) pairs, B upper triangle (re, im) pairs.
std::vector<CMat> p_basis(const AlgebraFamily& family);
/// Fixed basis of 𝔨 (real span), used for sampling K and the compact form.
std::vector<CMat> k_basis(const AlgebraFamily& family);

/// Whether X lies in the real Lie algebra 𝔤 of the family.
bool in_algebra(const AlgebraFamily& family, const CMat& X, double tol = 1e-10);

/// Element of 𝔭: structured matrix plus coordinates over p_basis(family).
class PointP {
 public:
  static PointP from_coords(const AlgebraFamily& family, Vec coords);
  /// Validates the 𝔭-shape to `tol` (scaled by max(1, |X|)) and reads coordinates.
  static PointP from_matrix(const AlgebraFamily& family, const CMat& X, double tol = 1e-10);
  static PointP zero(const AlgebraFamily& family);

  const AlgebraFamily& family() const noexcept { return family_; }
  const CMat& matrix() const noexcept { return matrix_; }
  const Vec& coords() const noexcept { return coords_; }

  PointP operator+(const PointP& other) const;
  PointP operator-(const PointP& other) const;
  PointP operator*(double c) const;
  friend PointP operator*(double c, const PointP& p) { return p * c; }

 private:
  PointP(AlgebraFamily family, CMat matrix, Vec coords)
      : family_(family), matrix_(std::move(matrix)), coords_(std::move(coords)) {}

  AlgebraFamily family_;
  CMat matrix_;
  Vec coords_;
};

struct CartanParts {
  CMat k_part;
  PointP p_part;
};

/// Splits X ∈ 𝔤 into θ-eigenspace components (θ = -X^T resp. -X*).
CartanParts cartan_decompose(const CMat& X, const AlgebraFamily& family,
                             const Tolerances& tol = {});

/// Restricted-chamber coordinates of a point.
///   sl_r : full sorted spectrum (length n, sums to 0)
///   so_mn: singular values of B, descending; for m = n the last entry carries sign(det B)
///   sl_h : sorted diagonal D of the quaternionic diagonalization (length m, sums to 0)
struct ChamberPoint {
  AlgebraFamily family;
  Vec a;
  /// k with k · x · k^{-1} = embed_a(a); present when computed from a PointP.
  std::optional<CMat> witness;
};

ChamberPoint chamber(const PointP& x, const Tolerances& tol = {});

/// Moves an arbitrary 𝔞-vector into the closed chamber via the Weyl action.
Vec normalize_to_chamber(const AlgebraFamily& family, const Vec& z);
bool in_chamber(const AlgebraFamily& family, const Vec& a, double tol = 1e-9);
ChamberPoint make_chamber_point(const AlgebraFamily& family, const Vec& a,
                                double tol = 1e-9);

/// The 𝔞-vector z as an element of 𝔭 (diag(z), B = diag(z), diag(z, z)).
PointP embed_a(const AlgebraFamily& family, const Vec& z);

/// Orthogonal projection 𝔭 → 𝔞 for the trace form (diagonal extraction).
Vec kostant_project(const PointP& x);

/// Values λ_i(a) of the fundamental restricted weights at a chamber point.
/// A-types use the ambient spectrum (doubled for sl_h) and return N-1 values.
Vec fundamental_weight_values(const AlgebraFamily& family, const Vec& a,
                              double tol = 1e-9);
Vec fundamental_weight_values(const ChamberPoint& a, double tol = 1e-9);

/// Ambient spectrum of a chamber point: a itself for sl_r, each entry twice for
/// sl_h, ±a with zeros for so_mn.
Vec ambient_spectrum(const ChamberPoint& a);

/// Simple restricted roots as vectors in 𝔞-coordinates (standard dot product).
std::vector<Vec> simple_roots(const AlgebraFamily& family);

// --- Weyl group ------------------------------------------------------------

/// Signed permutation acting on 𝔞-coordinates: (σ z)_i = sign[i] * z[perm[i]].
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  Vec apply(const Vec& z) const;
  SignedPerm compose(const SignedPerm& inner) const;  // (this ∘ inner)
  SignedPerm inverse() const;
  static SignedPerm identity(int n);
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

std::size_t weyl_group_order(const AlgebraFamily& family);
/// All elements of W in a deterministic order. SizeError above `cap`.
std::vector<SignedPerm> weyl_group(const AlgebraFamily& family,
                                   std::size_t cap = kDefaultOrbitCap);

/// Distinct W-images of a chamber point, sorted lexicographically descending.
std::vector<Vec> weyl_orbit(const ChamberPoint& a, std::size_t cap = kDefaultOrbitCap);
std::size_t weyl_orbit_size(const AlgebraFamily& family, const Vec& a);

/// Element of K normalizing 𝔞 that acts on it as σ (signed permutation matrix lift).
CMat weyl_witness(const AlgebraFamily& family, const SignedPerm& sigma);

/// Ad_k · x = k x k^{-1} for k ∈ K (unitary, so k^{-1} = k*).
PointP adjoint(const CMat& k, const PointP& x);

}  // namespace orbitope
