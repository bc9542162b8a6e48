#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitope/faces.hpp"
#include "orbitope/harness.hpp"
#include "orbitope/orbitope.hpp"

namespace orbitope {

using Json = nlohmann::ordered_json;

/// "sl_r:3", "so_mn:3,2", "sl_h:2". UsageError on bad syntax.
AlgebraFamily parse_family(const std::string& spec);
/// {"kind": "so_mn", "m": 3, "n": 2}, in the caller's orientation.
Json family_to_json(const AlgebraFamily& family);
AlgebraFamily family_from_json(const Json& j);

/// Position in the internal coordinate vector of each user-facing coordinate.
/// so_mn families built with m < n list B entries in the caller's orientation.
std::vector<int> user_coordinate_order(const AlgebraFamily& family);
Vec to_user_coords(const AlgebraFamily& family, const Vec& internal);
Vec from_user_coords(const AlgebraFamily& family, const Vec& user);

/// Point mini-language: "diag:..", "sing:..", "coords:..", or a path to a JSON file.
PointP parse_point(const AlgebraFamily& family, const std::string& spec);
/// Real symmetric matrix for the Schur–Horn wrapper (no trace constraint):
/// "diag:.." or a JSON file with {"X": [[..]]}.
Mat parse_symmetric(int n, const std::string& spec);

PointP point_from_json(const AlgebraFamily& family, const Json& point);
Json point_to_json(const PointP& p);
/// {"family": .., "point": ..}
Json point_document(const PointP& p);
PointP read_point_document(const Json& doc);

std::string format_double(double v);
/// Deterministic serializer: floats as %.16e, scalar arrays on one line.
std::string dump_json(const Json& j, int indent = 2);

Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const CMat& m);  // {"re": .., "im": ..}
Vec vec_from_json(const Json& j);
Mat mat_from_json(const Json& j);

Json to_json(const MembershipResult& r);
Json to_json(const MomentumPolytope& poly);
Json faces_to_json(const MomentumPolytope& poly, const std::vector<FaceOrbit>& orbits,
                   std::size_t face_count);
Json to_json(const Theorem1Report& r);
Json to_json(const KostantReport& r);
Json to_json(const CorrespondenceReport& r);

/// Pencil summary (rep, dim, constant) with the coefficient matrices when requested.
Json pencils_to_json(const PointP& x, const std::vector<LinearPencil>& pencils, bool with_matrices);

/// SDPA sparse format: F_0 = −C, F_k = −A_k, so that Σ y_k F_k − F_0 ⪰ 0 is A(y) ⪰ 0.
/// Blocks with imaginary parts are written realified.
void write_sdpa(std::ostream& os, const PointP& x, const std::vector<LinearPencil>& pencils);

struct SdpaProblem {
  int m = 0;
  std::vector<int> block_sizes;
  Vec c;
  std::vector<std::vector<Mat>> F;  // F[matno][block], symmetric
};
SdpaProblem read_sdpa(std::istream& is);

void write_margins_csv(std::ostream& os, const Theorem1Report& r);

/// Orbit-membership, Kostant and face-correspondence suites as one JSON document.
Json verify_suite(const PointP& x, const SampleConfig& cfg, int face_trials);

}  // namespace orbitope
