#include "orbitope/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "orbitope/errors.hpp"

namespace orbitope {

namespace {

std::vector<double> parse_numbers(const std::string& text, const std::string& context) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    if (!item.empty() && item.front() == '+') item.erase(0, 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size())
      throw UsageError("cannot parse number '" + item + "' in " + context);
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Vec to_vec(const std::vector<double>& v) {
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

int parse_int(const std::string& text, const std::string& context) {
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw UsageError("cannot parse integer '" + text + "' in " + context);
  return v;
}

PointP from_diag(const AlgebraFamily& f, const Vec& d) {
  const int N = f.ambient_size();
  switch (f.kind()) {
    case FamilyKind::SlR: {
      if (d.size() != f.n()) throw ShapeError("diag: needs " + std::to_string(f.n()) + " entries");
      CMat X = CMat::Zero(N, N);
      X.diagonal() = d.cast<cplx>();
      return PointP::from_matrix(f, X);
    }
    case FamilyKind::SlH: {
      if (d.size() != f.m()) throw ShapeError("diag: needs " + std::to_string(f.m()) + " entries");
      CMat X = CMat::Zero(N, N);
      X.diagonal().head(f.m()) = d.cast<cplx>();
      X.diagonal().tail(f.m()) = d.cast<cplx>();
      return PointP::from_matrix(f, X);
    }
    case FamilyKind::SoMN: {
      if (d.size() != f.n()) throw ShapeError("sing:/diag: needs " + std::to_string(f.n()) + " entries");
      return embed_a(f, d);
    }
  }
  throw ShapeError("unknown family");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

CMat complex_from_json(const Json& j, int rows, int cols, const std::string& what) {
  if (!j.is_object() || !j.contains("re")) throw InputError(what + " must be an object with \"re\" and optional \"im\"");
  const Mat re = mat_from_json(j.at("re"));
  Mat im = Mat::Zero(re.rows(), re.cols());
  if (j.contains("im")) im = mat_from_json(j.at("im"));
  if (re.rows() != rows || re.cols() != cols || im.rows() != rows || im.cols() != cols)
    throw InputError(what + " has wrong shape");
  CMat out(rows, cols);
  out.real() = re;
  out.imag() = im;
  return out;
}

void write_json(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::null: os << "null"; break;
    case Json::value_t::boolean: os << (j.get<bool>() ? "true" : "false"); break;
    case Json::value_t::number_integer: os << j.get<std::int64_t>(); break;
    case Json::value_t::number_unsigned: os << j.get<std::uint64_t>(); break;
    case Json::value_t::number_float: os << format_double(j.get<double>()); break;
    case Json::value_t::string: os << j.dump(); break;
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        break;
      }
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_json(os, j[i], indent, depth + 1);
        }
        os << "]";
        break;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << pad;
        write_json(os, j[i], indent, depth + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << close << "]";
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        break;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << pad << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent, depth + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << close << "}";
      break;
    }
    default: os << "null"; break;
  }
}

}  // namespace

// --- families --------------------------------------------------------------------

AlgebraFamily parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("family must look like sl_r:3, so_mn:3,2 or sl_h:2");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (kind == "sl_r") return AlgebraFamily::sl_r(parse_int(args, "family"));
  if (kind == "sl_h") return AlgebraFamily::sl_h(parse_int(args, "family"));
  if (kind == "so_mn") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw UsageError("so_mn needs two parameters, e.g. so_mn:3,2");
    return AlgebraFamily::so_mn(parse_int(args.substr(0, comma), "family"),
                                parse_int(args.substr(comma + 1), "family"));
  }
  throw UsageError("unknown family kind '" + kind + "'");
}

Json family_to_json(const AlgebraFamily& f) {
  Json j;
  switch (f.kind()) {
    case FamilyKind::SlR:
      j["kind"] = "sl_r";
      j["n"] = f.n();
      break;
    case FamilyKind::SoMN:
      j["kind"] = "so_mn";
      j["m"] = f.transposed() ? f.n() : f.m();
      j["n"] = f.transposed() ? f.m() : f.n();
      break;
    case FamilyKind::SlH:
      j["kind"] = "sl_h";
      j["m"] = f.m();
      break;
  }
  return j;
}

AlgebraFamily family_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sl_r") return AlgebraFamily::sl_r(j.at("n").get<int>());
    if (kind == "so_mn") return AlgebraFamily::so_mn(j.at("m").get<int>(), j.at("n").get<int>());
    if (kind == "sl_h") return AlgebraFamily::sl_h(j.at("m").get<int>());
    throw InputError("unknown family kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid family object: ") + e.what());
  }
}

std::vector<int> user_coordinate_order(const AlgebraFamily& f) {
  std::vector<int> order(static_cast<std::size_t>(f.dim_p()));
  std::iota(order.begin(), order.end(), 0);
  if (f.kind() == FamilyKind::SoMN && f.transposed()) {
    const int mu = f.n(), nu = f.m();  // caller's shape
    for (int i = 0; i < mu; ++i)
      for (int j = 0; j < nu; ++j) order[static_cast<std::size_t>(i * nu + j)] = j * f.n() + i;
  }
  return order;
}

Vec to_user_coords(const AlgebraFamily& f, const Vec& internal) {
  const std::vector<int> order = user_coordinate_order(f);
  Vec out(internal.size());
  for (std::size_t u = 0; u < order.size(); ++u) out(static_cast<Eigen::Index>(u)) = internal(order[u]);
  return out;
}

Vec from_user_coords(const AlgebraFamily& f, const Vec& user) {
  if (user.size() != f.dim_p()) throw ShapeError("coordinate vector has wrong length for " + f.name());
  const std::vector<int> order = user_coordinate_order(f);
  Vec out(user.size());
  for (std::size_t u = 0; u < order.size(); ++u) out(order[u]) = user(static_cast<Eigen::Index>(u));
  return out;
}

// --- points ------------------------------------------------------------------------

PointP point_from_json(const AlgebraFamily& f, const Json& point) {
  if (!point.is_object()) throw InputError("point must be a JSON object");
  const std::vector<std::string> keys = [&] {
    switch (f.kind()) {
      case FamilyKind::SlR: return std::vector<std::string>{"X", "diag", "coords"};
      case FamilyKind::SoMN: return std::vector<std::string>{"B", "sing", "coords"};
      case FamilyKind::SlH: return std::vector<std::string>{"A", "diag", "coords"};
    }
    return std::vector<std::string>{};
  }();
  int present = 0;
  for (const std::string& k : keys) present += point.contains(k) ? 1 : 0;
  if (present != 1) throw InputError("point must contain exactly one of the keys allowed for " + f.name());
  try {
    if (point.contains("coords")) return PointP::from_coords(f, from_user_coords(f, vec_from_json(point.at("coords"))));
    if (point.contains("diag")) return from_diag(f, vec_from_json(point.at("diag")));
    if (point.contains("sing")) return from_diag(f, vec_from_json(point.at("sing")));
    const int N = f.ambient_size();
    if (f.kind() == FamilyKind::SlR) {
      const Mat X = mat_from_json(point.at("X"));
      if (X.rows() != N || X.cols() != N) throw InputError("X has wrong shape");
      return PointP::from_matrix(f, X.cast<cplx>());
    }
    if (f.kind() == FamilyKind::SoMN) {
      Mat B = mat_from_json(point.at("B"));
      if (f.transposed()) B.transposeInPlace();
      if (B.rows() != f.m() || B.cols() != f.n()) throw InputError("B has wrong shape");
      CMat X = CMat::Zero(N, N);
      X.topRightCorner(f.m(), f.n()) = B.cast<cplx>();
      X.bottomLeftCorner(f.n(), f.m()) = B.transpose().cast<cplx>();
      return PointP::from_matrix(f, X);
    }
    const int m = f.m();
    if (!point.contains("B")) throw InputError("sl_h point needs both A and B");
    const CMat A = complex_from_json(point.at("A"), m, m, "A");
    const CMat B = complex_from_json(point.at("B"), m, m, "B");
    CMat X(N, N);
    X << A, B, -B.conjugate(), A.conjugate();
    return PointP::from_matrix(f, X);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid point object: ") + e.what());
  }
}

Json point_to_json(const PointP& p) {
  const AlgebraFamily& f = p.family();
  const CMat& X = p.matrix();
  Json j;
  switch (f.kind()) {
    case FamilyKind::SlR: j["X"] = to_json(Mat(X.real())); break;
    case FamilyKind::SoMN: {
      Mat B = X.real().block(0, f.m(), f.m(), f.n());
      if (f.transposed()) B.transposeInPlace();
      j["B"] = to_json(B);
      break;
    }
    case FamilyKind::SlH:
      j["A"] = to_json(CMat(X.topLeftCorner(f.m(), f.m())));
      j["B"] = to_json(CMat(X.topRightCorner(f.m(), f.m())));
      break;
  }
  return j;
}

Json point_document(const PointP& p) {
  Json doc;
  doc["family"] = family_to_json(p.family());
  doc["point"] = point_to_json(p);
  return doc;
}

PointP read_point_document(const Json& doc) {
  if (!doc.is_object() || !doc.contains("family") || !doc.contains("point"))
    throw InputError("document needs \"family\" and \"point\"");
  return point_from_json(family_from_json(doc.at("family")), doc.at("point"));
}

PointP parse_point(const AlgebraFamily& f, const std::string& spec) {
  auto body = [&](std::size_t n) { return spec.substr(n); };
  if (spec.rfind("diag:", 0) == 0) return from_diag(f, to_vec(parse_numbers(body(5), "diag:")));
  if (spec.rfind("sing:", 0) == 0) {
    if (f.kind() != FamilyKind::SoMN) throw UsageError("sing: applies to so_mn families only");
    return from_diag(f, to_vec(parse_numbers(body(5), "sing:")));
  }
  if (spec.rfind("coords:", 0) == 0)
    return PointP::from_coords(f, from_user_coords(f, to_vec(parse_numbers(body(7), "coords:"))));
  if (!std::filesystem::exists(spec))
    throw UsageError("point '" + spec + "' is neither diag:/sing:/coords: nor an existing JSON file");
  const Json doc = read_json_file(spec);
  if (doc.contains("family")) {
    const AlgebraFamily declared = family_from_json(doc.at("family"));
    if (!(declared == f)) throw FamilyMismatch("file declares " + declared.name() + " but " + f.name() + " was requested");
  }
  return point_from_json(f, doc.contains("point") ? doc.at("point") : doc);
}

Mat parse_symmetric(int n, const std::string& spec) {
  Mat M;
  if (spec.rfind("diag:", 0) == 0) {
    const Vec d = to_vec(parse_numbers(spec.substr(5), "diag:"));
    if (d.size() != n) throw ShapeError("diag: needs " + std::to_string(n) + " entries");
    M = d.asDiagonal();
  } else {
    if (!std::filesystem::exists(spec)) throw UsageError("matrix '" + spec + "' is neither diag: nor a JSON file");
    const Json doc = read_json_file(spec);
    const Json& p = doc.contains("point") ? doc.at("point") : doc;
    if (!p.contains("X")) throw InputError("Schur-Horn input needs an \"X\" matrix");
    M = mat_from_json(p.at("X"));
  }
  if (M.rows() != n || M.cols() != n) throw ShapeError("matrix has wrong size");
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, M.cwiseAbs().maxCoeff()))
    throw ShapeError("matrix must be symmetric");
  return M;
}

// --- JSON scalars/matrices --------------------------------------------------------

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent, 0);
  return os.str();
}

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

Json to_json(const Mat& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const CMat& m) {
  Json j;
  j["re"] = to_json(Mat(m.real()));
  j["im"] = to_json(Mat(m.imag()));
  return j;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError("expected an array of numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix rows must have equal length");
    m.row(static_cast<Eigen::Index>(r)) = vec_from_json(j[r]).transpose();
  }
  return m;
}

// --- reports --------------------------------------------------------------------

Json to_json(const MembershipResult& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["margin"] = r.margin;
  j["tight_rep"] = r.tight_rep.label();
  j["tight_index"] = r.tight_index;
  j["weights_x"] = to_json(r.weights_x);
  j["weights_y"] = to_json(r.weights_y);
  return j;
}

Json to_json(const MomentumPolytope& poly) {
  Json j;
  j["family"] = family_to_json(poly.anchor.family);
  j["weyl_type"] = to_string(poly.anchor.family.weyl_type());
  j["anchor"] = to_json(poly.anchor.a);
  j["weights"] = to_json(fundamental_weight_values(poly.anchor));
  j["vertex_count"] = poly.vertices.size();
  Json verts = Json::array();
  for (const Vec& v : poly.vertices) verts.push_back(to_json(v));
  j["vertices"] = std::move(verts);
  Json gens = Json::array();
  for (const Vec& g : poly.cone_generators) gens.push_back(to_json(g));
  j["cone_generators"] = std::move(gens);
  return j;
}

Json faces_to_json(const MomentumPolytope& poly, const std::vector<FaceOrbit>& orbits, std::size_t face_count) {
  Json j;
  j["family"] = family_to_json(poly.anchor.family);
  j["anchor"] = to_json(poly.anchor.a);
  j["face_count"] = face_count;
  j["orbit_count"] = orbits.size();
  Json list = Json::array();
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const Face& f = orbits[i].representative;
    Json o;
    o["id"] = i;
    o["dim"] = f.dim;
    o["size"] = orbits[i].members.size();
    o["vertex_indices"] = f.vertices;
    Json verts = Json::array();
    for (int v : f.vertices) verts.push_back(to_json(poly.vertices[static_cast<std::size_t>(v)]));
    o["vertices"] = std::move(verts);
    o["functional"] = to_json(f.l);
    o["level"] = f.alpha;
    list.push_back(std::move(o));
  }
  j["orbits"] = std::move(list);
  return j;
}

Json to_json(const Theorem1Report& r) {
  Json j;
  j["samples"] = r.samples;
  j["passed"] = r.passed();
  j["orbit"] = {{"pass", r.orbit_pass}, {"fail", r.orbit_fail}, {"min_margin", r.orbit_min_margin}};
  j["convex"] = {{"pass", r.convex_pass}, {"fail", r.convex_fail}};
  j["lp_members"] = {{"tested", r.lp_probe_members}, {"rejected_by_sample_hull", r.lp_probe_rejected}};
  j["outside"] = {{"tested", r.outside_tested}, {"rejected", r.outside_rejected}};
  return j;
}

Json to_json(const KostantReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["passed"] = r.passed();
  j["cone"] = {{"pass", r.cone_pass}, {"fail", r.cone_fail}};
  j["weights"] = {{"pass", r.weight_pass}, {"fail", r.weight_fail}};
  j["lp"] = {{"pass", r.lp_pass}, {"fail", r.lp_fail}};
  j["surjectivity"] = {{"targets", r.targets},
                       {"best_distance_mean", r.best_distance_mean},
                       {"best_distance_max", r.best_distance_max},
                       {"vertex_witness_distance", r.vertex_witness_distance}};
  return j;
}

Json to_json(const CorrespondenceReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["face_count"] = r.face_count;
  j["orbit_count"] = r.orbit_count;
  j["failures"] = r.failures();
  Json clauses = Json::array();
  for (const ClauseTally& c : r.clauses)
    clauses.push_back({{"name", c.name}, {"pass", c.passed}, {"fail", c.failed}, {"notes", c.failures}});
  j["clauses"] = std::move(clauses);
  return j;
}

// --- pencils ------------------------------------------------------------------------

namespace {

bool has_imaginary(const LinearPencil& p) { return !p.is_real(0.0); }

}  // namespace

Json pencils_to_json(const PointP& x, const std::vector<LinearPencil>& pencils, bool with_matrices) {
  const AlgebraFamily& f = x.family();
  const std::vector<int> order = user_coordinate_order(f);
  Json j;
  j["family"] = family_to_json(f);
  j["anchor"] = to_json(chamber(x).a);
  j["variables"] = f.dim_p();
  Json blocks = Json::array();
  for (const LinearPencil& p : pencils) {
    Json b;
    b["rep"] = p.rep.label();
    b["dim"] = p.dim();
    b["constant"] = p.constant;
    b["complex"] = has_imaginary(p);
    b["sdpa_dim"] = has_imaginary(p) ? 2 * p.dim() : p.dim();
    if (with_matrices) {
      Json coeffs = Json::array();
      for (int k : order) coeffs.push_back(to_json(p.coeffs[static_cast<std::size_t>(k)]));
      b["coeffs"] = std::move(coeffs);
    }
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

void write_sdpa(std::ostream& os, const PointP& x, const std::vector<LinearPencil>& pencils) {
  const AlgebraFamily& f = x.family();
  const std::vector<int> order = user_coordinate_order(f);
  std::vector<Mat> constants;
  std::vector<std::vector<Mat>> coeffs;  // [block][variable]
  for (const LinearPencil& p : pencils) {
    const bool cplx_block = has_imaginary(p);
    constants.push_back(cplx_block ? Mat(-realify(p.C)) : Mat(-p.C.real()));
    std::vector<Mat> cs;
    for (int k : order) {
      const CMat& A = p.coeffs[static_cast<std::size_t>(k)];
      cs.push_back(cplx_block ? Mat(-realify(A)) : Mat(-A.real()));
    }
    coeffs.push_back(std::move(cs));
  }
  os << "\"orbitope pencils for " << f.name() << ":";
  for (const LinearPencil& p : pencils) os << " " << p.rep.label();
  os << "\"\n";
  os << f.dim_p() << "\n" << pencils.size() << "\n";
  for (std::size_t b = 0; b < constants.size(); ++b) os << (b ? " " : "") << constants[b].rows();
  os << "\n";
  for (int k = 0; k < f.dim_p(); ++k) os << (k ? " " : "") << format_double(0.0);
  os << "\n";
  auto emit = [&](int matno, std::size_t block, const Mat& M) {
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      for (Eigen::Index j = i; j < M.cols(); ++j)
        if (M(i, j) != 0.0)
          os << matno << " " << block + 1 << " " << i + 1 << " " << j + 1 << " " << format_double(M(i, j)) << "\n";
  };
  for (std::size_t b = 0; b < constants.size(); ++b) emit(0, b, constants[b]);
  for (int k = 0; k < f.dim_p(); ++k)
    for (std::size_t b = 0; b < coeffs.size(); ++b) emit(k + 1, b, coeffs[b][static_cast<std::size_t>(k)]);
}

SdpaProblem read_sdpa(std::istream& is) {
  std::string line;
  std::vector<std::string> tokens;
  bool header_done = false;
  SdpaProblem prob;
  int stage = 0;  // 0 mDIM, 1 nBLOCK, 2 block sizes, 3 c, 4 entries
  int nblock = 0;
  std::vector<double> cvals;
  auto tokenize = [](std::string s) {
    for (char& ch : s)
      if (ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == ',') ch = ' ';
    std::istringstream ss(s);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
  };
  auto num = [](const std::string& t) {
    try {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) throw InputError("bad number '" + t + "' in SDPA input");
      return v;
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + t + "' in SDPA input");
    }
  };
  while (std::getline(is, line)) {
    if (!header_done && (line.empty() || line[0] == '"' || line[0] == '*')) continue;
    header_done = true;
    const std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    std::size_t t = 0;
    while (t < toks.size()) {
      if (stage == 0) {
        prob.m = static_cast<int>(num(toks[t++]));
        stage = 1;
      } else if (stage == 1) {
        nblock = static_cast<int>(num(toks[t++]));
        stage = 2;
      } else if (stage == 2) {
        prob.block_sizes.push_back(static_cast<int>(num(toks[t++])));
        if (static_cast<int>(prob.block_sizes.size()) == nblock) {
          stage = 3;
          prob.F.assign(static_cast<std::size_t>(prob.m + 1), {});
          for (auto& mats : prob.F)
            for (int s : prob.block_sizes) mats.push_back(Mat::Zero(std::abs(s), std::abs(s)));
          if (prob.m == 0) stage = 4;
        }
      } else if (stage == 3) {
        cvals.push_back(num(toks[t++]));
        if (static_cast<int>(cvals.size()) == prob.m) stage = 4;
      } else {
        if (toks.size() - t < 5) throw InputError("SDPA entry line needs 5 fields");
        const int mat = static_cast<int>(num(toks[t])), blk = static_cast<int>(num(toks[t + 1]));
        const int i = static_cast<int>(num(toks[t + 2])), j = static_cast<int>(num(toks[t + 3]));
        const double v = num(toks[t + 4]);
        t += 5;
        if (mat < 0 || mat > prob.m || blk < 1 || blk > nblock) throw InputError("SDPA entry index out of range");
        Mat& M = prob.F[static_cast<std::size_t>(mat)][static_cast<std::size_t>(blk - 1)];
        if (i < 1 || j < 1 || i > M.rows() || j > M.rows()) throw InputError("SDPA entry index out of range");
        M(i - 1, j - 1) = v;
        M(j - 1, i - 1) = v;
      }
    }
  }
  if (stage < 4) throw InputError("truncated SDPA header");
  prob.c = to_vec(cvals);
  return prob;
}

void write_margins_csv(std::ostream& os, const Theorem1Report& r) {
  os << "index,margin\n";
  for (std::size_t i = 0; i < r.margins.size(); ++i) os << i << "," << format_double(r.margins[i]) << "\n";
}

Json verify_suite(const PointP& x, const SampleConfig& cfg, int face_trials) {
  Json j;
  j["family"] = family_to_json(x.family());
  j["point"] = point_to_json(x);
  j["anchor"] = to_json(chamber(x).a);
  j["seed"] = cfg.seed;
  j["samples"] = cfg.count;
  j["exp_scale"] = cfg.exp_scale;
  const Theorem1Report t1 = verify_theorem1(x, cfg);
  const KostantReport ko = verify_kostant(x, cfg);
  j["membership_suite"] = to_json(t1);
  j["kostant"] = to_json(ko);
  bool passed = t1.passed() && ko.passed();
  const AlgebraFamily& f = x.family();
  const ChamberPoint cp = chamber(x);
  if (f.restricted_rank() <= 4 && weyl_orbit_size(f, cp.a) <= 384) {
    const CorrespondenceReport fc = verify_correspondence(x, face_trials, cfg.seed);
    j["faces"] = to_json(fc);
    passed = passed && fc.failures() == 0;
  } else {
    j["faces"] = {{"skipped", "momentum polytope exceeds the face-enumeration limits"}};
  }
  j["passed"] = passed;
  return j;
}

}  // namespace orbitope
