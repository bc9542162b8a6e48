#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "common.hpp"
#include "orbitope/errors.hpp"
#include "orbitope/io.hpp"
#include "orbitope/orbitope.hpp"

using namespace orbitope;
using namespace testing_support;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orbitope");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("orbitope_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Io, ParseFamily) {
  EXPECT_EQ(parse_family("sl_r:3"), AlgebraFamily::sl_r(3));
  EXPECT_EQ(parse_family("so_mn:3,2"), AlgebraFamily::so_mn(3, 2));
  EXPECT_EQ(parse_family("sl_h:2"), AlgebraFamily::sl_h(2));
  EXPECT_THROW(parse_family("sl_q:3"), UsageError);
  EXPECT_THROW(parse_family("so_mn:3"), UsageError);
  EXPECT_THROW(parse_family("sl_r:x"), UsageError);
}

TEST(Io, ParsePointMiniLanguage) {
  const AlgebraFamily f = AlgebraFamily::so_mn(3, 2);
  EXPECT_LT((chamber(parse_point(f, "sing:2,1")).a - vec({2, 1})).norm(), 1e-15);
  const AlgebraFamily s = AlgebraFamily::sl_r(3);
  const PointP d = parse_point(s, "diag:2, -1, -1");
  EXPECT_EQ(d.matrix()(0, 0), cplx(2.0));
  EXPECT_EQ(parse_point(s, "coords:1,2,3,4,5").coords(), vec({1, 2, 3, 4, 5}));
  EXPECT_THROW(parse_point(s, "sing:1,0,-1"), UsageError);
  EXPECT_THROW(parse_point(s, "diag:1,,2"), UsageError);
  EXPECT_THROW(parse_point(s, "diag:1,0"), ShapeError);
  EXPECT_THROW(parse_point(s, "diag:1,1,1"), ShapeError);
  EXPECT_THROW(parse_point(s, "/nonexistent/point.json"), UsageError);
}

TEST(Io, TransposedSoUsesCallerOrientation) {
  const AlgebraFamily f = AlgebraFamily::so_mn(2, 3);
  Json p;
  p["B"] = Json::array({Json::array({0.0, 2.0, 0.3}), Json::array({1.0, 0.0, 0.0})});
  const PointP x = point_from_json(f, p);
  Mat Bt(3, 2);
  Bt << 0, 1, 2, 0, 0.3, 0;
  EXPECT_LT((chamber(x).a - oracle::singular_values(Bt)).norm(), 1e-12);
  EXPECT_EQ(point_to_json(x), p);
  // User coordinates are the caller's B read row-major.
  EXPECT_EQ(to_user_coords(f, x.coords()), vec({0, 2, 0.3, 1, 0, 0}));
  EXPECT_EQ(from_user_coords(f, to_user_coords(f, x.coords())), x.coords());
  EXPECT_EQ(family_to_json(f)["m"], 2);
}

TEST(Io, PointDocumentsRoundTrip) {
  for (const AlgebraFamily& f : wide_families()) {
    Rng rng = stream_rng(81, 0);
    const PointP x = random_point(f, rng);
    const Json doc = Json::parse(dump_json(point_document(x)));
    const PointP back = read_point_document(doc);
    EXPECT_EQ(back.family(), f);
    EXPECT_EQ(back.coords(), x.coords()) << f.name();
  }
}

TEST(Io, PointSchemaErrors) {
  const AlgebraFamily f = AlgebraFamily::sl_r(2);
  EXPECT_THROW(point_from_json(f, Json::parse(R"({"diag": [1, -1], "coords": [1, 0]})")), InputError);
  EXPECT_THROW(point_from_json(f, Json::parse(R"({})")), InputError);
  EXPECT_THROW(point_from_json(f, Json::parse(R"({"X": [[1, 2], [3]]})")), InputError);
  EXPECT_THROW(point_from_json(f, Json::parse(R"({"X": [[1, "a"], [0, -1]]})")), InputError);
  EXPECT_THROW(point_from_json(AlgebraFamily::sl_h(2), Json::parse(R"({"A": {"re": [[1, 0], [0, -1]]}})")), InputError);
  EXPECT_THROW(read_point_document(Json::parse(R"({"point": {}})")), InputError);
  EXPECT_THROW(family_from_json(Json::parse(R"({"kind": "so_mn", "m": 3})")), InputError);
}

TEST(Io, SlHJsonWithOptionalImaginaryPart) {
  const AlgebraFamily f = AlgebraFamily::sl_h(2);
  const Json p = Json::parse(R"({"A": {"re": [[1, 0], [0, -1]]}, "B": {"re": [[0, 0.5], [-0.5, 0]], "im": [[0, 0.25], [-0.25, 0]]}})");
  const PointP x = point_from_json(f, p);
  EXPECT_EQ(x.matrix()(0, 2), cplx(0, 0));
  EXPECT_EQ(x.matrix()(0, 3), cplx(0.5, 0.25));
  EXPECT_EQ(x.matrix()(2, 1), cplx(-0.5, 0.25));  // -conj(B(0,1))
}

TEST(Io, FloatFormatting) {
  EXPECT_EQ(format_double(1.0), "1.0000000000000000e+00");
  EXPECT_EQ(format_double(-0.0), "0.0000000000000000e+00");
  EXPECT_EQ(format_double(0.1), "1.0000000000000001e-01");
  EXPECT_EQ(format_double(std::nan("")), "null");
  Rng rng = stream_rng(82, 0);
  std::normal_distribution<double> g;
  for (int i = 0; i < 1000; ++i) {
    const double v = g(rng) * std::pow(10.0, (i % 40) - 20);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Io, JsonDumpShape) {
  Json j;
  j["b"] = Json::array({1.5, 2});
  j["a"] = {{"k", true}};
  EXPECT_EQ(dump_json(j), "{\n  \"b\": [1.5000000000000000e+00, 2],\n  \"a\": {\n    \"k\": true\n  }\n}");
}

TEST(Io, SdpaRoundTrip) {
  for (const PointP& x : {embed_a(AlgebraFamily::so_mn(3, 2), vec({2, 1})), sl_r_diag(vec({1, 0.25, -1.25}))}) {
    Rng rng = stream_rng(83, 0);
    const PointP xr = adjoint(random_k(x.family(), rng, 1.0), x);
    const auto pencils = build_pencils(xr);
    std::stringstream ss;
    write_sdpa(ss, xr, pencils);
    const SdpaProblem prob = read_sdpa(ss);
    ASSERT_EQ(prob.m, xr.family().dim_p());
    ASSERT_EQ(prob.block_sizes.size(), pencils.size());
    for (std::size_t b = 0; b < pencils.size(); ++b) {
      const bool real = pencils[b].is_real(0.0);
      const Mat C = real ? Mat(pencils[b].C.real()) : realify(pencils[b].C);
      EXPECT_EQ(prob.block_sizes[b], C.rows());
      EXPECT_LE((prob.F[0][b] + C).cwiseAbs().maxCoeff(), 1e-15);
      for (int k = 0; k < prob.m; ++k) {
        const CMat& A = pencils[b].coeffs[static_cast<std::size_t>(k)];
        const Mat Ar = real ? Mat(A.real()) : realify(A);
        EXPECT_LE((prob.F[static_cast<std::size_t>(k) + 1][b] + Ar).cwiseAbs().maxCoeff(), 1e-15);
      }
    }
  }
}

TEST(Io, SdpaRejectsGarbage) {
  std::stringstream truncated("\"c\"\n2\n1\n");
  EXPECT_THROW(read_sdpa(truncated), InputError);
  std::stringstream bad("2\n1\n2\n0 0\n0 1 3 1 1.0\n");
  EXPECT_THROW(read_sdpa(bad), InputError);
}

TEST(Cli, MemberExample) {
  const CliResult r = run_cli({"member", "--family", "sl_r:3", "--x", "diag:2,-1,-1", "--y", "diag:1,0,-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_EQ(j["margin"].get<double>(), 0.0);
  EXPECT_EQ(j["tight_rep"], "wedge2");
  EXPECT_EQ(j["weights_x"][0].get<double>() - j["weights_y"][0].get<double>(), 1.0);
}

TEST(Cli, PencilExample) {
  const auto sdpa = temp_path("pencil.dat-s"), js = temp_path("pencil.json");
  const CliResult r = run_cli({"pencil", "--family", "so_mn:3,2", "--x", "sing:2,1", "--sdpa", sdpa.string(), "--json", js.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["blocks"].size(), 3u);
  const int dims[] = {5, 10, 4};
  const double constants[] = {2, 3, 1.5};
  for (int b = 0; b < 3; ++b) {
    EXPECT_EQ(j["blocks"][b]["dim"], dims[b]);
    EXPECT_NEAR(j["blocks"][b]["constant"].get<double>(), constants[b], 1e-12);
  }
  EXPECT_FALSE(j["blocks"][0].contains("coeffs"));
  EXPECT_EQ(Json::parse(slurp(js))["blocks"][0]["coeffs"].size(), 6u);
  std::ifstream in(sdpa);
  EXPECT_EQ(read_sdpa(in).block_sizes, (std::vector<int>{10, 20, 4}));
}

TEST(Cli, MemberVerdictMatchesEmittedPencil) {
  const auto sdpa = temp_path("feasible.dat-s");
  ASSERT_EQ(run_cli({"pencil", "--family", "so_mn:3,2", "--x", "sing:2,1", "--sdpa", sdpa.string()}).code, 0);
  std::ifstream in(sdpa);
  const SdpaProblem prob = read_sdpa(in);
  const AlgebraFamily f = AlgebraFamily::so_mn(3, 2);
  Rng rng = stream_rng(84, 0);
  for (int t = 0; t < 50; ++t) {
    const PointP y = random_point(f, rng, 0.9);
    std::ostringstream spec;
    spec << "coords:";
    for (Eigen::Index k = 0; k < y.coords().size(); ++k) spec << (k ? "," : "") << format_double(y.coords()(k));
    const CliResult r = run_cli({"member", "--family", "so_mn:3,2", "--x", "sing:2,1", "--y", spec.str()});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    double least = 1e300;
    for (std::size_t b = 0; b < prob.block_sizes.size(); ++b) {
      Mat S = -prob.F[0][b];
      for (int k = 0; k < prob.m; ++k) S += y.coords()(k) * prob.F[static_cast<std::size_t>(k) + 1][b];
      least = std::min(least, oracle::jacobi_eigenvalues(S).minCoeff());
    }
    if (std::abs(j["margin"].get<double>()) > 1e-6) EXPECT_EQ(j["verdict"].get<bool>(), least >= -1e-7);
  }
}

TEST(Cli, PolytopeExample) {
  const CliResult r = run_cli({"polytope", "--family", "so_mn:2,2", "--x", "sing:1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["vertices"].size(), 2u);
  EXPECT_EQ(j["vertices"][0], Json::array({1.0, 1.0}));
  EXPECT_EQ(j["vertices"][1], Json::array({-1.0, -1.0}));
  EXPECT_EQ(j["weyl_type"], "D");
}

TEST(Cli, FacesReport) {
  const CliResult r = run_cli({"faces", "--family", "sl_r:3", "--x", "diag:1,0,-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["face_count"], 13);
  EXPECT_EQ(j["orbit_count"], 4);
}

TEST(Cli, JsonPointFile) {
  const auto path = temp_path("point.json");
  {
    std::ofstream os(path);
    os << R"({"family": {"kind": "so_mn", "m": 3, "n": 2}, "point": {"B": [[0, 2], [1, 0], [0, 0]]}})";
  }
  const CliResult r = run_cli({"polytope", "--family", "so_mn:3,2", "--x", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["anchor"], Json::array({2.0, 1.0}));
  const CliResult mismatch = run_cli({"polytope", "--family", "so_mn:4,2", "--x", path.string()});
  EXPECT_EQ(mismatch.code, 1);
  EXPECT_EQ(Json::parse(mismatch.err)["error"], "FamilyMismatch");
}

TEST(Cli, VerifyIsDeterministicAndWritesCsv) {
  const auto out1 = temp_path("v1.json"), out2 = temp_path("v2.json"), csv = temp_path("m.csv");
  const std::vector<std::string> base = {"verify", "--family", "so_mn:2,2", "--x", "sing:2,1", "--seed", "5",
                                         "--samples", "200", "--trials", "30"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", out1.string(), "--csv", csv.string()});
  b.insert(b.end(), {"--out", out2.string()});
  ASSERT_EQ(run_cli(a).code, 0);
  ASSERT_EQ(run_cli(b).code, 0);
  EXPECT_EQ(slurp(out1), slurp(out2));
  EXPECT_TRUE(Json::parse(slurp(out1))["passed"].get<bool>());
  std::istringstream lines(slurp(csv));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 201);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"member", "--family", "sl_r:3"}).code, 2);
  EXPECT_EQ(run_cli({"polytope", "--family", "sl_q:3", "--x", "diag:1,0,-1"}).code, 2);
  EXPECT_EQ(run_cli({"polytope", "--family", "sl_r:3", "--x", "diag:1,zero,-1"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  const CliResult dom = run_cli({"polytope", "--family", "sl_r:3", "--x", "diag:1,1,1"});
  EXPECT_EQ(dom.code, 1);
  const Json e = Json::parse(dom.err);
  EXPECT_EQ(e["error"], "ShapeError");
  EXPECT_TRUE(e.contains("message"));
  const CliResult size = run_cli({"faces", "--family", "sl_r:6", "--x", "diag:5,3,1,-1,-3,-5"});
  EXPECT_EQ(size.code, 1);
  EXPECT_EQ(Json::parse(size.err)["error"], "SizeError");
}

TEST(Cli, CenteredSchurHorn) {
  const CliResult r = run_cli({"member", "--family", "sl_r:3", "--x", "diag:5,3,1", "--y", "diag:4,3,2", "--center"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_TRUE(j["trace_match"].get<bool>());
  EXPECT_EQ(run_cli({"member", "--family", "so_mn:3,2", "--x", "sing:2,1", "--y", "sing:1,1", "--center"}).code, 2);
}
