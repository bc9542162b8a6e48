#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>

#include "orbitope/errors.hpp"
#include "orbitope/faces.hpp"
#include "orbitope/harness.hpp"
#include "orbitope/io.hpp"
#include "orbitope/orbitope.hpp"

namespace orbitope::cli {

namespace {

constexpr const char* kPointHelp =
    "Point: diag:a,b,... (diagonal entries; for so_mn a signed diagonal of B), "
    "sing:s1,s2,... (so_mn singular values), coords:c1,c2,... (p-basis coordinates) "
    "or a path to a JSON point document";

struct Common {
  std::string family;
  std::string x;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.family, "sl_r:N, so_mn:M,N or sl_h:M")->required();
  sub->add_option("--x", c.x, kPointHelp)->required();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write '" + path + "'");
  return os;
}

void emit(std::ostream& out, const Json& j) { out << dump_json(j) << "\n"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrahedral descriptions and membership tests for polar orbitopes"};
  app.require_subcommand(1);
  app.footer(kPointHelp);

  Common common;

  auto* pencil = app.add_subcommand("pencil", "emit one linear matrix inequality per fundamental representation");
  add_common(pencil, common);
  std::string sdpa_path, json_path;
  bool with_matrices = false;
  pencil->add_option("--sdpa", sdpa_path, "write the pencils in SDPA sparse format (.dat-s)");
  pencil->add_option("--json", json_path, "write the pencils as JSON");
  pencil->add_flag("--matrices", with_matrices, "include coefficient matrices in JSON output");

  auto* memb = app.add_subcommand("member", "test whether y lies in the orbitope of x");
  add_common(memb, common);
  std::string y_spec;
  double tol = Tolerances{}.membership;
  bool center = false, matrix_check = false;
  memb->add_option("--y", y_spec, "query point, same syntax as --x")->required();
  memb->add_option("--tol", tol, "margin threshold")->check(CLI::NonNegativeNumber);
  memb->add_flag("--center", center, "sl_r only: accept arbitrary symmetric matrices and compare after removing the trace");
  memb->add_flag("--matrix-check", matrix_check, "cross-check weight formulas against representation eigenvalues");

  auto* poly = app.add_subcommand("polytope", "print the momentum polytope conv(W.x)");
  add_common(poly, common);

  auto* faces = app.add_subcommand("faces", "print face-orbit representatives of the momentum polytope");
  add_common(faces, common);

  auto* verify = app.add_subcommand("verify", "run the sampling verification suites");
  add_common(verify, common);
  SampleConfig cfg;
  int trials = 200;
  std::string out_path, csv_path;
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--samples", cfg.count, "orbit samples")->check(CLI::PositiveNumber);
  verify->add_option("--exp-scale", cfg.exp_scale, "spread of random compact-algebra elements")->check(CLI::PositiveNumber);
  verify->add_option("--trials", trials, "face-correspondence trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");
  verify->add_option("--csv", csv_path, "write per-sample orbit margins as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const AlgebraFamily family = parse_family(common.family);

    if (memb->parsed() && center) {
      if (family.kind() != FamilyKind::SlR) throw UsageError("--center applies to sl_r families only");
      MembershipOptions opts;
      opts.tol.membership = tol;
      opts.matrix_check = matrix_check || kMatrixCheckDefault;
      const SchurHornResult r = schur_horn_member(parse_symmetric(family.n(), common.x),
                                                  parse_symmetric(family.n(), y_spec), opts);
      Json j;
      j["verdict"] = r.verdict;
      j["margin"] = r.margin;
      j["trace_match"] = r.trace_match;
      j["shift_x"] = r.shift_x;
      j["shift_y"] = r.shift_y;
      emit(out, j);
      return 0;
    }

    const PointP x = parse_point(family, common.x);

    if (pencil->parsed()) {
      const std::vector<LinearPencil> pencils = build_pencils(x);
      if (!sdpa_path.empty()) {
        std::ofstream os = open_output(sdpa_path);
        write_sdpa(os, x, pencils);
      }
      if (!json_path.empty()) {
        std::ofstream os = open_output(json_path);
        emit(os, pencils_to_json(x, pencils, true));
      }
      emit(out, pencils_to_json(x, pencils, with_matrices));
    } else if (memb->parsed()) {
      MembershipOptions opts;
      opts.tol.membership = tol;
      opts.matrix_check = matrix_check || kMatrixCheckDefault;
      const PointP y = parse_point(family, y_spec);
      emit(out, to_json(member(x, y, opts)));
    } else if (poly->parsed()) {
      emit(out, to_json(momentum_polytope(x)));
    } else if (faces->parsed()) {
      const MomentumPolytope mp = momentum_polytope(x);
      const std::vector<Face> all = enumerate_faces(mp);
      emit(out, faces_to_json(mp, face_orbits(mp, all), all.size()));
    } else if (verify->parsed()) {
      validate(cfg);
      const Json report = verify_suite(x, cfg, trials);
      if (!csv_path.empty()) {
        std::ofstream os = open_output(csv_path);
        write_margins_csv(os, verify_theorem1(x, cfg));
      }
      if (out_path.empty()) {
        emit(out, report);
      } else {
        std::ofstream os = open_output(out_path);
        emit(os, report);
      }
      if (!report.at("passed").get<bool>()) {
        err << Json{{"error", "VerificationFailed"}, {"message", "one or more verification clauses failed"}}.dump() << "\n";
        return 1;
      }
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    Json j;
    j["error"] = e.kind();
    j["message"] = e.what();
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace orbitope::cli
