// equidec: command-line front end.
//
// Exit status: 0 success, 1 domain error, 2 malformed input.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "equidec/acceptance.hpp"
#include "equidec/io.hpp"
#include "equidec/white.hpp"

namespace fs = std::filesystem;
using namespace equidec;

namespace {

int report_error(const Error& e) {
  std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
  return e.code() == ErrorCode::MalformedInput ? 2 : 1;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out_path, j);
}

int cmd_ehrhart(const std::string& path, bool relint, long kmax) {
  const Polytope p = polytope_from_json(read_json_file(path));
  const Mode mode = relint ? Mode::RelInt : Mode::Closed;
  const QuasiPolynomial qp = fit_quasipolynomial(p, mode);
  Json counts = Json::array();
  for (long k = 1; k <= kmax; ++k) counts.push_back(rational_to_json(Rat(count(p, Int(k), mode))));
  Json out = quasipolynomial_to_json(qp);
  out["mode"] = relint ? "relint" : "closed";
  out["counts"] = counts;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& out_path, const std::string& off_dir) {
  const Polytope p = polytope_from_json(read_json_file(path));
  const Decomposition d = decompose_polytope(p);
  const Json full = decomposition_to_json(d);
  if (!off_dir.empty()) {
    fs::create_directories(off_dir);
    std::size_t n = 0;
    for (const auto& piece : d.pieces) {
      if (piece.simplex.dim() != 3) continue;
      char name[32];
      std::snprintf(name, sizeof name, "piece_%05zu.off", n++);
      std::ofstream f(fs::path(off_dir) / name);
      write_off(f, piece.simplex);
    }
  }
  if (out_path.empty()) {
    std::cout << full.dump(2) << "\n";
  } else {
    write_json_file(out_path, full);
    std::cout << Json{{"pieces", d.pieces.size()}, {"type_vector", full["type_vector"]}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path) {
  const Simplex s = simplex_from_json(read_json_file(path));
  std::vector<Point> vs;
  for (const auto& v : s.vertices()) vs.push_back(embed(v, 3));
  std::cout << label(classify(Simplex(std::move(vs)))) << "\n";
  return 0;
}

int cmd_white(const std::string& path) {
  const Simplex t = simplex_from_json(read_json_file(path));
  const WhiteForm wf = white_normal_form(t);
  std::cout << Json{{"p", wf.p}, {"q", wf.q}, {"p_canonical", wf.p_canonical}, {"map", map_to_json(wf.map)}}.dump(2)
            << "\n";
  return 0;
}

int cmd_equidecompose(const std::string& a, const std::string& b, const std::string& out_path) {
  const Polytope p = polytope_from_json(read_json_file(a));
  const Polytope q = polytope_from_json(read_json_file(b));
  try {
    emit(certificate_to_json(equidecompose(p, q)), out_path);
  } catch (const NotEquivalentError& e) {
    std::cerr << Json{{"source", quasipolynomial_to_json(e.source())}, {"target", quasipolynomial_to_json(e.target())}}.dump(2)
              << "\n";
    throw;
  }
  return 0;
}

int cmd_verify(const std::string& a, const std::string& b, const std::string& cert_path, long depth) {
  const Polytope p = polytope_from_json(read_json_file(a));
  const Polytope q = polytope_from_json(read_json_file(b));
  const EquidecompCertificate cert = certificate_from_json(read_json_file(cert_path));
  const VerificationReport report = verify_certificate(p, q, cert, depth);
  std::cout << report_to_json(report).dump(2) << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_selftest() {
  const auto results = run_acceptance();
  print_acceptance_table(std::cout, results);
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart counting and unimodular equidecomposition of lattice 3-polytopes"};
  app.require_subcommand(1);

  std::string in_a, in_b, in_c, out_path, off_dir;
  bool relint = false;
  long kmax = 12;
  long depth = 4;

  auto* ehr = app.add_subcommand("ehrhart", "fit the Ehrhart quasipolynomial and list counts");
  ehr->add_option("polytope", in_a, "polytope JSON")->required();
  ehr->add_flag("--relint", relint, "count interior points");
  ehr->add_option("--kmax", kmax, "raw counts for k = 1..N")->check(CLI::Range(0L, 1000L));

  auto* dec = app.add_subcommand("decompose", "open half-unimodular decomposition");
  dec->add_option("polytope", in_a, "polytope JSON")->required();
  dec->add_option("--out", out_path, "write pieces here");
  dec->add_option("--off", off_dir, "directory for one OFF mesh per 3-piece");

  auto* cls = app.add_subcommand("classify", "type of a half-unimodular simplex");
  cls->add_option("simplex", in_a, "simplex JSON")->required();

  auto* wht = app.add_subcommand("white", "normal form T(p,q) of an empty tetrahedron");
  wht->add_option("tetrahedron", in_a, "simplex JSON")->required();

  auto* eqd = app.add_subcommand("equidecompose", "certificate between Ehrhart-equivalent polytopes");
  eqd->add_option("P", in_a, "polytope JSON")->required();
  eqd->add_option("Q", in_b, "polytope JSON")->required();
  eqd->add_option("--out", out_path, "write the certificate here");

  auto* ver = app.add_subcommand("verify", "check a certificate");
  ver->add_option("P", in_a, "polytope JSON")->required();
  ver->add_option("Q", in_b, "polytope JSON")->required();
  ver->add_option("certificate", in_c, "certificate JSON")->required();
  ver->add_option("--grid-depth", depth, "largest point-audit scale")->check(CLI::Range(1L, 64L));

  auto* self = app.add_subcommand("selftest", "run the fixture suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ehr) return cmd_ehrhart(in_a, relint, kmax);
    if (*dec) return cmd_decompose(in_a, out_path, off_dir);
    if (*cls) return cmd_classify(in_a);
    if (*wht) return cmd_white(in_a);
    if (*eqd) return cmd_equidecompose(in_a, in_b, out_path);
    if (*ver) return cmd_verify(in_a, in_b, in_c, depth);
    if (*self) return cmd_selftest();
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: INTERNAL: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
