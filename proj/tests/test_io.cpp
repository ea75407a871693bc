#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "equidec/acceptance.hpp"
#include "equidec/io.hpp"
#include "equidec/white.hpp"

using namespace equidec;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.push_back(Rat(x));
  return p;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::DegenerateInput;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(rational_to_json(Rat(3)) == Json(3));
  CHECK(rational_to_json(Rat(-3, 4)) == Json("-3/4"));
  CHECK(rational_from_json(Json("-3/4")) == Rat(-3, 4));
  CHECK(rational_from_json(Json("5")) == 5);
  CHECK(rational_from_json(Json(-7)) == -7);
  const Int big("123456789012345678901234567890");
  CHECK(rational_from_json(rational_to_json(Rat(big))) == Rat(big));
  for (const char* bad : {"2/4", "1/0", "a/b", "1.5", "", "1/-2", "3/"})
    CHECK(code_of([&] { rational_from_json(Json(bad)); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { rational_from_json(Json(1.5)); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { rational_from_json(Json::array()); }) == ErrorCode::MalformedInput);
}

TEST_CASE("polytope and simplex round trips") {
  for (const Polytope& p : {pair_polytope(), rational_triangle(), interval(Rat(1, 5), Rat(6, 5))}) {
    const Json j = polytope_to_json(p);
    CHECK(polytope_from_json(j) == p);
    CHECK(polytope_from_json(Json::parse(j.dump())) == p);
  }
  const Simplex t = white_tetrahedron(7, 12);
  CHECK(simplex_from_json(simplex_to_json(t)) == t);
  CHECK(code_of([] { simplex_from_json(Json::parse(R"({"dim":2,"vertices":[[0,0],[1,1],[2,2]]})")); }) ==
        ErrorCode::MalformedInput);
}

TEST_CASE("malformed polytope files") {
  const char* bad[] = {
      R"([])",
      R"({"vertices":[[0]]})",
      R"({"dim":4,"vertices":[[0,0,0,0]]})",
      R"({"dim":0,"vertices":[[0]]})",
      R"({"dim":"3","vertices":[[0,0,0]]})",
      R"({"dim":2,"vertices":[]})",
      R"({"dim":2,"vertices":[[0,0],[1]]})",
      R"({"dim":2,"vertices":[[0,0],[1,"2/4"]]})",
      R"({"dim":2,"vertices":[[0,0],[1,null]]})",
      R"({"dim":2,"vertices":"none"})",
  };
  for (const char* s : bad) CHECK(code_of([&] { polytope_from_json(Json::parse(s)); }) == ErrorCode::MalformedInput);
}

TEST_CASE("quasipolynomials") {
  const QuasiPolynomial q(5, {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}});
  const Json j = quasipolynomial_to_json(q);
  CHECK(j["period"] == 5);
  CHECK(quasipolynomial_from_json(j) == q);
  CHECK(quasipolynomial_to_json(QuasiPolynomial(1, {{Rat(1), Rat(1)}}))["text"] == "k + 1");
  CHECK(code_of([] { quasipolynomial_from_json(Json::parse(R"({"period":2,"rows":[[1]]})")); }) ==
        ErrorCode::MalformedInput);
}

TEST_CASE("type vectors") {
  TypeVector f;
  f[SimplexType::D3_1] = 8;
  f[SimplexType::D1_0] = 3;
  CHECK(type_vector_from_json(type_vector_to_json(f)) == f);
  CHECK(code_of([] { type_vector_from_json(Json::parse(R"({"D9^9":1})")); }) == ErrorCode::MalformedInput);
}

TEST_CASE("certificates round trip and single-field mutations are rejected") {
  const Polytope p = Polytope::from_points({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 2})});
  const Polytope q = Polytope::from_points({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  const EquidecompCertificate cert = equidecompose(p, q);
  const Json j = certificate_to_json(cert);
  CHECK(j["schema"] == kCertificateSchema);
  const EquidecompCertificate back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back == cert);
  CHECK(verify_certificate(p, q, back).ok());

  std::mt19937 rng(89);
  std::uniform_int_distribution<std::size_t> pick_pair(0, cert.pairs.size() - 1);
  std::uniform_int_distribution<int> pick_field(0, 4), pick3(0, 2), delta(1, 3);
  const char* labels[] = {"D0^1", "D1^1", "D2^1", "D3^1", "D0^0", "D1^0", "D2^0"};
  int rejected = 0, tried = 0;
  for (int n = 0; n < 60; ++n) {
    Json m = j;
    Json& pair = m["pairs"][pick_pair(rng)];
    const int field = pick_field(rng);
    const Rat d(delta(rng), 2);
    auto bump = [&](Json& x) { x = rational_to_json(rational_from_json(x) + d); };
    switch (field) {
      case 0: bump(pair["piece"][pick3(rng) % pair["piece"].size()][pick3(rng)]); break;
      case 1: bump(pair["image"][pick3(rng) % pair["image"].size()][pick3(rng)]); break;
      case 2: bump(pair["linear"][pick3(rng)][pick3(rng)]); break;
      case 3: bump(pair["translation"][pick3(rng)]); break;
      case 4: {
        std::string now = pair["type"];
        std::string next = now;
        while (next == now) next = labels[std::uniform_int_distribution<int>(0, 6)(rng)];
        pair["type"] = next;
        break;
      }
    }
    ++tried;
    EquidecompCertificate c;
    try {
      c = certificate_from_json(m);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedInput);
      ++rejected;
      continue;
    }
    if (!verify_certificate(p, q, c, 2).ok()) ++rejected;
    else
      INFO("mutation " << n << " field " << field << " accepted");
  }
  CHECK(rejected == tried);
}

TEST_CASE("malformed certificates") {
  CHECK(code_of([] { certificate_from_json(Json::parse(R"({"schema":"other/1","pairs":[]})")); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { certificate_from_json(Json::parse(R"({"schema":"equidec-certificate/1"})")); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] {
          certificate_from_json(Json::parse(
              R"({"schema":"equidec-certificate/1","type_vector":{"source":{},"target":{}},"pairs":[{"type":"D0^1"}]})"));
        }) == ErrorCode::MalformedInput);
}

TEST_CASE("report") {
  VerificationReport r;
  r.checks.push_back({"volume", true, "ok"});
  r.checks.push_back({"images", false, "pair 3"});
  const Json j = report_to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["detail"] == "pair 3");
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "equidec_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "p.json").string();
  write_json_file(path, polytope_to_json(pair_polytope_prime()));
  CHECK(polytope_from_json(read_json_file(path)) == pair_polytope_prime());
  CHECK(code_of([&] { read_json_file((dir / "missing.json").string()); }) == ErrorCode::MalformedInput);
  {
    std::ofstream f(dir / "broken.json");
    f << "{\"dim\": 3, ";
  }
  CHECK(code_of([&] { read_json_file((dir / "broken.json").string()); }) == ErrorCode::MalformedInput);
  std::filesystem::remove_all(dir);
}

TEST_CASE("OFF export") {
  std::ostringstream out;
  write_off(out, Simplex({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), make_point({0, 0, Rat(1, 2)})}));
  const std::string s = out.str();
  CHECK(s.rfind("OFF\n4 4 6\n", 0) == 0);
  CHECK(s.find("0.5") != std::string::npos);
  std::istringstream in(s);
  std::string header;
  std::size_t nv, nf, ne;
  in >> header >> nv >> nf >> ne;
  double x[4][3];
  for (auto& v : x) in >> v[0] >> v[1] >> v[2];
  // every face is oriented away from the opposite vertex
  for (int f = 0; f < 4; ++f) {
    int n, a, b, c;
    in >> n >> a >> b >> c;
    CHECK(n == 3);
    const int opp = 6 - a - b - c;
    double u[3], v[3], w[3];
    for (int k = 0; k < 3; ++k) {
      u[k] = x[b][k] - x[a][k];
      v[k] = x[c][k] - x[a][k];
      w[k] = x[opp][k] - x[a][k];
    }
    const double nrm[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    CHECK(nrm[0] * w[0] + nrm[1] * w[1] + nrm[2] * w[2] < 0);
  }
}
