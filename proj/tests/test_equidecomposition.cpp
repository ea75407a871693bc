#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equidec/acceptance.hpp"
#include "equidec/equidecomposition.hpp"
#include "equidec/random.hpp"
#include "equidec/white.hpp"

using namespace equidec;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.push_back(Rat(x));
  return p;
}

Polytope unit_tet() { return Polytope::from_simplex(white_tetrahedron(0, 1)); }

Polytope unit_cube() {
  std::vector<Point> vs;
  for (long x : {0, 1})
    for (long y : {0, 1})
      for (long z : {0, 1}) vs.push_back(pt({x, y, z}));
  return Polytope::from_points(vs);
}

}  // namespace

TEST_CASE("type vectors") {
  TypeVector f = type_vector(decompose_polytope(unit_tet()));
  CHECK(f[SimplexType::D3_1] == 8);
  CHECK(f[SimplexType::D0_1] == 4);
  CHECK(type_vector(Decomposition{{}, unit_tet()}) == TypeVector{});
}

TEST_CASE("certificate for a polytope and a unimodular image") {
  std::mt19937 rng(79);
  const Polytope p = Polytope::from_points({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})});
  const Polytope q = p.mapped(random_unimodular(rng, 3));
  const EquidecompCertificate cert = equidecompose(p, q);
  CHECK(cert.source_types == cert.target_types);
  for (const auto& pair : cert.pairs) {
    Simplex s(pair.piece);
    CHECK(classify(s) == pair.type);
    CHECK(classify(Simplex(pair.image)) == pair.type);
  }
  const VerificationReport rep = verify_certificate(p, q, cert);
  CHECK(rep.ok());
  CHECK(rep.checks.size() == 6);
  for (const char* name : kCheckNames) CHECK(rep.find(name) != nullptr);
  CHECK(rep.find("nonsense") == nullptr);
  CHECK(equidecomposable_quick(p, q));
}

TEST_CASE("a polytope against itself") {
  const Polytope p = unit_cube();
  const EquidecompCertificate cert = equidecompose(p, p);
  CHECK(verify_certificate(p, p, cert).ok());
}

TEST_CASE("certificates are deterministic") {
  const Polytope p = Polytope::from_points({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 2})});
  const Polytope q = Polytope::from_points({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(equidecompose(p, q) == equidecompose(p, q));
}

TEST_CASE("different polynomials are rejected with both witnesses") {
  try {
    equidecompose(unit_tet(), unit_cube());
    FAIL("expected NotEquivalentError");
  } catch (const NotEquivalentError& e) {
    CHECK(e.code() == ErrorCode::NotEhrhartEquivalent);
    CHECK(e.source() == fit_quasipolynomial(unit_tet(), Mode::Closed));
    CHECK(e.target() == fit_quasipolynomial(unit_cube(), Mode::Closed));
  }
  const Polytope slanted = Polytope::from_points({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 2})});
  CHECK(!equidecomposable_quick(unit_tet(), slanted));
  CHECK_THROWS_AS(equidecompose(unit_tet(), Polytope::from_points({pt({0, 0, 0}), make_point({Rat(1, 2), 0, 0})})),
                  Error);
}

TEST_CASE("type vectors match exactly when Ehrhart polynomials match") {
  std::mt19937 rng(83);
  std::vector<Polytope> ps;
  for (int n = 0; n < 8; ++n) ps.push_back(random_lattice_polytope(rng, 6, 2));
  ps.push_back(ps[0].mapped(random_unimodular(rng, 3)));
  ps.push_back(ps[1].mapped(random_unimodular(rng, 3)));
  std::vector<TypeVector> fs;
  std::vector<QuasiPolynomial> es;
  for (const auto& p : ps) {
    fs.push_back(type_vector(decompose_polytope(p)));
    es.push_back(fit_quasipolynomial(p, Mode::Closed));
  }
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) CHECK((fs[i] == fs[j]) == (es[i] == es[j]));
}

TEST_CASE("verifier rejects tampered certificates") {
  const Polytope p = Polytope::from_points({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 2})});
  const Polytope q = Polytope::from_points({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  const EquidecompCertificate cert = equidecompose(p, q);
  REQUIRE(verify_certificate(p, q, cert).ok());

  EquidecompCertificate deleted = cert;
  deleted.pairs.erase(deleted.pairs.begin());
  CHECK(!verify_certificate(p, q, deleted).ok());

  EquidecompCertificate dup = cert;
  dup.pairs.push_back(cert.pairs.back());
  CHECK(!verify_certificate(p, q, dup).ok());

  EquidecompCertificate relabeled = cert;
  for (auto& pair : relabeled.pairs)
    if (pair.type == SimplexType::D1_1) {
      pair.type = SimplexType::D1_0;
      break;
    }
  CHECK(!verify_certificate(p, q, relabeled).ok());

  EquidecompCertificate bad_shape = cert;
  bad_shape.pairs[0].linear.pop_back();
  CHECK(!verify_certificate(p, q, bad_shape).find("unimodular")->passed);

  EquidecompCertificate wrong_body = cert;
  CHECK(!verify_certificate(p, unit_cube(), wrong_body).ok());
}
