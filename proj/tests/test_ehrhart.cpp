#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equidec/acceptance.hpp"
#include "equidec/ehrhart.hpp"
#include "equidec/random.hpp"
#include "equidec/white.hpp"
#include "oracles.hpp"

using namespace equidec;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.push_back(Rat(x));
  return p;
}

std::vector<oracle::Vec> as_oracle(const std::vector<Point>& vs) { return {vs.begin(), vs.end()}; }

long at(const std::map<long, long>& m, long key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("counts of small bodies") {
  const Polytope unit = Polytope::from_points({pt({0, 0}), pt({1, 0}), pt({0, 1})});
  for (long k = 1; k <= 8; ++k) {
    CHECK(count(unit, Int(k), Mode::Closed) == (k + 1) * (k + 2) / 2);
    CHECK(count(unit, Int(k), Mode::RelInt) == (k - 1) * (k - 2) / 2);
  }
  const Polytope seg = interval(Rat(1, 5), Rat(6, 5));
  for (long k = 1; k <= 10; ++k) CHECK(count(seg, Int(k), Mode::Closed) == k + (k % 5 == 0 ? 1 : 0));
  CHECK(count(white_tetrahedron(7, 12), Int(1), Mode::RelInt) == 0);
}

TEST_CASE("denominators") {
  CHECK(denominator(interval(Rat(1, 5), Rat(6, 5))) == 5);
  CHECK(denominator(rational_triangle()) == 3);
  CHECK(denominator(pair_polytope()) == 1);
  CHECK(denominator(canonical_simplex(SimplexType::D3_1)) == 2);
}

TEST_CASE("fits of standard bodies") {
  CHECK(fit_quasipolynomial(interval(0, 1), Mode::Closed).to_string() == "k + 1");
  const QuasiPolynomial tri =
      fit_quasipolynomial(Polytope::from_points({pt({0, 0}), pt({1, 0}), pt({0, 1})}), Mode::Closed);
  CHECK(tri == QuasiPolynomial(1, {{Rat(1), Rat(3, 2), Rat(1, 2)}}));
  const QuasiPolynomial tet = fit_quasipolynomial(white_tetrahedron(0, 1), Mode::Closed);
  CHECK(tet == QuasiPolynomial(1, {{Rat(1), Rat(11, 6), Rat(1), Rat(1, 6)}}));
  const QuasiPolynomial open_seg = fit_quasipolynomial(interval(Rat(1, 5), Rat(6, 5)), Mode::RelInt);
  for (long k = 1; k <= 15; ++k) CHECK(open_seg(k) == k - (k % 5 == 0 ? 1 : 0));
}

TEST_CASE("the 3-polytope pair shares one polynomial") {
  const QuasiPolynomial a = fit_quasipolynomial(pair_polytope(), Mode::Closed);
  const QuasiPolynomial b = fit_quasipolynomial(pair_polytope_prime(), Mode::Closed);
  CHECK(a == b);
  CHECK(a == QuasiPolynomial(1, {{Rat(1), Rat(5, 2), Rat(2), Rat(3, 2)}}));
  CHECK(volume(pair_polytope()) == Rat(3, 2));
  CHECK(ehrhart_equivalent(pair_polytope(), pair_polytope_prime()));
}

TEST_CASE("rational triangles share one polynomial") {
  CHECK(ehrhart_equivalent(rational_triangle(), rational_triangle_prime()));
  CHECK(!ehrhart_equivalent(rational_triangle(), interval(0, 1)));
}

TEST_CASE("fitted polynomials match the oracle on random rational simplices") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> e(-2, 2), den(1, 2);
  int tested = 0;
  for (int n = 0; n < 30 && tested < 12; ++n) {
    const std::size_t d = 1 + n % 3;
    std::vector<Point> vs(d + 1, Point(d));
    for (auto& v : vs)
      for (auto& x : v) x = Rat(e(rng)) / den(rng);
    if (affine_dimension(vs) != static_cast<int>(d)) continue;
    ++tested;
    const Simplex s(vs);
    for (Mode mode : {Mode::Closed, Mode::RelInt}) {
      const QuasiPolynomial qp = fit_quasipolynomial(s, mode);
      for (long k = 1; k <= 9; ++k) CHECK(qp(k) == oracle::count(as_oracle(vs), k, mode == Mode::RelInt));
    }
  }
  CHECK(tested >= 6);
}

TEST_CASE("quasipolynomial algebra") {
  const QuasiPolynomial a(2, {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  CHECK(a.period() == 2);
  const QuasiPolynomial same(4, {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  CHECK(same == a);
  CHECK(QuasiPolynomial(1, {{Rat(2), Rat(0), Rat(0)}}).degree() == 0);
  const QuasiPolynomial sum = a + QuasiPolynomial(1, {{Rat(0), Rat(2)}});
  for (long k = 0; k < 10; ++k) CHECK(sum(k) == a(k) + 2 * k);
  const QuasiPolynomial triple = a * Int(3);
  for (long k = 0; k < 10; ++k) CHECK(triple(k) == 3 * a(k));
  CHECK(QuasiPolynomial::zero() == a * Int(0));
  CHECK_THROWS_AS(QuasiPolynomial(2, {{Rat(1)}}), Error);
}

TEST_CASE("closed forms match the oracle on canonical representatives") {
  for (SimplexType t : kAllTypes) {
    const auto vs = canonical_vertices(t);
    CHECK(static_cast<int>(vs.size()) == type_dim(t) + 1);
    CHECK(Simplex(vs) == canonical_simplex(t));
    const QuasiPolynomial cf = closed_form(t);
    CHECK(cf.period() <= 2);
    for (long k = 1; k <= 10; ++k) CHECK(cf(k) == oracle::count(as_oracle(vs), k, true));
  }
}

TEST_CASE("closed forms are binomials") {
  const int dims[] = {0, 1, 2, 3};
  const SimplexType one[] = {SimplexType::D0_1, SimplexType::D1_1, SimplexType::D2_1, SimplexType::D3_1};
  const SimplexType zero[] = {SimplexType::D0_0, SimplexType::D1_0, SimplexType::D2_0};
  for (long k = 1; k <= 14; ++k) {
    for (int i : dims) {
      const Rat v = closed_form(one[i])(k);
      CHECK(v == Rat(k % 2 == 0 ? oracle::binomial(k / 2 - 1, i) : oracle::binomial((k - 1) / 2, i)));
    }
    for (int i = 0; i < 3; ++i)
      CHECK(closed_form(zero[i])(k) == Rat(k % 2 == 0 ? oracle::binomial(k / 2 - 1, i) : oracle::Z(0)));
    CHECK(closed_form(SimplexType::D2p)(k) ==
          Rat(k % 2 == 0 ? oracle::binomial(k / 2 - 1, 2) : oracle::binomial((k + 1) / 2, 2)));
    CHECK(closed_form(SimplexType::D3p)(k) ==
          Rat(k % 2 == 0 ? oracle::binomial(k / 2 - 1, 3) : oracle::binomial((k + 1) / 2, 3)));
  }
}

TEST_CASE("legacy expressions agree except where noted") {
  for (SimplexType t : kAllTypes)
    for (long k = 1; k <= 12; ++k) {
      const Rat legacy = legacy_formula(t, k);
      const Rat cf = closed_form(t)(k);
      if (t == SimplexType::D1_1 && k % 2 == 0) {
        CHECK(legacy == cf + 1);
      } else if (t == SimplexType::D3p && k % 2 == 1) {
        CHECK(legacy != cf);
      } else {
        CHECK(legacy == cf);
      }
    }
  CHECK(legacy_formula(SimplexType::D3p, 1) == Rat(1, 8));
}

TEST_CASE("labels") {
  for (SimplexType t : kAllTypes) CHECK(parse_label(label(t)) == t);
  CHECK_THROWS_AS(parse_label("D4^1"), Error);
  TypeVector f;
  f[SimplexType::D3_1] = 2;
  f[SimplexType::D0_1] = 1;
  CHECK(f.total() == 3);
}

TEST_CASE("evaluation table is unitriangular") {
  const IntMat m = basis_evaluation_matrix(7);
  CHECK(m.rows() == 7);
  CHECK(det(m) == 1);
  for (std::size_t r = 0; r < 7; ++r) {
    CHECK(m(r, r) == 1);
    for (std::size_t c = 0; c < r; ++c) CHECK(m(r, c) == 0);
    for (std::size_t c = 0; c < 7; ++c)
      CHECK(m(r, c) == oracle::count(as_oracle(canonical_vertices(kBasisTypes[r])), c + 1, true));
  }
}

TEST_CASE("combine") {
  TypeVector f;
  f[SimplexType::D0_1] = 4;
  f[SimplexType::D1_1] = 6;
  f[SimplexType::D2_1] = 4;
  f[SimplexType::D3_1] = 8;
  CHECK(combine(f) == closed_form(SimplexType::D0_1) * Int(4) + closed_form(SimplexType::D1_1) * Int(6) +
                          closed_form(SimplexType::D2_1) * Int(4) + closed_form(SimplexType::D3_1) * Int(8));
  CHECK(combine(TypeVector{}) == QuasiPolynomial::zero());
}

TEST_CASE("one-dimensional orbit profiles") {
  const auto a = orbit_profile_1d(Rat(1, 5), Rat(6, 5), 5);
  const auto b = orbit_profile_1d(Rat(2, 5), Rat(7, 5), 5);
  CHECK(at(a, 0) == 1);
  CHECK(at(a, 1) == 3);
  CHECK(at(a, 2) == 2);
  CHECK(at(b, 0) == 1);
  CHECK(at(b, 1) == 2);
  CHECK(at(b, 2) == 3);
  CHECK(fit_quasipolynomial(interval(Rat(1, 5), Rat(6, 5)), Mode::Closed) ==
        fit_quasipolynomial(interval(Rat(2, 5), Rat(7, 5)), Mode::Closed));
}

TEST_CASE("ehrhart functions are unimodular invariants") {
  std::mt19937 rng(43);
  for (int n = 0; n < 10; ++n) {
    const Polytope p = random_lattice_polytope(rng, 6, 3);
    const Polytope image = p.mapped(random_unimodular(rng, 3));
    CHECK(fit_quasipolynomial(p, Mode::Closed) == fit_quasipolynomial(image, Mode::Closed));
    CHECK(fit_quasipolynomial(p, Mode::RelInt) == fit_quasipolynomial(image, Mode::RelInt));
  }
}
