#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "equidec/arith.hpp"

using namespace equidec;

TEST_CASE("det") {
  CHECK(det(IntMat::identity(3)) == 1);
  CHECK(det(IntMat::from_rows({{1, 0, 0}, {0, 0, 1}, {3, 5, 1}})) == -5);
  CHECK(det(IntMat::from_rows({{1, 0, 0}, {2, 0, 0}, {0, 0, 1}})) == 0);
  CHECK(det(IntMat::from_rows({{2, 1}, {7, 4}})) == 1);
}

TEST_CASE("det matches cofactor expansion on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int n = 0; n < 200; ++n) {
    IntMat m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = e(rng);
    Int cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
              m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(det(m) == cof);
  }
}

TEST_CASE("hnf examples") {
  auto id = hnf(IntMat::identity(3));
  CHECK(id.h == IntMat::identity(3));
  CHECK(id.u == IntMat::identity(3));

  IntMat col = IntMat::from_columns({IntVec{2, 4, 6}});
  auto r = hnf(col);
  CHECK(r.h == col);
  CHECK(abs(det(r.u)) == 1);

  IntMat two = IntMat::from_columns({IntVec{1, 2, 0}, IntVec{0, 0, 1}});
  auto t = hnf(two);
  CHECK(two * t.u == t.h);
  CHECK(t.h(0, 0) == 1);
}

TEST_CASE("hnf contract on random matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-6, 6), shape(1, 4);
  for (int n = 0; n < 300; ++n) {
    const std::size_t rows = shape(rng), cols = shape(rng);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = e(rng);
    auto r = hnf(m);
    REQUIRE(m * r.u == r.h);
    CHECK(abs(det(r.u)) == 1);
    // upper-right zeros: entries right of each row's pivot column vanish
    std::size_t pivot_col = 0;
    for (std::size_t i = 0; i < rows && pivot_col < cols; ++i) {
      if (r.h(i, pivot_col) == 0) continue;
      CHECK(r.h(i, pivot_col) > 0);
      for (std::size_t j = pivot_col + 1; j < cols; ++j) CHECK(r.h(i, j) == 0);
      ++pivot_col;
    }
  }
}

TEST_CASE("complete_to_basis") {
  IntMat b = complete_to_basis({IntVec{1, 0, 0}}, 3);
  CHECK(b.column(0) == IntVec{1, 0, 0});
  CHECK(abs(det(b)) == 1);

  IntMat c = complete_to_basis({IntVec{1, 2, 0}}, 3);
  CHECK(c.column(0) == IntVec{1, 2, 0});
  CHECK(abs(det(c)) == 1);

  CHECK_THROWS_AS(complete_to_basis({IntVec{2, 0, 0}}, 3), Error);
  try {
    complete_to_basis({IntVec{2, 0, 0}}, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSaturated);
  }
  CHECK_THROWS_AS(complete_to_basis({IntVec{1, 0, 0}, IntVec{1, 2, 0}}, 3), Error);
}

TEST_CASE("complete_to_basis on random saturated families") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(-4, 4);
  int tried = 0;
  for (int n = 0; n < 400 && tried < 150; ++n) {
    std::vector<IntVec> vs(1 + n % 2, IntVec(3));
    for (auto& v : vs)
      for (auto& x : v) x = e(rng);
    IntMat b;
    try {
      b = complete_to_basis(vs, 3);
    } catch (const Error&) {
      continue;
    }
    ++tried;
    CHECK(abs(det(b)) == 1);
    for (std::size_t j = 0; j < vs.size(); ++j) CHECK(b.column(j) == vs[j]);
  }
  CHECK(tried > 50);
}

TEST_CASE("inv_mod") {
  CHECK(inv_mod(5, 12) == 5);
  CHECK(inv_mod(1, 7) == 1);
  CHECK(inv_mod(-7, 12) == 5);
  CHECK(inv_mod(0, 1) == 0);
  CHECK_THROWS_AS(inv_mod(4, 12), Error);
  for (long q = 2; q <= 100; ++q)
    for (long a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      Int x = inv_mod(a, q);
      CHECK(x >= 1);
      CHECK(x < q);
      CHECK(mod_floor(x * a, q) == 1);
    }
}

TEST_CASE("rationals stay canonical") {
  Rat a(6, 4);
  a.canonicalize();
  CHECK(to_string(a) == "3/2");
  Rat b = a * Rat(2, 3);
  CHECK(b == 1);
  CHECK(b.get_den() == 1);
  CHECK(to_string(Rat(-7)) == "-7");
  CHECK(floor_of(Rat(-3, 2)) == -2);
  CHECK(ceil_of(Rat(-3, 2)) == -1);
  CHECK(mod_floor(-1, 5) == 4);
}

TEST_CASE("UnimodularMap") {
  CHECK_THROWS_AS(UnimodularMap(IntMat::from_rows({{2, 0}, {0, 1}}), IntVec{0, 0}), Error);
  UnimodularMap a(IntMat::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), IntVec{1, 2, 3});
  UnimodularMap b(IntMat::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}), IntVec{0, -1, 4});
  RatVec x{Rat(1, 2), Rat(3), Rat(-2, 3)};
  CHECK(a.compose(b).apply(x) == a.apply(b.apply(x)));
  CHECK(a.inverse().apply(a.apply(x)) == x);
  CHECK(a.compose(a.inverse()) == UnimodularMap::identity(3));
  CHECK(UnimodularMap::translation_by(IntVec{1, 1, 1}).apply(x) == RatVec{Rat(3, 2), Rat(4), Rat(1, 3)});
}

TEST_CASE("integer_solution") {
  IntMat a = IntMat::from_rows({{2, 4}});
  CHECK(integer_solution(a, IntVec{6}).has_value());
  CHECK(!integer_solution(a, IntVec{3}).has_value());
  auto x = integer_solution(IntMat::from_rows({{1, 1, 1}, {0, 2, 3}}), IntVec{1, 5});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] + (*x)[2] == 1);
  CHECK(2 * (*x)[1] + 3 * (*x)[2] == 5);
}

TEST_CASE("rational linear algebra") {
  RatMat m{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  auto s = solve_square(m, RatVec{Rat(5), Rat(6)});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == -4);
  CHECK((*s)[1] == Rat(9, 2));
  CHECK(!solve_square(RatMat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, RatVec{Rat(1), Rat(1)}).has_value());
  CHECK(rank(RatMat{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}}) == 1);
  auto ns = nullspace(RatMat{{Rat(1), Rat(1), Rat(0)}}, 3);
  CHECK(ns.size() == 2);
  CHECK(primitive_integer(RatVec{Rat(1, 2), Rat(-3, 4), Rat(0)}) == IntVec{2, -3, 0});
}
