#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "equidec/random.hpp"
#include "equidec/triangulation.hpp"
#include "equidec/white.hpp"

using namespace equidec;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.push_back(Rat(x));
  return p;
}

bool same_class(long p, long q, long p2) {
  const long ps[] = {p, (q - p) % q, static_cast<long>(inv_mod(p, q).get_si()), static_cast<long>((q - inv_mod(p, q).get_si()) % q)};
  return std::find(std::begin(ps), std::end(ps), p2 % q) != std::end(ps);
}

}  // namespace

TEST_CASE("white tetrahedron") {
  const Simplex t = white_tetrahedron(7, 12);
  CHECK(t.vertices() == std::vector<Point>{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 0, 1}), pt({7, 12, 1})});
  CHECK(volume(t) * 6 == 12);
  CHECK(is_empty_lattice_simplex(t));
}

TEST_CASE("normal form of T(7,12)") {
  const Simplex t = white_tetrahedron(7, 12);
  const WhiteForm wf = white_normal_form(t);
  CHECK(wf.q == 12);
  CHECK(wf.p_canonical == 5);
  CHECK(same_class(7, 12, wf.p));
  CHECK(t.mapped(wf.map).sorted_vertices() == white_tetrahedron(wf.p, wf.q).sorted_vertices());
  CHECK(width_one_direction(t) == IntVec{0, 0, 1});
}

TEST_CASE("canonical_p") {
  CHECK(canonical_p(7, 12) == 5);
  CHECK(canonical_p(5, 12) == 5);
  CHECK(canonical_p(1, 1) == 0);
  CHECK(canonical_p(0, 1) == 0);
  CHECK(canonical_p(1, 5) == 1);
  CHECK(canonical_p(2, 5) == 2);
  CHECK(canonical_p(3, 5) == 2);
  CHECK(canonical_p(3, 7) == 2);
  CHECK_THROWS_AS(canonical_p(4, 12), Error);
}

TEST_CASE("canonical_p is a class invariant") {
  for (long q = 2; q <= 40; ++q)
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const long c = canonical_p(p, q);
      CHECK(c == canonical_p(q - p, q));
      CHECK(c == canonical_p(inv_mod(p, q).get_si(), q));
      CHECK(c <= p);
    }
}

TEST_CASE("non-empty and degenerate inputs") {
  const Simplex fat({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 3})});
  CHECK_THROWS_AS(white_normal_form(fat), Error);
  try {
    white_normal_form(fat);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEmpty);
  }
}

TEST_CASE("random images recover the class") {
  std::mt19937 rng(53);
  for (long q = 1; q <= 15; ++q)
    for (long p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Simplex t = white_tetrahedron(p, q);
      for (int n = 0; n < 5; ++n) {
        const Simplex image = t.mapped(random_unimodular(rng, 3, 4));
        const WhiteForm wf = white_normal_form(image);
        CHECK(wf.q == q);
        CHECK(wf.p_canonical == canonical_p(p, q));
        CHECK(image.mapped(wf.map).sorted_vertices() == white_tetrahedron(wf.p, wf.q).sorted_vertices());
        const IntVec w = width_one_direction(image);
        std::vector<Rat> vals;
        for (const auto& v : image.vertices()) vals.push_back(dot(w, v));
        std::sort(vals.begin(), vals.end());
        CHECK(vals[0] == vals[1]);
        CHECK(vals[2] == vals[3]);
        CHECK(vals[2] == vals[1] + 1);
      }
    }
}
