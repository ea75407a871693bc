#include "equidec/random.hpp"

#include <algorithm>
#include <numeric>

namespace equidec {

UnimodularMap random_unimodular(std::mt19937& rng, std::size_t d, int steps) {
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> shift(-3, 3);
  IntMat m = IntMat::identity(d);
  for (int s = 0; s < steps && d > 1; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    const int f = coin(rng) ? 1 : -1;
    for (std::size_t c = 0; c < d; ++c) m(i, c) += f * m(j, c);
  }
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMat out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const int sign = coin(rng) ? 1 : -1;
    for (std::size_t c = 0; c < d; ++c) out(r, c) = sign * m(perm[r], c);
  }
  IntVec t(d);
  for (auto& x : t) x = shift(rng);
  return UnimodularMap(std::move(out), std::move(t));
}

Polytope random_lattice_polytope(std::mt19937& rng, int max_points, int bound) {
  std::uniform_int_distribution<int> count(std::min(4, max_points), max_points);
  std::uniform_int_distribution<int> coord(0, bound);
  std::vector<Point> pts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) pts.push_back(make_point({coord(rng), coord(rng), coord(rng)}));
  return Polytope::from_points(std::move(pts));
}

}  // namespace equidec
