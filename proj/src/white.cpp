#include "equidec/white.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "equidec/triangulation.hpp"

namespace equidec {

Simplex white_tetrahedron(long p, long q) {
  return Simplex({make_point({0, 0, 0}), make_point({1, 0, 0}), make_point({0, 0, 1}), make_point({p, q, 1})});
}

long canonical_p(long p, long q) {
  if (q <= 0) throw Error(ErrorCode::NotCoprime, "q must be positive");
  if (q == 1) return 0;
  const Int qq(q);
  const long inv = inv_mod(Int(p), qq).get_si();
  const long pm = mod_floor(Int(p), qq).get_si();
  return std::min({pm, (q - pm) % q, inv, (q - inv) % q});
}

namespace {

IntVec lattice_coords(const Point& p) {
  IntVec v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i].get_num();
  return v;
}

}  // namespace

IntVec width_one_direction(const Simplex& t) {
  if (t.dim() != 3 || t.ambient_dim() != 3) throw Error(ErrorCode::DegenerateInput, "expected a tetrahedron in R^3");
  if (!is_empty_lattice_simplex(t)) throw Error(ErrorCode::NotEmpty, "tetrahedron is not empty");
  const auto& vs = t.vertices();
  RatMat edges;
  for (std::size_t i = 1; i < 4; ++i) edges.push_back(vs[i] - vs[0]);

  std::optional<IntVec> best;
  for (int code = 0; code < 27; ++code) {
    RatVec rhs{Rat(code % 3 - 1), Rat(code / 3 % 3 - 1), Rat(code / 9 - 1)};
    std::vector<int> levels{0, code % 3 - 1, code / 3 % 3 - 1, code / 9 - 1};
    const int lo = *std::min_element(levels.begin(), levels.end());
    if (std::count(levels.begin(), levels.end(), lo) != 2 || std::count(levels.begin(), levels.end(), lo + 1) != 2) continue;
    auto w = solve_square(edges, rhs);
    if (!w || !std::all_of(w->begin(), w->end(), [](const Rat& x) { return is_integral(x); })) continue;
    IntVec iw(3);
    for (std::size_t i = 0; i < 3; ++i) iw[i] = (*w)[i].get_num();
    auto first = std::find_if(iw.begin(), iw.end(), [](const Int& x) { return x != 0; });
    if (*first < 0)
      for (auto& x : iw) x = -x;
    if (!best || iw < *best) best = iw;
  }
  if (!best) throw Error(ErrorCode::NoWidthOne, "no width-one functional found for an empty tetrahedron");
  return *best;
}

WhiteForm white_normal_form(const Simplex& t) {
  IntVec w = width_one_direction(t);
  std::vector<IntVec> vs;
  for (const auto& v : t.vertices()) vs.push_back(lattice_coords(v));
  auto level = [&](const IntVec& v) {
    Int s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += w[i] * v[i];
    return s;
  };

  // The level holding the lexicographically smallest input vertex becomes z = 0.
  const IntVec lex_min = *std::min_element(vs.begin(), vs.end());
  Int low = level(vs.front());
  for (const auto& v : vs) low = std::min(low, level(v));
  if (level(lex_min) != low) {
    for (auto& x : w) x = -x;
    low = level(vs.front());
    for (const auto& v : vs) low = std::min(low, level(v));
  }
  std::vector<IntVec> bottom, top;
  for (const auto& v : vs) (level(v) == low ? bottom : top).push_back(v);
  std::sort(bottom.begin(), bottom.end());
  std::sort(top.begin(), top.end());

  // Linear part with w as its last row.
  IntMat b = complete_to_basis({w}, 3).transpose();
  IntMat w1(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    w1(0, j) = b(1, j);
    w1(1, j) = b(2, j);
    w1(2, j) = b(0, j);
  }
  UnimodularMap map(w1, IntVec(3, Int(0)));

  auto image = [&](const IntVec& v) { return lattice_coords(map.apply(to_rat(v))); };

  IntVec origin = image(bottom[0]);
  for (auto& x : origin) x = -x;
  map = UnimodularMap::translation_by(origin).compose(map);

  IntVec edge = image(bottom[1]);
  IntMat planar = inverse_unimodular(complete_to_basis({IntVec{edge[0], edge[1]}}, 2));
  IntMat lift = IntMat::identity(3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) lift(i, j) = planar(i, j);
  map = UnimodularMap(lift, IntVec(3, Int(0))).compose(map);

  IntVec apex = image(top[0]);
  IntMat shear = IntMat::identity(3);
  shear(0, 2) = -apex[0];
  shear(1, 2) = -apex[1];
  map = UnimodularMap(shear, IntVec(3, Int(0))).compose(map);

  IntVec far = image(top[1]);
  if (far[1] < 0) {
    IntMat flip = IntMat::identity(3);
    flip(1, 1) = -1;
    map = UnimodularMap(flip, IntVec(3, Int(0))).compose(map);
    far = image(top[1]);
  }
  const Int q = far[1];
  const Int p = mod_floor(far[0], q);
  IntMat reduce = IntMat::identity(3);
  reduce(0, 1) = (p - far[0]) / q;
  map = UnimodularMap(reduce, IntVec(3, Int(0))).compose(map);

  WhiteForm form;
  form.p = p.get_si();
  form.q = q.get_si();
  form.map = map;
  if (t.mapped(map).sorted_vertices() != white_tetrahedron(form.p, form.q).sorted_vertices())
    throw Error(ErrorCode::NoMapFound, "normal form map does not reach T(p, q)");
  form.p_canonical = canonical_p(form.p, form.q);
  return form;
}

}  // namespace equidec
