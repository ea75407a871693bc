#include "equidec/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace equidec {

namespace {

using Cell = std::vector<std::size_t>;  // sorted point indices

struct LocalFrame {
  Point origin;
  IntMat to_local;  // rows 0..m-1 give local coordinates of x - origin
  std::size_t dim = 0;

  IntVec local(const Point& x) const {
    RatVec y = to_local * (x - origin);
    IntVec out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = y[i].get_num();
    return out;
  }
};

// Unimodular frame identifying aff(P) cap Z^d with Z^m.
LocalFrame local_frame(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  const auto m = static_cast<std::size_t>(p.dim());
  LocalFrame frame{p.vertices().front(), IntMat::identity(d), m};
  if (m == d) {
    frame.origin = Point(d, Rat(0));
    return frame;
  }
  FacetSystem fs = facet_system(p);
  std::vector<IntVec> normals;
  for (const auto& eq : fs.equations) normals.push_back(eq.normal);
  HermiteResult h = hnf(IntMat::from_rows(normals));
  std::vector<IntVec> kernel;
  for (std::size_t j = d - m; j < d; ++j) kernel.push_back(h.u.column(j));
  frame.to_local = inverse_unimodular(complete_to_basis(kernel, d));
  return frame;
}

// Sign of the coefficient of (o - f0) when x - f0 is written in the basis
// {f1 - f0, ..., o - f0} of the current direction space.
int side(const std::vector<IntVec>& pts, const std::vector<std::size_t>& facet, std::size_t opposite,
         std::size_t x, bool full_dim) {
  const IntVec& f0 = pts[facet.front()];
  const std::size_t m = f0.size();
  auto diff = [&](std::size_t i) {
    IntVec v(m);
    for (std::size_t c = 0; c < m; ++c) v[c] = pts[i][c] - f0[c];
    return v;
  };
  if (full_dim) {
    std::vector<IntVec> rows;
    for (std::size_t i = 1; i < facet.size(); ++i) rows.push_back(diff(facet[i]));
    rows.push_back(diff(x));
    const int sx = sgn(det(IntMat::from_rows(rows)));
    rows.back() = diff(opposite);
    const int so = sgn(det(IntMat::from_rows(rows)));
    return sx * so;
  }
  std::vector<RatVec> basis;
  for (std::size_t i = 1; i < facet.size(); ++i) basis.push_back(to_rat(diff(facet[i])));
  basis.push_back(to_rat(diff(opposite)));
  const RatVec target = to_rat(diff(x));
  const std::size_t c = basis.size();
  RatMat gram(c, RatVec(c));
  RatVec rhs(c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], target);
  }
  auto coeffs = solve_square(gram, rhs);
  return sgn(coeffs->back());
}

std::vector<Cell> place(const std::vector<IntVec>& pts) {
  std::vector<Cell> cells;
  if (pts.empty()) return cells;
  cells.push_back({0});
  std::size_t cur_dim = 0;
  const std::size_t m = pts.front().size();
  RatMat dirs;

  for (std::size_t x = 1; x < pts.size(); ++x) {
    RatVec dir(m);
    for (std::size_t c = 0; c < m; ++c) dir[c] = Rat(pts[x][c] - pts[0][c]);
    RatMat extended = dirs;
    extended.push_back(dir);
    if (rank(extended) > cur_dim) {
      dirs.push_back(std::move(dir));
      ++cur_dim;
      for (auto& cell : cells) cell.push_back(x);
      continue;
    }

    std::map<Cell, std::pair<int, std::size_t>> facets;  // facet -> (cell count, opposite vertex)
    for (const auto& cell : cells) {
      for (std::size_t skip = 0; skip < cell.size(); ++skip) {
        Cell f;
        for (std::size_t i = 0; i < cell.size(); ++i)
          if (i != skip) f.push_back(cell[i]);
        auto [it, inserted] = facets.try_emplace(std::move(f), 0, cell[skip]);
        ++it->second.first;
      }
    }
    std::vector<Cell> added;
    for (const auto& [facet, info] : facets) {
      if (info.first != 1) continue;
      if (side(pts, facet, info.second, x, cur_dim == m) < 0) {
        Cell c = facet;
        c.push_back(x);
        added.push_back(std::move(c));
      }
    }
    if (added.empty()) throw Error(ErrorCode::DegenerateInput, "placing point sees no boundary facet");
    cells.insert(cells.end(), added.begin(), added.end());
  }
  return cells;
}

}  // namespace

bool is_empty_lattice_simplex(const Simplex& s) {
  if (!std::all_of(s.vertices().begin(), s.vertices().end(), is_lattice_point)) return false;
  return count_scaled_points(facet_system(s), s.vertices(), Int(1), Mode::Closed) == s.vertices().size();
}

EmptyTriangulation empty_triangulation(const Polytope& p) {
  if (!p.is_lattice()) throw Error(ErrorCode::NotLatticePolytope, "polytope has non-integral vertices");
  std::vector<Point> pts = lattice_points(p, Int(1), Mode::Closed);
  LocalFrame frame = local_frame(p);
  std::vector<IntVec> local;
  local.reserve(pts.size());
  for (const auto& x : pts) local.push_back(frame.local(x));

  EmptyTriangulation t;
  t.dim = p.dim();
  std::set<Cell> faces;
  for (const Cell& cell : place(local)) {
    std::vector<Point> vs;
    for (std::size_t i : cell) vs.push_back(pts[i]);
    Simplex s(std::move(vs));
    if (!is_empty_lattice_simplex(s)) throw Error(ErrorCode::NotEmpty, "placing produced a non-empty cell");
    t.cells.push_back(std::move(s));

    Cell sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Cell f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(sorted[i]);
      faces.insert(std::move(f));
    }
  }
  std::vector<Cell> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const Cell& a, const Cell& b) { return a.size() < b.size(); });
  for (const Cell& f : ordered) {
    std::vector<Point> vs;
    for (std::size_t i : f) vs.push_back(pts[i]);
    t.faces.emplace_back(std::move(vs));
  }
  return t;
}

std::vector<Simplex> open_face_partition(const EmptyTriangulation& t) { return t.faces; }

UnimodularMap normalize_low_dim_empty(const Simplex& s) {
  if (s.dim() > 2) throw Error(ErrorCode::DegenerateInput, "normalization is for simplices of dimension <= 2");
  if (!is_empty_lattice_simplex(s)) throw Error(ErrorCode::NotEmpty, "simplex is not an empty lattice simplex");
  const std::size_t d = s.ambient_dim();
  const Point& v0 = s.vertices().front();
  std::vector<IntVec> edges;
  for (std::size_t i = 1; i < s.vertices().size(); ++i) {
    Point e = s.vertices()[i] - v0;
    IntVec ie(d);
    for (std::size_t c = 0; c < d; ++c) ie[c] = e[c].get_num();
    edges.push_back(std::move(ie));
  }
  IntMat inv = inverse_unimodular(complete_to_basis(edges, d));
  IntVec t(d);
  for (std::size_t c = 0; c < d; ++c) t[c] = -v0[c].get_num();
  t = inv * t;
  return UnimodularMap(std::move(inv), std::move(t));
}

}  // namespace equidec
