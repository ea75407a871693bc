#include "equidec/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace equidec {

Point make_point(std::initializer_list<Rat> coords) { return Point(coords); }

Point operator+(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point operator*(const Rat& s, const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rat dot(const IntVec& a, const Point& b) {
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += Rat(a[i]) * b[i];
  return r;
}

bool is_lattice_point(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](const Rat& x) { return is_integral(x); });
}

Point embed(const Point& p, std::size_t d) {
  Point r = p;
  r.resize(std::max(d, p.size()), Rat(0));
  return r;
}

int affine_dimension(std::span<const Point> points) {
  if (points.empty()) return -1;
  RatMat dirs;
  for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(std::move(dirs)));
}

// ---------------------------------------------------------------- Simplex / Polytope

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::DegenerateInput, "simplex without vertices");
  for (const auto& v : vertices_)
    if (v.size() != vertices_.front().size()) throw Error(ErrorCode::DegenerateInput, "mixed ambient dimensions");
  if (affine_dimension(vertices_) != dim()) throw Error(ErrorCode::DegenerateInput, "simplex vertices are affinely dependent");
}

Simplex Simplex::scaled(const Rat& s) const {
  std::vector<Point> vs;
  for (const auto& v : vertices_) vs.push_back(s * v);
  return Simplex(std::move(vs));
}

Simplex Simplex::mapped(const UnimodularMap& map) const {
  std::vector<Point> vs;
  for (const auto& v : vertices_) vs.push_back(map.apply(v));
  return Simplex(std::move(vs));
}

std::vector<Point> Simplex::sorted_vertices() const {
  std::vector<Point> vs = vertices_;
  std::sort(vs.begin(), vs.end());
  return vs;
}

Polytope Polytope::from_points(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "polytope without points");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  FacetSystem fs = facet_system(points);
  if (fs.dim == 0) return Polytope({points.front()}, 0);
  std::vector<Point> vertices;
  for (const auto& p : points) {
    RatMat tight;
    for (const auto& ineq : fs.inequalities)
      if (dot(ineq.normal, p) == Rat(ineq.offset)) tight.push_back(to_rat(ineq.normal));
    if (rank(std::move(tight)) == static_cast<std::size_t>(fs.dim)) vertices.push_back(p);
  }
  return Polytope(std::move(vertices), fs.dim);
}

Polytope Polytope::from_simplex(const Simplex& s) { return from_points(s.vertices()); }

Polytope Polytope::embedded(std::size_t d) const {
  std::vector<Point> vs;
  for (const auto& v : vertices_) vs.push_back(embed(v, d));
  return Polytope(std::move(vs), dim_);
}

Polytope Polytope::mapped(const UnimodularMap& map) const {
  std::vector<Point> vs;
  for (const auto& v : vertices_) vs.push_back(map.apply(v));
  return from_points(std::move(vs));
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(), is_lattice_point);
}

// ---------------------------------------------------------------- facet systems

namespace {

// Scales (normal, offset) jointly to a primitive integer vector.
std::pair<IntVec, Int> clear_denominators(const RatVec& normal, const Rat& offset) {
  RatVec joint = normal;
  joint.push_back(offset);
  IntVec p = primitive_integer(joint);
  Int c = p.back();
  p.pop_back();
  return {std::move(p), std::move(c)};
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool FacetSystem::contains(const Point& x, Mode mode) const {
  for (const auto& eq : equations)
    if (dot(eq.normal, x) != Rat(eq.offset)) return false;
  for (const auto& ineq : inequalities) {
    Rat v = dot(ineq.normal, x);
    if (mode == Mode::Closed ? v > Rat(ineq.offset) : v >= Rat(ineq.offset)) return false;
  }
  return true;
}

FacetSystem facet_system(std::span<const Point> input, int claimed_dim) {
  if (input.empty()) throw Error(ErrorCode::DegenerateInput, "empty point set");
  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::size_t d = pts.front().size();
  RatMat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - pts[0]);
  const std::size_t m = rank(dirs);
  if (claimed_dim >= 0 && static_cast<std::size_t>(claimed_dim) != m)
    throw Error(ErrorCode::DegenerateInput,
                "claimed dimension " + std::to_string(claimed_dim) + " but points span " + std::to_string(m));

  FacetSystem fs;
  fs.ambient = d;
  fs.dim = static_cast<int>(m);

  std::vector<RatVec> span_normals = nullspace(dirs, d);
  for (const auto& n : span_normals) {
    auto [normal, offset] = clear_denominators(n, dot(n, pts[0]));
    fs.equations.push_back({std::move(normal), std::move(offset)});
  }
  if (m == 0) return fs;

  std::set<std::pair<IntVec, Int>> seen;
  for_each_subset(pts.size(), m, [&](const std::vector<std::size_t>& idx) {
    RatMat rows;
    for (std::size_t i = 1; i < idx.size(); ++i) rows.push_back(pts[idx[i]] - pts[idx[0]]);
    for (const auto& n : span_normals) rows.push_back(n);
    if (rank(rows) != d - 1) return;
    RatVec n = nullspace(rows, d).front();
    Rat c = dot(n, pts[idx[0]]);
    bool any_above = false;
    bool any_below = false;
    for (const auto& p : pts) {
      Rat v = dot(n, p);
      if (v > c) any_above = true;
      if (v < c) any_below = true;
    }
    if (any_above && any_below) return;
    if (any_above) {
      for (auto& x : n) x = -x;
      c = -c;
    }
    auto key = clear_denominators(n, c);
    if (seen.insert(key).second) fs.inequalities.push_back({key.first, key.second});
  });
  return fs;
}

FacetSystem facet_system(const Simplex& s) { return facet_system(s.vertices(), s.dim()); }
FacetSystem facet_system(const Polytope& p) { return facet_system(p.vertices(), p.dim()); }

bool contains(const Simplex& s, const Point& x, Mode mode) { return facet_system(s).contains(x, mode); }
bool contains(const Polytope& p, const Point& x, Mode mode) { return facet_system(p).contains(x, mode); }

// ---------------------------------------------------------------- volume

namespace {

Int factorial(std::size_t n) {
  Int r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

}  // namespace

Rat volume(const Simplex& s) {
  const std::size_t d = s.ambient_dim();
  if (s.dim() != static_cast<int>(d)) throw Error(ErrorCode::NotFullDim, "volume of a lower-dimensional simplex");
  RatMat edges;
  for (std::size_t i = 1; i < s.vertices().size(); ++i) edges.push_back(s.vertices()[i] - s.vertices()[0]);
  // Clear denominators so the determinant stays integral.
  Int l = 1;
  for (const auto& row : edges)
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntMat m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = Rat(edges[i][j] * l).get_num();
  Int dt = abs(det(m));
  Int scale = factorial(d);
  for (std::size_t i = 0; i < d; ++i) scale *= l;
  Rat v(dt, scale);
  v.canonicalize();
  return v;
}

std::vector<Simplex> coning_triangulation(const Polytope& p) {
  if (p.dim() == 0) return {Simplex({p.vertices().front()})};
  const Point& apex = p.vertices().front();
  FacetSystem fs = facet_system(p);
  std::vector<Simplex> out;
  for (const auto& ineq : fs.inequalities) {
    if (dot(ineq.normal, apex) == Rat(ineq.offset)) continue;
    std::vector<Point> facet;
    for (const auto& v : p.vertices())
      if (dot(ineq.normal, v) == Rat(ineq.offset)) facet.push_back(v);
    for (const auto& s : coning_triangulation(Polytope::from_points(facet))) {
      std::vector<Point> vs = s.vertices();
      vs.insert(vs.begin(), apex);
      out.emplace_back(std::move(vs));
    }
  }
  return out;
}

Rat volume(const Polytope& p) {
  if (p.dim() != static_cast<int>(p.ambient_dim())) return 0;
  Rat total = 0;
  for (const auto& s : coning_triangulation(p)) total += volume(s);
  return total;
}

// ---------------------------------------------------------------- lattice points

Box scaled_bounding_box(std::span<const Point> points, const Int& s) {
  const std::size_t d = points.front().size();
  Box box{std::vector<Int>(d), std::vector<Int>(d)};
  for (std::size_t i = 0; i < d; ++i) {
    Rat lo = points.front()[i];
    Rat hi = lo;
    for (const auto& p : points) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    box.lo[i] = ceil_of(lo * Rat(s));
    box.hi[i] = floor_of(hi * Rat(s));
  }
  return box;
}

namespace {

std::vector<Point> scan_points(const FacetSystem& fs, std::span<const Point> vertices, const Int& scale, Mode mode) {
  Box box = scaled_bounding_box(vertices, scale);
  const std::size_t d = box.lo.size();
  std::vector<Point> out;
  for (std::size_t i = 0; i < d; ++i)
    if (box.lo[i] > box.hi[i]) return out;
  // Work on the grid y = scale * x with integer constraints.
  std::vector<Int> eq_rhs, ineq_rhs;
  for (const auto& eq : fs.equations) eq_rhs.push_back(eq.offset * scale);
  for (const auto& ineq : fs.inequalities) ineq_rhs.push_back(ineq.offset * scale);
  const bool strict = mode == Mode::RelInt;
  Int acc;
  auto inside = [&](const IntVec& y) {
    for (std::size_t k = 0; k < eq_rhs.size(); ++k) {
      acc = 0;
      for (std::size_t i = 0; i < d; ++i) acc += fs.equations[k].normal[i] * y[i];
      if (acc != eq_rhs[k]) return false;
    }
    for (std::size_t k = 0; k < ineq_rhs.size(); ++k) {
      acc = 0;
      for (std::size_t i = 0; i < d; ++i) acc += fs.inequalities[k].normal[i] * y[i];
      if (strict ? acc >= ineq_rhs[k] : acc > ineq_rhs[k]) return false;
    }
    return true;
  };
  IntVec y = box.lo;
  while (true) {
    if (inside(y)) {
      Point x(d);
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = Rat(y[i]) / Rat(scale);
      }
      out.push_back(std::move(x));
    }
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (y[i] < box.hi[i]) {
        ++y[i];
        break;
      }
      y[i] = box.lo[i];
      if (i == 0) return out;
    }
  }
}

}  // namespace

std::vector<Point> lattice_points(const Simplex& s, const Int& scale, Mode mode) {
  return scan_points(facet_system(s), s.vertices(), scale, mode);
}

std::vector<Point> lattice_points(const Polytope& p, const Int& scale, Mode mode) {
  return scan_points(facet_system(p), p.vertices(), scale, mode);
}

Int count_scaled_points(const FacetSystem& fs, std::span<const Point> vertices, const Int& scale, Mode mode) {
  Box box = scaled_bounding_box(vertices, scale);
  const std::size_t d = box.lo.size();
  for (std::size_t i = 0; i < d; ++i)
    if (box.lo[i] > box.hi[i]) return 0;
  const std::size_t last = d - 1;
  const bool strict = mode == Mode::RelInt;

  Int total = 0;
  IntVec y(box.lo.begin(), box.lo.begin() + static_cast<std::ptrdiff_t>(last));
  Int r, q;
  while (true) {
    Int lo = box.lo[last];
    Int hi = box.hi[last];
    bool empty = false;
    auto residual = [&](const IntVec& normal, const Int& offset) {
      r = offset * scale;
      for (std::size_t i = 0; i < last; ++i) r -= normal[i] * y[i];
    };
    for (const auto& eq : fs.equations) {
      residual(eq.normal, eq.offset);
      const Int& a = eq.normal[last];
      if (a == 0) {
        if (r != 0) empty = true;
      } else if (!mpz_divisible_p(r.get_mpz_t(), a.get_mpz_t())) {
        empty = true;
      } else {
        q = r / a;
        if (q > lo) lo = q;
        if (q < hi) hi = q;
      }
      if (empty || lo > hi) break;
    }
    if (!empty && lo <= hi) {
      for (const auto& ineq : fs.inequalities) {
        residual(ineq.normal, ineq.offset);
        const Int& a = ineq.normal[last];
        if (a == 0) {
          if (strict ? r <= 0 : r < 0) empty = true;
        } else if (a > 0) {
          // a t <= r  (or <)
          if (strict) {
            mpz_cdiv_q(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t());
            q -= 1;
          } else {
            mpz_fdiv_q(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t());
          }
          if (q < hi) hi = q;
        } else {
          // a < 0: t >= r / a  (or >)
          if (strict) {
            mpz_fdiv_q(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t());
            q += 1;
          } else {
            mpz_cdiv_q(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t());
          }
          if (q > lo) lo = q;
        }
        if (empty || lo > hi) break;
      }
    }
    if (!empty && lo <= hi) total += hi - lo + 1;

    std::size_t i = last;
    while (true) {
      if (i == 0) return total;
      --i;
      if (y[i] < box.hi[i]) {
        ++y[i];
        break;
      }
      y[i] = box.lo[i];
    }
  }
}

bool affine_span_has_lattice_point(std::span<const Point> points) {
  FacetSystem fs = facet_system(points);
  if (fs.equations.empty()) return true;
  std::vector<IntVec> rows;
  IntVec rhs;
  for (const auto& eq : fs.equations) {
    rows.push_back(eq.normal);
    rhs.push_back(eq.offset);
  }
  return integer_solution(IntMat::from_rows(rows), rhs).has_value();
}

bool affine_span_has_lattice_point(const Simplex& s) { return affine_span_has_lattice_point(s.vertices()); }

// ---------------------------------------------------------------- feasibility

namespace {

bool trivially_satisfied(const LinearConstraint& c) {
  switch (c.rel) {
    case Relation::Le: return 0 <= c.b;
    case Relation::Lt: return 0 < c.b;
    case Relation::Eq: return c.b == 0;
  }
  return false;
}

bool all_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

bool rational_feasible(std::vector<LinearConstraint> system, std::size_t vars) {
  // Substitute equalities away.
  while (true) {
    auto it = std::find_if(system.begin(), system.end(), [](const LinearConstraint& c) { return c.rel == Relation::Eq; });
    if (it == system.end()) break;
    LinearConstraint eq = *it;
    system.erase(it);
    std::size_t j = 0;
    while (j < vars && eq.a[j] == 0) ++j;
    if (j == vars) {
      if (eq.b != 0) return false;
      continue;
    }
    for (auto& c : system) {
      if (c.a[j] == 0) continue;
      Rat f = c.a[j] / eq.a[j];
      for (std::size_t i = 0; i < vars; ++i) c.a[i] -= f * eq.a[i];
      c.b -= f * eq.b;
    }
  }

  for (std::size_t j = 0; j < vars; ++j) {
    std::vector<LinearConstraint> pos, neg, next;
    for (auto& c : system) {
      if (c.a[j] > 0)
        pos.push_back(std::move(c));
      else if (c.a[j] < 0)
        neg.push_back(std::move(c));
      else
        next.push_back(std::move(c));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Rat fp = 1 / p.a[j];
        Rat fn = -1 / n.a[j];
        LinearConstraint c{RatVec(vars), fp * p.b + fn * n.b,
                           (p.rel == Relation::Lt || n.rel == Relation::Lt) ? Relation::Lt : Relation::Le};
        for (std::size_t i = 0; i < vars; ++i) c.a[i] = fp * p.a[i] + fn * n.a[i];
        c.a[j] = 0;
        next.push_back(std::move(c));
      }
    }
    system.clear();
    for (auto& c : next) {
      if (all_zero(c.a)) {
        if (!trivially_satisfied(c)) return false;
      } else {
        system.push_back(std::move(c));
      }
    }
  }
  for (const auto& c : system)
    if (!trivially_satisfied(c)) return false;
  return true;
}

namespace {

// Some constraint of `fs` puts relint(fs body) and conv(other) on opposite sides.
bool separated(const FacetSystem& fs, std::span<const Point> other) {
  for (const auto& ineq : fs.inequalities) {
    Rat c(ineq.offset);
    if (std::all_of(other.begin(), other.end(), [&](const Point& v) { return dot(ineq.normal, v) >= c; })) return true;
  }
  for (const auto& eq : fs.equations) {
    Rat c(eq.offset);
    bool ge = true, le = true, gt = false, lt = false;
    for (const auto& v : other) {
      Rat x = dot(eq.normal, v);
      if (x < c) { ge = false; lt = true; }
      if (x > c) { le = false; gt = true; }
    }
    if ((ge && gt) || (le && lt)) return true;
  }
  return false;
}

void append_relint_system(const FacetSystem& fs, std::vector<LinearConstraint>& out) {
  for (const auto& eq : fs.equations) out.push_back({to_rat(eq.normal), Rat(eq.offset), Relation::Eq});
  for (const auto& ineq : fs.inequalities) out.push_back({to_rat(ineq.normal), Rat(ineq.offset), Relation::Lt});
}

bool disjoint_with_systems(const FacetSystem& fa, std::span<const Point> va, const FacetSystem& fb,
                           std::span<const Point> vb) {
  if (separated(fa, vb) || separated(fb, va)) return true;
  std::vector<LinearConstraint> system;
  append_relint_system(fa, system);
  append_relint_system(fb, system);
  return !rational_feasible(std::move(system), fa.ambient);
}

}  // namespace

bool pieces_disjoint(const Simplex& a, const Simplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DegenerateInput, "ambient dimension mismatch");
  return disjoint_with_systems(facet_system(a), a.vertices(), facet_system(b), b.vertices());
}

std::optional<std::pair<std::size_t, std::size_t>> find_overlapping_pair(std::span<const Simplex> pieces) {
  const std::size_t n = pieces.size();
  if (n < 2) return std::nullopt;
  const std::size_t d = pieces.front().ambient_dim();
  std::vector<RatVec> lo(n, RatVec(d)), hi(n, RatVec(d));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& vs = pieces[k].vertices();
    for (std::size_t i = 0; i < d; ++i) {
      lo[k][i] = hi[k][i] = vs.front()[i];
      for (const auto& v : vs) {
        lo[k][i] = std::min(lo[k][i], v[i]);
        hi[k][i] = std::max(hi[k][i], v[i]);
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lo[a][0] < lo[b][0]; });

  std::vector<std::optional<FacetSystem>> systems(n);
  auto system_of = [&](std::size_t k) -> const FacetSystem& {
    if (!systems[k]) systems[k] = facet_system(pieces[k]);
    return *systems[k];
  };

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t j = order[b];
      if (lo[j][0] > hi[i][0]) break;
      bool overlap = true;
      for (std::size_t c = 1; c < d && overlap; ++c) overlap = lo[j][c] <= hi[i][c] && lo[i][c] <= hi[j][c];
      if (!overlap) continue;
      if (!disjoint_with_systems(system_of(i), pieces[i].vertices(), system_of(j), pieces[j].vertices()))
        return std::make_pair(std::min(i, j), std::max(i, j));
    }
  }
  return std::nullopt;
}

PointAudit point_audit(const Polytope& body, std::span<const Simplex> pieces, const Int& scale, Mode body_mode) {
  PointAudit audit;
  std::map<Point, int> hits;
  for (auto& p : lattice_points(body, scale, body_mode)) hits.emplace(std::move(p), 0);
  audit.body_points = hits.size();
  for (const auto& piece : pieces) {
    for (const auto& p : lattice_points(piece, scale, Mode::RelInt)) {
      auto it = hits.find(p);
      if (it == hits.end())
        ++audit.stray;
      else
        ++it->second;
    }
  }
  for (const auto& [p, n] : hits) {
    if (n == 0) ++audit.uncovered;
    if (n > 1) ++audit.multiply_covered;
  }
  return audit;
}

}  // namespace equidec
