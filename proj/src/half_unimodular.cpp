#include "equidec/half_unimodular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "equidec/triangulation.hpp"
#include "equidec/white.hpp"

namespace equidec {

namespace {

const Rat kHalf(1, 2);

Point half_point(const Rat& x, const Rat& y, const Rat& z) { return kHalf * make_point({x, y, z}); }

void require_coprime(long p, long q) {
  if (q < 1 || p < 0 || p >= std::max(q, 1L) || std::gcd(p, q) != 1)
    throw Error(ErrorCode::NotCoprime, "need 0 <= p < q with gcd(p, q) = 1, got p = " + std::to_string(p) +
                                           ", q = " + std::to_string(q));
}

Rat orient2d(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool in_closed_triangle(const Point& x, const Point& a, const Point& b, const Point& c) {
  return orient2d(a, b, x) >= 0 && orient2d(b, c, x) >= 0 && orient2d(c, a, x) >= 0;
}

Simplex cone(const Point& apex, const Simplex& base) {
  std::vector<Point> vs{apex};
  vs.insert(vs.end(), base.vertices().begin(), base.vertices().end());
  return Simplex(std::move(vs));
}

IntVec doubled_integral(const Point& p) {
  IntVec v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat x = 2 * p[i];
    if (!is_integral(x)) throw Error(ErrorCode::NotHalfUnimodular, "vertex outside the half-integer lattice");
    v[i] = x.get_num();
  }
  return v;
}

bool is_saturated(const std::vector<IntVec>& vs) {
  if (vs.empty()) return true;
  HermiteResult h = hnf(IntMat::from_rows(vs));
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (i >= h.h.cols() || h.h(i, i) != 1) return false;
  return true;
}

std::vector<IntVec> doubled_edges(const std::vector<Point>& vs) {
  IntVec base = doubled_integral(vs.front());
  std::vector<IntVec> edges;
  for (std::size_t k = 1; k < vs.size(); ++k) {
    IntVec e = doubled_integral(vs[k]);
    for (std::size_t c = 0; c < e.size(); ++c) e[c] -= base[c];
    edges.push_back(std::move(e));
  }
  return edges;
}

// Square {0,1}-matrices with determinant +-1, identity first.
std::vector<IntMat> small_unimodular(std::size_t n) {
  std::vector<IntMat> out{IntMat::identity(n)};
  if (n == 0) return out;
  const unsigned cells = static_cast<unsigned>(n * n);
  for (unsigned mask = 0; mask < (1u << cells); ++mask) {
    IntMat m(n, n);
    for (unsigned b = 0; b < cells; ++b) m(b / n, b % n) = (mask >> b) & 1u;
    if (m == out.front()) continue;
    Int d = det(m);
    if (d == 1 || d == -1) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- fundamental points

FundamentalPoints fundamental_points(long p, long q) {
  require_coprime(p, q);
  FundamentalPoints fp;
  fp.p_prime = q == 1 ? 0 : inv_mod(Int(-p), Int(q)).get_si();
  const Point start = half_point(0, 0, 1);
  const Point end = half_point(p + 1, q, 1);
  fp.a.push_back(start);
  fp.b.push_back(start);
  for (long i = 1; i < q; ++i) {
    const Int ceil_ip = ceil_of(Rat(Int(i) * p) / Rat(q));
    fp.a.push_back(half_point(Rat(ceil_ip), i, 1));
  }
  for (long j = 1; j < q; ++j) {
    const long y = (j * fp.p_prime) % q;
    const Rat x = Rat(Int(j) + Int(y) * p) / Rat(q);
    fp.b.push_back(half_point(x, y, 1));
  }
  fp.a.push_back(end);
  fp.b.push_back(end);
  return fp;
}

// ---------------------------------------------------------------- region triangulation

std::vector<Simplex> triangulate_monotone_region(const std::vector<Point>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) throw Error(ErrorCode::DegeneratePolygon, "polygon needs at least three vertices");
  Rat area2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = cycle[i];
    const Point& b = cycle[(i + 1) % n];
    area2 += a[0] * b[1] - a[1] * b[0];
  }
  if (area2 == 0) throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area");

  std::vector<std::size_t> ring(n);
  std::iota(ring.begin(), ring.end(), 0);
  if (area2 < 0) std::reverse(ring.begin(), ring.end());

  std::vector<Simplex> triangles;
  while (ring.size() > 3) {
    bool clipped = false;
    for (std::size_t k = 0; k < ring.size() && !clipped; ++k) {
      const std::size_t i0 = ring[(k + ring.size() - 1) % ring.size()];
      const std::size_t i1 = ring[k];
      const std::size_t i2 = ring[(k + 1) % ring.size()];
      if (orient2d(cycle[i0], cycle[i1], cycle[i2]) <= 0) continue;
      bool blocked = false;
      for (std::size_t other : ring) {
        if (other == i0 || other == i1 || other == i2) continue;
        if (in_closed_triangle(cycle[other], cycle[i0], cycle[i1], cycle[i2])) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      triangles.emplace_back(std::vector<Point>{cycle[i0], cycle[i1], cycle[i2]});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (!clipped) throw Error(ErrorCode::DegeneratePolygon, "no clippable ear");
  }
  if (orient2d(cycle[ring[0]], cycle[ring[1]], cycle[ring[2]]) <= 0)
    throw Error(ErrorCode::DegeneratePolygon, "last ear is degenerate");
  triangles.emplace_back(std::vector<Point>{cycle[ring[0]], cycle[ring[1]], cycle[ring[2]]});
  return triangles;
}

// ---------------------------------------------------------------- halves of T(p, q)

std::vector<Simplex> decompose_T_minus(long p, long q) {
  FundamentalPoints fp = fundamental_points(p, q);
  const Point origin = make_point({0, 0, 0});
  const Point e1 = make_point({1, 0, 0});
  const Point mid = half_point(1, 0, 0);
  std::vector<Point> left = fp.a;
  left.push_back(half_point(p, q, 1));  // C, on the f = 0 side
  std::vector<Point> right = fp.a;
  right.push_back(half_point(1, 0, 1));  // B

  std::vector<Simplex> tets;
  for (const auto& t : triangulate_monotone_region(left)) tets.push_back(cone(origin, t));
  for (const auto& t : triangulate_monotone_region(right)) tets.push_back(cone(e1, t));
  for (long i = 1; i <= q; ++i) {
    const auto& lo = fp.a[static_cast<std::size_t>(i - 1)];
    const auto& hi = fp.a[static_cast<std::size_t>(i)];
    tets.emplace_back(std::vector<Point>{origin, mid, lo, hi});
    tets.emplace_back(std::vector<Point>{mid, e1, lo, hi});
  }
  return tets;
}

std::vector<Simplex> decompose_T_plus(long p, long q) {
  FundamentalPoints fp = fundamental_points(p, q);
  const Point apex0 = make_point({0, 0, 1});
  const Point apex1 = make_point({p, q, 1});
  const Point mid = half_point(p, q, 2);
  std::vector<Point> down = fp.b;
  down.push_back(half_point(1, 0, 1));  // B, on the x2 = 0 side
  std::vector<Point> up = fp.b;
  up.push_back(half_point(p, q, 1));  // C

  std::vector<Simplex> tets;
  for (const auto& t : triangulate_monotone_region(down)) tets.push_back(cone(apex0, t));
  for (const auto& t : triangulate_monotone_region(up)) tets.push_back(cone(apex1, t));
  for (long j = 1; j <= q; ++j) {
    const auto& lo = fp.b[static_cast<std::size_t>(j - 1)];
    const auto& hi = fp.b[static_cast<std::size_t>(j)];
    tets.emplace_back(std::vector<Point>{apex0, mid, lo, hi});
    tets.emplace_back(std::vector<Point>{mid, apex1, lo, hi});
  }
  return tets;
}

namespace {

std::vector<Simplex> all_faces(const std::vector<Simplex>& cells) {
  std::set<std::vector<Point>> seen;
  std::vector<Simplex> faces;
  for (const auto& cell : cells) {
    const std::vector<Point> vs = cell.sorted_vertices();
    const std::size_t n = vs.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Point> f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(vs[i]);
      if (seen.insert(f).second) faces.emplace_back(std::move(f));
    }
  }
  return faces;
}

// relint(face) avoids the boundary of the body iff the face lies in no facet.
bool inside_relint(const Simplex& face, const FacetSystem& body) {
  for (const auto& eq : body.equations)
    for (const auto& v : face.vertices())
      if (dot(eq.normal, v) != Rat(eq.offset)) return false;
  for (const auto& ineq : body.inequalities) {
    const bool all_tight = std::all_of(face.vertices().begin(), face.vertices().end(),
                                       [&](const Point& v) { return dot(ineq.normal, v) == Rat(ineq.offset); });
    if (all_tight) return false;
  }
  return true;
}

OpenSimplexPiece make_piece(Simplex s) {
  SimplexType t = classify(s);
  UnimodularMap m = canonical_map(s, t);
  return {std::move(s), t, std::move(m)};
}

}  // namespace

std::vector<OpenSimplexPiece> interior_open_decomposition(long p, long q) {
  require_coprime(p, q);
  const Point a = half_point(0, 0, 1), b = half_point(1, 0, 1), c = half_point(p, q, 1), d = half_point(p + 1, q, 1);
  const std::vector<Point> lower{make_point({0, 0, 0}), make_point({1, 0, 0}), a, b, c, d};
  const std::vector<Point> upper{make_point({0, 0, 1}), make_point({p, q, 1}), a, b, c, d};
  const std::vector<Point> section{a, b, c, d};
  const FacetSystem lower_fs = facet_system(lower);
  const FacetSystem upper_fs = facet_system(upper);
  const FacetSystem section_fs = facet_system(section);

  std::vector<OpenSimplexPiece> pieces;
  for (const auto& f : all_faces(decompose_T_minus(p, q)))
    if (inside_relint(f, lower_fs)) pieces.push_back(make_piece(f));
  for (const auto& f : all_faces(decompose_T_plus(p, q))) {
    if (inside_relint(f, upper_fs) || inside_relint(f, section_fs)) pieces.push_back(make_piece(f));
  }
  return pieces;
}

// ---------------------------------------------------------------- templates

std::vector<TemplatePiece> open_template(int i) {
  const Point o = make_point({0, 0, 0});
  const Point e1 = make_point({1, 0, 0});
  const Point e2 = make_point({0, 1, 0});
  const Point m1 = half_point(1, 0, 0);
  const Point m2 = half_point(0, 1, 0);
  const Point m12 = half_point(1, 1, 0);
  std::vector<std::vector<Point>> parts;
  switch (i) {
    case 0:
      parts = {{o}};
      break;
    case 1:
      parts = {{o, m1}, {m1}, {m1, e1}};
      break;
    case 2:
      // Corner triangles at e1 and e2; the quadrilateral at the origin is cut
      // along o-m12 so no lattice-free triangle appears.
      parts = {{e1, m1, m12}, {e2, m2, m12}, {o, m1, m12}, {o, m12, m2}, {m1, m12}, {m2, m12}, {o, m12}};
      break;
    default:
      throw Error(ErrorCode::DegenerateInput, "templates exist for dimensions 0, 1, 2");
  }
  std::vector<TemplatePiece> out;
  for (auto& vs : parts) {
    Simplex s(std::move(vs));
    SimplexType t = classify(s);
    out.push_back({std::move(s), t});
  }
  return out;
}

// ---------------------------------------------------------------- classification

bool is_half_unimodular(const Simplex& s) {
  if (s.ambient_dim() != 3) return false;
  for (const auto& v : s.vertices())
    for (const auto& x : v)
      if (!is_integral(2 * x)) return false;
  return is_saturated(doubled_edges(s.vertices()));
}

SimplexType classify(const Simplex& s) {
  if (!is_half_unimodular(s)) throw Error(ErrorCode::NotHalfUnimodular, "2 * simplex is not unimodular");
  const int i = s.dim();
  if (!lattice_points(s, Int(1), Mode::Closed).empty()) {
    static constexpr SimplexType with_point[] = {SimplexType::D0_1, SimplexType::D1_1, SimplexType::D2_1,
                                                 SimplexType::D3_1};
    return with_point[i];
  }
  if (!affine_span_has_lattice_point(s)) {
    static constexpr SimplexType off_lattice[] = {SimplexType::D0_0, SimplexType::D1_0, SimplexType::D2_0};
    if (i <= 2) return off_lattice[i];
  }
  if (i == 2) return SimplexType::D2p;
  if (i == 3) return SimplexType::D3p;
  throw Error(ErrorCode::NotHalfUnimodular, "lattice-free simplex of dimension < 2 whose span meets Z^3");
}

UnimodularMap canonical_map(const Simplex& s, SimplexType t) {
  const std::vector<Point> target = canonical_vertices(t);
  const std::size_t i = static_cast<std::size_t>(type_dim(t));
  if (s.dim() != static_cast<int>(i) || s.ambient_dim() != 3)
    throw Error(ErrorCode::NoMapFound, "simplex dimension does not match its type");

  // W (2 E_k) = 2 F_k for all maps; all such W are B_F * M * B_E^{-1} with
  // M = [[I, A], [0, G]]. The translation is integral iff r - M u is even.
  const IntMat b_f = complete_to_basis(doubled_edges(target), 3);
  const IntVec r = inverse_unimodular(b_f) * doubled_integral(target.front());
  const std::size_t free = 3 - i;
  const std::vector<IntMat> gs = small_unimodular(free);
  std::vector<Point> sorted_target = target;
  std::sort(sorted_target.begin(), sorted_target.end());

  std::vector<std::size_t> order(s.vertices().size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<Point> vs;
    for (std::size_t k : order) vs.push_back(s.vertices()[k]);
    const std::vector<IntVec> edges = doubled_edges(vs);
    if (!is_saturated(edges)) throw Error(ErrorCode::NotHalfUnimodular, "2 * simplex is not unimodular");
    const IntMat b_e = complete_to_basis(edges, 3);
    const IntMat b_e_inv = inverse_unimodular(b_e);
    const IntVec u = b_e_inv * doubled_integral(vs.front());

    for (const IntMat& g : gs) {
      for (unsigned amask = 0; amask < (1u << (i * free)); ++amask) {
        IntMat m = IntMat::identity(3);
        for (std::size_t row = 0; row < i; ++row)
          for (std::size_t col = 0; col < free; ++col) m(row, i + col) = (amask >> (row * free + col)) & 1u;
        for (std::size_t row = 0; row < free; ++row)
          for (std::size_t col = 0; col < free; ++col) m(i + row, i + col) = g(row, col);
        IntVec diff = m * u;
        bool even = true;
        for (std::size_t c = 0; c < 3; ++c) {
          diff[c] = r[c] - diff[c];
          if (!mpz_even_p(diff[c].get_mpz_t())) even = false;
        }
        if (!even) continue;
        IntVec t2 = b_f * diff;
        for (auto& x : t2) x /= 2;
        UnimodularMap map(b_f * m * b_e_inv, std::move(t2));
        if (s.mapped(map).sorted_vertices() == sorted_target) return map;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  throw Error(ErrorCode::NoMapFound, "no unimodular map onto the canonical representative of " + std::string(label(t)));
}

// ---------------------------------------------------------------- polytopes

Decomposition decompose_polytope(const Polytope& input) {
  if (input.ambient_dim() > 3) throw Error(ErrorCode::DegenerateInput, "dimension above 3");
  Polytope p = input.ambient_dim() < 3 ? input.embedded(3) : input;
  if (!p.is_lattice()) throw Error(ErrorCode::NotLatticePolytope, "polytope has non-integral vertices");

  const EmptyTriangulation tri = empty_triangulation(p);

  std::map<int, std::vector<OpenSimplexPiece>> templates;
  auto template_pieces = [&](int dim) -> const std::vector<OpenSimplexPiece>& {
    auto it = templates.find(dim);
    if (it != templates.end()) return it->second;
    std::vector<OpenSimplexPiece> pieces;
    for (auto& tp : open_template(dim)) {
      UnimodularMap m = canonical_map(tp.simplex, tp.type);
      pieces.push_back({std::move(tp.simplex), tp.type, std::move(m)});
    }
    return templates.emplace(dim, std::move(pieces)).first->second;
  };
  std::map<std::pair<long, long>, std::vector<OpenSimplexPiece>> interiors;
  auto interior_pieces = [&](long pp, long qq) -> const std::vector<OpenSimplexPiece>& {
    auto key = std::make_pair(pp, qq);
    auto it = interiors.find(key);
    if (it != interiors.end()) return it->second;
    return interiors.emplace(key, interior_open_decomposition(pp, qq)).first->second;
  };

  Decomposition out{{}, p};
  for (const auto& face : tri.faces) {
    if (face.dim() <= 2) {
      const UnimodularMap to_standard = normalize_low_dim_empty(face);
      const UnimodularMap back = to_standard.inverse();
      for (const auto& piece : template_pieces(face.dim()))
        out.pieces.push_back({piece.simplex.mapped(back), piece.type, piece.to_canonical.compose(to_standard)});
    } else {
      const WhiteForm wf = white_normal_form(face);
      const UnimodularMap back = wf.map.inverse();
      for (const auto& piece : interior_pieces(wf.p, wf.q))
        out.pieces.push_back({piece.simplex.mapped(back), piece.type, piece.to_canonical.compose(wf.map)});
    }
  }
  return out;
}

std::vector<Simplex> piece_simplices(const Decomposition& d) {
  std::vector<Simplex> out;
  out.reserve(d.pieces.size());
  for (const auto& piece : d.pieces) out.push_back(piece.simplex);
  return out;
}

DecompositionAudit audit_decomposition(const Decomposition& d, const std::vector<long>& scales) {
  DecompositionAudit audit;
  const std::vector<Simplex> simplices = piece_simplices(d);

  Rat total = 0;
  for (const auto& s : simplices)
    if (s.dim() == 3) total += volume(s);
  audit.volume_ok = total == volume(d.source);

  audit.disjoint_ok = !find_overlapping_pair(simplices).has_value();

  audit.points_ok = true;
  for (long s : scales) audit.points_ok = audit.points_ok && point_audit(d.source, simplices, Int(s)).ok();

  TypeVector f;
  for (const auto& piece : d.pieces) ++f[piece.type];
  audit.ehrhart_ok = combine(f) == fit_quasipolynomial(d.source, Mode::Closed);
  audit.types_ok = f[SimplexType::D2p] == 0 && f[SimplexType::D3p] == 0;
  return audit;
}

}  // namespace equidec
