#pragma once

/**
 * Exact polytope and simplex primitives in dimension <= 3.
 *
 * Bodies are described by vertex lists of rational points. Membership goes
 * through a FacetSystem: integer equations for the affine span plus integer
 * facet inequalities inside the span. Nothing here touches floating point.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "equidec/arith.hpp"

namespace equidec {

using Point = RatVec;

enum class Mode { Closed, RelInt };

Point make_point(std::initializer_list<Rat> coords);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rat& s, const Point& a);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const Point& b);
bool is_lattice_point(const Point& p);
/// Pads with zero coordinates up to `d`.
Point embed(const Point& p, std::size_t d);

/// Affine dimension of a point set (-1 when empty).
int affine_dimension(std::span<const Point> points);

/// Closed simplex given by an ordered list of affinely independent vertices.
/// Openness is a property of how a simplex is used, not of the value.
class Simplex {
 public:
  explicit Simplex(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t ambient_dim() const noexcept { return vertices_.front().size(); }

  Simplex scaled(const Rat& s) const;
  Simplex mapped(const UnimodularMap& map) const;
  /// Vertices sorted lexicographically; equal for simplices with the same vertex set.
  std::vector<Point> sorted_vertices() const;

  bool operator==(const Simplex& rhs) const = default;

 private:
  std::vector<Point> vertices_;
};

/// Convex hull of finitely many rational points, stored by its irredundant
/// vertex list (lexicographically sorted).
class Polytope {
 public:
  /// Reduces the generating set to hull vertices.
  static Polytope from_points(std::vector<Point> points);
  static Polytope from_simplex(const Simplex& s);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  int dim() const noexcept { return dim_; }
  std::size_t ambient_dim() const noexcept { return vertices_.front().size(); }

  Polytope embedded(std::size_t d) const;
  Polytope mapped(const UnimodularMap& map) const;
  bool is_lattice() const;

  bool operator==(const Polytope& rhs) const = default;

 private:
  Polytope(std::vector<Point> vertices, int dim) : vertices_(std::move(vertices)), dim_(dim) {}

  std::vector<Point> vertices_;
  int dim_ = -1;
};

/// normal . x <= offset, integer and jointly primitive.
struct Inequality {
  IntVec normal;
  Int offset;
  bool operator==(const Inequality&) const = default;
};

/// normal . x == offset, integer and jointly primitive.
struct Equation {
  IntVec normal;
  Int offset;
  bool operator==(const Equation&) const = default;
};

struct FacetSystem {
  std::size_t ambient = 0;
  int dim = -1;
  std::vector<Equation> equations;
  std::vector<Inequality> inequalities;

  /// Closed: all equations and weak inequalities. RelInt: equations and
  /// strict inequalities.
  bool contains(const Point& x, Mode mode) const;
};

/**
 * H-description of conv(points) inside its affine span.
 *
 * Facets are found by enumerating affinely independent dim-subsets of the
 * points and keeping the supporting hyperplanes; fine for the handful of
 * vertices bodies carry here. Throws DegenerateInput if claimed_dim >= 0 and
 * differs from the actual affine dimension.
 */
FacetSystem facet_system(std::span<const Point> points, int claimed_dim = -1);
FacetSystem facet_system(const Simplex& s);
FacetSystem facet_system(const Polytope& p);

bool contains(const Simplex& s, const Point& x, Mode mode);
bool contains(const Polytope& p, const Point& x, Mode mode);

/// Full-dimensional volume |det(edges)| / d!. Throws NotFullDim.
Rat volume(const Simplex& s);
/// d-dimensional volume of the hull; zero for lower-dimensional polytopes.
/// Computed from a boundary-coning triangulation, independent of placing.
Rat volume(const Polytope& p);

/// Boundary-coning triangulation of a polytope into full-span simplices.
std::vector<Simplex> coning_triangulation(const Polytope& p);

struct Box {
  std::vector<Int> lo;
  std::vector<Int> hi;
};

/// Integer box containing s * conv(points).
Box scaled_bounding_box(std::span<const Point> points, const Int& s);

/// Points of (1/scale) Z^d in the body, by box scan with per-point containment.
std::vector<Point> lattice_points(const Simplex& s, const Int& scale, Mode mode);
std::vector<Point> lattice_points(const Polytope& p, const Int& scale, Mode mode);

/**
 * |B cap (1/scale) Z^d| by scanning all but the last coordinate and
 * intersecting the fibre with the constraint system; no per-point test.
 */
Int count_scaled_points(const FacetSystem& fs, std::span<const Point> vertices, const Int& scale, Mode mode);

bool affine_span_has_lattice_point(const Simplex& s);
bool affine_span_has_lattice_point(std::span<const Point> points);

enum class Relation { Le, Lt, Eq };

/// a . x (relation) b
struct LinearConstraint {
  RatVec a;
  Rat b;
  Relation rel;
};

/// Exact rational feasibility via Fourier-Motzkin elimination with strictness tracking.
bool rational_feasible(std::vector<LinearConstraint> system, std::size_t vars);

/// True iff relint(a) and relint(b) do not meet.
bool pieces_disjoint(const Simplex& a, const Simplex& b);

/// Pairwise relint-disjointness of a family; sweep over bounding boxes, then
/// exact tests. Returns the first offending pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_overlapping_pair(std::span<const Simplex> pieces);

struct PointAudit {
  std::size_t body_points = 0;  ///< points of the closed body at this scale
  std::size_t uncovered = 0;    ///< body points in no piece
  std::size_t multiply_covered = 0;
  std::size_t stray = 0;  ///< piece points outside the body
  bool ok() const { return uncovered == 0 && multiply_covered == 0 && stray == 0; }
};

/// Checks that every point of (1/scale) Z^d in the body (closed, or its
/// relative interior) lies in the relative interior of exactly one piece.
PointAudit point_audit(const Polytope& body, std::span<const Simplex> pieces, const Int& scale,
                       Mode body_mode = Mode::Closed);

}  // namespace equidec
