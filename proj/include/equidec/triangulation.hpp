#pragma once

#include <vector>

#include "equidec/geometry.hpp"

namespace equidec {

/// Triangulation of a lattice polytope whose vertex set is all of P cap Z^d.
struct EmptyTriangulation {
  int dim = -1;
  /// Closed top-dimensional cells, each an empty lattice simplex.
  std::vector<Simplex> cells;
  /// Every face of every cell, deduplicated, ordered by dimension then vertices.
  std::vector<Simplex> faces;
};

/**
 * Placing triangulation over P cap Z^d in lexicographic order.
 *
 * Each new point is coned to the boundary facets of the current complex it
 * sees strictly; a point outside the current affine span is coned to every
 * cell. Lower-dimensional inputs are first moved by a unimodular map into a
 * coordinate subspace so orientation tests run in full dimension there.
 * Throws NotLatticePolytope.
 */
EmptyTriangulation empty_triangulation(const Polytope& p);

/// All faces of the complex; their relative interiors partition P.
std::vector<Simplex> open_face_partition(const EmptyTriangulation& t);

/// Unimodular map sending an empty lattice simplex of dimension <= 2 onto
/// conv(0), conv(0, e1) or conv(0, e1, e2). Throws NotEmpty.
UnimodularMap normalize_low_dim_empty(const Simplex& s);

/// True iff the simplex has integer vertices and no other lattice points.
bool is_empty_lattice_simplex(const Simplex& s);

}  // namespace equidec
