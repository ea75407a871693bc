#pragma once

/**
 * Decomposition of lattice 3-polytopes into relatively open half-unimodular
 * simplices.
 *
 * An empty tetrahedron T(p, q) lies between the planes z = 0 and z = 1. Its
 * section at z = 1/2 is a parallelogram Q whose half-lattice points are the
 * four corners plus q - 1 interior points. Ordering those points by the
 * second coordinate gives a monotone path a_0..a_q, ordering them by
 * f(x) = q x1 - p x2 gives a second path b_0..b_q. The lower half of T is
 * triangulated by coning the two sides of the a-path to the bottom vertices
 * and filling the gap to the bottom edge; the upper half does the same with
 * the b-path and the top edge. Every tetrahedron produced that way is
 * half-unimodular and owns exactly one lattice point, one of its vertices.
 */

#include <vector>

#include "equidec/ehrhart.hpp"
#include "equidec/geometry.hpp"

namespace equidec {

struct FundamentalPoints {
  std::vector<Point> a;  ///< a_0..a_q, increasing second coordinate
  std::vector<Point> b;  ///< b_0..b_q, increasing f
  long p_prime = 0;      ///< inverse of -p mod q (0 when q = 1)
};

/// Throws NotCoprime unless gcd(p, q) = 1 and 0 <= p < q.
FundamentalPoints fundamental_points(long p, long q);

/**
 * Ear clipping of a simple polygon in a plane z = const, given as a vertex
 * cycle in either orientation. Ears must have positive area and contain no
 * other cycle vertex, so every triangle is empty for the lattice the
 * vertices come from. Produces vertexcount - 2 triangles or throws
 * DegeneratePolygon.
 */
std::vector<Simplex> triangulate_monotone_region(const std::vector<Point>& cycle);

/// 4q closed tetrahedra triangulating T(p, q) cap {z <= 1/2}.
std::vector<Simplex> decompose_T_minus(long p, long q);
/// 4q closed tetrahedra triangulating T(p, q) cap {z >= 1/2}.
std::vector<Simplex> decompose_T_plus(long p, long q);

struct OpenSimplexPiece {
  Simplex simplex;
  SimplexType type;
  UnimodularMap to_canonical;  ///< to_canonical(simplex) = canonical_simplex(type) as vertex sets
};

/// Open pieces partitioning the interior of T(p, q): 8q of them are tetrahedra.
std::vector<OpenSimplexPiece> interior_open_decomposition(long p, long q);

struct TemplatePiece {
  Simplex simplex;
  SimplexType type;
};

/// Partition of the relatively open standard i-simplex (i <= 2, in R^3) into
/// open half-unimodular pieces, none of type D2'.
std::vector<TemplatePiece> open_template(int i);

/// 2 * s is a unimodular lattice simplex.
bool is_half_unimodular(const Simplex& s);

/// Class of a half-unimodular simplex in R^3. Throws NotHalfUnimodular.
SimplexType classify(const Simplex& s);

/// Unimodular map sending s onto the canonical representative of t. Throws
/// NoMapFound if the search fails (which means classify and t disagree).
UnimodularMap canonical_map(const Simplex& s, SimplexType t);

struct Decomposition {
  std::vector<OpenSimplexPiece> pieces;
  Polytope source;
};

/// Throws NotLatticePolytope. Inputs with fewer than three coordinates are
/// embedded in R^3 first.
Decomposition decompose_polytope(const Polytope& p);

std::vector<Simplex> piece_simplices(const Decomposition& d);

struct DecompositionAudit {
  bool volume_ok = false;
  bool disjoint_ok = false;
  bool points_ok = false;
  bool ehrhart_ok = false;
  bool types_ok = false;  ///< only the seven basis classes occur
  bool ok() const { return volume_ok && disjoint_ok && points_ok && ehrhart_ok && types_ok; }
};

/// Exact checks of the partition property: volume sum, pairwise relint
/// disjointness, point audits at the given scales, and the Ehrhart identity.
DecompositionAudit audit_decomposition(const Decomposition& d, const std::vector<long>& scales = {1, 2, 4});

}  // namespace equidec
