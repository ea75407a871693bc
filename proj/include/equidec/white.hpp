#pragma once

#include "equidec/geometry.hpp"

namespace equidec {

/// conv{(0,0,0), (1,0,0), (0,0,1), (p,q,1)}
Simplex white_tetrahedron(long p, long q);

struct WhiteForm {
  long p = 0;  ///< 0 <= p < q, gcd(p, q) = 1
  long q = 1;  ///< 6 * volume
  UnimodularMap map = UnimodularMap::identity(3);  ///< map(T) = T(p, q) as vertex sets
  long p_canonical = 0;
};

/// Primitive w with w . vertices taking two consecutive values, two vertices
/// each. Lexicographically smallest up to sign. Throws NotEmpty / NoWidthOne.
IntVec width_one_direction(const Simplex& t);

/// Unimodular normal form T(p, q) of an empty lattice tetrahedron in Z^3.
WhiteForm white_normal_form(const Simplex& t);

/// min{+-p^{+-1} mod q}; 0 for q = 1. Throws NotCoprime.
long canonical_p(long p, long q);

}  // namespace equidec
