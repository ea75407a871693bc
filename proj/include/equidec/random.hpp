#pragma once

#include <random>

#include "equidec/geometry.hpp"

namespace equidec {

/// Random element of GL(d,Z) x Z^d with small entries: a few elementary row
/// operations, a row permutation and signs, translation in [-3,3]^d.
UnimodularMap random_unimodular(std::mt19937& rng, std::size_t d, int steps = 3);

/// Hull of 4..max_points uniform points of {0..bound}^3.
Polytope random_lattice_polytope(std::mt19937& rng, int max_points = 8, int bound = 4);

}  // namespace equidec
