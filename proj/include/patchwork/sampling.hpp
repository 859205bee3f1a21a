#pragma once

// Seeded random inputs: regular triangulations of dilated standard simplices
// and sign distributions.

#include <random>

#include "patchwork/signs.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

struct SampledTriangulation {
  Triangulation tri;
  HeightFunction heights;
};

/// Regular triangulation of the lattice points of Delta_m^n with random
/// integer heights. With `maximal`, a strictly convex quadratic dominates the
/// noise so every point becomes a vertex.
SampledTriangulation random_regular(std::mt19937_64& rng, std::size_t n, Coord m, bool maximal);

/// Same for the lattice points of the box [0, sides_1] x ... x [0, sides_n].
SampledTriangulation random_regular_box(std::mt19937_64& rng, const std::vector<Coord>& sides, bool maximal);

/// Dilation by two of random_regular(rng, n, m / 2, maximal).
SampledTriangulation random_doubled(std::mt19937_64& rng, std::size_t n, Coord m, bool maximal);

/// Unimodular triangulation of Delta_m^n cut out by the hyperplanes y_i in Z
/// and y_i - y_j in Z, where y_k = x_k + ... + x_n.
Triangulation alcove_triangulation(std::size_t n, Coord m);

SignDistribution random_signs(std::mt19937_64& rng, std::size_t count);

}  // namespace patchwork
