#pragma once

// Signed triangulations with known topology, ready for the patchwork
// pipeline. All outputs are dilations by two of integer triangulations and
// ship heights certifying convexity.

#include <optional>
#include <string>
#include <vector>

#include "patchwork/patchwork.hpp"

namespace patchwork {

struct Construction {
  /// Identifier used on the command line, e.g. "lemma56".
  std::string name;
  Triangulation tri;
  HeightFunction heights;
  SignDistribution signs;
  Ambient ambient;
  std::optional<LatticePoint> origin;
};

/// Delta_{m/2}^n cut by all lattice hyperplanes parallel to its facets,
/// refined by pulling, checkerboard signs, doubled; projective ambient.
/// The real part is m/2 disjoint spheres. Identifier "prop51".
Construction nested_spheres(std::size_t n, Coord m);

/// The triangle (0,0), (2,1), (1,2) scaled by m/2, cut into triangles of
/// normalized area 3 that each hold one interior point, refined primitively,
/// with - exactly on the refinement points; affine ambient. b_0 = m^2.
/// Identifier "prop53".
Construction triangle_ovals(Coord m);

/// The simplex with vertices 0 and (1,...,1) + e_j scaled by m/2, cut by
/// the hyperplanes sum x = (n+1)k and sum x - (n+1) x_j = -(n+1)k, coned at
/// the lattice point inside each cell; - on the cone points. Affine ambient.
/// Identifier "thm54".
Construction cone_spheres(std::size_t n, Coord m);

/// Six tetrahedra on the cube [0,2]^3 with - at (2,0,0), (0,2,0), (2,2,2);
/// ambient (P^1)^3. Identifier "lemma56".
Construction cube_block();

/// The box [0,2k1] x [0,2k2] x [0,2k3] tiled by mirror images of the cube
/// block; ambient (P^1)^3. Identifier "prop57".
Construction cube_tiling(Coord k1, Coord k2, Coord k3);

struct ConstructionParams {
  std::size_t n = 2;
  Coord m = 2;
  std::vector<Coord> k{1, 1, 1};
};

/// Dispatch on the identifier. Throws std::invalid_argument for unknown
/// names or invalid parameters.
Construction construct(const std::string& name, const ConstructionParams& params);

std::vector<std::string> construction_names();

/// Interior lattice points of the cells cut out by the cone_spheres
/// hyperplanes: the lattice points whose coordinates u = W^{-1} x in the
/// standard simplex frame have no integer entry and non-integer sum.
std::vector<LatticePoint> cone_points(std::size_t n, Coord m);

}  // namespace patchwork
