#pragma once

// Static figures of a signed triangulation and its hypersurface: SVG for
// plane triangulations, OFF meshes for n = 3. Output bytes depend only on
// the input.

#include <string>

#include "patchwork/patchwork.hpp"

namespace patchwork {

struct SvgOptions {
  /// Draw every reflected copy; otherwise only the positive orthant.
  bool all_copies = true;
};

/// Triangulation edges, then the hypersurface segments joining midpoints of
/// mixed edges, then the vertices (+ filled black, - hollow). x points right,
/// y up, one lattice unit is 20px. Throws std::invalid_argument unless n = 2.
std::string render_svg(const Triangulation& tri, const SignDistribution& signs, const SvgOptions& options = {});

/// One polygon per 2-cell, with corners at the midpoints of its mixed edges
/// in the representative copy; quadrilaterals are split along the staircase
/// diagonal. Every side, glued 1-cell or diagonal, carries a midpoint vertex,
/// so edges are determined by their endpoints even where the gluing
/// identifies both ends of two different sides, and V - E + F recounted from
/// the faces is the Euler characteristic.
/// Throws std::invalid_argument unless n = 3.
std::string render_off(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient);

}  // namespace patchwork
