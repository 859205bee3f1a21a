#pragma once

// Combinatorial critical points: visibility of simplex facets from an
// external lattice point O, O-indices, roots and the simplices behind and in
// front of interior faces.

#include <cstdint>
#include <vector>

#include "patchwork/signs.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

/// O lies outside the polytope and on no hyperplane spanned by an (n-1)-face.
bool is_generic(const Triangulation& tri, const LatticePoint& origin);

/// Staggered point deep in the negative orthant, perturbed with a fixed seed
/// until generic. Throws std::runtime_error if no generic point is found.
LatticePoint find_generic_origin(const Triangulation& tri);

struct VisibilityRecord {
  std::size_t cell = 0;
  /// visible[j] refers to the facet opposite the j-th vertex of the cell.
  std::vector<bool> visible;
  std::size_t o_index = 0;
  /// Vertices lying on every visible facet, i.e. opposite the non-visible ones.
  Face root;
  Face coroot;
};

/// Throws std::domain_error if O lies on a facet hyperplane of the cell.
VisibilityRecord visibility(const Triangulation& tri, std::size_t cell, const LatticePoint& origin);

/// Copies of the cell whose root vertices share one sign and whose coroot
/// vertices carry the opposite sign.
std::uint64_t real_critical_copies(const Triangulation& tri, const VisibilityRecord& rec, const SignDistribution& signs);
std::uint64_t real_critical_copies(const Triangulation& tri, std::size_t cell, const LatticePoint& origin,
                                   const SignDistribution& signs);

/// The star cell entered from the barycenter of an interior face when moving
/// away from O (behind) or towards O (in front). Throws std::invalid_argument
/// for boundary faces and std::domain_error for non-generic O.
std::size_t behind(const Triangulation& tri, const Face& face, const LatticePoint& origin);
std::size_t in_front(const Triangulation& tri, const Face& face, const LatticePoint& origin);

struct IndexHistogram {
  LatticePoint origin;
  /// S[i], S_bar[i] for i = 1..n; entry 0 is unused and zero.
  std::vector<std::uint64_t> S, S_bar;
  /// c_plus[i], c_minus[i] for i = 0..n.
  std::vector<std::uint64_t> c_plus, c_minus;
};

/// A critical copy whose root is positive counts as a critical point of
/// positive value and index i^O; otherwise of negative value and index n - i^O.
IndexHistogram index_histogram(const Triangulation& tri, const LatticePoint& origin, const SignDistribution& signs);

}  // namespace patchwork
