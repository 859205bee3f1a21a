#pragma once

// Triangulations of full-dimensional lattice polytopes and the symmetric
// extension to all orthants.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "patchwork/lattice.hpp"

namespace patchwork {

/// Face of a triangulation as a sorted tuple of vertex indices.
using Face = std::vector<std::size_t>;
/// Maximal simplex: a face with n+1 vertices.
using Cell = Face;

/// Heights indexed like the triangulation's vertex list.
using HeightFunction = std::vector<Rational>;

/// Face numbers s_0..s_n of faces whose relative interior lies in the open polytope.
using FaceCountVector = std::vector<std::uint64_t>;

/// All faces of all cells, deduplicated and grouped by dimension.
struct FaceLattice {
  std::vector<std::vector<Face>> by_dim;
  std::vector<std::map<Face, std::size_t>> index;
  /// For every (n-1)-face, the cells containing it.
  std::vector<std::vector<std::size_t>> facet_cells;
  /// For every vertex, the cells containing it.
  std::vector<std::vector<std::size_t>> vertex_star;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;
  bool pairwise_checked = false;

  explicit operator bool() const { return ok; }
};

class Triangulation {
 public:
  /// Vertices are sorted lexicographically and cells re-indexed and sorted,
  /// so equal triangulations compare equal. No validity check is made here.
  Triangulation(LatticePolytope polytope, std::vector<LatticePoint> vertices, std::vector<Cell> cells);

  /// Triangulation over the convex hull of the given simplices.
  static Triangulation from_simplices(const std::vector<std::vector<LatticePoint>>& simplices);

  const LatticePolytope& polytope() const { return polytope_; }
  std::size_t dim() const { return polytope_.ambient_dim(); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> find_vertex(const LatticePoint& p) const;
  std::vector<LatticePoint> points(const Face& face) const;

  /// Memoized; safe to call concurrently.
  const FaceLattice& faces() const;

  /// True iff the face is not contained in the boundary of the polytope.
  bool is_interior_face(const Face& face) const;

  /// Cells containing every vertex of the face.
  std::vector<std::size_t> star(const Face& face) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.vertices_ == b.vertices_ && a.cells_ == b.cells_;
  }

 private:
  LatticePolytope polytope_;
  std::vector<LatticePoint> vertices_;
  std::vector<Cell> cells_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Barycentric coordinates of p with respect to a full-dimensional simplex.
std::vector<Rational> barycentric_coordinates(const std::vector<LatticePoint>& simplex, const LatticePoint& p);

/// Checks dimensions, vertex membership, use of every vertex, the volume sum
/// and facet matching. The pairwise proper-intersection test is quadratic in
/// the number of cells and only runs when `pairwise` is set.
ValidationReport validate(const Triangulation& tri, bool pairwise = true);

/// Strict local convexity of the lifted triangulation across every interior
/// facet. Throws std::invalid_argument when heights are missing.
bool certify_convexity(const Triangulation& tri, const HeightFunction& heights);

Triangulation dilate(const Triangulation& tri, Coord factor);

/// Every vertex coordinate is even.
bool is_doubled(const Triangulation& tri);
/// Inverse of dilate(tri, 2); throws std::invalid_argument unless is_doubled.
Triangulation halve(const Triangulation& tri);

FaceCountVector interior_face_counts(const Triangulation& tri);

/// Adds a lattice point by coning every cell containing it over its facets
/// that avoid it.
Triangulation refine_add_vertex(const Triangulation& tri, const LatticePoint& p);

bool is_primitive(const Triangulation& tri);
bool is_maximal(const Triangulation& tri);

/// Lower hull of the lifted point set. Points lifted strictly above the hull
/// are not used. Throws std::domain_error when the heights are not generic
/// (the induced subdivision is not a triangulation).
Triangulation regular_triangulation(std::vector<LatticePoint> points, std::vector<Rational> heights);

/// Sign vector as a bitmask: bit i set means the i-th coordinate is negated.
using SignVector = std::uint32_t;

/// Reflected copies of a triangulation of a polytope in the closed positive
/// orthant. A face in copies e and e' is the same face when e and e' agree on
/// every coordinate where the face is not identically zero.
class SymmetricTriangulation {
 public:
  explicit SymmetricTriangulation(Triangulation base);

  const Triangulation& base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }
  std::size_t copy_count() const { return std::size_t{1} << dim(); }

  /// Coordinates on which every vertex of the face is zero, as a bitmask.
  SignVector zero_coordinates(const Face& face) const;
  /// Representative copy of the face inside copy e.
  SignVector canonical_copy(const Face& face, SignVector e) const;
  /// Number of distinct copies of the face, 2^(n - z).
  std::uint64_t multiplicity(const Face& face) const;

  /// Coordinates of the vertex in copy e.
  LatticePoint reflect(const LatticePoint& p, SignVector e) const;

 private:
  Triangulation base_;
};

SymmetricTriangulation symmetric_extension(const Triangulation& tri);

}  // namespace patchwork
