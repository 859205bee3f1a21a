#pragma once

// Lattice points, lattice simplices and lattice polytopes with exact
// membership, volume and lattice point counting.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "patchwork/arith.hpp"

namespace patchwork {

/// Highest ambient dimension the engine is exercised at.
inline constexpr std::size_t kMaxDimension = 6;

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : c_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : c_(coords) {}

  static LatticePoint zero(std::size_t dim) { return LatticePoint(std::vector<Coord>(dim, 0)); }

  std::size_t dim() const { return c_.size(); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  std::span<const Coord> coords() const { return c_; }
  Coord coordinate_sum() const;

  LatticePoint operator+(const LatticePoint& o) const;
  LatticePoint operator-(const LatticePoint& o) const;
  LatticePoint scaled(Coord k) const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<Coord> c_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

std::string to_string(const LatticePoint& p);

/// Point with exact rational coordinates, always in reduced form.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords) : c_(std::move(coords)) {}
  explicit RationalPoint(const LatticePoint& p);

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  std::span<const Rational> coords() const { return c_; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  std::vector<Rational> c_;
};

RationalPoint barycenter(std::span<const LatticePoint> points);
RationalPoint midpoint(const LatticePoint& a, const LatticePoint& b);

/// k-simplex with affinely independent lattice vertices in canonical
/// (lexicographic) order.
class LatticeSimplex {
 public:
  explicit LatticeSimplex(std::vector<LatticePoint> vertices);

  std::size_t dim() const { return vertices_.size() - 1; }
  std::size_t ambient_dim() const { return vertices_.front().dim(); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

 private:
  std::vector<LatticePoint> vertices_;
};

/// normal . x <= offset
struct Halfspace {
  std::vector<Coord> normal;
  Coord offset = 0;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

/// normal . x == offset
struct AffineEquation {
  std::vector<Coord> normal;
  Coord offset = 0;
};

/// Convex hull of finitely many lattice points. Stores the vertex set and an
/// exact inequality description (affine hull equations plus facets).
class LatticePolytope {
 public:
  /// Convex hull of the given points; redundant points are dropped.
  static LatticePolytope from_points(std::vector<LatticePoint> points);
  /// conv{0, m e_1, ..., m e_n}.
  static LatticePolytope standard_simplex(std::size_t n, Coord m);
  /// [0, sides_1] x ... x [0, sides_n].
  static LatticePolytope box(const std::vector<Coord>& sides);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<AffineEquation>& equations() const { return equations_; }
  /// Indices into vertices() of the vertices on facet f.
  const std::vector<std::size_t>& facet_vertices(std::size_t f) const { return facet_vertices_[f]; }

  bool contains(const LatticePoint& p) const;
  bool contains_in_relative_interior(const LatticePoint& p) const;
  bool on_facet(const LatticePoint& p, std::size_t f) const;
  bool in_affine_hull(const LatticePoint& p) const;

  LatticePolytope dilated(Coord k) const;

  /// True when this is conv{0, m e_i}; m is written to *m_out when non-null.
  bool is_standard_simplex(Coord* m_out = nullptr) const;
  /// True when this is an axis-parallel box with a corner at the origin.
  bool is_box(std::vector<Coord>* sides_out = nullptr) const;
  bool in_positive_orthant() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ == b.vertices_; }

 private:
  LatticePolytope() = default;

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<LatticePoint> vertices_;
  std::vector<AffineEquation> equations_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
};

/// All integer points of the closed polytope, lexicographically sorted.
std::vector<LatticePoint> lattice_points(const LatticePolytope& polytope);

/// Integer points in the relative interior of the k-th dilate, sorted.
std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& polytope, Coord k = 1);

/// l*(k P): number of integer points in the relative interior of k P.
std::uint64_t interior_count(const LatticePolytope& polytope, Coord k);

/// |det| of the edge matrix of a full-dimensional simplex (n! times the
/// Euclidean volume). Equals 1 exactly for primitive simplices.
BigInt normalized_volume(const LatticeSimplex& simplex);

/// Normalized volume of a full-dimensional polytope.
BigInt normalized_volume(const LatticePolytope& polytope);

/// Simplices of the pulling triangulation of the polytope's vertex set
/// (first vertex pulled first, recursively on faces).
std::vector<std::vector<LatticePoint>> pulling_triangulation(const LatticePolytope& polytope);

/// True iff the closed simplex contains no integer point besides its vertices.
bool is_empty_simplex(const LatticeSimplex& simplex);

/// Affine rank of a point set (dimension of its affine hull); -1 if empty.
int affine_dimension(std::span<const LatticePoint> points);

/// Side of a point relative to the hyperplane through n affinely independent
/// points in R^n: the sign of det[q_1 - q_0, ..., q_{n-1} - q_0, p - q_0].
int orientation(std::span<const LatticePoint> hyperplane_points, const LatticePoint& p);

/// Orientation of a full-dimensional simplex: sign of det of its edge matrix.
int simplex_orientation(std::span<const LatticePoint> vertices);

}  // namespace patchwork
