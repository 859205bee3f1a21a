#pragma once

// The piecewise-linear hypersurface of a signed triangulation as a regular
// cell complex: one (k-1)-cell per mixed k-face of the reflected
// triangulation, glued according to the ambient space.

#include <cstdint>
#include <string>
#include <vector>

#include "patchwork/signs.hpp"
#include "patchwork/triangulation.hpp"

namespace patchwork {

enum class AmbientKind { Affine, Projective, P1Power };

std::string to_string(AmbientKind kind);
AmbientKind parse_ambient_kind(std::string_view text);

struct Ambient {
  AmbientKind kind = AmbientKind::Affine;
  /// Degree m for projective space (polytope must be Delta_m^n).
  Coord degree = 0;
  /// Box sides for a product of projective lines.
  std::vector<Coord> multidegree;

  static Ambient affine() { return {}; }
  static Ambient projective(Coord m) { return {AmbientKind::Projective, m, {}}; }
  static Ambient p1power(std::vector<Coord> sides) { return {AmbientKind::P1Power, 0, std::move(sides)}; }

  /// Gluing produces a closed manifold (projective space or a torus).
  bool closed() const { return kind != AmbientKind::Affine; }

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Throws std::invalid_argument unless the triangulation's polytope matches.
void check_compatible(const Ambient& ambient, const Triangulation& tri);

/// Representative copy of the face after reflections and ambient gluing.
SignVector glued_copy(const Triangulation& tri, const Ambient& ambient, const Face& face, SignVector e);

/// Number of distinct copies of the face in the glued space.
std::uint64_t glued_multiplicity(const Triangulation& tri, const Ambient& ambient, const Face& face);

/// Face numbers f_0..f_n of the glued reflected triangulation.
std::vector<std::uint64_t> glued_face_numbers(const Triangulation& tri, const Ambient& ambient);

struct CellId {
  Face face;
  SignVector copy = 0;

  friend auto operator<=>(const CellId&, const CellId&) = default;
};

struct PatchworkComplex {
  std::size_t ambient_dim = 0;
  /// cells[d] are the d-cells, i.e. mixed (d+1)-faces, sorted.
  std::vector<std::vector<CellId>> cells;
  /// boundary[d][i] lists indices into cells[d-1]; empty for d = 0.
  std::vector<std::vector<std::vector<std::size_t>>> boundary;

  std::size_t size(std::size_t d) const { return d < cells.size() ? cells[d].size() : 0; }
  bool empty() const;
};

PatchworkComplex build(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient);

/// b_0..b_{n-1} over Z/2.
using BettiVector = std::vector<std::uint64_t>;
BettiVector betti_z2(const PatchworkComplex& c);

std::uint64_t connected_components(const PatchworkComplex& c);

/// Alternating count of cells of the built complex.
long long euler_characteristic(const PatchworkComplex& c);

/// Alternating count of mixed faces weighted by the number of their distinct
/// mixed copies, computed without building the complex.
long long euler_characteristic(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient);

/// True iff every boundary of a boundary cancels over Z/2.
bool boundary_squares_to_zero(const PatchworkComplex& c);

/// Homology, components and both Euler characteristic computations of one
/// pipeline run.
struct TopologySummary {
  BettiVector betti;
  std::uint64_t components = 0;
  /// From the cells of the built complex.
  long long chi_cells = 0;
  /// From mixed-face multiplicities.
  long long chi_faces = 0;
  bool boundary_ok = true;

  long long alternating_betti() const;
  /// Both Euler characteristics agree with the Betti numbers, b_0 counts the
  /// components and the boundary squares to zero.
  bool consistent() const;
};

TopologySummary summarize(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient);

/// Mixed faces of the base copy, counted by face dimension k and by the
/// dimension of the smallest polytope face containing them: counts[k][s].
struct MixedCensus {
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t total(std::size_t k) const;
};

MixedCensus mixed_census(const Triangulation& tri, const SignDistribution& signs);

/// Dimension of the smallest face of the polytope containing the face.
std::size_t stratum_dimension(const Triangulation& tri, const Face& face);

}  // namespace patchwork
