#pragma once

// Exact combinatorial identities and inequalities relating face numbers,
// lattice point counts and O-indices. Each check reports how many instances
// it examined and how many failed; a failure is a bug in the library.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patchwork/critical.hpp"
#include "patchwork/patchwork.hpp"

namespace patchwork {

struct AuditResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Description of the first violation, or a summary when none.
  std::string detail;

  bool holds() const { return violations == 0; }
};

/// l*(k P) >= sum_{i<k} C(k-1, i) s_i for 1 <= k <= n+1.
AuditResult interior_point_bound(const Triangulation& tri);

/// s_{k-1} = sum_{j=1}^{k} (-1)^{j+k} C(k-1, j-1) l*(j P) for a primitive
/// triangulation. Throws std::invalid_argument otherwise.
AuditResult primitive_face_identity(const Triangulation& tri);

/// s_0 <= l*(P) and s_1 <= l*(2P) - l*(P).
AuditResult low_face_bounds(const Triangulation& tri);

/// f_k = sum_{i>=k} (-1)^{i+n} C(i+1, k+1) f_i on the glued closed manifold.
AuditResult dehn_sommerville(const Triangulation& tri, const Ambient& ambient);

/// s_1 - n s_0 does not decrease when each missing lattice point is added.
AuditResult refinement_monotonicity(const Triangulation& tri);

/// Doubled inputs: every cell has 0 or 2^n critical copies.
AuditResult critical_copy_dichotomy(const Triangulation& tri, const LatticePoint& origin,
                                    const SignDistribution& signs);

/// i(behind(s)) >= n - k and i(in front(s)) <= k + 1 for interior k-faces,
/// with equality n and 1 for vertices.
AuditResult ray_index_bounds(const Triangulation& tri, const LatticePoint& origin);

/// Doubled inputs: for a one-signed interior k-face, a behind cell with
/// critical copies has index n - k and an in-front cell with critical copies
/// has index k + 1.
AuditResult one_signed_face_indices(const Triangulation& tri, const LatticePoint& origin,
                                    const SignDistribution& signs);

/// Doubled inputs, n > 2: across an interior (n-1)-face whose two cells are
/// both doubled unimodular simplices, not (i(behind) = 1 and i(in front) = n);
/// if the face is one-signed, one of the two cells has no critical copies.
AuditResult doubled_unimodular_pairs(const Triangulation& tri, const LatticePoint& origin,
                                     const SignDistribution& signs);

/// Every interior k-face is claimed by its behind cell, i.e. contains that
/// cell's root, and every k-face containing a cell's root whose relative
/// interior is interior has that cell behind it; dually for in front and
/// coroots. Claims by faces on the boundary are counted separately.
AuditResult visible_face_incidence(const Triangulation& tri, const LatticePoint& origin);

/// Doubled inputs, n > 2: the star of every interior vertex holds a cell with
/// no critical copies or a cell that is not a doubled unimodular simplex.
AuditResult bad_cell_in_every_star(const Triangulation& tri, const LatticePoint& origin,
                                   const SignDistribution& signs);

/// vol(P/2) - c * (interior points of P/2 that are not vertices of the
/// halved triangulation), c = 2 for n >= 2 and c = 1 for n = 1.
BigInt refined_cell_bound(const Triangulation& tri);

/// Doubled inputs: cells <= vol(P/2) - c * (interior points of P/2 that are
/// not vertices), with c = 2 for n >= 2 and c = 1 for n = 1.
AuditResult refinement_cell_count(const Triangulation& tri);

/// Every audit that applies to the input: face-number checks always, the
/// primitive identity on primitive input, Dehn-Sommerville on closed
/// ambients, and the index and sign laws on doubled input (plus the primitive
/// identity on the halved triangulation when that is primitive). A missing origin is
/// replaced by find_generic_origin; a given one must be generic.
std::vector<AuditResult> audit_suite(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient,
                                     const std::optional<LatticePoint>& origin = std::nullopt);

}  // namespace patchwork
