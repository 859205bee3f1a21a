#pragma once

// Hodge numbers of smooth degree-m hypersurfaces in P^n and the bound
// reports comparing them with the patchworked real part.

#include <cstdint>
#include <string>
#include <vector>

#include "patchwork/critical.hpp"
#include "patchwork/patchwork.hpp"

namespace patchwork {

struct HodgeTable {
  std::size_t n = 0;
  Coord m = 0;
  /// h[p][q] for 0 <= p, q <= n-1.
  std::vector<std::vector<std::uint64_t>> h;

  std::uint64_t at(std::size_t p, std::size_t q) const { return h[p][q]; }
  /// Sum over the middle row p + q = n - 1.
  std::uint64_t middle_sum() const;
  /// Total Betti number of the complex hypersurface.
  std::uint64_t total() const;
};

/// #{a in Z^(n+1) : 0 < a_i < m, sum a_i = (q+1) m}, by inclusion-exclusion.
std::uint64_t primitive_hodge_number(std::size_t n, Coord m, std::size_t q);

/// Requires n >= 2 and m >= 1.
HodgeTable hodge_numbers(std::size_t n, Coord m);

enum class Verdict { Holds, Violated, AsymptoticOnly };
std::string to_string(Verdict v);

/// lhs <= rhs. Exact reports hold or fail; asymptotic ones only inform.
struct BoundReport {
  std::string name;
  Rational lhs, rhs;
  bool exact = true;

  Rational slack() const { return rhs - lhs; }
  Verdict verdict() const;
};

BoundReport exact_bound(std::string name, Rational lhs, Rational rhs);
BoundReport asymptotic_bound(std::string name, Rational lhs, Rational rhs);

/// Upper bounds min(c_i^- + c_{n-i}^+, c_{n-i-1}^- + c_{i+1}^+) on b_i for
/// i = 0..n-1, compared against `betti` when given (otherwise lhs = 0).
std::vector<BoundReport> morse_bounds(const IndexHistogram& hist, const BettiVector* betti = nullptr);

/// Weighted partial Betti sum against the weighted Hodge sum for 1 <= k <= n-1
/// (asymptotic), the exact lattice-point inequality on the halved
/// triangulation that drives it, and the weighted index count against
/// l*(k Delta_m^n) (asymptotic). Requires a doubled triangulation of
/// Delta_m^n.
std::vector<BoundReport> partial_sum_report(const Triangulation& tri, const SignDistribution& signs,
                                            const LatticePoint& origin, std::size_t k);

/// Cell count after refinement (exact), bad cell in every star (exact,
/// n > 2), Smith-Thom (exact) and the Morse total (asymptotic). Requires a
/// doubled triangulation of Delta_m^n.
std::vector<BoundReport> totals_report(const Triangulation& tri, const SignDistribution& signs,
                                       const LatticePoint& origin);

}  // namespace patchwork
