#include "patchwork/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "patchwork/audits.hpp"

namespace patchwork {

std::uint64_t HodgeTable::middle_sum() const {
  std::uint64_t s = 0;
  for (std::size_t p = 0; p < n; ++p) s += h[p][n - 1 - p];
  return s;
}

std::uint64_t HodgeTable::total() const {
  std::uint64_t s = 0;
  for (const auto& row : h)
    for (auto x : row) s += x;
  return s;
}

std::uint64_t primitive_hodge_number(std::size_t n, Coord m, std::size_t q) {
  if (m < 2) return 0;
  // b_i = a_i - 1 in [0, m-2], N = n+1 parts summing to t.
  const long N = static_cast<long>(n) + 1;
  const long t = (static_cast<long>(q) + 1) * m - N;
  if (t < 0) return 0;
  BigInt total = 0;
  for (long j = 0; j <= N; ++j) {
    const long top = t - j * (m - 1) + N - 1;
    if (top < N - 1) break;
    BigInt term = binomial(N, j) * binomial(top, N - 1);
    total += j % 2 == 0 ? term : BigInt(-term);
  }
  return static_cast<std::uint64_t>(total);
}

HodgeTable hodge_numbers(std::size_t n, Coord m) {
  if (n < 2 || m < 1) throw std::invalid_argument("hodge_numbers: need n >= 2 and m >= 1");
  const std::size_t d = n - 1;
  HodgeTable t{n, m, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n, 0))};
  // Classes restricted from P^n off the middle degree, one per even degree.
  for (std::size_t p = 0; p <= d; ++p)
    if (2 * p != d) t.h[p][p] = 1;
  for (std::size_t q = 0; q <= d; ++q) t.h[d - q][q] = primitive_hodge_number(n, m, q);
  if (d % 2 == 0) t.h[d / 2][d / 2] += 1;
  return t;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::AsymptoticOnly: return "asymptotic-only";
  }
  return "?";
}

Verdict BoundReport::verdict() const {
  if (!exact) return Verdict::AsymptoticOnly;
  return lhs <= rhs ? Verdict::Holds : Verdict::Violated;
}

BoundReport exact_bound(std::string name, Rational lhs, Rational rhs) {
  return {std::move(name), std::move(lhs), std::move(rhs), true};
}

BoundReport asymptotic_bound(std::string name, Rational lhs, Rational rhs) {
  return {std::move(name), std::move(lhs), std::move(rhs), false};
}

std::vector<BoundReport> morse_bounds(const IndexHistogram& hist, const BettiVector* betti) {
  const std::size_t n = hist.c_plus.size() - 1;
  std::vector<BoundReport> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = hist.c_minus[i] + hist.c_plus[n - i];
    const std::uint64_t b = hist.c_minus[n - i - 1] + hist.c_plus[i + 1];
    const std::uint64_t lhs = betti && i < betti->size() ? (*betti)[i] : 0;
    out.push_back(asymptotic_bound("b" + std::to_string(i) + " <= Morse bound", Rational(lhs), Rational(std::min(a, b))));
  }
  return out;
}

namespace {

Coord doubled_simplex_degree(const Triangulation& tri) {
  Coord m = 0;
  if (!tri.polytope().is_standard_simplex(&m) || m % 2 != 0 || !is_doubled(tri))
    throw std::invalid_argument("bound reports need a doubled triangulation of the simplex");
  return m;
}

BettiVector projective_betti(const Triangulation& tri, const SignDistribution& signs, Coord m) {
  return betti_z2(build(tri, signs, Ambient::projective(m)));
}

}  // namespace

std::vector<BoundReport> partial_sum_report(const Triangulation& tri, const SignDistribution& signs,
                                            const LatticePoint& origin, std::size_t k) {
  const Coord m = doubled_simplex_degree(tri);
  const std::size_t n = tri.dim();
  if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("partial_sum_report: need 1 <= k <= n-1");
  const auto b = projective_betti(tri, signs, m);
  const auto hodge = hodge_numbers(n, m);
  const auto hist = index_histogram(tri, origin, signs);

  BigInt lhs = 0, rhs = 0, weighted_index = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt w = binomial(static_cast<long>(k + n - 1 - i), static_cast<long>(n));
    lhs += w * b[i];
    rhs += w * hodge.at(i, n - 1 - i);
    weighted_index += w * (BigInt(1) << n) * hist.S[n - i];
  }

  const auto half = halve(tri);
  const auto s = interior_face_counts(half);
  BigInt faces = 0;
  for (std::size_t i = 0; i < k; ++i) faces += binomial(static_cast<long>(k) - 1, static_cast<long>(i)) * s[i];
  const BigInt points = interior_count(half.polytope(), static_cast<Coord>(k));

  const std::string tag = " (k=" + std::to_string(k) + ")";
  return {
      asymptotic_bound("weighted Betti sum <= weighted Hodge sum" + tag, Rational(lhs), Rational(rhs)),
      exact_bound("weighted face count <= l*(k P/2)" + tag, Rational(faces), Rational(points)),
      asymptotic_bound("weighted index count <= l*(k P)" + tag, Rational(weighted_index),
                       Rational(interior_count(tri.polytope(), static_cast<Coord>(k)))),
  };
}

std::vector<BoundReport> totals_report(const Triangulation& tri, const SignDistribution& signs,
                                       const LatticePoint& origin) {
  const Coord m = doubled_simplex_degree(tri);
  const std::size_t n = tri.dim();
  std::vector<BoundReport> out;
  out.push_back(exact_bound("cells <= refined cell bound", Rational(tri.cells().size()),
                            Rational(refined_cell_bound(tri))));
  if (n > 2) {
    const auto a = bad_cell_in_every_star(tri, origin, signs);
    out.push_back(exact_bound("stars without a bad cell <= 0", Rational(a.violations), Rational(0)));
  }
  const auto b = projective_betti(tri, signs, m);
  std::uint64_t real_total = 0;
  for (auto x : b) real_total += x;
  if (n >= 2)
    out.push_back(exact_bound("Smith-Thom", Rational(real_total), Rational(hodge_numbers(n, m).total())));
  const auto hist = index_histogram(tri, origin, signs);
  std::uint64_t morse = 0;
  for (std::size_t i = 0; i < n; ++i) morse += hist.c_minus[i] + hist.c_plus[n - i];
  out.push_back(asymptotic_bound("total Betti <= Morse total", Rational(real_total), Rational(morse)));
  return out;
}

}  // namespace patchwork
