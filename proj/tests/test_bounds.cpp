#include <random>

#include "doctest.h"
#include "patchwork/bounds.hpp"
#include "support/instances.hpp"

using namespace patchwork;

namespace {

// Counts a in {1..m-1}^(n+1) with the given sum by enumeration.
std::uint64_t brute_primitive(std::size_t n, Coord m, std::size_t q) {
  if (m < 2) return 0;
  std::vector<Coord> a(n + 1, 1);
  const Coord target = static_cast<Coord>(q + 1) * m;
  std::uint64_t count = 0;
  while (true) {
    Coord s = 0;
    for (auto x : a) s += x;
    if (s == target) ++count;
    std::size_t i = 0;
    while (i <= n && a[i] == m - 1) a[i++] = 1;
    if (i > n) break;
    ++a[i];
  }
  return count;
}

long pow_long(long b, std::size_t e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("Hodge numbers agree with monomial enumeration") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (Coord m = 2; m <= 5; ++m) {
      auto t = hodge_numbers(n, m);
      const std::size_t d = n - 1;
      for (std::size_t q = 0; q <= d; ++q) {
        CHECK(primitive_hodge_number(n, m, q) == brute_primitive(n, m, q));
        for (std::size_t p = 0; p <= d; ++p) CHECK(t.at(p, q) == t.at(q, p));
      }
      CHECK(t.at(d, 0) == interior_count(LatticePolytope::standard_simplex(n, m), 1));
      // Euler characteristic of a degree-m hypersurface in P^n.
      long chi = 0;
      for (std::size_t p = 0; p <= d; ++p)
        for (std::size_t q = 0; q <= d; ++q) chi += ((p + q) % 2 == 0 ? 1 : -1) * static_cast<long>(t.at(p, q));
      CHECK(chi == (pow_long(1 - m, n + 1) - 1) / m + static_cast<long>(n) + 1);
    }
}

TEST_CASE("Hodge anchors") {
  CHECK(hodge_numbers(2, 4).at(1, 0) == 3);
  CHECK(primitive_hodge_number(3, 4, 1) == 19);
  CHECK(hodge_numbers(3, 4).at(1, 1) == 20);
  CHECK(hodge_numbers(3, 4).at(2, 0) == 1);
  CHECK(hodge_numbers(3, 4).total() == 24);
  CHECK(hodge_numbers(2, 2).middle_sum() == 0);
  CHECK(hodge_numbers(2, 2).total() == 2);
  CHECK_THROWS_AS(hodge_numbers(1, 3), std::invalid_argument);
}

TEST_CASE("Morse bounds") {
  IndexHistogram h;
  h.c_plus = {0, 5, 7};
  h.c_minus = {3, 2, 0};
  auto r = morse_bounds(h);
  REQUIRE(r.size() == 2);
  // i = 0: min(c0- + c2+, c1- + c1+) = min(10, 7).
  CHECK(r[0].rhs == 7);
  // i = 1: min(c1- + c1+, c0- + c2+) = min(7, 10).
  CHECK(r[1].rhs == 7);
  CHECK(r[0].verdict() == Verdict::AsymptoticOnly);

  auto t = dilate(instances::alcove_triangulation(2, 2), 2);
  auto plus = SignDistribution(std::vector<Sign>(t.vertices().size(), Sign::Plus));
  auto hp = index_histogram(t, find_generic_origin(t), plus);
  for (const auto& b : morse_bounds(hp)) CHECK(b.rhs == 0);
}

TEST_CASE("exact bound reports hold on random doubled inputs") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 16; ++round) {
    const std::size_t n = 2 + round % 2;
    const Coord m = n == 2 ? 2 * (1 + round % 4) : 4;
    auto inst = instances::random_t2(rng, n, m, round % 2 == 0);
    auto s = instances::random_signs(rng, inst.tri.vertices().size());
    auto o = find_generic_origin(inst.tri);
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& r : partial_sum_report(inst.tri, s, o, k)) {
        INFO(r.name << ": " << to_string(r.lhs) << " vs " << to_string(r.rhs));
        CHECK(r.verdict() != Verdict::Violated);
      }
    for (const auto& r : totals_report(inst.tri, s, o)) {
      INFO(r.name << ": " << to_string(r.lhs) << " vs " << to_string(r.rhs));
      CHECK(r.verdict() != Verdict::Violated);
    }
  }
  auto odd = instances::alcove_triangulation(2, 3);
  auto s = SignDistribution(std::vector<Sign>(odd.vertices().size(), Sign::Plus));
  CHECK_THROWS_AS(totals_report(odd, s, find_generic_origin(odd)), std::invalid_argument);
}
