// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
// Every comparison is exact; runtime limits are wall-clock seconds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "patchwork/audits.hpp"
#include "patchwork/bounds.hpp"
#include "patchwork/problem_io.hpp"
#include "patchwork/sampling.hpp"

using namespace patchwork;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <typename T>
std::string joined(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

// Pipeline consistency over every instance of criteria 1-6.
struct Consistency {
  std::uint64_t instances = 0, failures = 0;
  std::string first_failure;

  TopologySummary run(const std::string& label, const Triangulation& tri, const SignDistribution& signs,
                      const Ambient& ambient) {
    auto t = summarize(tri, signs, ambient);
    ++instances;
    if (!t.consistent()) {
      if (failures++ == 0)
        first_failure = label + ": chi " + std::to_string(t.chi_cells) + "/" + std::to_string(t.chi_faces) +
                        ", betti " + joined(t.betti) + ", components " + std::to_string(t.components);
    }
    return t;
  }
};

Consistency consistency;
bool all_pass = true;

void report(int id, const std::string& title, bool pass, const std::vector<std::string>& details) {
  all_pass = all_pass && pass;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << title << '\n';
  for (const auto& d : details) std::cout << "       " << d << '\n';
  std::cout.flush();
}

// The problem file written by `construct` and read back by `analyze`.
Construction through_file(const Construction& c) { return read_problem(write_problem(c)); }

void cube_block_exact() {
  const auto t0 = Clock::now();
  const auto c = through_file(construct("lemma56", {}));
  const auto t = consistency.run("cube block", c.tri, c.signs, c.ambient);
  const auto census = mixed_census(c.tri, c.signs);
  auto at = [&](std::size_t k, std::size_t s) { return census.counts[k][s]; };
  const bool census_ok = census.total(3) == 6 && census.total(2) == 18 && at(2, 2) == 12 && census.total(1) == 12 &&
                         at(1, 2) == 3 && at(1, 1) == 9;
  const double secs = seconds_since(t0);
  std::ostringstream d1, d2;
  d1 << "chi = " << t.chi_faces << " (expected -18), betti " << joined(t.betti);
  d2 << "mixed faces: " << census.total(3) << " / " << census.total(2) << " (" << at(2, 2) << " on 2-faces) / "
     << census.total(1) << " (" << at(1, 2) << " on 2-faces, " << at(1, 1) << " on 1-faces); " << secs
     << " s (limit 1 s)";
  report(1, "cube block: Euler characteristic and mixed-face census", t.chi_faces == -18 && census_ok && secs < 1.0,
         {d1.str(), d2.str()});
}

void cube_tiling_exact() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::vector<std::string> details;
  const std::vector<std::pair<std::vector<Coord>, long long>> cases = {
      {{1, 1, 1}, -18}, {{2, 2, 2}, -144}, {{2, 1, 1}, -36}};
  for (const auto& [k, expected] : cases) {
    ConstructionParams p;
    p.k = k;
    const auto c = through_file(construct("prop57", p));
    const auto t = consistency.run("tiling " + joined(k), c.tri, c.signs, c.ambient);
    ok = ok && t.chi_faces == expected;
    details.push_back("k = (" + joined(k) + "): chi = " + std::to_string(t.chi_faces) + " (expected " +
                      std::to_string(expected) + ")");
  }
  const double secs = seconds_since(t0);
  details.push_back(std::to_string(secs) + " s (limit 5 s)");
  report(2, "cube tilings: chi = -18 k1 k2 k3", ok && secs < 5.0, details);
}

void triangle_ovals_exact() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::vector<std::string> details;
  for (Coord m : {2, 4, 6}) {
    ConstructionParams p;
    p.m = m;
    const auto c = through_file(construct("prop53", p));
    const auto t = consistency.run("ovals m=" + std::to_string(m), c.tri, c.signs, c.ambient);
    // Gamma avoids the boundary of the reflected polytope: no mixed edge lies
    // on a facet of the base polytope (none of which is a coordinate plane).
    std::uint64_t touching = 0;
    for (const auto& edge : c.tri.faces().by_dim[1])
      for (SignVector e = 0; e < 4; ++e)
        if (is_mixed(edge, c.tri, c.signs, e) && !c.tri.is_interior_face(edge)) ++touching;
    const bool good = t.betti[0] == static_cast<std::uint64_t>(m * m) && touching == 0;
    ok = ok && good;
    details.push_back("m = " + std::to_string(m) + ": b0 = " + std::to_string(t.betti[0]) + " (expected " +
                      std::to_string(m * m) + "), boundary-touching mixed edges " + std::to_string(touching));
  }
  const double secs = seconds_since(t0);
  details.push_back(std::to_string(secs) + " s (limit 5 s)");
  report(3, "triangle ovals: b0 = m^2", ok && secs < 5.0, details);
}

void nested_spheres_exact() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::vector<std::string> details;
  for (std::size_t n = 2; n <= 3; ++n)
    for (Coord m : {2, 4, 6}) {
      ConstructionParams p;
      p.n = n;
      p.m = m;
      const auto c = through_file(construct("prop51", p));
      const auto t = consistency.run("spheres", c.tri, c.signs, c.ambient);
      // m/2 disjoint (n-1)-spheres.
      BettiVector expected(n, 0);
      expected[0] += static_cast<std::uint64_t>(m / 2);
      expected[n - 1] += static_cast<std::uint64_t>(m / 2);
      ok = ok && t.betti == expected;
      details.push_back("n = " + std::to_string(n) + ", m = " + std::to_string(m) + ": betti " + joined(t.betti) +
                        " (expected " + joined(expected) + ")");
    }
  const double secs = seconds_since(t0);
  details.push_back(std::to_string(secs) + " s (limit 10 s)");
  report(4, "nested spheres: m/2 disjoint (n-1)-spheres", ok && secs < 10.0, details);
}

// #{a in {1..m-1}^(n+1) : sum a = (q+1) m} by enumeration.
std::uint64_t enumerate_monomials(std::size_t n, Coord m, std::size_t q) {
  std::vector<Coord> a(n + 1, 1);
  std::uint64_t count = 0;
  while (true) {
    Coord s = 0;
    for (auto x : a) s += x;
    if (s == static_cast<Coord>(q + 1) * m) ++count;
    std::size_t i = 0;
    while (i <= n && a[i] == m - 1) a[i++] = 1;
    if (i > n) break;
    ++a[i];
  }
  return count;
}

void hodge_oracle() {
  bool ok = true;
  std::uint64_t compared = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (Coord m = 2; m <= 5; ++m) {
      const auto t = hodge_numbers(n, m);
      const std::size_t d = n - 1;
      for (std::size_t p = 0; p <= d; ++p)
        for (std::size_t q = 0; q <= d; ++q) {
          std::uint64_t expected = p == q ? 1 : 0;
          if (p + q == d) expected += enumerate_monomials(n, m, q);
          ok = ok && t.at(p, q) == expected;
          ++compared;
        }
    }
  const auto curve = hodge_numbers(2, 4), k3 = hodge_numbers(3, 4);
  const bool anchors = curve.at(0, 1) == 3 && primitive_hodge_number(3, 4, 1) == 19 && k3.at(1, 1) == 20;
  report(5, "Hodge numbers against monomial enumeration", ok && anchors,
         {std::to_string(compared) + " entries for n in {2,3,4}, m in {2..5}",
          "plane quartic genus " + std::to_string(curve.at(0, 1)) + " (expected 3), quartic surface primitive h11 " +
              std::to_string(primitive_hodge_number(3, 4, 1)) + " (expected 19), h11 " + std::to_string(k3.at(1, 1)) +
              " (expected 20)"});
}

struct SuiteTally {
  std::uint64_t instances = 0, checked = 0, violations = 0;
  std::string first;
};

void lemma_suite() {
  const auto t0 = Clock::now();
  constexpr std::uint64_t kInstances = 200;
  std::map<std::string, SuiteTally> tally;
  auto add = [&](const std::string& check, const AuditResult& r) {
    auto& t = tally[check];
    ++t.instances;
    t.checked += r.checked;
    t.violations += r.violations;
    if (!r.holds() && t.first.empty()) t.first = r.detail;
  };
  std::mt19937_64 rng(0xacce55);

  // Face-number statements on regular triangulations of Delta_m^n.
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const std::size_t n = 2 + i % 2;
    const Coord m = 1 + static_cast<Coord>(i / 2 % 6);
    auto s = random_regular(rng, n, m, i % 3 == 0);
    add("face count bound", interior_point_bound(s.tri));
    add("Dehn-Sommerville (projective gluing)", dehn_sommerville(s.tri, Ambient::projective(m)));
  }
  // Primitive identity: maximal triangulations, kept when unimodular.
  for (std::uint64_t i = 0; tally["primitive identity"].instances < kInstances; ++i) {
    if (i > 20 * kInstances) break;
    const std::size_t n = 2 + i % 2;
    const Coord m = 1 + static_cast<Coord>(i / 2 % 6);
    auto s = random_regular(rng, n, m, true);
    if (is_primitive(s.tri)) add("primitive identity", primitive_face_identity(s.tri));
  }
  // Dehn-Sommerville on products of projective lines; the gluing needs even
  // sides.
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const std::size_t n = 2 + i % 2;
    std::vector<Coord> sides;
    for (std::size_t j = 0; j < n; ++j) sides.push_back(2 + 2 * static_cast<Coord>(rng() % (n == 2 ? 3 : 2)));
    auto s = random_regular_box(rng, sides, i % 2 == 0);
    add("Dehn-Sommerville (P1 power gluing)", dehn_sommerville(s.tri, Ambient::p1power(sides)));
  }
  // Index and sign laws on doubled triangulations with random signs: doubled
  // simplices Delta_m^n (m <= 6) and doubled boxes with sides <= 6, which
  // have interior vertices where the simplices have none.
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const std::size_t n = i % 4 == 0 ? 2 : 3;
    const bool box = i % 2 == 1;
    SampledTriangulation s = [&] {
      if (!box) return random_doubled(rng, n, 2 * (1 + static_cast<Coord>(i / 4 % 3)), i % 3 != 0);
      std::vector<Coord> sides;
      for (std::size_t j = 0; j < n; ++j) sides.push_back(1 + static_cast<Coord>(rng() % 3));
      auto half = random_regular_box(rng, sides, i % 3 != 0);
      return SampledTriangulation{dilate(half.tri, 2), half.heights};
    }();
    const auto& tri = s.tri;
    const auto signs = random_signs(rng, tri.vertices().size());
    const auto o = find_generic_origin(tri);
    add("0 or 2^n critical copies", critical_copy_dichotomy(tri, o, signs));
    add("index bounds behind / in front", ray_index_bounds(tri, o));
    add("interior incidence", visible_face_incidence(tri, o));
    if (n == 3) {
      add("one-signed face indices (n = 3)", one_signed_face_indices(tri, o, signs));
      add("doubled unimodular pairs (n = 3)", doubled_unimodular_pairs(tri, o, signs));
      add("bad cell in every star (n = 3)", bad_cell_in_every_star(tri, o, signs));
    }
    // Doubled inputs have even sides, so every instance can be glued.
    Ambient ambient = Ambient::affine();
    Coord m = 0;
    std::vector<Coord> sides;
    if (tri.polytope().is_standard_simplex(&m)) ambient = Ambient::projective(m);
    if (tri.polytope().is_box(&sides)) ambient = Ambient::p1power(sides);
    consistency.run("suite instance", tri, signs, ambient);
    consistency.run("suite instance (affine)", tri, signs, Ambient::affine());
  }
  // Sign laws need n = 3: top up to the full count.
  for (std::uint64_t i = 0; tally["one-signed face indices (n = 3)"].instances < kInstances; ++i) {
    auto s = random_doubled(rng, 3, 2 * (2 + static_cast<Coord>(i % 2)), i % 2 == 0);
    const auto signs = random_signs(rng, s.tri.vertices().size());
    const auto o = find_generic_origin(s.tri);
    add("one-signed face indices (n = 3)", one_signed_face_indices(s.tri, o, signs));
    add("doubled unimodular pairs (n = 3)", doubled_unimodular_pairs(s.tri, o, signs));
    std::vector<Coord> sides{1 + static_cast<Coord>(rng() % 3), 1 + static_cast<Coord>(rng() % 3), 2};
    auto half = random_regular_box(rng, sides, true);
    const auto box = dilate(half.tri, 2);
    add("bad cell in every star (n = 3)",
        bad_cell_in_every_star(box, find_generic_origin(box), random_signs(rng, box.vertices().size())));
  }

  const double secs = seconds_since(t0);
  bool ok = secs < 120.0;
  std::vector<std::string> details;
  for (const auto& [name, t] : tally) {
    const bool good = t.instances >= kInstances && t.checked > 0 && t.violations == 0;
    ok = ok && good;
    std::ostringstream line;
    line << name << ": " << t.instances << " instances, " << t.checked << " checks, " << t.violations
         << " violations" << (t.first.empty() ? "" : " (" + t.first + ")");
    details.push_back(line.str());
  }
  details.push_back(std::to_string(secs) + " s (limit 120 s)");
  report(6, "lemma suite on random instances, zero violations", ok, details);
}

// Informational: asymptotic statements along the constructed families.
void trend_logs() {
  std::vector<std::string> lines;
  auto fmt = [](const BoundReport& r, double scale) {
    std::ostringstream s;
    s << r.name << ": " << to_string(r.lhs) << " <= " << to_string(r.rhs)
      << ", slack/m^n = " << static_cast<double>(r.slack()) / scale << " [" << to_string(r.verdict()) << "]";
    return s.str();
  };
  for (std::size_t n = 2; n <= 3; ++n)
    for (Coord m = 2; m <= 12; m += 2) {
      ConstructionParams p;
      p.n = n;
      p.m = m;
      const auto c = construct("prop51", p);
      const auto o = c.origin ? *c.origin : find_generic_origin(c.tri);
      const double scale = std::pow(static_cast<double>(m), static_cast<double>(n));
      for (std::size_t k = 1; k + 1 <= n; ++k)
        for (const auto& r : partial_sum_report(c.tri, c.signs, o, k))
          if (!r.exact) lines.push_back("spheres n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + fmt(r, scale));
      for (const auto& r : totals_report(c.tri, c.signs, o))
        if (!r.exact) lines.push_back("spheres n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + fmt(r, scale));
    }
  for (Coord m = 2; m <= 12; m += 2) {
    ConstructionParams p;
    p.m = m;
    const auto c = construct("prop53", p);
    const auto o = find_generic_origin(c.tri);
    const auto b = betti_z2(build(c.tri, c.signs, c.ambient));
    const auto r = morse_bounds(index_histogram(c.tri, o, c.signs), &b).front();
    lines.push_back("ovals m=" + std::to_string(m) + " " + fmt(r, static_cast<double>(m * m)));
  }
  report(7, "asymptotic bounds: trend logs (informational, never failing)", true, lines);
}

void pipeline_consistency() {
  report(8, "sum (-1)^d b_d = chi and b0 = components on every instance", consistency.failures == 0,
         {std::to_string(consistency.instances) + " instances, " + std::to_string(consistency.failures) + " failures" +
          (consistency.first_failure.empty() ? "" : " (" + consistency.first_failure + ")")});
}

void guarded(int id, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, "raised an exception", false, {e.what()});
  }
}

}  // namespace

int main() {
  guarded(1, cube_block_exact);
  guarded(2, cube_tiling_exact);
  guarded(3, triangle_ovals_exact);
  guarded(4, nested_spheres_exact);
  guarded(5, hodge_oracle);
  guarded(6, lemma_suite);
  guarded(7, trend_logs);
  guarded(8, pipeline_consistency);
  return all_pass ? 0 : 1;
}
