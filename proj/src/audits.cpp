#include "patchwork/audits.hpp"

#include <algorithm>
#include <stdexcept>

namespace patchwork {

namespace {

void fail(AuditResult& r, const std::string& what) {
  if (r.violations++ == 0) r.detail = what;
}

void finish(AuditResult& r) {
  if (r.violations == 0) r.detail = std::to_string(r.checked) + " checks passed";
}

void require_doubled(const Triangulation& tri, const char* who) {
  if (!is_doubled(tri)) throw std::invalid_argument(std::string(who) + ": input is not a doubled triangulation");
}

std::string face_string(const Triangulation& tri, const Face& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + to_string(tri.vertex(f[i]));
  return s + "]";
}

// Visibility records and critical copy counts, computed once per cell.
class CellData {
 public:
  CellData(const Triangulation& tri, const LatticePoint& origin, const SignDistribution* signs) {
    for (std::size_t t = 0; t < tri.cells().size(); ++t) {
      rec_.push_back(visibility(tri, t, origin));
      if (signs) crit_.push_back(real_critical_copies(tri, rec_.back(), *signs));
    }
  }
  const VisibilityRecord& rec(std::size_t t) const { return rec_[t]; }
  std::size_t index(std::size_t t) const { return rec_[t].o_index; }
  std::uint64_t critical(std::size_t t) const { return crit_[t]; }

 private:
  std::vector<VisibilityRecord> rec_;
  std::vector<std::uint64_t> crit_;
};

bool one_signed(const Face& f, const SignDistribution& signs) {
  return std::all_of(f.begin(), f.end(), [&](std::size_t v) { return signs[v] == signs[f.front()]; });
}

bool doubled_unimodular(const Triangulation& tri, std::size_t cell) {
  return normalized_volume(LatticeSimplex(tri.points(tri.cells()[cell]))) == BigInt(1) << tri.dim();
}

bool includes(const Face& big, const Face& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

AuditResult interior_point_bound(const Triangulation& tri) {
  AuditResult r{"interior point bound", 0, 0, {}};
  const auto s = interior_face_counts(tri);
  const std::size_t n = tri.dim();
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const BigInt lhs = interior_count(tri.polytope(), static_cast<Coord>(k));
    BigInt rhs = 0;
    for (std::size_t i = 0; i < k; ++i) rhs += binomial(static_cast<long>(k) - 1, static_cast<long>(i)) * s[i];
    ++r.checked;
    if (lhs < rhs) fail(r, "k=" + std::to_string(k) + ": l*=" + to_string(lhs) + " < " + to_string(rhs));
  }
  finish(r);
  return r;
}

AuditResult primitive_face_identity(const Triangulation& tri) {
  if (!is_primitive(tri)) throw std::invalid_argument("primitive_face_identity: triangulation is not primitive");
  AuditResult r{"primitive face identity", 0, 0, {}};
  const auto s = interior_face_counts(tri);
  const long n = static_cast<long>(tri.dim());
  for (long k = 1; k <= n + 1; ++k) {
    BigInt rhs = 0;
    for (long j = 1; j <= k; ++j) {
      BigInt term = binomial(k - 1, j - 1) * interior_count(tri.polytope(), j);
      rhs += (j + k) % 2 == 0 ? term : BigInt(-term);
    }
    ++r.checked;
    if (rhs != s[static_cast<std::size_t>(k - 1)])
      fail(r, "k=" + std::to_string(k) + ": s=" + std::to_string(s[static_cast<std::size_t>(k - 1)]) +
                  " but alternating sum " + to_string(rhs));
  }
  finish(r);
  return r;
}

AuditResult low_face_bounds(const Triangulation& tri) {
  AuditResult r{"low face bounds", 0, 0, {}};
  const auto s = interior_face_counts(tri);
  const std::uint64_t l1 = interior_count(tri.polytope(), 1), l2 = interior_count(tri.polytope(), 2);
  r.checked = 2;
  if (s[0] > l1) fail(r, "s0=" + std::to_string(s[0]) + " > l*=" + std::to_string(l1));
  if (tri.dim() >= 1 && s.size() > 1 && s[1] > l2 - l1)
    fail(r, "s1=" + std::to_string(s[1]) + " > " + std::to_string(l2 - l1));
  finish(r);
  return r;
}

AuditResult dehn_sommerville(const Triangulation& tri, const Ambient& ambient) {
  if (!ambient.closed()) throw std::invalid_argument("dehn_sommerville: ambient space is not closed");
  AuditResult r{"Dehn-Sommerville", 0, 0, {}};
  const auto f = glued_face_numbers(tri, ambient);
  const long n = static_cast<long>(tri.dim());
  for (long k = 0; k <= n; ++k) {
    BigInt rhs = 0;
    for (long i = k; i <= n; ++i) {
      BigInt term = binomial(i + 1, k + 1) * f[static_cast<std::size_t>(i)];
      rhs += (i + n) % 2 == 0 ? term : BigInt(-term);
    }
    ++r.checked;
    if (rhs != f[static_cast<std::size_t>(k)])
      fail(r, "k=" + std::to_string(k) + ": f=" + std::to_string(f[static_cast<std::size_t>(k)]) + " but sum " +
                  to_string(rhs));
  }
  finish(r);
  return r;
}

AuditResult refinement_monotonicity(const Triangulation& tri) {
  AuditResult r{"refinement monotonicity", 0, 0, {}};
  const long n = static_cast<long>(tri.dim());
  auto quantity = [&](const Triangulation& t) {
    const auto s = interior_face_counts(t);
    return static_cast<long>(s.size() > 1 ? s[1] : 0) - n * static_cast<long>(s[0]);
  };
  Triangulation cur = tri;
  long q = quantity(cur);
  for (const auto& p : lattice_points(tri.polytope())) {
    if (cur.find_vertex(p)) continue;
    cur = refine_add_vertex(cur, p);
    const long next = quantity(cur);
    ++r.checked;
    if (next < q) fail(r, "adding " + to_string(p) + " lowers s1 - n s0 from " + std::to_string(q) + " to " +
                              std::to_string(next));
    q = next;
  }
  finish(r);
  return r;
}

AuditResult critical_copy_dichotomy(const Triangulation& tri, const LatticePoint& origin,
                                    const SignDistribution& signs) {
  require_doubled(tri, "critical_copy_dichotomy");
  AuditResult r{"critical copy dichotomy", 0, 0, {}};
  const std::uint64_t full = std::uint64_t{1} << tri.dim();
  for (std::size_t t = 0; t < tri.cells().size(); ++t) {
    const auto c = real_critical_copies(tri, t, origin, signs);
    ++r.checked;
    if (c != 0 && c != full)
      fail(r, "cell " + face_string(tri, tri.cells()[t]) + " has " + std::to_string(c) + " critical copies");
  }
  finish(r);
  return r;
}

AuditResult ray_index_bounds(const Triangulation& tri, const LatticePoint& origin) {
  AuditResult r{"ray index bounds", 0, 0, {}};
  const CellData data(tri, origin, nullptr);
  const std::size_t n = tri.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& f : tri.faces().by_dim[k]) {
      if (!tri.is_interior_face(f)) continue;
      const auto b = behind(tri, f, origin), fr = in_front(tri, f, origin);
      const auto ib = data.index(b), ifr = data.index(fr);
      ++r.checked;
      bool ok = b != fr && ib >= n - k && ifr <= k + 1;
      if (k == 0) ok = ok && ib == n && ifr == 1;
      if (!ok)
        fail(r, "face " + face_string(tri, f) + ": indices behind " + std::to_string(ib) + ", in front " +
                    std::to_string(ifr));
    }
  finish(r);
  return r;
}

AuditResult one_signed_face_indices(const Triangulation& tri, const LatticePoint& origin,
                                    const SignDistribution& signs) {
  require_doubled(tri, "one_signed_face_indices");
  AuditResult r{"one-signed face indices", 0, 0, {}};
  const CellData data(tri, origin, &signs);
  const std::size_t n = tri.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& f : tri.faces().by_dim[k]) {
      if (!tri.is_interior_face(f) || !one_signed(f, signs)) continue;
      const auto b = behind(tri, f, origin), fr = in_front(tri, f, origin);
      ++r.checked;
      if (data.critical(b) > 0 && data.index(b) != n - k)
        fail(r, "face " + face_string(tri, f) + ": critical cell behind has index " + std::to_string(data.index(b)));
      if (data.critical(fr) > 0 && data.index(fr) != k + 1)
        fail(r, "face " + face_string(tri, f) + ": critical cell in front has index " +
                    std::to_string(data.index(fr)));
    }
  finish(r);
  return r;
}

AuditResult doubled_unimodular_pairs(const Triangulation& tri, const LatticePoint& origin,
                                     const SignDistribution& signs) {
  require_doubled(tri, "doubled_unimodular_pairs");
  AuditResult r{"doubled unimodular pairs", 0, 0, {}};
  const std::size_t n = tri.dim();
  if (n <= 2) {
    r.detail = "needs n > 2";
    return r;
  }
  const CellData data(tri, origin, &signs);
  for (const auto& f : tri.faces().by_dim[n - 1]) {
    if (!tri.is_interior_face(f)) continue;
    const auto b = behind(tri, f, origin), fr = in_front(tri, f, origin);
    if (!doubled_unimodular(tri, b) || !doubled_unimodular(tri, fr)) continue;
    ++r.checked;
    if (data.index(b) == 1 && data.index(fr) == n)
      fail(r, "face " + face_string(tri, f) + ": indices 1 behind and n in front");
    if (one_signed(f, signs) && data.critical(b) > 0 && data.critical(fr) > 0)
      fail(r, "face " + face_string(tri, f) + ": both neighbours of a one-signed face are critical");
  }
  finish(r);
  return r;
}

AuditResult visible_face_incidence(const Triangulation& tri, const LatticePoint& origin) {
  AuditResult r{"visible face incidence", 0, 0, {}};
  const CellData data(tri, origin, nullptr);
  const std::size_t n = tri.dim();
  std::uint64_t flagged = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& faces = tri.faces().by_dim[k];
    const auto& index = tri.faces().index[k];
    std::vector<std::uint64_t> claims_behind(faces.size(), 0), claims_front(faces.size(), 0);
    std::uint64_t interior = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const Face& f = faces[i];
      if (!tri.is_interior_face(f)) continue;
      ++interior;
      const auto b = behind(tri, f, origin), fr = in_front(tri, f, origin);
      ++r.checked;
      if (!includes(f, data.rec(b).root)) fail(r, "face " + face_string(tri, f) + " misses the root behind it");
      if (!includes(f, data.rec(fr).coroot))
        fail(r, "face " + face_string(tri, f) + " misses the coroot in front of it");
    }
    // A cell of index i claims the C(i, n-k) k-faces containing its root as
    // the cell behind them, and dually the faces containing its coroot.
    std::uint64_t claimed_behind = 0, claimed_front = 0;
    for (std::size_t t = 0; t < tri.cells().size(); ++t) {
      const auto& rec = data.rec(t);
      const Cell& cell = tri.cells()[t];
      for (int side = 0; side < 2; ++side) {
        const Face& core = side == 0 ? rec.root : rec.coroot;
        const Face& rest = side == 0 ? rec.coroot : rec.root;
        if (core.size() > k + 1) continue;
        const std::size_t extra = k + 1 - core.size();
        std::uint64_t count = 0;
        // Subsets of `rest` of size `extra`.
        std::vector<bool> pick(rest.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(extra), true);
        do {
          Face f = core;
          for (std::size_t j = 0; j < rest.size(); ++j)
            if (pick[j]) f.push_back(rest[j]);
          std::sort(f.begin(), f.end());
          ++count;
          if (!tri.is_interior_face(f)) {
            ++flagged;
            continue;
          }
          const std::size_t id = index.at(f);
          const auto owner = side == 0 ? behind(tri, f, origin) : in_front(tri, f, origin);
          ++r.checked;
          if (owner != t)
            fail(r, "cell " + face_string(tri, cell) + " claims " + face_string(tri, f) + " owned by another cell");
          (side == 0 ? claims_behind : claims_front)[id]++;
          (side == 0 ? claimed_behind : claimed_front)++;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        const auto expected = binomial(static_cast<long>(rest.size()), static_cast<long>(extra));
        if (expected != count) fail(r, "claim count mismatch for cell " + face_string(tri, cell));
      }
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!tri.is_interior_face(faces[i])) continue;
      if (claims_behind[i] != 1 || claims_front[i] != 1)
        fail(r, "face " + face_string(tri, faces[i]) + " is claimed " + std::to_string(claims_behind[i]) + "/" +
                    std::to_string(claims_front[i]) + " times");
    }
    ++r.checked;
    if (claimed_behind != interior || claimed_front != interior)
      fail(r, "k=" + std::to_string(k) + ": " + std::to_string(interior) + " interior faces but " +
                  std::to_string(claimed_behind) + "/" + std::to_string(claimed_front) + " claims");
  }
  if (r.violations == 0)
    r.detail = std::to_string(r.checked) + " checks passed, " + std::to_string(flagged) + " boundary claims excluded";
  return r;
}

AuditResult bad_cell_in_every_star(const Triangulation& tri, const LatticePoint& origin,
                                   const SignDistribution& signs) {
  require_doubled(tri, "bad_cell_in_every_star");
  AuditResult r{"bad cell in every star", 0, 0, {}};
  if (tri.dim() <= 2) {
    r.detail = "needs n > 2";
    return r;
  }
  const CellData data(tri, origin, &signs);
  for (std::size_t v = 0; v < tri.vertices().size(); ++v) {
    if (!tri.is_interior_face({v})) continue;
    ++r.checked;
    const auto& star = tri.faces().vertex_star[v];
    const bool bad = std::any_of(star.begin(), star.end(), [&](std::size_t t) {
      return data.critical(t) == 0 || !doubled_unimodular(tri, t);
    });
    if (!bad) fail(r, "star of " + to_string(tri.vertex(v)) + " has only critical doubled unimodular cells");
  }
  finish(r);
  return r;
}

BigInt refined_cell_bound(const Triangulation& tri) {
  require_doubled(tri, "refined_cell_bound");
  const auto half = halve(tri);
  std::uint64_t missing = 0;
  for (const auto& p : interior_lattice_points(half.polytope()))
    if (!half.find_vertex(p)) ++missing;
  const std::uint64_t c = tri.dim() >= 2 ? 2 : 1;
  return normalized_volume(half.polytope()) - BigInt(c * missing);
}

AuditResult refinement_cell_count(const Triangulation& tri) {
  AuditResult r{"refinement cell count", 0, 0, {}};
  const BigInt bound = refined_cell_bound(tri);
  r.checked = 1;
  if (BigInt(tri.cells().size()) > bound)
    fail(r, std::to_string(tri.cells().size()) + " cells exceed " + to_string(bound));
  else
    r.detail = std::to_string(tri.cells().size()) + " cells <= " + to_string(bound);
  return r;
}

std::vector<AuditResult> audit_suite(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient,
                                     const std::optional<LatticePoint>& origin) {
  check_compatible(ambient, tri);
  require_total(signs, tri);
  const LatticePoint o = origin ? *origin : find_generic_origin(tri);
  if (!is_generic(tri, o)) throw std::invalid_argument("origin " + to_string(o) + " is not generic");
  std::vector<AuditResult> out;
  out.push_back(interior_point_bound(tri));
  out.push_back(low_face_bounds(tri));
  out.push_back(refinement_monotonicity(tri));
  if (is_primitive(tri)) out.push_back(primitive_face_identity(tri));
  if (ambient.closed()) out.push_back(dehn_sommerville(tri, ambient));
  out.push_back(ray_index_bounds(tri, o));
  out.push_back(visible_face_incidence(tri, o));
  if (is_doubled(tri)) {
    const auto half = halve(tri);
    if (is_primitive(half)) out.push_back(primitive_face_identity(half));
    out.push_back(critical_copy_dichotomy(tri, o, signs));
    out.push_back(one_signed_face_indices(tri, o, signs));
    out.push_back(refinement_cell_count(tri));
    if (tri.dim() > 2) {
      out.push_back(doubled_unimodular_pairs(tri, o, signs));
      out.push_back(bad_cell_in_every_star(tri, o, signs));
    }
  }
  return out;
}

}  // namespace patchwork
