#include "patchwork/patchwork.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "patchwork/gf2.hpp"

namespace patchwork {

std::string to_string(AmbientKind kind) {
  switch (kind) {
    case AmbientKind::Affine: return "affine";
    case AmbientKind::Projective: return "projective";
    case AmbientKind::P1Power: return "p1power";
  }
  return "?";
}

AmbientKind parse_ambient_kind(std::string_view text) {
  if (text == "affine") return AmbientKind::Affine;
  if (text == "projective") return AmbientKind::Projective;
  if (text == "p1power") return AmbientKind::P1Power;
  throw std::invalid_argument("unsupported ambient kind '" + std::string(text) +
                              "' (expected affine, projective or p1power)");
}

void check_compatible(const Ambient& ambient, const Triangulation& tri) {
  const auto& poly = tri.polytope();
  if (!poly.in_positive_orthant()) throw std::invalid_argument("polytope must lie in the closed positive orthant");
  if (tri.dim() == 0 || tri.dim() > 31) throw std::invalid_argument("unsupported dimension");
  switch (ambient.kind) {
    case AmbientKind::Affine: break;
    case AmbientKind::Projective: {
      Coord m = 0;
      if (!poly.is_standard_simplex(&m)) throw std::invalid_argument("projective ambient needs the polytope Delta_m^n");
      if (ambient.degree != 0 && ambient.degree != m)
        throw std::invalid_argument("projective degree " + std::to_string(ambient.degree) + " does not match the polytope (m = " +
                                    std::to_string(m) + ")");
      break;
    }
    case AmbientKind::P1Power: {
      std::vector<Coord> sides;
      if (!poly.is_box(&sides)) throw std::invalid_argument("p1power ambient needs a box polytope [0,m_1]x...x[0,m_n]");
      if (!ambient.multidegree.empty() && ambient.multidegree != sides)
        throw std::invalid_argument("p1power multidegree does not match the polytope");
      for (Coord s : sides)
        if (s % 2 != 0) throw std::invalid_argument("p1power gluing needs even box sides so that signs match across the identification");
      break;
    }
  }
}

namespace {

struct FaceFlags {
  SignVector zero = 0;  // coordinates identically 0 on the face
  SignVector full = 0;  // coordinates identically at the box side
  bool far = false;     // face on the facet sum(x) = m
};

struct GlueContext {
  AmbientKind kind;
  std::vector<Coord> sides;
  Coord m = 0;

  GlueContext(const Triangulation& tri, const Ambient& ambient) : kind(ambient.kind) {
    if (kind == AmbientKind::P1Power) tri.polytope().is_box(&sides);
    if (kind == AmbientKind::Projective) tri.polytope().is_standard_simplex(&m);
  }
};

FaceFlags flags(const Triangulation& tri, const GlueContext& ctx, const Face& face) {
  FaceFlags f;
  const std::size_t n = tri.dim();
  const auto& sides = ctx.sides;
  const Coord m = ctx.m;
  for (std::size_t i = 0; i < n; ++i) {
    bool z = true, full = !sides.empty();
    for (auto v : face) {
      const Coord x = tri.vertex(v)[i];
      if (x != 0) z = false;
      if (!sides.empty() && x != sides[i]) full = false;
    }
    if (z) f.zero |= SignVector{1} << i;
    if (full) f.full |= SignVector{1} << i;
  }
  if (ctx.kind == AmbientKind::Projective) {
    f.far = true;
    for (auto v : face)
      if (tri.vertex(v).coordinate_sum() != m) f.far = false;
  }
  return f;
}

SignVector all_bits(std::size_t n) { return static_cast<SignVector>((std::uint64_t{1} << n) - 1); }

SignVector canonical(const FaceFlags& f, AmbientKind kind, std::size_t n, SignVector e) {
  const SignVector all = all_bits(n);
  switch (kind) {
    case AmbientKind::Affine: return e & ~f.zero & all;
    case AmbientKind::P1Power: return e & ~(f.zero | f.full) & all;
    case AmbientKind::Projective: {
      const SignVector free = ~f.zero & all;
      const SignVector a = e & free;
      if (!f.far) return a;
      return std::min(a, static_cast<SignVector>(~e & free));
    }
  }
  return e;
}

}  // namespace

SignVector glued_copy(const Triangulation& tri, const Ambient& ambient, const Face& face, SignVector e) {
  return canonical(flags(tri, GlueContext(tri, ambient), face), ambient.kind, tri.dim(), e);
}

namespace {

std::uint64_t multiplicity(const Triangulation& tri, const GlueContext& ctx, const Face& face) {
  const auto f = flags(tri, ctx, face);
  const AmbientKind kind = ctx.kind;
  const std::size_t n = tri.dim();
  std::size_t fixed = static_cast<std::size_t>(std::popcount(f.zero));
  if (kind == AmbientKind::P1Power) fixed += static_cast<std::size_t>(std::popcount(f.full));
  std::uint64_t mult = std::uint64_t{1} << (n - fixed);
  if (kind == AmbientKind::Projective && f.far) mult /= 2;
  return mult;
}

}  // namespace

std::uint64_t glued_multiplicity(const Triangulation& tri, const Ambient& ambient, const Face& face) {
  return multiplicity(tri, GlueContext(tri, ambient), face);
}

std::vector<std::uint64_t> glued_face_numbers(const Triangulation& tri, const Ambient& ambient) {
  check_compatible(ambient, tri);
  const auto& fl = tri.faces();
  const GlueContext ctx(tri, ambient);
  std::vector<std::uint64_t> f(tri.dim() + 1, 0);
  for (std::size_t d = 0; d <= tri.dim(); ++d)
    for (const auto& face : fl.by_dim[d]) f[d] += multiplicity(tri, ctx, face);
  return f;
}

bool PatchworkComplex::empty() const {
  for (const auto& c : cells)
    if (!c.empty()) return false;
  return true;
}

PatchworkComplex build(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient) {
  check_compatible(ambient, tri);
  require_total(signs, tri);
  const std::size_t n = tri.dim();
  const auto& fl = tri.faces();
  const GlueContext ctx(tri, ambient);
  PatchworkComplex c;
  c.ambient_dim = n;
  c.cells.resize(n);
  c.boundary.resize(n);
  const SignVector copies = SignVector{1} << n;
  for (std::size_t d = 0; d < n; ++d) {
    for (const auto& face : fl.by_dim[d + 1]) {
      const auto f = flags(tri, ctx, face);
      for (SignVector e = 0; e < copies; ++e) {
        if (canonical(f, ambient.kind, n, e) != e) continue;
        if (is_mixed(face, tri, signs, e)) c.cells[d].push_back({face, e});
      }
    }
    std::sort(c.cells[d].begin(), c.cells[d].end());
  }
  for (std::size_t d = 1; d < n; ++d) {
    c.boundary[d].resize(c.cells[d].size());
    for (std::size_t i = 0; i < c.cells[d].size(); ++i) {
      const auto& cell = c.cells[d][i];
      std::vector<std::size_t> bd;
      for (std::size_t skip = 0; skip < cell.face.size(); ++skip) {
        Face g;
        for (std::size_t j = 0; j < cell.face.size(); ++j)
          if (j != skip) g.push_back(cell.face[j]);
        if (!is_mixed(g, tri, signs, cell.copy)) continue;
        CellId target{g, canonical(flags(tri, ctx, g), ambient.kind, n, cell.copy)};
        auto it = std::lower_bound(c.cells[d - 1].begin(), c.cells[d - 1].end(), target);
        if (it == c.cells[d - 1].end() || *it != target) throw std::logic_error("boundary cell missing from the complex");
        bd.push_back(static_cast<std::size_t>(it - c.cells[d - 1].begin()));
      }
      std::sort(bd.begin(), bd.end());
      // Cancel repeated incidences over Z/2.
      std::vector<std::size_t> reduced;
      for (std::size_t k = 0; k < bd.size();) {
        std::size_t r = k;
        while (r < bd.size() && bd[r] == bd[k]) ++r;
        if ((r - k) % 2 == 1) reduced.push_back(bd[k]);
        k = r;
      }
      c.boundary[d][i] = std::move(reduced);
    }
  }
  return c;
}

BettiVector betti_z2(const PatchworkComplex& c) {
  const std::size_t n = c.cells.size();
  std::vector<std::size_t> rank(n + 1, 0);
  for (std::size_t d = 1; d < n; ++d) {
    BitMatrix m(c.cells[d].size(), c.cells[d - 1].size());
    for (std::size_t i = 0; i < c.boundary[d].size(); ++i)
      for (auto j : c.boundary[d][i]) m.flip(i, j);
    rank[d] = m.rank();
  }
  BettiVector b(n, 0);
  for (std::size_t d = 0; d < n; ++d) b[d] = c.cells[d].size() - rank[d] - rank[d + 1];
  return b;
}

std::uint64_t connected_components(const PatchworkComplex& c) {
  std::vector<std::size_t> offset(c.cells.size() + 1, 0);
  for (std::size_t d = 0; d < c.cells.size(); ++d) offset[d + 1] = offset[d] + c.cells[d].size();
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t d = 1; d < c.cells.size(); ++d)
    for (std::size_t i = 0; i < c.boundary[d].size(); ++i)
      for (auto j : c.boundary[d][i]) {
        const auto a = find(offset[d] + i), b = find(offset[d - 1] + j);
        if (a != b) parent[a] = b;
      }
  std::uint64_t roots = 0;
  for (std::size_t x = 0; x < parent.size(); ++x)
    if (find(x) == x) ++roots;
  return roots;
}

long long euler_characteristic(const PatchworkComplex& c) {
  long long chi = 0;
  for (std::size_t d = 0; d < c.cells.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.cells[d].size());
  return chi;
}

long long euler_characteristic(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient) {
  check_compatible(ambient, tri);
  require_total(signs, tri);
  const std::size_t n = tri.dim();
  const auto& fl = tri.faces();
  const GlueContext ctx(tri, ambient);
  long long chi = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& face : fl.by_dim[k]) {
      const auto f = flags(tri, ctx, face);
      SignVector fixed = f.zero;
      if (ambient.kind == AmbientKind::P1Power) fixed |= f.full;
      const SignVector free = ~fixed & all_bits(n);
      // Enumerate the sub-masks of the free coordinates: one per distinct copy
      // before the antipodal identification.
      long long mixed = 0;
      SignVector s = free;
      while (true) {
        if (is_mixed(face, tri, signs, s)) ++mixed;
        if (s == 0) break;
        s = (s - 1) & free;
      }
      if (ambient.kind == AmbientKind::Projective && f.far) mixed /= 2;
      chi += ((k - 1) % 2 == 0 ? 1 : -1) * mixed;
    }
  }
  return chi;
}

bool boundary_squares_to_zero(const PatchworkComplex& c) {
  for (std::size_t d = 2; d < c.cells.size(); ++d)
    for (const auto& bd : c.boundary[d]) {
      std::vector<std::size_t> acc;
      for (auto j : bd)
        for (auto k : c.boundary[d - 1][j]) acc.push_back(k);
      std::sort(acc.begin(), acc.end());
      for (std::size_t i = 0; i < acc.size();) {
        std::size_t r = i;
        while (r < acc.size() && acc[r] == acc[i]) ++r;
        if ((r - i) % 2 == 1) return false;
        i = r;
      }
    }
  return true;
}

std::uint64_t MixedCensus::total(std::size_t k) const {
  if (k >= counts.size()) return 0;
  return std::accumulate(counts[k].begin(), counts[k].end(), std::uint64_t{0});
}

std::size_t stratum_dimension(const Triangulation& tri, const Face& face) {
  const auto& poly = tri.polytope();
  std::vector<std::size_t> containing;
  for (std::size_t f = 0; f < poly.facets().size(); ++f) {
    bool all = true;
    for (auto v : face)
      if (!poly.on_facet(tri.vertex(v), f)) all = false;
    if (all) containing.push_back(f);
  }
  if (containing.empty()) return poly.dim();
  std::vector<LatticePoint> pts;
  for (const auto& v : poly.vertices()) {
    bool all = true;
    for (auto f : containing)
      if (!poly.on_facet(v, f)) all = false;
    if (all) pts.push_back(v);
  }
  return static_cast<std::size_t>(affine_dimension(pts));
}

MixedCensus mixed_census(const Triangulation& tri, const SignDistribution& signs) {
  require_total(signs, tri);
  const std::size_t n = tri.dim();
  MixedCensus census;
  census.counts.assign(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  const auto& fl = tri.faces();
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& face : fl.by_dim[k])
      if (is_mixed(face, tri, signs, 0)) ++census.counts[k][stratum_dimension(tri, face)];
  return census;
}

long long TopologySummary::alternating_betti() const {
  long long sum = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) sum += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[d]);
  return sum;
}

bool TopologySummary::consistent() const {
  const std::uint64_t b0 = betti.empty() ? 0 : betti[0];
  return boundary_ok && chi_cells == chi_faces && alternating_betti() == chi_cells && b0 == components;
}

TopologySummary summarize(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient) {
  const auto c = build(tri, signs, ambient);
  TopologySummary t;
  t.betti = betti_z2(c);
  t.components = connected_components(c);
  t.chi_cells = euler_characteristic(c);
  t.chi_faces = euler_characteristic(tri, signs, ambient);
  t.boundary_ok = boundary_squares_to_zero(c);
  return t;
}

}  // namespace patchwork
