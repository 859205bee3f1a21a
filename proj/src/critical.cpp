#include "patchwork/critical.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace patchwork {

namespace {

std::vector<LatticePoint> facet_points(const Triangulation& tri, const Cell& cell, std::size_t skip) {
  std::vector<LatticePoint> pts;
  pts.reserve(cell.size() - 1);
  for (std::size_t j = 0; j < cell.size(); ++j)
    if (j != skip) pts.push_back(tri.vertex(cell[j]));
  return pts;
}

// Sign of det[q_1 - q_0, ..., q_{n-1} - q_0, d]: the side towards which the
// direction d points, relative to the hyperplane through q.
int direction_side(const std::vector<LatticePoint>& q, const std::vector<Coord>& d) {
  const std::size_t n = d.size();
  IntMatrix m(n);
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = q[r][c] - q[0][c];
  for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = d[c];
  return determinant_sign(m);
}

std::size_t step_into_star(const Triangulation& tri, const Face& face, const LatticePoint& origin, int direction) {
  if (!tri.is_interior_face(face)) throw std::invalid_argument("behind/in front: face lies on the boundary");
  const std::size_t n = tri.dim();
  // (k+1) times the vector from O to the barycenter of the face.
  std::vector<Coord> d(n, 0);
  for (auto v : face)
    for (std::size_t c = 0; c < n; ++c) d[c] += tri.vertex(v)[c];
  for (std::size_t c = 0; c < n; ++c) d[c] = direction * (d[c] - static_cast<Coord>(face.size()) * origin[c]);

  std::vector<std::size_t> found;
  for (auto t : tri.star(face)) {
    const Cell& cell = tri.cells()[t];
    bool inside = true;
    for (std::size_t j = 0; j < cell.size() && inside; ++j) {
      if (std::binary_search(face.begin(), face.end(), cell[j])) continue;
      // The barycentric coordinate of cell[j] vanishes on the face; the cell
      // is entered iff it grows along d.
      const auto q = facet_points(tri, cell, j);
      const int s = direction_side(q, d);
      if (s == 0) throw std::domain_error("behind/in front: origin is not generic");
      if (s * orientation(q, tri.vertex(cell[j])) < 0) inside = false;
    }
    if (inside) found.push_back(t);
  }
  if (found.size() != 1) throw std::logic_error("behind/in front: ray does not enter exactly one star cell");
  return found.front();
}

}  // namespace

bool is_generic(const Triangulation& tri, const LatticePoint& origin) {
  if (origin.dim() != tri.dim() || tri.polytope().contains(origin)) return false;
  const auto& facets = tri.faces().by_dim[tri.dim() - 1];
  return std::none_of(facets.begin(), facets.end(),
                      [&](const Face& f) { return orientation(tri.points(f), origin) == 0; });
}

LatticePoint find_generic_origin(const Triangulation& tri) {
  const std::size_t n = tri.dim();
  Coord lo = tri.vertex(0)[0], hi = lo;
  for (const auto& v : tri.vertices())
    for (std::size_t c = 0; c < n; ++c) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
  const Coord span = hi - lo;
  std::vector<Coord> o(n);
  for (std::size_t c = 0; c < n; ++c) o[c] = lo - span - 1 - static_cast<Coord>(c);
  LatticePoint origin(o);
  if (is_generic(tri, origin)) return origin;

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Coord> offset(1, 4 * (span + 1) + 16);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Coord> p(n);
    for (std::size_t c = 0; c < n; ++c) p[c] = o[c] - offset(rng);
    LatticePoint candidate(p);
    if (is_generic(tri, candidate)) return candidate;
  }
  throw std::runtime_error("find_generic_origin: no generic point found");
}

VisibilityRecord visibility(const Triangulation& tri, std::size_t cell_id, const LatticePoint& origin) {
  const Cell& cell = tri.cells()[cell_id];
  VisibilityRecord rec;
  rec.cell = cell_id;
  rec.visible.resize(cell.size());
  for (std::size_t j = 0; j < cell.size(); ++j) {
    const auto q = facet_points(tri, cell, j);
    const int so = orientation(q, origin);
    if (so == 0) throw std::domain_error("visibility: origin lies on a facet hyperplane");
    rec.visible[j] = so != orientation(q, tri.vertex(cell[j]));
    if (rec.visible[j]) {
      ++rec.o_index;
      rec.coroot.push_back(cell[j]);
    } else {
      rec.root.push_back(cell[j]);
    }
  }
  return rec;
}

std::uint64_t real_critical_copies(const Triangulation& tri, const VisibilityRecord& rec,
                                   const SignDistribution& signs) {
  require_total(signs, tri);
  std::uint64_t count = 0;
  const SignVector copies = SignVector{1} << tri.dim();
  for (SignVector e = 0; e < copies; ++e) {
    const Sign r = extend_to_copy(signs, tri, rec.root.front(), e);
    const auto has = [&](const Face& f, Sign s) {
      return std::all_of(f.begin(), f.end(), [&](std::size_t v) { return extend_to_copy(signs, tri, v, e) == s; });
    };
    if (has(rec.root, r) && has(rec.coroot, -r)) ++count;
  }
  return count;
}

std::uint64_t real_critical_copies(const Triangulation& tri, std::size_t cell, const LatticePoint& origin,
                                   const SignDistribution& signs) {
  return real_critical_copies(tri, visibility(tri, cell, origin), signs);
}

std::size_t behind(const Triangulation& tri, const Face& face, const LatticePoint& origin) {
  return step_into_star(tri, face, origin, 1);
}

std::size_t in_front(const Triangulation& tri, const Face& face, const LatticePoint& origin) {
  return step_into_star(tri, face, origin, -1);
}

IndexHistogram index_histogram(const Triangulation& tri, const LatticePoint& origin, const SignDistribution& signs) {
  require_total(signs, tri);
  const std::size_t n = tri.dim();
  IndexHistogram h;
  h.origin = origin;
  h.S.assign(n + 1, 0);
  h.S_bar.assign(n + 1, 0);
  h.c_plus.assign(n + 1, 0);
  h.c_minus.assign(n + 1, 0);
  const SignVector copies = SignVector{1} << n;
  for (std::size_t t = 0; t < tri.cells().size(); ++t) {
    const auto rec = visibility(tri, t, origin);
    ++h.S[rec.o_index];
    bool critical = false;
    for (SignVector e = 0; e < copies; ++e) {
      const Sign r = extend_to_copy(signs, tri, rec.root.front(), e);
      bool ok = true;
      for (auto v : rec.root) ok = ok && extend_to_copy(signs, tri, v, e) == r;
      for (auto v : rec.coroot) ok = ok && extend_to_copy(signs, tri, v, e) == -r;
      if (!ok) continue;
      critical = true;
      if (r == Sign::Plus)
        ++h.c_plus[rec.o_index];
      else
        ++h.c_minus[n - rec.o_index];
    }
    if (critical) ++h.S_bar[rec.o_index];
  }
  return h;
}

}  // namespace patchwork
