#include "patchwork/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace patchwork {

struct Triangulation::Cache {
  std::once_flag once;
  FaceLattice lattice;
};

Triangulation::Triangulation(LatticePolytope polytope, std::vector<LatticePoint> vertices, std::vector<Cell> cells)
    : polytope_(std::move(polytope)), cache_(std::make_shared<Cache>()) {
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vertices[a] < vertices[b]; });
  std::vector<std::size_t> remap(vertices.size());
  vertices_.reserve(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    vertices_.push_back(std::move(vertices[order[i]]));
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i - 1]) throw std::invalid_argument("duplicate triangulation vertex " + to_string(vertices_[i]));
  for (auto& c : cells) {
    for (auto& v : c) {
      if (v >= remap.size()) throw std::invalid_argument("cell references vertex index out of range");
      v = remap[v];
    }
    std::sort(c.begin(), c.end());
  }
  std::sort(cells.begin(), cells.end());
  cells_ = std::move(cells);
}

Triangulation Triangulation::from_simplices(const std::vector<std::vector<LatticePoint>>& simplices) {
  std::vector<LatticePoint> all;
  for (const auto& s : simplices) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Cell> cells;
  for (const auto& s : simplices) {
    Cell c;
    for (const auto& p : s) c.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), p) - all.begin()));
    cells.push_back(std::move(c));
  }
  auto poly = LatticePolytope::from_points(all);
  return Triangulation(std::move(poly), std::move(all), std::move(cells));
}

std::optional<std::size_t> Triangulation::find_vertex(const LatticePoint& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<LatticePoint> Triangulation::points(const Face& face) const {
  std::vector<LatticePoint> r;
  r.reserve(face.size());
  for (auto i : face) r.push_back(vertices_[i]);
  return r;
}

const FaceLattice& Triangulation::faces() const {
  std::call_once(cache_->once, [this] {
    FaceLattice& fl = cache_->lattice;
    const std::size_t n = dim();
    std::vector<std::set<Face>> sets(n + 1);
    for (const auto& c : cells_) {
      const std::size_t k = c.size();
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Face f;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) f.push_back(c[i]);
        if (f.size() - 1 <= n) sets[f.size() - 1].insert(std::move(f));
      }
    }
    fl.by_dim.resize(n + 1);
    fl.index.resize(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
      fl.by_dim[d].assign(sets[d].begin(), sets[d].end());
      for (std::size_t i = 0; i < fl.by_dim[d].size(); ++i) fl.index[d].emplace(fl.by_dim[d][i], i);
    }
    fl.vertex_star.assign(vertices_.size(), {});
    for (std::size_t c = 0; c < cells_.size(); ++c)
      for (auto v : cells_[c]) fl.vertex_star[v].push_back(c);
    if (n >= 1) {
      fl.facet_cells.assign(fl.by_dim[n - 1].size(), {});
      for (std::size_t c = 0; c < cells_.size(); ++c)
        for (std::size_t skip = 0; skip < cells_[c].size(); ++skip) {
          Face f;
          for (std::size_t i = 0; i < cells_[c].size(); ++i)
            if (i != skip) f.push_back(cells_[c][i]);
          auto it = fl.index[n - 1].find(f);
          if (it != fl.index[n - 1].end()) fl.facet_cells[it->second].push_back(c);
        }
    }
  });
  return cache_->lattice;
}

bool Triangulation::is_interior_face(const Face& face) const {
  for (std::size_t f = 0; f < polytope_.facets().size(); ++f) {
    bool all_on = true;
    for (auto v : face)
      if (!polytope_.on_facet(vertices_[v], f)) {
        all_on = false;
        break;
      }
    if (all_on) return false;
  }
  return true;
}

std::vector<std::size_t> Triangulation::star(const Face& face) const {
  const auto& fl = faces();
  if (face.empty()) {
    std::vector<std::size_t> all(cells_.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> result = fl.vertex_star.at(face.front());
  for (std::size_t i = 1; i < face.size(); ++i) {
    const auto& other = fl.vertex_star.at(face[i]);
    std::vector<std::size_t> next;
    std::set_intersection(result.begin(), result.end(), other.begin(), other.end(), std::back_inserter(next));
    result = std::move(next);
  }
  return result;
}

namespace {

Face without(const Cell& c, std::size_t skip) {
  Face f;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != skip) f.push_back(c[i]);
  return f;
}

// Barycentric coordinates of p with respect to the full-dimensional simplex v,
// by Cramer's rule on the homogenized vertex matrix.
std::vector<Rational> barycentric(const std::vector<LatticePoint>& v, const LatticePoint& p) {
  const std::size_t n = p.dim();
  auto homogeneous = [&](std::size_t replace) {
    IntMatrix m(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
      const LatticePoint& q = r == replace ? p : v[r];
      m(r, 0) = 1;
      for (std::size_t c = 0; c < n; ++c) m(r, c + 1) = q[c];
    }
    return m;
  };
  const BigInt d = determinant(homogeneous(n + 1));
  if (d == 0) throw std::invalid_argument("degenerate simplex");
  std::vector<Rational> lambda(n + 1);
  for (std::size_t i = 0; i <= n; ++i) lambda[i] = make_rational(determinant(homogeneous(i)), d);
  return lambda;
}

// Kernel of the homogenized point matrix when it is one-dimensional.
std::optional<std::vector<Rational>> unique_dependency(const std::vector<LatticePoint>& pts) {
  const std::size_t k = pts.size(), n = pts.front().dim();
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    a[0][j] = 1;
    for (std::size_t r = 0; r < n; ++r) a[r + 1][j] = pts[j][r];
  }
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row <= n; ++c) {
    std::size_t r = row;
    while (r <= n && a[r][c] == 0) ++r;
    if (r > n) continue;
    std::swap(a[r], a[row]);
    const Rational lead = a[row][c];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t cc = 0; cc < k; ++cc) a[i][cc] -= f * a[row][cc];
    }
    piv.push_back(c);
    ++row;
  }
  if (piv.size() + 1 != k) return std::nullopt;
  std::vector<bool> is_piv(k, false);
  for (auto p : piv) is_piv[p] = true;
  std::size_t free = 0;
  while (is_piv[free]) ++free;
  std::vector<Rational> x(k, Rational(0));
  x[free] = 1;
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -a[i][free];
  return x;
}

// Two simplices meet in a common face iff no circuit has its positive part in
// one and its negative part in the other.
bool proper_intersection(const Cell& s, const Cell& t, const std::vector<LatticePoint>& verts) {
  std::vector<std::size_t> u;
  std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
  if (u.size() > 24) throw std::logic_error("cell too large for the circuit test");
  const std::size_t n = verts.front().dim();
  for (std::uint32_t mask = 1; mask < (1u << u.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < 2 || size > n + 2) continue;
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (mask >> i & 1) z.push_back(u[i]);
    const bool in_s = std::includes(s.begin(), s.end(), z.begin(), z.end());
    const bool in_t = std::includes(t.begin(), t.end(), z.begin(), z.end());
    if (in_s || in_t) continue;
    std::vector<LatticePoint> pts;
    for (auto i : z) pts.push_back(verts[i]);
    auto dep = unique_dependency(pts);
    if (!dep) continue;
    bool circuit = true;
    for (const auto& x : *dep)
      if (x == 0) circuit = false;
    if (!circuit) continue;
    bool pos_s = true, neg_t = true, pos_t = true, neg_s = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const bool ins = std::binary_search(s.begin(), s.end(), z[i]);
      const bool int_ = std::binary_search(t.begin(), t.end(), z[i]);
      if ((*dep)[i] > 0) {
        pos_s &= ins;
        pos_t &= int_;
      } else {
        neg_t &= int_;
        neg_s &= ins;
      }
    }
    if ((pos_s && neg_t) || (pos_t && neg_s)) return false;
  }
  return true;
}

// Quick sufficient test: some facet hyperplane of one cell has the other cell
// weakly on its far side, touching it only in shared vertices.
bool separated_by_facet(const Cell& s, const Cell& t, const std::vector<LatticePoint>& verts) {
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    std::vector<LatticePoint> hp;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != skip) hp.push_back(verts[s[i]]);
    const int inner = orientation(hp, verts[s[skip]]);
    bool ok = true;
    for (auto v : t) {
      const int o = orientation(hp, verts[v]);
      if (o == inner) {
        ok = false;
        break;
      }
      if (o == 0 && !std::binary_search(s.begin(), s.end(), v)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool boxes_overlap(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  for (std::size_t i = 0; i < a.front().dim(); ++i) {
    Coord alo = a[0][i], ahi = a[0][i], blo = b[0][i], bhi = b[0][i];
    for (const auto& p : a) {
      alo = std::min(alo, p[i]);
      ahi = std::max(ahi, p[i]);
    }
    for (const auto& p : b) {
      blo = std::min(blo, p[i]);
      bhi = std::max(bhi, p[i]);
    }
    if (ahi < blo || bhi < alo) return false;
  }
  return true;
}

std::string cell_string(const Triangulation& tri, const Cell& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + to_string(tri.vertex(c[i]));
  return s + "]";
}

}  // namespace

std::vector<Rational> barycentric_coordinates(const std::vector<LatticePoint>& simplex, const LatticePoint& p) {
  return barycentric(simplex, p);
}

ValidationReport validate(const Triangulation& tri, bool pairwise) {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violation = std::move(msg);
    return rep;
  };
  const auto& poly = tri.polytope();
  const std::size_t n = tri.dim();
  if (poly.dim() != n) return fail("polytope is not full-dimensional");
  if (tri.cells().empty()) return fail("no cells");
  for (const auto& v : tri.vertices()) {
    if (v.dim() != n) return fail("vertex dimension mismatch: " + to_string(v));
    if (!poly.contains(v)) return fail("vertex outside polytope: " + to_string(v));
  }
  std::vector<bool> used(tri.vertices().size(), false);
  BigInt total = 0;
  for (const auto& c : tri.cells()) {
    if (c.size() != n + 1) return fail("cell does not have n+1 vertices: " + cell_string(tri, c));
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == c[i - 1]) return fail("cell repeats a vertex: " + cell_string(tri, c));
    for (auto v : c) used[v] = true;
    const auto pts = tri.points(c);
    if (affine_dimension(pts) != static_cast<int>(n)) return fail("degenerate cell: " + cell_string(tri, c));
    total += normalized_volume(LatticeSimplex(pts));
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) return fail("unused vertex: " + to_string(tri.vertex(i)));
  for (std::size_t i = 1; i < tri.cells().size(); ++i)
    if (tri.cells()[i] == tri.cells()[i - 1]) return fail("repeated cell: " + cell_string(tri, tri.cells()[i]));
  const BigInt pv = normalized_volume(poly);
  if (total != pv) return fail("cell volumes sum to " + to_string(total) + ", polytope volume is " + to_string(pv));

  const auto& fl = tri.faces();
  for (std::size_t f = 0; f < fl.by_dim[n - 1].size(); ++f) {
    const Face& face = fl.by_dim[n - 1][f];
    const auto& cs = fl.facet_cells[f];
    const bool interior = tri.is_interior_face(face);
    if (!interior && cs.size() != 1) return fail("boundary facet in " + std::to_string(cs.size()) + " cells: " + cell_string(tri, face));
    if (interior) {
      if (cs.size() != 2) return fail("interior facet in " + std::to_string(cs.size()) + " cells: " + cell_string(tri, face));
      const auto fp = tri.points(face);
      auto opposite = [&](const Cell& c) {
        for (auto v : c)
          if (!std::binary_search(face.begin(), face.end(), v)) return v;
        return c.front();
      };
      const int a = orientation(fp, tri.vertex(opposite(tri.cells()[cs[0]])));
      const int b = orientation(fp, tri.vertex(opposite(tri.cells()[cs[1]])));
      if (a * b >= 0) return fail("cells on the same side of facet " + cell_string(tri, face));
    }
  }

  if (pairwise) {
    rep.pairwise_checked = true;
    const auto& cells = tri.cells();
    std::vector<std::vector<LatticePoint>> pts;
    for (const auto& c : cells) pts.push_back(tri.points(c));
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        if (!boxes_overlap(pts[i], pts[j])) continue;
        if (separated_by_facet(cells[i], cells[j], tri.vertices()) || separated_by_facet(cells[j], cells[i], tri.vertices()))
          continue;
        if (!proper_intersection(cells[i], cells[j], tri.vertices()))
          return fail("cells " + cell_string(tri, cells[i]) + " and " + cell_string(tri, cells[j]) +
                      " intersect in a non-face");
      }
  }
  return rep;
}

bool certify_convexity(const Triangulation& tri, const HeightFunction& h) {
  if (h.size() != tri.vertices().size()) throw std::invalid_argument("height function does not cover every vertex");
  const std::size_t n = tri.dim();
  const auto& fl = tri.faces();
  for (std::size_t f = 0; f < fl.by_dim[n - 1].size(); ++f) {
    const auto& cs = fl.facet_cells[f];
    if (cs.size() != 2) continue;
    const Cell& a = tri.cells()[cs[0]];
    const Cell& b = tri.cells()[cs[1]];
    std::size_t opp = b.front();
    for (auto v : b)
      if (!std::binary_search(a.begin(), a.end(), v)) opp = v;
    const auto lambda = barycentric(tri.points(a), tri.vertex(opp));
    Rational interp = 0;
    for (std::size_t i = 0; i <= n; ++i) interp += lambda[i] * h[a[i]];
    if (!(h[opp] > interp)) return false;
  }
  return true;
}

Triangulation dilate(const Triangulation& tri, Coord factor) {
  if (factor <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<LatticePoint> v;
  for (const auto& p : tri.vertices()) v.push_back(p.scaled(factor));
  return Triangulation(tri.polytope().dilated(factor), std::move(v), tri.cells());
}

bool is_doubled(const Triangulation& tri) {
  for (const auto& v : tri.vertices())
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v[i] % 2 != 0) return false;
  return true;
}

Triangulation halve(const Triangulation& tri) {
  if (!is_doubled(tri)) throw std::invalid_argument("halve: odd vertex coordinate");
  std::vector<LatticePoint> v;
  for (const auto& p : tri.vertices()) {
    LatticePoint q = p;
    for (std::size_t i = 0; i < q.dim(); ++i) q[i] /= 2;
    v.push_back(q);
  }
  auto poly = LatticePolytope::from_points(v);
  return Triangulation(std::move(poly), std::move(v), tri.cells());
}

FaceCountVector interior_face_counts(const Triangulation& tri) {
  const auto& fl = tri.faces();
  FaceCountVector s(tri.dim() + 1, 0);
  for (std::size_t d = 0; d <= tri.dim(); ++d)
    for (const auto& f : fl.by_dim[d])
      if (tri.is_interior_face(f)) ++s[d];
  return s;
}

Triangulation refine_add_vertex(const Triangulation& tri, const LatticePoint& p) {
  if (!tri.polytope().contains(p)) throw std::invalid_argument("point outside polytope: " + to_string(p));
  if (tri.find_vertex(p)) throw std::invalid_argument("point is already a vertex: " + to_string(p));
  std::vector<LatticePoint> verts = tri.vertices();
  const std::size_t pi = verts.size();
  verts.push_back(p);
  std::vector<Cell> cells;
  for (const auto& c : tri.cells()) {
    const auto lambda = barycentric(tri.points(c), p);
    bool inside = true;
    for (const auto& l : lambda)
      if (l < 0) inside = false;
    if (!inside) {
      cells.push_back(c);
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (lambda[i] == 0) continue;
      Cell nc = c;
      nc[i] = pi;
      cells.push_back(std::move(nc));
    }
  }
  return Triangulation(tri.polytope(), std::move(verts), std::move(cells));
}

bool is_primitive(const Triangulation& tri) {
  for (const auto& c : tri.cells())
    if (normalized_volume(LatticeSimplex(tri.points(c))) != 1) return false;
  return true;
}

bool is_maximal(const Triangulation& tri) {
  for (const auto& p : lattice_points(tri.polytope()))
    if (!tri.find_vertex(p)) return false;
  return true;
}

namespace {

class LowerHull {
 public:
  LowerHull(const std::vector<LatticePoint>& pts, const std::vector<BigInt>& h) : pts_(pts), h_(h) {
    small_ = true;
    for (const auto& x : h) {
      if (x > std::numeric_limits<std::int64_t>::max() / 4 || x < std::numeric_limits<std::int64_t>::min() / 4) small_ = false;
      h64_.push_back(small_ ? static_cast<std::int64_t>(x) : 0);
    }
  }

  // Sign of h(q) minus the affine interpolation over the lifted simplex s.
  int height_above(const std::vector<std::size_t>& s, std::size_t q) const {
    const std::size_t n = pts_[q].dim();
    auto hom = [&](std::size_t replace) {
      IntMatrix m(n + 1);
      for (std::size_t r = 0; r <= n; ++r) {
        const LatticePoint& p = r == replace ? pts_[q] : pts_[s[r]];
        m(r, 0) = 1;
        for (std::size_t c = 0; c < n; ++c) m(r, c + 1) = p[c];
      }
      return m;
    };
    const BigInt d = determinant(hom(n + 1));
    if (small_ && d.sign() != 0) {
      // Cofactor determinants of small lattice simplices fit comfortably.
      __int128 acc = 0;
      bool ok = !__builtin_mul_overflow(static_cast<__int128>(h64_[q]), static_cast<__int128>(static_cast<std::int64_t>(d)), &acc);
      for (std::size_t i = 0; ok && i <= n; ++i) {
        __int128 t;
        const BigInt di = determinant(hom(i));
        ok = di <= std::numeric_limits<std::int64_t>::max() && di >= std::numeric_limits<std::int64_t>::min() &&
             !__builtin_mul_overflow(static_cast<__int128>(static_cast<std::int64_t>(di)), static_cast<__int128>(h64_[s[i]]), &t) &&
             !__builtin_sub_overflow(acc, t, &acc);
      }
      if (ok) return ((acc > 0) - (acc < 0)) * d.sign();
    }
    BigInt acc = h_[q] * d;
    for (std::size_t i = 0; i <= n; ++i) acc -= determinant(hom(i)) * h_[s[i]];
    return acc.sign() * d.sign();
  }

 private:
  const std::vector<LatticePoint>& pts_;
  const std::vector<BigInt>& h_;
  std::vector<std::int64_t> h64_;
  bool small_ = true;
};

}  // namespace

Triangulation regular_triangulation(std::vector<LatticePoint> points, std::vector<Rational> heights) {
  if (points.size() != heights.size()) throw std::invalid_argument("one height per point is required");
  if (points.empty()) throw std::invalid_argument("no points");
  const std::size_t n = points.front().dim();
  {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
    std::vector<LatticePoint> p2;
    std::vector<Rational> h2;
    for (auto i : order) {
      if (!p2.empty() && p2.back() == points[i]) throw std::invalid_argument("duplicate point");
      p2.push_back(points[i]);
      h2.push_back(heights[i]);
    }
    points = std::move(p2);
    heights = std::move(h2);
  }
  BigInt l = 1;
  for (const auto& x : heights) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<BigInt> h;
  for (const auto& x : heights) h.push_back(numerator(x * l));

  auto poly = LatticePolytope::from_points(points);
  if (poly.dim() != n) throw std::invalid_argument("points do not span the ambient space");
  LowerHull hull(points, h);
  const std::size_t np = points.size();

  auto is_lower_cell = [&](const std::vector<std::size_t>& s) {
    for (std::size_t q = 0; q < np; ++q) {
      if (std::binary_search(s.begin(), s.end(), q)) continue;
      const int a = hull.height_above(s, q);
      if (a < 0) return false;
      if (a == 0) throw std::domain_error("heights are not generic: point " + to_string(points[q]) + " lies on a lifted cell");
    }
    return true;
  };

  // Initial cell: start from any full-dimensional simplex and a fixed point x
  // inside it, then pivot in points lying below the lifted simplex. Each pivot
  // strictly lowers the interpolated height at x, as in the simplex method.
  std::vector<std::size_t> cur{0};
  for (std::size_t q = 1; q < np && cur.size() <= n; ++q) {
    std::vector<LatticePoint> trial;
    for (auto i : cur) trial.push_back(points[i]);
    trial.push_back(points[q]);
    if (affine_dimension(trial) == static_cast<int>(cur.size())) cur.push_back(q);
  }
  // Barycentric coordinates of x in the current simplex.
  std::vector<Rational> mu;
  {
    Rational total = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      mu.emplace_back(static_cast<long>(7 * (i + 1) + (i * i) % 5 + 3));
      total += mu.back();
    }
    for (auto& x : mu) x /= total;
  }
  for (std::size_t iter = 0;; ++iter) {
    if (iter > 100000) throw std::domain_error("lower hull search did not terminate");
    std::vector<std::size_t> sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    std::optional<std::size_t> below;
    for (std::size_t q = 0; q < np && !below; ++q) {
      if (std::binary_search(sorted.begin(), sorted.end(), q)) continue;
      const int a = hull.height_above(sorted, q);
      if (a < 0) below = q;
    }
    if (!below) break;
    std::vector<LatticePoint> sp;
    for (auto i : cur) sp.push_back(points[i]);
    const auto lambda = barycentric(sp, points[*below]);
    std::optional<std::size_t> w;
    Rational best;
    for (std::size_t i = 0; i <= n; ++i) {
      if (lambda[i] <= 0) continue;
      const Rational r = mu[i] / lambda[i];
      if (!w || r < best) {
        w = i;
        best = r;
      }
    }
    if (!w) throw std::logic_error("pivot without a positive coefficient");
    for (std::size_t i = 0; i <= n; ++i)
      if (i != *w) mu[i] -= best * lambda[i];
    mu[*w] = best;
    cur[*w] = *below;
  }
  Cell start = cur;
  std::sort(start.begin(), start.end());
  if (!is_lower_cell(start)) throw std::domain_error("no lower cell found");
  std::optional<Cell> first = start;

  std::set<Cell> found{*first};
  std::vector<Cell> queue{*first};
  auto pts_of = [&](const Face& f) {
    std::vector<LatticePoint> r;
    for (auto i : f) r.push_back(points[i]);
    return r;
  };
  while (!queue.empty()) {
    Cell c = queue.back();
    queue.pop_back();
    for (std::size_t skip = 0; skip <= n; ++skip) {
      const Face f = without(c, skip);
      const auto fp = pts_of(f);
      const int side = orientation(fp, points[c[skip]]);
      std::optional<std::size_t> best;
      for (std::size_t q = 0; q < np; ++q) {
        if (orientation(fp, points[q]) * side >= 0) continue;
        if (!best) {
          best = q;
          continue;
        }
        Cell trial = f;
        trial.push_back(*best);
        std::sort(trial.begin(), trial.end());
        if (hull.height_above(trial, q) < 0) best = q;
      }
      if (!best) continue;
      Cell next = f;
      next.push_back(*best);
      std::sort(next.begin(), next.end());
      if (found.count(next)) continue;
      if (!is_lower_cell(next)) throw std::domain_error("lower hull walk failed");
      found.insert(next);
      queue.push_back(next);
    }
  }

  std::vector<bool> used(np, false);
  for (const auto& c : found)
    for (auto v : c) used[v] = true;
  std::vector<std::size_t> remap(np);
  std::vector<LatticePoint> verts;
  for (std::size_t i = 0; i < np; ++i)
    if (used[i]) {
      remap[i] = verts.size();
      verts.push_back(points[i]);
    }
  std::vector<Cell> cells;
  for (auto c : found) {
    for (auto& v : c) v = remap[v];
    cells.push_back(std::move(c));
  }
  return Triangulation(std::move(poly), std::move(verts), std::move(cells));
}

SymmetricTriangulation::SymmetricTriangulation(Triangulation base) : base_(std::move(base)) {
  if (!base_.polytope().in_positive_orthant())
    throw std::invalid_argument("symmetric extension needs a polytope in the closed positive orthant");
  if (dim() > 31) throw std::invalid_argument("dimension too large for sign masks");
}

SignVector SymmetricTriangulation::zero_coordinates(const Face& face) const {
  SignVector z = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    bool all_zero = true;
    for (auto v : face)
      if (base_.vertex(v)[i] != 0) all_zero = false;
    if (all_zero) z |= SignVector{1} << i;
  }
  return z;
}

SignVector SymmetricTriangulation::canonical_copy(const Face& face, SignVector e) const {
  return e & ~zero_coordinates(face) & static_cast<SignVector>(copy_count() - 1);
}

std::uint64_t SymmetricTriangulation::multiplicity(const Face& face) const {
  return std::uint64_t{1} << (dim() - static_cast<std::size_t>(std::popcount(zero_coordinates(face))));
}

LatticePoint SymmetricTriangulation::reflect(const LatticePoint& p, SignVector e) const {
  LatticePoint q = p;
  for (std::size_t i = 0; i < q.dim(); ++i)
    if (e >> i & 1) q[i] = -q[i];
  return q;
}

SymmetricTriangulation symmetric_extension(const Triangulation& tri) { return SymmetricTriangulation(tri); }

}  // namespace patchwork
