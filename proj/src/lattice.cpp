#include "patchwork/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>
#include <stdexcept>

namespace patchwork {

Coord LatticePoint::coordinate_sum() const { return std::accumulate(c_.begin(), c_.end(), Coord{0}); }

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
  LatticePoint r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
  LatticePoint r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

LatticePoint LatticePoint::scaled(Coord k) const {
  LatticePoint r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Coord x : p.coords()) h ^= std::hash<Coord>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string to_string(const LatticePoint& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

RationalPoint::RationalPoint(const LatticePoint& p) {
  c_.reserve(p.dim());
  for (Coord x : p.coords()) c_.emplace_back(x);
}

RationalPoint barycenter(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("barycenter of empty set");
  const std::size_t n = points.front().dim();
  std::vector<Rational> c(n, Rational(0));
  for (const auto& p : points) {
    if (p.dim() != n) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) c[i] += p[i];
  }
  for (auto& x : c) x /= static_cast<long>(points.size());
  return RationalPoint(std::move(c));
}

RationalPoint midpoint(const LatticePoint& a, const LatticePoint& b) {
  std::vector<LatticePoint> pair{a, b};
  return barycenter(pair);
}

namespace {

// Incremental row reduction over Q used for rank and basis selection.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  // Adds a row; returns true when it increases the rank.
  bool add(std::vector<Rational> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t pc = pivots_[i];
      if (row[pc] != 0) {
        const Rational f = row[pc] / rows_[i][pc];
        for (std::size_t c = 0; c < cols_; ++c) row[c] -= f * rows_[i][c];
      }
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0) {
        rows_.push_back(std::move(row));
        pivots_.push_back(c);
        return true;
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Integer basis of {x : row . x = 0 for every stored row}.
  std::vector<std::vector<BigInt>> nullspace() const {
    // Fully reduce to RREF first.
    std::vector<std::vector<Rational>> r = rows_;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Rational lead = r[i][pivots_[i]];
      for (auto& x : r[i]) x /= lead;
    }
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (i == j || r[j][pivots_[i]] == 0) continue;
        const Rational f = r[j][pivots_[i]];
        for (std::size_t c = 0; c < cols_; ++c) r[j][c] -= f * r[i][c];
      }
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> v(cols_, Rational(0));
      v[free] = 1;
      for (std::size_t i = 0; i < r.size(); ++i) v[pivots_[i]] = -r[i][free];
      BigInt l = 1;
      for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
      std::vector<BigInt> iv(cols_);
      BigInt g = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        iv[c] = numerator(v[c] * l);
        g = gcd(g, iv[c]);
      }
      if (g > 1)
        for (auto& x : iv) x /= g;
      basis.push_back(std::move(iv));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rational> diff_row(const LatticePoint& p, const LatticePoint& q) {
  std::vector<Rational> r(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) r[i] = p[i] - q[i];
  return r;
}

__int128 dot(std::span<const Coord> a, std::span<const Coord> b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

// Iterates the integer points of an axis-parallel box in lexicographic order.
template <typename Fn>
void for_each_box_point(const std::vector<Coord>& lo, const std::vector<Coord>& hi, Fn&& fn) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  LatticePoint p(lo);
  if (n == 0) {
    fn(p);
    return;
  }
  while (true) {
    fn(p);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        for (std::size_t j = i + 1; j < n; ++j) p[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
  }
}

void bounding_box(const std::vector<LatticePoint>& pts, Coord k, std::vector<Coord>& lo, std::vector<Coord>& hi) {
  const std::size_t n = pts.front().dim();
  lo.assign(n, std::numeric_limits<Coord>::max());
  hi.assign(n, std::numeric_limits<Coord>::min());
  for (const auto& p : pts)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i] * k);
      hi[i] = std::max(hi[i], p[i] * k);
    }
}

}  // namespace

int affine_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) return -1;
  RowReducer rr(points.front().dim());
  for (std::size_t i = 1; i < points.size(); ++i) rr.add(diff_row(points[i], points[0]));
  return static_cast<int>(rr.rank());
}

int orientation(std::span<const LatticePoint> q, const LatticePoint& p) {
  const std::size_t n = p.dim();
  if (q.size() != n) throw std::invalid_argument("orientation: need n points spanning a hyperplane");
  IntMatrix m(n);
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = q[r][c] - q[0][c];
  for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = p[c] - q[0][c];
  return determinant_sign(m);
}

int simplex_orientation(std::span<const LatticePoint> v) {
  const std::size_t n = v.front().dim();
  if (v.size() != n + 1) throw std::invalid_argument("simplex_orientation: need n+1 vertices");
  IntMatrix m(n);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = v[r][c] - v[0][c];
  return determinant_sign(m);
}

LatticeSimplex::LatticeSimplex(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
  for (const auto& v : vertices_)
    if (v.dim() != vertices_.front().dim()) throw std::invalid_argument("simplex: dimension mismatch");
  std::sort(vertices_.begin(), vertices_.end());
  if (affine_dimension(vertices_) != static_cast<int>(vertices_.size()) - 1)
    throw std::invalid_argument("simplex vertices are affinely dependent");
}

LatticePolytope LatticePolytope::from_points(std::vector<LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
  const std::size_t n = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != n) throw std::invalid_argument("polytope: dimension mismatch");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope poly;
  poly.ambient_dim_ = n;

  RowReducer rr(n);
  for (std::size_t i = 1; i < points.size(); ++i) rr.add(diff_row(points[i], points[0]));
  const std::size_t k = rr.rank();
  poly.dim_ = k;

  for (auto& normal : rr.nullspace()) {
    AffineEquation eq;
    for (const auto& x : normal) eq.normal.push_back(to_coord(x));
    eq.offset = static_cast<Coord>(dot(eq.normal, points[0].coords()));
    poly.equations_.push_back(std::move(eq));
  }

  if (k == 0) {
    poly.vertices_ = {points[0]};
    return poly;
  }

  // Midpoints of two other points are never vertices; dropping them keeps the
  // facet search small for lattice point sets.
  if (points.size() > k + 1) {
    std::unordered_set<LatticePoint, LatticePointHash> present(points.begin(), points.end()), redundant;
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        LatticePoint s = points[i] + points[j];
        bool even = true;
        for (std::size_t c = 0; c < n && even; ++c) even = s[c] % 2 == 0;
        if (!even) continue;
        for (std::size_t c = 0; c < n; ++c) s[c] /= 2;
        if (present.count(s)) redundant.insert(s);
      }
    std::vector<LatticePoint> kept;
    for (auto& p : points)
      if (!redundant.count(p)) kept.push_back(p);
    points = std::move(kept);
  }

  // The pivot columns give coordinates on which projection is injective.
  std::vector<std::size_t> cols = rr.pivots();
  std::sort(cols.begin(), cols.end());
  auto project = [&](const LatticePoint& p) {
    std::vector<Coord> r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = p[cols[j]];
    return r;
  };
  std::vector<std::vector<Coord>> proj;
  proj.reserve(points.size());
  for (const auto& p : points) proj.push_back(project(p));

  std::set<Halfspace> found;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      // Normal of the hyperplane through proj[idx[0..k-1]] via cofactors.
      std::vector<BigInt> normal(k);
      bool nonzero = false;
      for (std::size_t j = 0; j < k; ++j) {
        IntMatrix minor(k - 1);
        for (std::size_t r = 1; r < k; ++r) {
          std::size_t cc = 0;
          for (std::size_t c = 0; c < k; ++c) {
            if (c == j) continue;
            minor(r - 1, cc++) = proj[idx[r]][c] - proj[idx[0]][c];
          }
        }
        normal[j] = determinant(minor);
        if (j % 2 == 1) normal[j] = -normal[j];
        if (normal[j] != 0) nonzero = true;
      }
      if (!nonzero) return;
      std::vector<Coord> small(k);
      bool fits = true;
      for (std::size_t j = 0; j < k && fits; ++j) {
        if (normal[j] > (std::int64_t{1} << 40) || normal[j] < -(std::int64_t{1} << 40)) fits = false;
        else small[j] = static_cast<Coord>(normal[j]);
      }
      int side = 0;
      for (const auto& q : proj) {
        int sg;
        if (fits) {
          __int128 s = 0;
          for (std::size_t j = 0; j < k; ++j) s += static_cast<__int128>(small[j]) * (q[j] - proj[idx[0]][j]);
          sg = (s > 0) - (s < 0);
        } else {
          BigInt s = 0;
          for (std::size_t j = 0; j < k; ++j) s += normal[j] * (q[j] - proj[idx[0]][j]);
          sg = s.sign();
        }
        if (sg == 0) continue;
        if (side == 0) side = sg;
        else if (side != sg) return;
      }
      if (side == 0) return;
      if (side > 0)
        for (auto& x : normal) x = -x;
      BigInt g = 0;
      for (const auto& x : normal) g = gcd(g, x);
      Halfspace h;
      h.normal.assign(n, 0);
      for (std::size_t j = 0; j < k; ++j) h.normal[cols[j]] = to_coord(normal[j] / g);
      h.offset = static_cast<Coord>(dot(h.normal, points[idx[0]].coords()));
      found.insert(std::move(h));
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= points.size(); ++i) {
      idx[pos] = i;
      choose(pos + 1, i + 1);
    }
  };
  choose(0, 0);
  poly.facets_.assign(found.begin(), found.end());

  // A point is a vertex iff the normals of the facets through it span R^k.
  for (const auto& p : points) {
    RowReducer nr(n);
    for (const auto& f : poly.facets_)
      if (dot(f.normal, p.coords()) == f.offset) {
        std::vector<Rational> row(f.normal.begin(), f.normal.end());
        nr.add(std::move(row));
      }
    if (nr.rank() == k) poly.vertices_.push_back(p);
  }
  poly.facet_vertices_.resize(poly.facets_.size());
  for (std::size_t f = 0; f < poly.facets_.size(); ++f)
    for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
      if (poly.on_facet(poly.vertices_[v], f)) poly.facet_vertices_[f].push_back(v);
  return poly;
}

LatticePolytope LatticePolytope::standard_simplex(std::size_t n, Coord m) {
  if (m <= 0) throw std::invalid_argument("standard simplex needs m >= 1");
  std::vector<LatticePoint> pts{LatticePoint::zero(n)};
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint p = LatticePoint::zero(n);
    p[i] = m;
    pts.push_back(p);
  }
  return from_points(std::move(pts));
}

LatticePolytope LatticePolytope::box(const std::vector<Coord>& sides) {
  const std::size_t n = sides.size();
  for (Coord s : sides)
    if (s <= 0) throw std::invalid_argument("box sides must be positive");
  std::vector<LatticePoint> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LatticePoint p = LatticePoint::zero(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) p[i] = sides[i];
    pts.push_back(p);
  }
  return from_points(std::move(pts));
}

bool LatticePolytope::in_affine_hull(const LatticePoint& p) const {
  if (p.dim() != ambient_dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e.normal, p.coords()) != e.offset) return false;
  return true;
}

bool LatticePolytope::contains(const LatticePoint& p) const {
  if (!in_affine_hull(p)) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, p.coords()) > f.offset) return false;
  return true;
}

bool LatticePolytope::contains_in_relative_interior(const LatticePoint& p) const {
  if (!in_affine_hull(p)) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, p.coords()) >= f.offset) return false;
  return true;
}

bool LatticePolytope::on_facet(const LatticePoint& p, std::size_t f) const {
  return in_affine_hull(p) && dot(facets_[f].normal, p.coords()) == facets_[f].offset;
}

LatticePolytope LatticePolytope::dilated(Coord k) const {
  if (k <= 0) throw std::invalid_argument("dilation factor must be positive");
  LatticePolytope r = *this;
  for (auto& v : r.vertices_) v = v.scaled(k);
  for (auto& e : r.equations_) e.offset *= k;
  for (auto& f : r.facets_) f.offset *= k;
  return r;
}

bool LatticePolytope::is_standard_simplex(Coord* m_out) const {
  if (dim_ != ambient_dim_ || vertices_.size() != ambient_dim_ + 1) return false;
  const Coord m = vertices_.back().coordinate_sum();
  if (m <= 0) return false;
  if (*this == standard_simplex(ambient_dim_, m)) {
    if (m_out) *m_out = m;
    return true;
  }
  return false;
}

bool LatticePolytope::is_box(std::vector<Coord>* sides_out) const {
  if (dim_ != ambient_dim_ || vertices_.size() != (std::size_t{1} << ambient_dim_)) return false;
  const LatticePoint& top = vertices_.back();
  std::vector<Coord> sides(top.coords().begin(), top.coords().end());
  for (Coord s : sides)
    if (s <= 0) return false;
  if (*this == box(sides)) {
    if (sides_out) *sides_out = sides;
    return true;
  }
  return false;
}

bool LatticePolytope::in_positive_orthant() const {
  for (const auto& v : vertices_)
    for (Coord x : v.coords())
      if (x < 0) return false;
  return true;
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& polytope) {
  std::vector<Coord> lo, hi;
  bounding_box(polytope.vertices(), 1, lo, hi);
  std::vector<LatticePoint> out;
  for_each_box_point(lo, hi, [&](const LatticePoint& p) {
    if (polytope.contains(p)) out.push_back(p);
  });
  return out;
}

std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& polytope, Coord k) {
  if (k <= 0) throw std::invalid_argument("interior_lattice_points: k must be positive");
  std::vector<Coord> lo, hi;
  bounding_box(polytope.vertices(), k, lo, hi);
  std::vector<LatticePoint> out;
  const auto& eqs = polytope.equations();
  const auto& fs = polytope.facets();
  for_each_box_point(lo, hi, [&](const LatticePoint& p) {
    for (const auto& e : eqs)
      if (dot(e.normal, p.coords()) != static_cast<__int128>(e.offset) * k) return;
    for (const auto& f : fs)
      if (dot(f.normal, p.coords()) >= static_cast<__int128>(f.offset) * k) return;
    out.push_back(p);
  });
  return out;
}

std::uint64_t interior_count(const LatticePolytope& polytope, Coord k) {
  if (k <= 0) throw std::invalid_argument("interior_count: k must be positive");
  std::vector<Coord> lo, hi;
  bounding_box(polytope.vertices(), k, lo, hi);
  std::uint64_t count = 0;
  const auto& eqs = polytope.equations();
  const auto& fs = polytope.facets();
  for_each_box_point(lo, hi, [&](const LatticePoint& p) {
    for (const auto& e : eqs)
      if (dot(e.normal, p.coords()) != static_cast<__int128>(e.offset) * k) return;
    for (const auto& f : fs)
      if (dot(f.normal, p.coords()) >= static_cast<__int128>(f.offset) * k) return;
    ++count;
  });
  return count;
}

BigInt normalized_volume(const LatticeSimplex& simplex) {
  const std::size_t n = simplex.ambient_dim();
  if (simplex.dim() != n) throw std::invalid_argument("normalized_volume: simplex is not full-dimensional");
  const auto& v = simplex.vertices();
  IntMatrix m(n);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = v[r][c] - v[0][c];
  BigInt d = determinant(m);
  return d < 0 ? BigInt(-d) : d;
}

std::vector<std::vector<LatticePoint>> pulling_triangulation(const LatticePolytope& polytope) {
  const auto& verts = polytope.vertices();
  std::vector<std::vector<LatticePoint>> out;
  auto points_of = [&](const std::vector<std::size_t>& s) {
    std::vector<LatticePoint> r;
    r.reserve(s.size());
    for (auto i : s) r.push_back(verts[i]);
    return r;
  };
  std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, int)> rec =
      [&](const std::vector<std::size_t>& face, int d) -> std::vector<std::vector<std::size_t>> {
    if (static_cast<int>(face.size()) == d + 1) return {face};
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (std::size_t f = 0; f < polytope.facets().size(); ++f) {
      const auto& fv = polytope.facet_vertices(f);
      std::vector<std::size_t> g;
      std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(g));
      if (g.empty() || std::binary_search(g.begin(), g.end(), apex)) continue;
      if (g.size() == face.size()) continue;
      const auto pts = points_of(g);
      if (affine_dimension(pts) == d - 1) subfaces.insert(std::move(g));
    }
    std::vector<std::vector<std::size_t>> result;
    for (const auto& g : subfaces)
      for (auto s : rec(g, d - 1)) {
        s.insert(s.begin(), apex);
        result.push_back(std::move(s));
      }
    return result;
  };
  std::vector<std::size_t> all(verts.size());
  std::iota(all.begin(), all.end(), 0);
  for (const auto& s : rec(all, static_cast<int>(polytope.dim()))) out.push_back(points_of(s));
  return out;
}

BigInt normalized_volume(const LatticePolytope& polytope) {
  if (polytope.dim() != polytope.ambient_dim())
    throw std::invalid_argument("normalized_volume: polytope is not full-dimensional");
  BigInt total = 0;
  for (auto& s : pulling_triangulation(polytope)) total += normalized_volume(LatticeSimplex(std::move(s)));
  return total;
}

bool is_empty_simplex(const LatticeSimplex& simplex) {
  const auto poly = LatticePolytope::from_points(simplex.vertices());
  return lattice_points(poly).size() == simplex.vertices().size();
}

}  // namespace patchwork
