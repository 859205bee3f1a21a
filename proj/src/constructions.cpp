#include "patchwork/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "patchwork/critical.hpp"

namespace patchwork {

namespace {

void require_even(Coord m, const char* who) {
  if (m <= 0 || m % 2 != 0) throw std::invalid_argument(std::string(who) + ": m must be a positive even integer");
}

void require_dim(std::size_t n, const char* who) {
  if (n < 1 || n > 6) throw std::invalid_argument(std::string(who) + ": n must lie in 1..6");
}

BigInt floor_of(const Rational& t) {
  BigInt q = numerator(t) / denominator(t);
  if (q * denominator(t) > numerator(t)) --q;
  return q;
}

// Piecewise-linear interpolation of t^2 between consecutive integers.
Rational phi(const Rational& t) {
  const BigInt f = floor_of(t);
  return Rational(2 * f + 1) * t - Rational(f * (f + 1));
}

// sum_j phi(u_j) + phi(sum_j u_j): convex, with linearity domains cut out by
// the hyperplanes u_j in Z and sum u in Z.
Rational arrangement_height(const std::vector<Rational>& u) {
  Rational total = 0, s = 0;
  for (const auto& x : u) {
    total += phi(x);
    s += x;
  }
  return total + phi(s);
}

struct Lifted {
  Triangulation tri;
  HeightFunction heights;
};

// Every cell lies in a linearity domain of the base heights: no point of
// the configuration is below the affine extension of a cell's lift.
bool refines(const Triangulation& tri, const std::vector<LatticePoint>& pts, const std::vector<Rational>& base) {
  auto height_of = [&](const LatticePoint& p) {
    return base[static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin())];
  };
  for (const auto& cell : tri.cells()) {
    const auto v = tri.points(cell);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto lambda = barycentric_coordinates(v, pts[i]);
      Rational a = 0;
      for (std::size_t j = 0; j < v.size(); ++j) a += lambda[j] * height_of(v[j]);
      if (base[i] < a) return false;
    }
  }
  return true;
}

// Regular triangulation for base + eta * perturb, halving eta until the
// heights are generic and the result refines the base subdivision.
Lifted refine_regular(std::vector<LatticePoint> pts, std::vector<Rational> base, std::vector<Rational> perturb) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
  std::vector<LatticePoint> p;
  std::vector<Rational> b, d;
  for (auto i : order) {
    p.push_back(pts[i]);
    b.push_back(base[i]);
    d.push_back(perturb[i]);
  }
  Rational eta = make_rational(1, 4);
  for (int attempt = 0; attempt < 40; ++attempt, eta /= 2) {
    std::vector<Rational> h;
    for (std::size_t i = 0; i < p.size(); ++i) h.push_back(b[i] + eta * d[i]);
    try {
      auto tri = regular_triangulation(p, h);
      if (!refines(tri, p, b)) continue;
      HeightFunction hv;
      for (const auto& v : tri.vertices())
        hv.push_back(h[static_cast<std::size_t>(std::lower_bound(p.begin(), p.end(), v) - p.begin())]);
      if (!certify_convexity(tri, hv)) continue;
      return {std::move(tri), std::move(hv)};
    } catch (const std::domain_error&) {
    }
  }
  throw std::logic_error("refine_regular: no admissible perturbation found");
}

// Weights -2^-(rank + shift) in lexicographic order: a pulling refinement.
std::vector<Rational> pulling(const std::vector<LatticePoint>& pts, unsigned shift) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
  std::vector<Rational> w(pts.size());
  for (std::size_t r = 0; r < order.size(); ++r) w[order[r]] = -make_rational(1, BigInt(1) << (r + shift));
  return w;
}

// x = W u with W = I + J.
LatticePoint apply_w(const LatticePoint& u) {
  Coord s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i];
  LatticePoint x = u;
  for (std::size_t i = 0; i < u.dim(); ++i) x[i] += s;
  return x;
}

std::vector<Rational> inverse_w(const LatticePoint& x) {
  const std::size_t n = x.dim();
  Coord s = 0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  std::vector<Rational> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(Rational(x[i]) - make_rational(s, static_cast<Coord>(n + 1)));
  return u;
}

LatticePolytope w_image(std::size_t n, Coord h) {
  std::vector<LatticePoint> v;
  const auto simplex = LatticePolytope::standard_simplex(n, h);
  for (const auto& p : simplex.vertices()) v.push_back(apply_w(p));
  return LatticePolytope::from_points(v);
}

Construction finish(std::string name, Lifted lifted, std::vector<Sign> half_signs, Ambient ambient) {
  // Dilation keeps the lexicographic vertex order, so signs and heights stay aligned.
  Construction c{std::move(name), dilate(lifted.tri, 2), std::move(lifted.heights),
                 SignDistribution(std::move(half_signs)), std::move(ambient), std::nullopt};
  return c;
}

}  // namespace

Construction nested_spheres(std::size_t n, Coord m) {
  require_dim(n, "prop51");
  require_even(m, "prop51");
  const auto pts = lattice_points(LatticePolytope::standard_simplex(n, m / 2));
  std::vector<Rational> base;
  for (const auto& p : pts) {
    std::vector<Rational> u;
    for (std::size_t i = 0; i < n; ++i) u.emplace_back(p[i]);
    base.push_back(arrangement_height(u));
  }
  auto lifted = refine_regular(pts, base, pulling(pts, 0));
  if (!is_maximal(lifted.tri)) throw std::logic_error("prop51: refinement is not maximal");
  auto signs = checkerboard(lifted.tri.vertices()).values();
  auto c = finish("prop51", std::move(lifted), std::move(signs), Ambient::projective(m));
  c.origin = find_generic_origin(c.tri);
  return c;
}

Construction triangle_ovals(Coord m) {
  require_even(m, "prop53");
  const Coord h = m / 2;
  auto w = [](Coord a, Coord b) { return LatticePoint{2 * a + b, a + 2 * b}; };
  auto q = [](Coord a, Coord b) { return a * a + b * b + (a + b) * (a + b); };

  std::vector<std::vector<LatticePoint>> simplices;
  std::map<LatticePoint, Rational> height;
  std::vector<LatticePoint> refinement_points;
  auto refine_cell = [&](std::array<std::pair<Coord, Coord>, 3> u) {
    std::vector<LatticePoint> corners;
    Rational mean = 0;
    for (auto [a, b] : u) {
      corners.push_back(w(a, b));
      height[corners.back()] = q(a, b);
      mean += Rational(q(a, b));
    }
    mean /= 3;
    const auto cell = LatticePolytope::from_points(corners);
    const auto pts = lattice_points(cell);
    std::vector<std::vector<LatticePoint>> unimodular;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          std::vector<LatticePoint> t{pts[i], pts[j], pts[k]};
          if (affine_dimension(t) == 2 && normalized_volume(LatticeSimplex(t)) == 1) unimodular.push_back(t);
        }
    const BigInt volume = normalized_volume(cell);
    std::vector<std::vector<std::vector<LatticePoint>>> found;
    for (std::uint32_t mask = 1; mask < (1u << unimodular.size()); ++mask) {
      std::vector<std::vector<LatticePoint>> pick;
      for (std::size_t i = 0; i < unimodular.size(); ++i)
        if (mask >> i & 1) pick.push_back(unimodular[i]);
      if (BigInt(pick.size()) != volume) continue;
      if (validate(Triangulation::from_simplices(pick)).ok) found.push_back(pick);
    }
    if (found.size() != 1) throw std::logic_error("prop53: primitive refinement of a cell is not unique");
    simplices.insert(simplices.end(), found[0].begin(), found[0].end());
    for (const auto& p : pts) {
      if (std::find(corners.begin(), corners.end(), p) != corners.end()) continue;
      // The single refinement point is the centroid of its cell.
      LatticePoint s = corners[0] + corners[1] + corners[2];
      if (s != p.scaled(3)) throw std::logic_error("prop53: refinement point is not the centroid");
      height[p] = mean - make_rational(1, 4);
      refinement_points.push_back(p);
    }
  };
  for (Coord i = 0; i < h; ++i)
    for (Coord j = 0; i + j < h; ++j) {
      refine_cell({{{i, j}, {i + 1, j}, {i, j + 1}}});
      if (i + j + 2 <= h) refine_cell({{{i + 1, j}, {i, j + 1}, {i + 1, j + 1}}});
    }
  auto tri = Triangulation::from_simplices(simplices);
  HeightFunction hv;
  std::vector<Sign> signs;
  for (const auto& v : tri.vertices()) {
    hv.push_back(height.at(v));
    const bool added = std::find(refinement_points.begin(), refinement_points.end(), v) != refinement_points.end();
    signs.push_back(added ? Sign::Minus : Sign::Plus);
  }
  if (!validate(tri).ok || !certify_convexity(tri, hv)) throw std::logic_error("prop53: certificate failed");
  return finish("prop53", {std::move(tri), std::move(hv)}, std::move(signs), Ambient::affine());
}

std::vector<LatticePoint> cone_points(std::size_t n, Coord m) {
  require_dim(n, "thm54");
  require_even(m, "thm54");
  const auto poly = w_image(n, m / 2);
  std::vector<LatticePoint> out;
  for (const auto& x : interior_lattice_points(poly)) {
    Coord s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    if (s % static_cast<Coord>(n + 1) != 0) out.push_back(x);
  }
  return out;
}

Construction cone_spheres(std::size_t n, Coord m) {
  const auto cones = cone_points(n, m);
  std::vector<LatticePoint> pts;
  std::vector<Rational> base, perturb;
  for (const auto& u : lattice_points(LatticePolytope::standard_simplex(n, m / 2))) {
    pts.push_back(apply_w(u));
    base.push_back(arrangement_height(inverse_w(pts.back())));
    perturb.push_back(0);
  }
  for (const auto& x : cones) {
    pts.push_back(x);
    base.push_back(arrangement_height(inverse_w(x)));
    perturb.push_back(-1);
  }
  const auto pull = pulling(pts, 8);
  for (std::size_t i = 0; i < pts.size(); ++i) perturb[i] += pull[i];
  auto lifted = refine_regular(pts, base, perturb);

  std::vector<Sign> signs;
  for (const auto& v : lifted.tri.vertices())
    signs.push_back(std::binary_search(cones.begin(), cones.end(), v) ? Sign::Minus : Sign::Plus);
  for (const auto& cell : lifted.tri.cells()) {
    const auto minus = std::count_if(cell.begin(), cell.end(), [&](std::size_t v) { return signs[v] == Sign::Minus; });
    if (minus > 1) throw std::logic_error("thm54: two cone points share a cell");
  }
  if (lifted.tri.vertices().size() != pts.size()) throw std::logic_error("thm54: a cone point was not used");
  return finish("thm54", std::move(lifted), std::move(signs), Ambient::affine());
}

namespace {

const std::vector<std::vector<LatticePoint>>& block_tetrahedra() {
  static const std::vector<std::vector<LatticePoint>> t{
      {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, {{2, 0, 0}, {2, 0, 2}, {0, 0, 2}, {2, 2, 2}},
      {{0, 2, 0}, {0, 2, 2}, {0, 0, 2}, {2, 2, 2}}, {{0, 0, 2}, {2, 2, 0}, {2, 0, 0}, {0, 2, 0}},
      {{0, 0, 2}, {2, 2, 0}, {2, 0, 0}, {2, 2, 2}}, {{0, 0, 2}, {2, 2, 0}, {0, 2, 0}, {2, 2, 2}},
  };
  return t;
}

Sign block_sign(const LatticePoint& v) {
  const bool minus = v == LatticePoint{2, 0, 0} || v == LatticePoint{0, 2, 0} || v == LatticePoint{2, 2, 2};
  return minus ? Sign::Minus : Sign::Plus;
}

// Found by exhaustive search over small integers; checked on every build.
Coord block_height(const LatticePoint& v) {
  if (v == LatticePoint{0, 2, 2} || v == LatticePoint{2, 0, 2} || v == LatticePoint{2, 2, 2}) return 3;
  if (v == LatticePoint{2, 2, 0}) return 1;
  return 0;
}

// Position inside the block containing v, undoing the mirror images.
LatticePoint fold(const LatticePoint& v) {
  LatticePoint f = v;
  for (std::size_t i = 0; i < 3; ++i) {
    const Coord r = v[i] % 4;
    f[i] = r <= 2 ? r : 4 - r;
  }
  return f;
}

}  // namespace

Construction cube_block() {
  auto tri = Triangulation::from_simplices(block_tetrahedra());
  HeightFunction h;
  std::vector<Sign> s;
  for (const auto& v : tri.vertices()) {
    h.emplace_back(block_height(v));
    s.push_back(block_sign(v));
  }
  if (!certify_convexity(tri, h)) throw std::logic_error("lemma56: height certificate failed");
  return {"lemma56", std::move(tri), std::move(h), SignDistribution(std::move(s)), Ambient::p1power({2, 2, 2}),
          std::nullopt};
}

Construction cube_tiling(Coord k1, Coord k2, Coord k3) {
  const std::array<Coord, 3> k{k1, k2, k3};
  for (auto x : k)
    if (x < 1) throw std::invalid_argument("prop57: block counts must be positive");
  std::vector<std::vector<LatticePoint>> simplices;
  for (Coord a = 0; a < k1; ++a)
    for (Coord b = 0; b < k2; ++b)
      for (Coord c = 0; c < k3; ++c) {
        const std::array<Coord, 3> idx{a, b, c};
        for (const auto& tet : block_tetrahedra()) {
          std::vector<LatticePoint> t;
          for (const auto& v : tet) {
            LatticePoint p = v;
            for (std::size_t i = 0; i < 3; ++i) p[i] = idx[i] % 2 == 0 ? 2 * idx[i] + v[i] : 2 * idx[i] + 2 - v[i];
            t.push_back(p);
          }
          simplices.push_back(std::move(t));
        }
      }
  auto tri = Triangulation::from_simplices(simplices);
  std::vector<Sign> s;
  for (const auto& v : tri.vertices()) s.push_back(block_sign(fold(v)));
  // Block heights plus a crease along every block interface.
  for (Coord crease = 4; crease <= 1024; crease *= 2) {
    HeightFunction h;
    for (const auto& v : tri.vertices()) {
      Coord q = 0;
      for (std::size_t i = 0; i < 3; ++i) q += (v[i] / 2) * (v[i] / 2);
      h.emplace_back(block_height(fold(v)) + crease * q);
    }
    if (certify_convexity(tri, h))
      return {"prop57", std::move(tri), std::move(h), SignDistribution(std::move(s)),
              Ambient::p1power({2 * k1, 2 * k2, 2 * k3}), std::nullopt};
  }
  throw std::logic_error("prop57: no convexity certificate found");
}

Construction construct(const std::string& name, const ConstructionParams& p) {
  if (name == "prop51") return nested_spheres(p.n, p.m);
  if (name == "prop53") return triangle_ovals(p.m);
  if (name == "thm54") return cone_spheres(p.n, p.m);
  if (name == "lemma56") return cube_block();
  if (name == "prop57") {
    if (p.k.size() == 1) return cube_tiling(p.k[0], p.k[0], p.k[0]);
    if (p.k.size() != 3) throw std::invalid_argument("prop57: expected one or three block counts");
    return cube_tiling(p.k[0], p.k[1], p.k[2]);
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

std::vector<std::string> construction_names() { return {"prop51", "prop53", "thm54", "lemma56", "prop57"}; }

}  // namespace patchwork
