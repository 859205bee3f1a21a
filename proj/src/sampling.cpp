#include "patchwork/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace patchwork {

namespace {

SampledTriangulation random_regular_points(std::mt19937_64& rng, const std::vector<LatticePoint>& pts, bool maximal) {
  const std::size_t n = pts.front().dim();
  std::uniform_int_distribution<long> noise(0, maximal ? 40 : 1000);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rational> h;
    for (const auto& p : pts) {
      long q = 0;
      if (maximal)
        for (std::size_t i = 0; i < n; ++i) q += 1000 * p[i] * p[i];
      h.emplace_back(q + noise(rng));
    }
    try {
      auto tri = regular_triangulation(pts, h);
      HeightFunction hv;
      for (const auto& v : tri.vertices()) {
        auto it = std::lower_bound(pts.begin(), pts.end(), v);
        hv.push_back(h[static_cast<std::size_t>(it - pts.begin())]);
      }
      return {std::move(tri), std::move(hv)};
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("could not draw generic heights");
}

}  // namespace

SampledTriangulation random_regular(std::mt19937_64& rng, std::size_t n, Coord m, bool maximal) {
  return random_regular_points(rng, lattice_points(LatticePolytope::standard_simplex(n, m)), maximal);
}

SampledTriangulation random_regular_box(std::mt19937_64& rng, const std::vector<Coord>& sides, bool maximal) {
  return random_regular_points(rng, lattice_points(LatticePolytope::box(sides)), maximal);
}

SampledTriangulation random_doubled(std::mt19937_64& rng, std::size_t n, Coord m, bool maximal) {
  auto half = random_regular(rng, n, m / 2, maximal);
  return {dilate(half.tri, 2), std::move(half.heights)};
}

Triangulation alcove_triangulation(std::size_t n, Coord m) {
  const auto pts = lattice_points(LatticePolytope::standard_simplex(n, m));
  std::vector<Rational> h;
  for (const auto& p : pts) {
    std::vector<Coord> y(n, 0);
    for (std::size_t k = n; k-- > 0;) y[k] = p[k] + (k + 1 < n ? y[k + 1] : 0);
    Coord q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      q += y[i] * y[i];
      for (std::size_t j = i + 1; j < n; ++j) q += (y[i] - y[j]) * (y[i] - y[j]);
    }
    h.emplace_back(q);
  }
  return regular_triangulation(pts, h);
}

SignDistribution random_signs(std::mt19937_64& rng, std::size_t count) {
  std::vector<Sign> s;
  for (std::size_t i = 0; i < count; ++i) s.push_back(rng() & 1 ? Sign::Plus : Sign::Minus);
  return SignDistribution(std::move(s));
}

}  // namespace patchwork
