#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "patchwork/constructions.hpp"
#include "patchwork/render.hpp"
#include "support/instances.hpp"

using namespace patchwork;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++k;
  return k;
}

// Lines of the group with the given id.
std::size_t group_lines(const std::string& svg, const std::string& id) {
  const auto start = svg.find("<g id=\"" + id + "\"");
  REQUIRE(start != std::string::npos);
  const auto end = svg.find("</g>", start);
  return count(svg.substr(start, end - start), "<line ");
}

// Recounts V - E + F from the faces of an OFF mesh.
long long off_euler(const std::string& off) {
  std::istringstream in(off);
  std::string magic;
  std::size_t v = 0, f = 0, e = 0;
  in >> magic >> v >> f >> e;
  REQUIRE(magic == "OFF");
  for (std::size_t i = 0; i < 3 * v; ++i) {
    std::string coord;
    in >> coord;
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < f; ++i) {
    std::size_t k = 0;
    in >> k;
    std::vector<std::size_t> idx(k);
    for (auto& x : idx) {
      in >> x;
      REQUIRE(x < v);
      used.insert(x);
    }
    for (std::size_t j = 0; j < k; ++j) {
      auto a = idx[j], b = idx[(j + 1) % k];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  CHECK(in.good());
  CHECK(used.size() == v);
  return static_cast<long long>(v) - static_cast<long long>(edges.size()) + static_cast<long long>(f);
}

}  // namespace

TEST_CASE("one mixed triangle draws one segment per copy") {
  auto t = Triangulation::from_simplices({{{0, 0}, {2, 0}, {0, 2}}});
  SignDistribution s({Sign::Plus, Sign::Minus, Sign::Plus});
  REQUIRE(t.vertex(1) == LatticePoint{0, 2});
  auto base = render_svg(t, s, {.all_copies = false});
  CHECK(group_lines(base, "hypersurface") == 1);
  CHECK(group_lines(base, "triangulation") == 3);
  CHECK(count(base, "fill=\"white\"") == 1);
  CHECK(base.find("<line x1=\"20\" y1=\"40\" x2=\"40\" y2=\"40\"/>") != std::string::npos);
  auto full = render_svg(t, s);
  CHECK(group_lines(full, "hypersurface") == 4);
  CHECK(group_lines(full, "triangulation") == 8);
  CHECK(count(full, "<circle ") == 5);
  CHECK(full == render_svg(t, s));
}

TEST_CASE("empty hypersurface still gives a complete document") {
  auto t = Triangulation::from_simplices({{{0, 0}, {2, 0}, {0, 2}}, {{2, 0}, {0, 2}, {2, 2}}});
  SignDistribution s(std::vector<Sign>(4, Sign::Plus));
  auto svg = render_svg(t, s);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(group_lines(svg, "hypersurface") == 0);
  CHECK(count(svg, "<g ") == 3);
  CHECK(count(svg, "</g>") == 3);
  CHECK(svg.ends_with("</svg>\n"));
  CHECK(svg.find("width=\"120\" height=\"120\"") != std::string::npos);
}

TEST_CASE("triangle ovals are drawn as triangles around the negative points") {
  auto c = triangle_ovals(8);
  auto svg = render_svg(c.tri, c.signs, {.all_copies = false});
  CHECK(count(svg, "fill=\"white\"") == 16);
  CHECK(group_lines(svg, "hypersurface") == 48);
  auto full = render_svg(c.tri, c.signs);
  CHECK(group_lines(full, "hypersurface") == 4 * 48);
}

TEST_CASE("render rejects other dimensions") {
  auto c = cube_block();
  CHECK_THROWS_AS(render_svg(c.tri, c.signs), std::invalid_argument);
  auto t = triangle_ovals(2);
  CHECK_THROWS_AS(render_off(t.tri, t.signs, t.ambient), std::invalid_argument);
}

TEST_CASE("OFF meshes recount the Euler characteristic") {
  auto block = cube_block();
  auto off = render_off(block.tri, block.signs, block.ambient);
  CHECK(off_euler(off) == -18);
  CHECK(off == render_off(block.tri, block.signs, block.ambient));

  auto spheres = nested_spheres(3, 4);
  CHECK(off_euler(render_off(spheres.tri, spheres.signs, spheres.ambient)) == 4);

  std::mt19937_64 rng(41);
  for (int round = 0; round < 12; ++round) {
    auto inst = instances::random_t2(rng, 3, 4, round % 2 == 0);
    auto s = instances::random_signs(rng, inst.tri.vertices().size());
    const auto ambient = round % 3 == 0 ? Ambient::projective(4) : Ambient::affine();
    CHECK(off_euler(render_off(inst.tri, s, ambient)) == euler_characteristic(inst.tri, s, ambient));
  }
}
