#include "doctest.h"
#include "patchwork/problem_io.hpp"

using namespace patchwork;

namespace {

void same_problem(const Construction& a, const Construction& b) {
  CHECK(a.name == b.name);
  CHECK(a.tri == b.tri);
  CHECK(a.tri.polytope() == b.tri.polytope());
  CHECK(a.heights == b.heights);
  CHECK(a.signs == b.signs);
  CHECK(a.ambient == b.ambient);
  CHECK(a.origin == b.origin);
}

const char* kSegment = R"({"schema":"patchwork-problem/1","dimension":1,
  "polytope":{"vertices":[[0],[2]]},
  "triangulation":{"vertices":[[2],[0],[1]],"cells":[[1,2],[2,0]]},
  "signs":["-","+","+"],"ambient":{"kind":"affine"}})";

std::string with(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("constructions survive a round trip") {
  for (auto c : {cube_block(), triangle_ovals(4), nested_spheres(3, 2), cone_spheres(3, 4), cube_tiling(2, 1, 1)}) {
    const auto text = write_problem(c);
    auto back = read_problem(text);
    same_problem(c, back);
    CHECK(write_problem(back) == text);
  }
}

TEST_CASE("listed vertex order carries signs") {
  auto p = read_problem(kSegment);
  REQUIRE(p.tri.vertices() == std::vector<LatticePoint>{{0}, {1}, {2}});
  CHECK(p.signs.values() == std::vector<Sign>{Sign::Plus, Sign::Plus, Sign::Minus});
  CHECK(p.heights.empty());
  CHECK_FALSE(p.origin);
  auto q = read_problem(with(kSegment, R"("-","+")", "\"\xE2\x88\x92\",\"+\""));
  CHECK(q.signs == p.signs);
}

TEST_CASE("large integers and fractions are written as strings") {
  auto p = read_problem(kSegment);
  const BigInt big = BigInt(1) << 60;
  p.heights = {Rational(big), make_rational(1, 4), Rational(-3)};
  p.origin = LatticePoint{-(Coord{1} << 55)};
  const auto text = write_problem(p);
  CHECK(text.find("\"heights\":[\"1152921504606846976\",\"1/4\",-3]") != std::string::npos);
  CHECK(text.find("\"origin\":[\"-36028797018963968\"]") != std::string::npos);
  same_problem(p, read_problem(text));
  auto q = read_problem(with(kSegment, "[[2],[0],[1]]", R"([["2"],[0],[1]])"));
  CHECK(q.tri == p.tri);
}

TEST_CASE("malformed documents raise schema errors") {
  const std::vector<std::pair<std::string, std::string>> edits = {
      {"patchwork-problem/1", "patchwork-problem/2"},
      {R"("dimension":1,)", ""},
      {"[[1,2],[2,0]]", "[[1,2],[2,3]]"},
      {"[[1,2],[2,0]]", "[[1,2,0]]"},
      {"[[1,2],[2,0]]", "[[1,1],[2,0]]"},
      {R"(["-","+","+"])", R"(["-","+"])"},
      {R"(["-","+","+"])", R"(["-","+","0"])"},
      {"[[0],[2]]", "[[0],[3]]"},
      {"[[1,2],[2,0]]", "[[1,0],[2,0]]"},
      {R"({"kind":"affine"})", R"({"kind":"projective","degree":3})"},
      {R"({"kind":"affine"})", R"({"kind":"torus"})"},
      {R"("ambient")", R"("extra":1,"ambient")"},
      {"[[2],[0],[1]]", "[[2],[0],[1.5]]"},
      {"[[2],[0],[1]]", "[[2],[0],[2]]"},
      {"[[2],[0],[1]]", R"([[2],[0],["99999999999999999999"]])"},
  };
  for (const auto& [from, to] : edits) {
    INFO(from << " -> " << to);
    CHECK_THROWS_AS(read_problem(with(kSegment, from, to)), SchemaError);
  }
  CHECK_THROWS_AS(read_problem("{"), SchemaError);
  CHECK_THROWS_AS(read_problem("[]"), SchemaError);
  CHECK_NOTHROW(read_problem(with(kSegment, R"({"kind":"affine"})", R"({"kind":"projective","degree":2})")));
}

TEST_CASE("complex dump lists cells and boundaries") {
  auto c = cube_block();
  auto text = write_complex(build(c.tri, c.signs, c.ambient));
  CHECK(text.rfind(R"({"boundary":[[],)", 0) == 0);
  CHECK(text.find(R"("schema":"patchwork-complex/1")") != std::string::npos);
}
