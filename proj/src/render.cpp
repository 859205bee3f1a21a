#include "patchwork/render.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace patchwork {

namespace {

constexpr Coord kUnit = 20;
constexpr Coord kMargin = 20;

// Coordinates are kept doubled so edge midpoints stay integral.
using Point2 = std::array<Coord, 2>;
using Segment = std::array<Point2, 2>;

Point2 doubled(const LatticePoint& p) { return {2 * p[0], 2 * p[1]}; }

Point2 doubled_midpoint(const LatticePoint& a, const LatticePoint& b) { return {a[0] + b[0], a[1] + b[1]}; }

Segment ordered(Point2 a, Point2 b) { return a < b ? Segment{a, b} : Segment{b, a}; }

// A quarter of an integer as an exact decimal.
std::string quarter(Coord q) {
  static const char* const kFraction[] = {"", ".25", ".5", ".75"};
  const Coord a = q < 0 ? -q : q;
  return (q < 0 ? "-" : "") + std::to_string(a / 4) + kFraction[a % 4];
}

}  // namespace

std::string render_svg(const Triangulation& tri, const SignDistribution& signs, const SvgOptions& options) {
  if (tri.dim() != 2) throw std::invalid_argument("SVG output needs a plane triangulation");
  require_total(signs, tri);
  const SymmetricTriangulation sym(tri);
  const SignVector copies = options.all_copies ? SignVector{4} : SignVector{1};

  std::set<Segment> edges, gamma;
  std::set<std::pair<Point2, bool>> dots;
  const auto& fl = tri.faces();
  for (SignVector e = 0; e < copies; ++e) {
    for (const auto& edge : fl.by_dim[1])
      edges.insert(ordered(doubled(sym.reflect(tri.vertex(edge[0]), e)), doubled(sym.reflect(tri.vertex(edge[1]), e))));
    for (std::size_t v = 0; v < tri.vertices().size(); ++v)
      dots.insert({doubled(sym.reflect(tri.vertex(v), e)), extend_to_copy(signs, tri, v, e) == Sign::Plus});
    for (const auto& cell : tri.cells()) {
      std::vector<Point2> mids;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          if (extend_to_copy(signs, tri, cell[i], e) != extend_to_copy(signs, tri, cell[j], e))
            mids.push_back(doubled_midpoint(sym.reflect(tri.vertex(cell[i]), e), sym.reflect(tri.vertex(cell[j]), e)));
      if (mids.size() == 2) gamma.insert(ordered(mids[0], mids[1]));
    }
  }

  Point2 lo = dots.begin()->first, hi = lo;
  for (const auto& [p, plus] : dots)
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  // Doubled coordinates: one lattice unit is kUnit / 2 per doubled step.
  const Coord width = (hi[0] - lo[0]) * kUnit / 2 + 2 * kMargin;
  const Coord height = (hi[1] - lo[1]) * kUnit / 2 + 2 * kMargin;
  auto px = [&](const Point2& p) { return (p[0] - lo[0]) * kUnit / 2 + kMargin; };
  auto py = [&](const Point2& p) { return (hi[1] - p[1]) * kUnit / 2 + kMargin; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g id=\"triangulation\" stroke=\"#888888\" stroke-width=\"1\" fill=\"none\">\n";
  for (const auto& s : edges)
    out << "<line x1=\"" << px(s[0]) << "\" y1=\"" << py(s[0]) << "\" x2=\"" << px(s[1]) << "\" y2=\"" << py(s[1])
        << "\"/>\n";
  out << "</g>\n";
  out << "<g id=\"hypersurface\" stroke=\"#c00000\" stroke-width=\"2\" fill=\"none\">\n";
  for (const auto& s : gamma)
    out << "<line x1=\"" << px(s[0]) << "\" y1=\"" << py(s[0]) << "\" x2=\"" << px(s[1]) << "\" y2=\"" << py(s[1])
        << "\"/>\n";
  out << "</g>\n";
  out << "<g id=\"vertices\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& [p, plus] : dots)
    out << "<circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"3\" fill=\"" << (plus ? "black" : "white")
        << "\"/>\n";
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_off(const Triangulation& tri, const SignDistribution& signs, const Ambient& ambient) {
  if (tri.dim() != 3) throw std::invalid_argument("OFF output needs a three-dimensional triangulation");
  const auto complex = build(tri, signs, ambient);
  const SymmetricTriangulation sym(tri);
  const auto& points = complex.cells[0];
  const auto& segments = complex.cells[1];

  auto find = [&](const std::vector<CellId>& level, Face face, SignVector e) {
    std::sort(face.begin(), face.end());
    CellId id{face, glued_copy(tri, ambient, face, e)};
    auto it = std::lower_bound(level.begin(), level.end(), id);
    if (it == level.end() || *it != id) throw std::logic_error("mixed face missing from the complex");
    return static_cast<std::size_t>(it - level.begin());
  };
  // Four times the position of a vertex in copy e.
  auto scaled = [&](std::size_t v, SignVector e) { return sym.reflect(tri.vertex(v), e).scaled(4); };
  auto edge_midpoint = [&](std::size_t a, std::size_t b, SignVector e) {
    auto p = scaled(a, e) + scaled(b, e);
    for (std::size_t i = 0; i < 3; ++i) p[i] /= 2;
    return p;
  };

  // Mesh vertices: 0-cells, then 1-cells, then quadrilateral diagonals, so
  // every mesh edge is determined by its two endpoints.
  std::vector<LatticePoint> position;
  for (const auto& p : points) position.push_back(edge_midpoint(p.face[0], p.face[1], p.copy));
  for (const auto& s : segments) {
    std::vector<LatticePoint> mids;
    const auto& f = s.face;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (extend_to_copy(signs, tri, f[i], s.copy) != extend_to_copy(signs, tri, f[j], s.copy))
          mids.push_back(edge_midpoint(f[i], f[j], s.copy));
    auto q = mids[0] + mids[1];
    for (std::size_t i = 0; i < 3; ++i) q[i] /= 2;
    position.push_back(q);
  }

  std::vector<std::vector<std::size_t>> faces;
  const std::size_t seg0 = points.size();
  for (const auto& cell : complex.cells[2]) {
    const SignVector e = cell.copy;
    std::vector<std::size_t> plus, minus;
    for (auto v : cell.face) (extend_to_copy(signs, tri, v, e) == Sign::Plus ? plus : minus).push_back(v);
    auto corner = [&](std::size_t a, std::size_t b) { return find(points, {a, b}, e); };
    auto side = [&](std::size_t a, std::size_t b, std::size_t c) { return seg0 + find(segments, {a, b, c}, e); };
    if (plus.size() == 2) {
      // Staircase split of the square spanned by the four mixed edges.
      const auto a = plus[0], b = plus[1], c = minus[0], d = minus[1];
      const auto ac = corner(a, c), ad = corner(a, d), bc = corner(b, c), bd = corner(b, d);
      const std::size_t diagonal = position.size();
      auto q = edge_midpoint(a, c, e) + edge_midpoint(b, d, e);
      for (std::size_t i = 0; i < 3; ++i) q[i] /= 2;
      position.push_back(q);
      faces.push_back({ac, side(a, c, d), ad, side(a, b, d), bd, diagonal});
      faces.push_back({ac, diagonal, bd, side(b, c, d), bc, side(a, b, c)});
    } else {
      const auto& one = plus.size() == 1 ? plus : minus;
      const auto& three = plus.size() == 1 ? minus : plus;
      const auto o = one[0];
      faces.push_back({corner(o, three[0]), side(o, three[0], three[1]), corner(o, three[1]),
                       side(o, three[1], three[2]), corner(o, three[2]), side(o, three[0], three[2])});
    }
  }

  std::ostringstream out;
  out << "OFF\n" << position.size() << ' ' << faces.size() << " 0\n";
  for (const auto& p : position) out << quarter(p[0]) << ' ' << quarter(p[1]) << ' ' << quarter(p[2]) << '\n';
  for (const auto& f : faces) {
    out << f.size();
    for (auto i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

}  // namespace patchwork
