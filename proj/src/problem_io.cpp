#include "patchwork/problem_io.hpp"

#include <set>

#include "json.hpp"

namespace patchwork {

namespace {

using nlohmann::json;

constexpr Coord kSafeInteger = Coord{1} << 53;

json integer_json(const BigInt& v) {
  if (v >= -kSafeInteger && v <= kSafeInteger) return static_cast<long long>(v);
  return to_string(v);
}

json rational_json(const Rational& v) {
  if (denominator(v) == 1) return integer_json(numerator(v));
  return to_string(v);
}

json point_json(const LatticePoint& p) {
  json a = json::array();
  for (auto x : p.coords()) a.push_back(integer_json(x));
  return a;
}

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_member(const json& obj, const char* key) {
  const auto& v = member(obj, key);
  if (!v.is_array()) fail(std::string("field \"") + key + "\" must be an array");
  return v;
}

BigInt parse_big(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(where + ": expected an integer");
}

Coord parse_coord(const json& v, const std::string& where) {
  try {
    return to_coord(parse_big(v, where));
  } catch (const std::overflow_error&) {
    fail(where + ": integer out of range");
  }
}

std::size_t parse_index(const json& v, std::size_t bound, const std::string& where) {
  const Coord i = parse_coord(v, where);
  if (i < 0 || static_cast<std::uint64_t>(i) >= bound) fail(where + ": index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i);
}

Rational parse_height(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(parse_big(v, where));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(where + ": expected an integer or a \"p/q\" string");
}

LatticePoint parse_point(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) fail(where + ": expected " + std::to_string(n) + " coordinates");
  std::vector<Coord> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(parse_coord(v[i], where));
  return LatticePoint(std::move(c));
}

json ambient_json(const Ambient& a) {
  json j{{"kind", to_string(a.kind)}};
  if (a.kind == AmbientKind::Projective) j["degree"] = integer_json(a.degree);
  if (a.kind == AmbientKind::P1Power) {
    json sides = json::array();
    for (auto s : a.multidegree) sides.push_back(integer_json(s));
    j["multidegree"] = sides;
  }
  return j;
}

Ambient parse_ambient(const json& j) {
  if (!j.is_object()) fail("ambient: expected an object");
  const auto& kind = member(j, "kind");
  if (!kind.is_string()) fail("ambient.kind: expected a string");
  Ambient a;
  try {
    a.kind = parse_ambient_kind(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(std::string("ambient.kind: ") + e.what());
  }
  if (a.kind == AmbientKind::Projective) a.degree = parse_coord(member(j, "degree"), "ambient.degree");
  if (a.kind == AmbientKind::P1Power)
    for (const auto& s : array_member(j, "multidegree")) a.multidegree.push_back(parse_coord(s, "ambient.multidegree"));
  return a;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(where + ": unknown field \"" + k + "\"");
  }
}

}  // namespace

std::string write_problem(const Construction& problem) {
  const auto& tri = problem.tri;
  json poly = json::array(), verts = json::array(), cells = json::array(), signs = json::array();
  for (const auto& v : tri.polytope().vertices()) poly.push_back(point_json(v));
  for (const auto& v : tri.vertices()) verts.push_back(point_json(v));
  for (const auto& c : tri.cells()) cells.push_back(c);
  for (auto s : problem.signs.values()) signs.push_back(sign_symbol(s));
  json doc;
  doc["schema"] = kProblemSchema;
  if (!problem.name.empty()) doc["name"] = problem.name;
  doc["dimension"] = tri.dim();
  doc["polytope"] = {{"vertices", poly}};
  doc["triangulation"] = {{"vertices", verts}, {"cells", cells}};
  if (!problem.heights.empty()) {
    json h = json::array();
    for (const auto& x : problem.heights) h.push_back(rational_json(x));
    doc["heights"] = h;
  }
  doc["signs"] = signs;
  doc["ambient"] = ambient_json(problem.ambient);
  if (problem.origin) doc["origin"] = point_json(*problem.origin);
  return doc.dump() + "\n";
}

namespace {

Construction parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be an object");
  reject_unknown(doc, {"schema", "name", "dimension", "polytope", "triangulation", "heights", "signs", "ambient", "origin"},
                 "document");
  const auto& schema = member(doc, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kProblemSchema)
    fail("schema must be \"" + std::string(kProblemSchema) + "\"");

  const Coord dim = parse_coord(member(doc, "dimension"), "dimension");
  if (dim < 1 || static_cast<std::size_t>(dim) > kMaxDimension) fail("dimension out of range");
  const auto n = static_cast<std::size_t>(dim);

  const auto& poly = member(doc, "polytope");
  if (!poly.is_object()) fail("polytope: expected an object");
  std::vector<LatticePoint> corners;
  for (const auto& v : array_member(poly, "vertices")) corners.push_back(parse_point(v, n, "polytope.vertices"));

  const auto& tj = member(doc, "triangulation");
  if (!tj.is_object()) fail("triangulation: expected an object");
  std::vector<LatticePoint> verts;
  for (const auto& v : array_member(tj, "vertices")) verts.push_back(parse_point(v, n, "triangulation.vertices"));
  if (std::set<LatticePoint>(verts.begin(), verts.end()).size() != verts.size())
    fail("triangulation.vertices: repeated vertex");
  std::vector<Cell> cells;
  for (const auto& c : array_member(tj, "cells")) {
    if (!c.is_array() || c.size() != n + 1) fail("triangulation.cells: every cell needs n+1 vertices");
    Cell cell;
    for (const auto& i : c) cell.push_back(parse_index(i, verts.size(), "triangulation.cells"));
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end()) fail("triangulation.cells: repeated vertex in a cell");
    cells.push_back(std::move(cell));
  }
  if (cells.empty()) fail("triangulation.cells: no cells");

  std::optional<LatticePolytope> polytope;
  try {
    polytope = LatticePolytope::from_points(corners);
    if (!(LatticePolytope::from_points(verts) == *polytope))
      fail("polytope.vertices: not the convex hull of the triangulation");
    if (polytope->dim() != n) fail("polytope: not full-dimensional");
  } catch (const std::overflow_error& e) {
    fail(std::string("polytope: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(std::string("polytope: ") + e.what());
  }

  Triangulation tri(*polytope, verts, cells);
  if (auto report = validate(tri, tri.cells().size() <= 2000); !report) fail("triangulation: " + report.violation);

  // The constructor sorts vertices; map listed positions to canonical ones.
  std::vector<std::size_t> slot(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) slot[i] = *tri.find_vertex(verts[i]);

  const auto& sj = array_member(doc, "signs");
  if (sj.size() != verts.size()) fail("signs: expected one sign per vertex");
  std::vector<Sign> signs(verts.size(), Sign::Plus);
  for (std::size_t i = 0; i < sj.size(); ++i) {
    if (!sj[i].is_string()) fail("signs: expected \"+\" or \"-\"");
    try {
      signs[slot[i]] = parse_sign(sj[i].get<std::string>());
    } catch (const std::invalid_argument&) {
      fail("signs: expected \"+\" or \"-\"");
    }
  }

  HeightFunction heights;
  if (auto it = doc.find("heights"); it != doc.end()) {
    if (!it->is_array() || it->size() != verts.size()) fail("heights: expected one height per vertex");
    heights.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) heights[slot[i]] = parse_height((*it)[i], "heights");
  }

  Ambient ambient = parse_ambient(member(doc, "ambient"));
  try {
    check_compatible(ambient, tri);
  } catch (const std::invalid_argument& e) {
    fail(std::string("ambient: ") + e.what());
  }

  std::optional<LatticePoint> origin;
  if (auto it = doc.find("origin"); it != doc.end()) origin = parse_point(*it, n, "origin");

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("name: expected a string");
    name = it->get<std::string>();
  }
  return Construction{name, std::move(tri), std::move(heights), SignDistribution(std::move(signs)), ambient, origin};
}

}  // namespace

Construction read_problem(std::string_view text) {
  try {
    return parse_document(text);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::domain_error& e) {
    fail(e.what());
  } catch (const std::overflow_error& e) {
    fail(e.what());
  }
}

std::string write_complex(const PatchworkComplex& complex) {
  json cells = json::array(), boundary = json::array();
  for (std::size_t d = 0; d < complex.cells.size(); ++d) {
    json level = json::array();
    for (const auto& c : complex.cells[d]) level.push_back({{"face", c.face}, {"copy", c.copy}});
    cells.push_back(level);
    boundary.push_back(d < complex.boundary.size() ? json(complex.boundary[d]) : json::array());
  }
  json doc{{"schema", kComplexSchema}, {"dimension", complex.ambient_dim}, {"cells", cells}, {"boundary", boundary}};
  return doc.dump() + "\n";
}

}  // namespace patchwork
