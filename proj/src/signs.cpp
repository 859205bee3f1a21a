#include "patchwork/signs.hpp"

#include <stdexcept>

namespace patchwork {

std::string sign_symbol(Sign s) { return s == Sign::Plus ? "+" : "-"; }

Sign parse_sign(std::string_view text) {
  if (text == "+") return Sign::Plus;
  if (text == "-" || text == "−") return Sign::Minus;
  throw std::invalid_argument("not a sign: '" + std::string(text) + "'");
}

bool SignDistribution::all_equal() const {
  for (auto s : s_)
    if (s != s_.front()) return false;
  return true;
}

Sign extend_to_copy(Sign mu, const LatticePoint& v, SignVector e) {
  Sign s = mu;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!(e >> i & 1)) continue;
    if (v[i] < 0) throw std::invalid_argument("vertex outside the positive orthant: " + to_string(v));
    if (v[i] % 2 != 0) s = -s;
  }
  return s;
}

Sign extend_to_copy(const SignDistribution& signs, const Triangulation& tri, std::size_t vertex, SignVector e) {
  return extend_to_copy(signs[vertex], tri.vertex(vertex), e);
}

SignDistribution checkerboard(const std::vector<LatticePoint>& vertices) {
  std::vector<Sign> s;
  s.reserve(vertices.size());
  for (const auto& v : vertices) s.push_back(v.coordinate_sum() % 2 == 0 ? Sign::Plus : Sign::Minus);
  return SignDistribution(std::move(s));
}

bool is_mixed(const Face& face, const Triangulation& tri, const SignDistribution& signs, SignVector e) {
  bool plus = false, minus = false;
  for (auto v : face) {
    if (extend_to_copy(signs, tri, v, e) == Sign::Plus) plus = true;
    else minus = true;
  }
  return plus && minus;
}

void require_total(const SignDistribution& signs, const Triangulation& tri) {
  if (signs.size() != tri.vertices().size())
    throw std::invalid_argument("sign distribution has " + std::to_string(signs.size()) + " entries for " +
                                std::to_string(tri.vertices().size()) + " vertices");
}

}  // namespace patchwork
