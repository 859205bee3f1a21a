#pragma once

// Sign distributions on triangulation vertices and their extension to the
// reflected copies by the parity rule.

#include <string>
#include <string_view>
#include <vector>

#include "patchwork/triangulation.hpp"

namespace patchwork {

enum class Sign : signed char { Minus = -1, Plus = 1 };

inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }

/// "+" or "-".
std::string sign_symbol(Sign s);
/// Accepts "+", "-" and the unicode minus sign.
Sign parse_sign(std::string_view text);

/// One sign per triangulation vertex, indexed like Triangulation::vertices().
class SignDistribution {
 public:
  SignDistribution() = default;
  explicit SignDistribution(std::vector<Sign> signs) : s_(std::move(signs)) {}

  std::size_t size() const { return s_.size(); }
  Sign operator[](std::size_t i) const { return s_[i]; }
  const std::vector<Sign>& values() const { return s_; }
  bool all_equal() const;

  friend bool operator==(const SignDistribution&, const SignDistribution&) = default;

 private:
  std::vector<Sign> s_;
};

/// Sign of the vertex v in copy e: mu flipped once per negated odd coordinate.
Sign extend_to_copy(Sign mu, const LatticePoint& v, SignVector e);
Sign extend_to_copy(const SignDistribution& signs, const Triangulation& tri, std::size_t vertex, SignVector e);

/// + exactly on points with even coordinate sum.
SignDistribution checkerboard(const std::vector<LatticePoint>& vertices);

/// Both signs occur on the face in copy e.
bool is_mixed(const Face& face, const Triangulation& tri, const SignDistribution& signs, SignVector e);

/// Throws std::invalid_argument unless there is exactly one sign per vertex.
void require_total(const SignDistribution& signs, const Triangulation& tri);

}  // namespace patchwork
