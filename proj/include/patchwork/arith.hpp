#pragma once

// Exact integer and rational arithmetic shared by every geometric predicate.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace patchwork {

using Coord = std::int64_t;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Row-major square matrix of machine integers, used as determinant input.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t size) : size_(size), data_(size * size, 0) {}

  std::size_t size() const { return size_; }
  Coord& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  Coord operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

 private:
  std::size_t size_ = 0;
  std::vector<Coord> data_;
};

/// Exact determinant. Runs fraction-free elimination in 128-bit integers and
/// restarts in arbitrary precision if any intermediate product overflows.
BigInt determinant(const IntMatrix& m);

/// Sign (-1, 0, +1) of the exact determinant.
int determinant_sign(const IntMatrix& m);

/// Exact determinant of an arbitrary-precision matrix (row-major, size k).
BigInt determinant(std::vector<BigInt> entries, std::size_t k);

/// Binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Narrowing with a range check; throws std::overflow_error.
Coord to_coord(const BigInt& v);

/// num/den in lowest terms; den must be nonzero and may be negative.
Rational make_rational(BigInt num, BigInt den);

/// Parses "17", "-3", "5/12" (also accepts a unicode minus sign).
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

}  // namespace patchwork
