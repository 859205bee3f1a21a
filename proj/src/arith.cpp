#include "patchwork/arith.hpp"

#include <stdexcept>
#include <utility>

namespace patchwork {

namespace {

using I128 = __int128;

bool mul_ok(I128 a, I128 b, I128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool sub_ok(I128 a, I128 b, I128& out) { return !__builtin_sub_overflow(a, b, &out); }

// Bareiss elimination in 128-bit arithmetic. Returns false on overflow.
bool bareiss_i128(const IntMatrix& m, I128& det) {
  const std::size_t n = m.size();
  if (n == 0) {
    det = 1;
    return true;
  }
  std::vector<I128> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  I128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) {
        det = 0;
        return true;
      }
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    const I128 pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        I128 x, y, z;
        if (!mul_ok(a[i * n + j], pivot, x)) return false;
        if (!mul_ok(a[i * n + k], a[k * n + j], y)) return false;
        if (!sub_ok(x, y, z)) return false;
        a[i * n + j] = z / prev;
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  det = sign * a[(n - 1) * n + (n - 1)];
  return true;
}

BigInt from_i128(I128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

}  // namespace

BigInt determinant(std::vector<BigInt> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  BigInt d = a[(n - 1) * n + (n - 1)];
  return sign < 0 ? BigInt(-d) : d;
}

BigInt determinant(const IntMatrix& m) {
  I128 fast;
  if (bareiss_i128(m, fast)) return from_i128(fast);
  const std::size_t n = m.size();
  std::vector<BigInt> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  return determinant(std::move(a), n);
}

int determinant_sign(const IntMatrix& m) {
  I128 fast;
  if (bareiss_i128(m, fast)) return (fast > 0) - (fast < 0);
  return determinant(m).sign();
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

Coord to_coord(const BigInt& v) {
  if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return static_cast<Coord>(v);
}

namespace {

std::string normalize_minus(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() + 0 && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
    } else if (text[i] != ' ') {
      s.push_back(text[i]);
    }
  }
  return s;
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  std::string s = normalize_minus(text);
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

Rational parse_rational(std::string_view text) {
  std::string s = normalize_minus(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  BigInt num = parse_integer(s.substr(0, slash));
  BigInt den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return make_rational(std::move(num), std::move(den));
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace patchwork
