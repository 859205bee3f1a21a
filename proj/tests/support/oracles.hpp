#pragma once

// Independent brute-force reference computations used to check the library.
// Nothing here calls into the code under test except for plain data types.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "patchwork/arith.hpp"
#include "patchwork/lattice.hpp"

namespace oracle {

using patchwork::BigInt;
using patchwork::Coord;
using patchwork::LatticePoint;
using patchwork::Rational;

// Solves sum_j lambda_j v_j = p, sum_j lambda_j = 1 over Q for affinely
// independent v_j. Returns nullopt when p is off the affine hull.
inline std::optional<std::vector<Rational>> barycentric(const std::vector<LatticePoint>& v,
                                                        const std::vector<Rational>& p) {
  const std::size_t n = p.size(), k = v.size();
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = v[j][r];
    a[r][k] = p[r];
  }
  for (std::size_t j = 0; j < k; ++j) a[n][j] = 1;
  a[n][k] = 1;
  std::size_t row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < k && row <= n; ++c) {
    std::size_t r = row;
    while (r <= n && a[r][c] == 0) ++r;
    if (r > n) continue;
    std::swap(a[r], a[row]);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) a[i][cc] -= f * a[row][cc];
    }
    piv.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r <= n; ++r)
    if (a[r][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(k, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) lambda[piv[i]] = a[i][k] / a[i][piv[i]];
  return lambda;
}

inline std::optional<std::vector<Rational>> barycentric(const std::vector<LatticePoint>& v, const LatticePoint& p) {
  std::vector<Rational> q;
  for (std::size_t i = 0; i < p.dim(); ++i) q.emplace_back(p[i]);
  return barycentric(v, q);
}

// Index of the cell whose interior contains the point, by brute force.
template <class Cells>
inline std::optional<std::size_t> containing_cell(const Cells& cells, const std::vector<Rational>& p) {
  for (std::size_t t = 0; t < cells.size(); ++t) {
    auto lam = barycentric(cells[t], p);
    if (lam && std::all_of(lam->begin(), lam->end(), [](const Rational& l) { return l > 0; })) return t;
  }
  return std::nullopt;
}

// Integer points of the k-th dilate of a simplex, optionally only those in
// its relative interior.
inline std::vector<LatticePoint> simplex_points(const std::vector<LatticePoint>& v, Coord k, bool interior_only) {
  const std::size_t n = v.front().dim();
  std::vector<LatticePoint> dil;
  for (const auto& p : v) dil.push_back(p.scaled(k));
  std::vector<Coord> lo(n, dil[0][0]), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = dil[0][i];
    for (const auto& p : dil) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  std::vector<LatticePoint> out;
  LatticePoint p(lo);
  while (true) {
    auto lam = barycentric(dil, p);
    if (lam) {
      bool ok = true;
      for (const auto& l : *lam)
        if (l < 0 || (interior_only && l == 0)) ok = false;
      if (ok) out.push_back(p);
    }
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        for (std::size_t j = i + 1; j < n; ++j) p[j] = lo[j];
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return out;
}

// Determinant by cofactor expansion over Q.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(row);
    }
    Rational t = m[0][c] * cofactor_det(sub);
    d += (c % 2 == 0) ? t : Rational(-t);
  }
  return d;
}

inline BigInt simplex_volume(const std::vector<LatticePoint>& v) {
  std::vector<std::vector<Rational>> m;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::vector<Rational> row;
    for (std::size_t c = 0; c < v[0].dim(); ++c) row.emplace_back(v[r][c] - v[0][c]);
    m.push_back(row);
  }
  Rational d = cofactor_det(m);
  if (d < 0) d = -d;
  return numerator(d);
}

inline BigInt choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace oracle
