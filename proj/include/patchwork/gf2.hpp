#pragma once

// Dense matrices over GF(2) packed 64 columns per word.

#include <cstdint>
#include <vector>

namespace patchwork {

class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const { return data_[r * words_ + c / 64] >> (c % 64) & 1; }

  /// Rank by Gaussian elimination; the matrix itself is left untouched.
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace patchwork
