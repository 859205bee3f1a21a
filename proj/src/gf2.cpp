#include "patchwork/gf2.hpp"

#include <bit>

namespace patchwork {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

std::size_t BitMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // pivot_row[c] holds a reduced row whose lowest set bit is column c.
  std::vector<std::vector<std::uint64_t>> pivot_row(cols_);
  std::size_t rank = 0;
  std::vector<std::uint64_t> row(words_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(r * words_),
              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * words_), row.begin());
    std::size_t w = 0;
    while (true) {
      while (w < words_ && row[w] == 0) ++w;
      if (w == words_) break;
      const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      auto& p = pivot_row[c];
      if (p.empty()) {
        p = row;
        ++rank;
        break;
      }
      for (std::size_t k = w; k < words_; ++k) row[k] ^= p[k];
    }
  }
  return rank;
}

}  // namespace patchwork
