#include "mild2/gf2.hpp"

#include <bit>

namespace mild2 {

Gf2Echelon::Gf2Echelon(std::size_t ncols)
    : ncols_(ncols), words_(words_for(ncols)), pivot_of_col_(ncols, -1) {}

bool Gf2Echelon::insert(std::vector<std::uint64_t> row) {
  row.resize(words_, 0);
  std::size_t w = 0;
  while (true) {
    while (w < words_ && row[w] == 0) ++w;
    if (w == words_) return false;
    const auto col = static_cast<std::uint32_t>(w * 64 + std::countr_zero(row[w]));
    const std::int32_t p = pivot_of_col_[col];
    if (p < 0) {
      pivot_of_col_[col] = static_cast<std::int32_t>(pivot_cols_.size());
      pivot_cols_.push_back(col);
      storage_.insert(storage_.end(), row.begin(), row.end());
      return true;
    }
    const std::uint64_t* piv = storage_.data() + static_cast<std::size_t>(p) * words_;
    for (std::size_t k = w; k < words_; ++k) row[k] ^= piv[k];
  }
}

bool Gf2Echelon::insert_sparse(std::span<const std::uint32_t> cols) {
  std::vector<std::uint64_t> row(words_, 0);
  for (auto c : cols) row[c / 64] ^= std::uint64_t{1} << (c % 64);
  return insert(std::move(row));
}

std::size_t gf2_rank(const std::vector<std::vector<std::uint8_t>>& rows, std::size_t ncols) {
  Gf2Echelon ech(ncols);
  for (const auto& r : rows) {
    std::vector<std::uint64_t> packed(Gf2Echelon::words_for(ncols), 0);
    for (std::size_t c = 0; c < ncols && c < r.size(); ++c) {
      if (r[c]) packed[c / 64] |= std::uint64_t{1} << (c % 64);
    }
    ech.insert(std::move(packed));
  }
  return ech.rank();
}

}  // namespace mild2
