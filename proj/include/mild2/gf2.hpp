#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mild2 {

/// Incremental row echelon form over F_2 with 64-bit packed rows. Each stored pivot row
/// has its lowest set bit at its pivot column and is never changed afterwards.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t ncols);

  // Reduces the row against the stored pivots; stores it and returns true if nonzero.
  bool insert(std::vector<std::uint64_t> row);
  // Same, for a row given by the columns of its set bits (repeated columns cancel).
  bool insert_sparse(std::span<const std::uint32_t> cols);

  std::size_t rank() const { return pivot_cols_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t words() const { return words_; }

  static std::size_t words_for(std::size_t ncols) { return (ncols + 63) / 64; }

 private:
  std::size_t ncols_;
  std::size_t words_;
  std::vector<std::int32_t> pivot_of_col_;
  std::vector<std::uint32_t> pivot_cols_;
  std::vector<std::uint64_t> storage_;  // rank() rows of words_ words each
};

// Rank of a small dense 0/1 matrix.
std::size_t gf2_rank(const std::vector<std::vector<std::uint8_t>>& rows, std::size_t ncols);

}  // namespace mild2
