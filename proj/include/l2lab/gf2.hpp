#pragma once

#include <cstdint>
#include <vector>

namespace l2lab {

/// Row-major bit matrix over GF(2), bit-packed into 64-bit blocks.
class BitMatrix {
 public:
  explicit BitMatrix(int cols) : cols_(cols), blocks_((cols + 63) / 64) {}

  int cols() const { return cols_; }
  int rows() const { return static_cast<int>(rows_.size()); }

  void add_row(const std::vector<int>& set_bits);
  void add_row_raw(std::vector<std::uint64_t> row) { rows_.push_back(std::move(row)); }
  bool get(int r, int c) const {
    return (rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) / 64] >>
            (static_cast<unsigned>(c) % 64)) & 1;
  }
  const std::vector<std::uint64_t>& row(int r) const {
    return rows_[static_cast<std::size_t>(r)];
  }

  /// Row rank; the matrix itself is left untouched.
  int rank() const;

  /// Basis of {x : Mx = 0}, one bit-packed vector per basis element.
  std::vector<std::vector<std::uint64_t>> kernel_basis() const;

  /// Existentially eliminates the given columns (projection of the solution
  /// set onto the remaining coordinates): pivot rows on those columns are
  /// dropped after clearing the column elsewhere. Returned rows have no bits
  /// in the eliminated columns.
  BitMatrix eliminate_columns(const std::vector<int>& cols) const;

 private:
  int cols_;
  std::size_t blocks_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace l2lab
