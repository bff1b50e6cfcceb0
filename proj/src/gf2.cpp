#include "l2lab/gf2.hpp"

#include <algorithm>

namespace l2lab {

namespace {

inline void xor_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

inline bool bit(const std::vector<std::uint64_t>& r, int c) {
  return (r[static_cast<std::size_t>(c) / 64] >> (static_cast<unsigned>(c) % 64)) & 1;
}

}  // namespace

void BitMatrix::add_row(const std::vector<int>& set_bits) {
  std::vector<std::uint64_t> r(blocks_, 0);
  for (int c : set_bits)
    r[static_cast<std::size_t>(c) / 64] ^= std::uint64_t(1) << (static_cast<unsigned>(c) % 64);
  rows_.push_back(std::move(r));
}

int BitMatrix::rank() const {
  auto work = rows_;
  int r = 0;
  for (int c = 0; c < cols_ && r < static_cast<int>(work.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(work.size()); ++i)
      if (bit(work[static_cast<std::size_t>(i)], c)) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(work[static_cast<std::size_t>(r)], work[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < static_cast<int>(work.size()); ++i)
      if (i != r && bit(work[static_cast<std::size_t>(i)], c))
        xor_into(work[static_cast<std::size_t>(i)], work[static_cast<std::size_t>(r)]);
    ++r;
  }
  return r;
}

std::vector<std::vector<std::uint64_t>> BitMatrix::kernel_basis() const {
  auto work = rows_;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols_ && r < static_cast<int>(work.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(work.size()); ++i)
      if (bit(work[static_cast<std::size_t>(i)], c)) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(work[static_cast<std::size_t>(r)], work[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < static_cast<int>(work.size()); ++i)
      if (i != r && bit(work[static_cast<std::size_t>(i)], c))
        xor_into(work[static_cast<std::size_t>(i)], work[static_cast<std::size_t>(r)]);
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<std::uint64_t>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<std::uint64_t> v(blocks_, 0);
    v[static_cast<std::size_t>(free) / 64] |= std::uint64_t(1) << (static_cast<unsigned>(free) % 64);
    for (int i = 0; i < r; ++i)
      if (bit(work[static_cast<std::size_t>(i)], free))
        v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)]) / 64] ^=
            std::uint64_t(1) << (static_cast<unsigned>(pivot_col[static_cast<std::size_t>(i)]) % 64);
    basis.push_back(std::move(v));
  }
  return basis;
}

BitMatrix BitMatrix::eliminate_columns(const std::vector<int>& cols) const {
  auto work = rows_;
  std::vector<bool> dead(work.size(), false);
  for (int c : cols) {
    int piv = -1;
    for (int i = 0; i < static_cast<int>(work.size()); ++i)
      if (!dead[static_cast<std::size_t>(i)] && bit(work[static_cast<std::size_t>(i)], c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int i = 0; i < static_cast<int>(work.size()); ++i)
      if (i != piv && !dead[static_cast<std::size_t>(i)] &&
          bit(work[static_cast<std::size_t>(i)], c))
        xor_into(work[static_cast<std::size_t>(i)], work[static_cast<std::size_t>(piv)]);
    dead[static_cast<std::size_t>(piv)] = true;
  }
  BitMatrix out(cols_);
  for (int i = 0; i < static_cast<int>(work.size()); ++i) {
    if (dead[static_cast<std::size_t>(i)]) continue;
    bool nonzero = false;
    for (std::uint64_t b : work[static_cast<std::size_t>(i)]) nonzero |= b != 0;
    if (nonzero) out.add_row_raw(work[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace l2lab
