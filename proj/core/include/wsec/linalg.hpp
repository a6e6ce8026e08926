#pragma once

// Dense integer matrices and exact rank by fraction-free elimination.

#include <cstddef>
#include <vector>

#include "wsec/poly.hpp"

namespace wsec {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Integer>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Rank over the rationals (Bareiss elimination, all intermediate values integral).
std::size_t exact_rank(IntMatrix m);

}  // namespace wsec
