#include "wsec/linalg.hpp"

#include <utility>

#include "wsec/error.hpp"

namespace wsec {

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(Errc::invalid_input, "row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::size_t exact_rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(rank, k));
    }
    const Integer p = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer f = m(r, c);
      for (std::size_t k = c + 1; k < cols; ++k) {
        m(r, k) = (p * m(r, k) - f * m(rank, k)) / previous;
      }
      m(r, c) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace wsec
