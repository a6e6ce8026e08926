#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wsec/linalg.hpp"
#include "wsec/poly.hpp"
#include "wsec/tableau.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

inline int inversion_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
  }
  return inv % 2 ? -1 : 1;
}

/// Leibniz expansion over all permutations.
inline wsec::Polynomial leibniz_det(const wsec::SymbolicMatrix& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.size()));
  std::iota(perm.begin(), perm.end(), 0);
  wsec::Polynomial sum;
  do {
    wsec::Polynomial term = wsec::Polynomial::constant(inversion_sign(perm));
    for (int r = 0; r < m.size() && !term.is_zero(); ++r) term *= m(r, perm[static_cast<std::size_t>(r)]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Gaussian elimination over Q.
inline std::size_t rational_rank(const wsec::IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m(r, c));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Entry -> (row, column) straight from the column-filling rule.
inline std::map<int, std::pair<int, int>> box_positions(const std::vector<int>& parts) {
  std::map<int, std::pair<int, int>> pos;
  int entry = 0;
  for (std::size_t v = 0; v < parts.size(); ++v) {
    for (int u = 1; u <= parts[v]; ++u) pos[++entry] = {u, static_cast<int>(v) + 1};
  }
  return pos;
}

/// Same-height column pairs with no column of that height between them.
inline std::vector<std::pair<int, int>> neighbour_pairs(const std::vector<int>& parts) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (parts[b] == parts[a]) {
        out.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
        break;
      }
    }
  }
  return out;
}

/// Horizontal lines of step 1: consecutive boxes of each row.
inline int horizontal_line_count(const std::vector<int>& parts) {
  const auto pos = box_positions(parts);
  std::map<int, int> per_row;
  for (const auto& [e, rc] : pos) ++per_row[rc.first];
  int lines = 0;
  for (const auto& [row, k] : per_row) lines += k - 1;
  return lines;
}

inline std::vector<int> random_composition(std::mt19937& rng, int n) {
  std::vector<int> parts{1};
  std::bernoulli_distribution cut(0.5);
  for (int k = 1; k < n; ++k) {
    if (cut(rng)) parts.push_back(1);
    else ++parts.back();
  }
  return parts;
}

/// Random matrix mixing zeros, small constants, variables and sums of both.
inline wsec::SymbolicMatrix random_symbolic(std::mt19937& rng, int size, int vars) {
  wsec::SymbolicMatrix m(size);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> var(1, vars);
  auto unit = [&] { return wsec::MatrixUnit{var(rng), var(rng)}; };
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      switch (kind(rng)) {
        case 0: break;
        case 1: m.set(r, c, wsec::Polynomial::constant(coef(rng))); break;
        case 2:
        case 3: m.set(r, c, wsec::Polynomial::variable(unit())); break;
        default:
          m.set(r, c, wsec::Polynomial::variable(unit()) * wsec::Polynomial::constant(coef(rng)) +
                          wsec::Polynomial::constant(coef(rng)));
      }
    }
  }
  return m;
}

}  // namespace oracle
