#pragma once

// Compositions of n, their column diagrams and the numbered tableau.
//
// Rows, columns and entries are all 1-based. Column v holds the entries
// offset(v)+1 .. offset(v)+part(v) from top to bottom, so the box in row u
// of column v carries u + offset(v).

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace wsec {

class Composition {
 public:
  /// Throws Error(invalid_input) on an empty sequence or a non-positive part.
  explicit Composition(std::vector<int> parts);

  /// Parses "2,1,1,2". Whitespace around parts is ignored.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// n_v for 1 <= v <= length().
  int part(int v) const;
  /// n^v = n_1 + ... + n_{v-1}.
  int offset(int v) const;
  int max_part() const noexcept { return max_part_; }

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int n_ = 0;
  int max_part_ = 0;
};

struct Box {
  int row = 0;
  int col = 0;
  int entry = 0;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Two columns of equal height with no column of that height strictly between.
struct NeighborPair {
  int left = 0;
  int right = 0;
  int height = 0;

  friend auto operator<=>(const NeighborPair&, const NeighborPair&) = default;
};

/// Standard matrix unit x_{i,j}; also used as the polynomial variable naming
/// the corresponding coordinate.
struct MatrixUnit {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const MatrixUnit&, const MatrixUnit&) = default;
};

std::string to_string(const MatrixUnit& u);

class Tableau {
 public:
  explicit Tableau(Composition c);

  const Composition& composition() const noexcept { return composition_; }
  int n() const noexcept { return composition_.n(); }
  int columns() const noexcept { return composition_.length(); }
  int height() const noexcept { return composition_.max_part(); }
  int column_height(int v) const { return composition_.part(v); }

  /// Entry of b_{u,v}; throws invalid_input if the box does not exist.
  int entry(int row, int col) const;
  bool has_box(int row, int col) const;
  /// Throws invalid_input for entries outside [1, n].
  Box box(int entry) const;
  int column_of(int entry) const { return box(entry).col; }
  int row_of(int entry) const { return box(entry).row; }

  /// All boxes, ordered by entry.
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  /// Boxes in row u, left to right.
  std::vector<Box> row(int u) const;
  /// Entries of column v, top to bottom.
  std::vector<int> column(int v) const;

 private:
  Composition composition_;
  std::vector<Box> boxes_;
};

Tableau build_tableau(const Composition& c);

/// All neighbouring pairs, ordered by (height, left column).
std::vector<NeighborPair> neighboring_pairs(const Tableau& t);

bool is_neighboring(const Tableau& t, const NeighborPair& p);

/// x_{i,j} lies in the nilradical iff i sits in a column strictly left of j.
/// Throws invalid_input when i or j is outside [1, n].
bool in_nilradical(const Tableau& t, const MatrixUnit& u);

/// Every x_{i,j} of the nilradical in (i, j) order.
std::vector<MatrixUnit> nilradical_basis(const Tableau& t);

/// (n^2 - sum n_i^2) / 2.
int nilradical_dimension(const Composition& c);

/// m_{v,v'} = n_{v+1} + ... + n_{v'}.
int minor_size(const Tableau& t, const NeighborPair& p);

/// Degree of the leading term of the minor: sum_{i=v+1}^{v'} min(s, n_i).
/// Throws invalid_input for a non-neighbouring pair.
int bs_degree(const Tableau& t, const NeighborPair& p);

/// Degree of the supplementary invariant of a composition with n_1 = n_r and
/// n_i != n_1 in between: sum_{i=1}^{r-1} min(n_i, n_1). Throws invalid_input
/// when the composition is not of that shape.
int supplementary_degree(const Composition& c);

/// Number of integers in [1, max part] that are not a part.
int gap_count(const Composition& c);

/// All 2^{n-1} compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

}  // namespace wsec
