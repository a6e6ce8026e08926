#pragma once

// Root-lattice checks on the constructed lines: weights, the separation
// matrix against the coroots of h', the root system spanned by the horizontal
// lines, a grading element, and orbit dimensions via exact ranks.

#include <optional>
#include <utility>
#include <vector>

#include "wsec/construction.hpp"
#include "wsec/linalg.hpp"
#include "wsec/tableau.hpp"

namespace wsec {

/// Coordinates over the simple roots alpha_1 .. alpha_{n-1}; index k-1 holds alpha_k.
using Weight = std::vector<int>;

/// alpha_i + ... + alpha_{j-1} for the line i -> j.
Weight line_weight(const Tableau& t, const MatrixUnit& u);
inline Weight line_weight(const Tableau& t, const Line& l) { return line_weight(t, l.unit()); }

/// alpha_k^vee(w) via the type-A Cartan matrix.
int coroot_pairing(int k, const Weight& w);

/// Cartan inner product (w, w').
int cartan_product(const Weight& a, const Weight& b);

struct SeparationMatrix {
  /// K: the 1-labelled lines of step 2.
  std::vector<Line> lines;
  /// K': entries of boxes that are not lowest in their column.
  std::vector<int> coroots;
  IntMatrix values;
};

/// Requires a step-2 line set (horizontal lines only).
SeparationMatrix separation_matrix(const LineSet& ls);

int separation_rank(const LineSet& ls);

/// Rows/columns of an |K| x |K| submatrix that is triangular after permuting
/// rows and columns, with +-1 on the diagonal, found by peeling columns with
/// a single nonzero entry. Empty optional when the peeling gets stuck.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> triangular_witness(
    const SeparationMatrix& s);

/// Ranks k of the A_k components spanned by the horizontal lines, one per row
/// holding at least two boxes, in descending order. The Gram matrix and
/// linear independence are checked; a mismatch throws internal_error.
std::vector<int> root_system_type(const LineSet& ls);

/// Diagonal h with h_i - h_j = -1 on every horizontal line i -> j.
struct GradingElement {
  std::vector<long long> diagonal;

  /// Eigenvalue of ad h on x_{i,j}.
  long long value_on(const MatrixUnit& u) const {
    return diagonal[static_cast<std::size_t>(u.i - 1)] - diagonal[static_cast<std::size_t>(u.j - 1)];
  }
};

/// One solution, zero at the smallest entry of each connected block.
GradingElement grading_element(const LineSet& ls);

struct DensityResult {
  bool dense = false;
  int dimension = 0;
  int dim_m = 0;
};

/// dim(p'.(e + v) + V) against dim m, e + v being the sum of all line units.
DensityResult density_check(const LineSet& ls);

enum class Group { P, P_derived };

struct WeightedUnit {
  MatrixUnit unit;
  Integer coefficient = 1;
};

/// dim m - dim(g.point) for g = p or p'.
int codim_orbit(const Tableau& t, const std::vector<WeightedUnit>& point, Group group);

}  // namespace wsec
