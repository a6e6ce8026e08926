#pragma once

// Minors attached to neighbouring columns and their evaluations: the generic
// invariant on the identity translate 1 + m, and its restrictions to the
// section e + V and to E.

#include <optional>
#include <vector>

#include "wsec/construction.hpp"
#include "wsec/poly.hpp"
#include "wsec/tableau.hpp"

namespace wsec {

/// Row/column bookkeeping of the minor bounded by a neighbouring pair.
struct MinorSpec {
  NeighborPair pair;
  /// m_{v,v'}.
  int size = 0;
  /// d_{v,v'}, degree of the leading term.
  int degree = 0;
  /// I = [n^v + 1, n^{v'}].
  std::vector<int> rows;
  /// J = [s + n^v + 1, s + n^{v'}].
  std::vector<int> cols;
  /// L: entries in rows > s strictly between the columns.
  std::vector<int> translated;
};

/// What goes on a diagonal position (l, l) of the minor.
enum class Translate {
  /// 1 on every diagonal position: evaluation on 1 + m.
  identity,
  /// 1 on the positions of L only, 0 on the other diagonal positions.
  support,
  /// The coordinate x_{l,l} itself.
  symbolic,
};

MinorSpec minor_spec(const Tableau& t, const NeighborPair& p);

struct Minor {
  MinorSpec spec;
  SymbolicMatrix matrix;
};

/// Rows I, columns J; entry (i, j) is x_{i,j} for x_{i,j} in m, the diagonal
/// value for i = j, and 0 otherwise.
Minor build_minor(const Tableau& t, const NeighborPair& p, Translate diagonal = Translate::identity);

inline constexpr int kDefaultDetSizeBound = 8;

/// Top term of det on 1 + m with every m-coordinate symbolic.
/// Throws resource_limit when the minor is larger than size_bound.
Polynomial generic_invariant(const Tableau& t, const NeighborPair& p,
                             int size_bound = kDefaultDetSizeBound);

/// Leading term of the minor evaluated on e + V: e-coordinates set to 1,
/// V-coordinates kept, everything else 0. Computed without expanding the
/// generic minor: diagonal positions stay symbolic, the terms of diagonal
/// degree |L| are kept and the diagonal is then set to 1.
/// Throws section_defect unless the value is +-(product of distinct V-coordinates).
Polynomial restrict_to_section(const Tableau& t, const MinorSpec& ms, const Section& sec);

/// Same leading term evaluated on E (V-coordinates set to 0). Throws
/// nilfibre_violation when it does not vanish.
Polynomial restrict_to_E(const Tableau& t, const MinorSpec& ms, const Section& sec);

/// det of the support-translated minor on e + V (1 on L, e -> 1, V kept).
Polynomial restrict_on_support(const Tableau& t, const MinorSpec& ms, const Section& sec);

struct SignedCoordinate {
  int sign = 1;
  MatrixUnit coordinate;
};

/// Recognises +-x_{i,j}.
std::optional<SignedCoordinate> as_signed_coordinate(const Polynomial& p);

}  // namespace wsec
