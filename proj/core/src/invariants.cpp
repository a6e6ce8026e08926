#include "wsec/invariants.hpp"

#include <algorithm>
#include <set>

#include "wsec/error.hpp"

namespace wsec {

MinorSpec minor_spec(const Tableau& t, const NeighborPair& p) {
  MinorSpec ms;
  ms.pair = p;
  ms.size = minor_size(t, p);
  ms.degree = bs_degree(t, p);
  const Composition& c = t.composition();
  for (int i = c.offset(p.left) + 1; i <= c.offset(p.right); ++i) ms.rows.push_back(i);
  for (int j = p.height + c.offset(p.left) + 1; j <= p.height + c.offset(p.right); ++j) {
    ms.cols.push_back(j);
  }
  for (int v = p.left + 1; v < p.right; ++v) {
    for (int u = p.height + 1; u <= t.column_height(v); ++u) ms.translated.push_back(t.entry(u, v));
  }
  std::sort(ms.translated.begin(), ms.translated.end());
  return ms;
}

namespace {

template <typename OffDiagonal>
SymbolicMatrix fill(const Tableau& t, const MinorSpec& ms, Translate diagonal, OffDiagonal entry) {
  SymbolicMatrix m(ms.size);
  for (int r = 0; r < ms.size; ++r) {
    for (int c = 0; c < ms.size; ++c) {
      const int i = ms.rows[static_cast<std::size_t>(r)];
      const int j = ms.cols[static_cast<std::size_t>(c)];
      if (i == j) {
        switch (diagonal) {
          case Translate::identity:
            m.set(r, c, Polynomial::constant(1));
            break;
          case Translate::support:
            if (std::binary_search(ms.translated.begin(), ms.translated.end(), i)) {
              m.set(r, c, Polynomial::constant(1));
            }
            break;
          case Translate::symbolic:
            m.set(r, c, Polynomial::variable(MatrixUnit{i, i}));
            break;
        }
      } else if (t.column_of(i) < t.column_of(j)) {
        m.set(r, c, entry(MatrixUnit{i, j}));
      }
    }
  }
  return m;
}

// Value of a nilradical coordinate on e + V (keep_v) or on E (!keep_v).
struct SectionPoint {
  std::set<MatrixUnit> e;
  std::set<MatrixUnit> v;
  bool keep_v = true;

  SectionPoint(const Section& sec, bool keep) : e(sec.e.begin(), sec.e.end()), v(sec.V.begin(), sec.V.end()), keep_v(keep) {}

  Polynomial operator()(const MatrixUnit& u) const {
    if (e.count(u)) return Polynomial::constant(1);
    if (keep_v && v.count(u)) return Polynomial::variable(u);
    return Polynomial{};
  }
};

Polynomial leading_term_on(const Tableau& t, const MinorSpec& ms, const SectionPoint& point) {
  const SymbolicMatrix m = fill(t, ms, Translate::symbolic, point);
  const Polynomial full = det(m);
  const int diagonal_degree = static_cast<int>(ms.translated.size());
  Polynomial kept;
  Assignment ones;
  for (const auto& [mono, coeff] : full.terms()) {
    int d = 0;
    for (const auto& [var, e] : mono.factors()) {
      if (var.i == var.j) {
        d += e;
        ones[var] = Polynomial::constant(1);
      }
    }
    if (d == diagonal_degree) kept.add_term(coeff, mono);
  }
  return substitute(kept, ones);
}

std::string pair_name(const NeighborPair& p) {
  return "(" + std::to_string(p.left) + "," + std::to_string(p.right) + ")";
}

}  // namespace

Minor build_minor(const Tableau& t, const NeighborPair& p, Translate diagonal) {
  MinorSpec ms = minor_spec(t, p);
  SymbolicMatrix m =
      fill(t, ms, diagonal, [](const MatrixUnit& u) { return Polynomial::variable(u); });
  return Minor{std::move(ms), std::move(m)};
}

Polynomial generic_invariant(const Tableau& t, const NeighborPair& p, int size_bound) {
  const int size = minor_size(t, p);
  if (size > size_bound) {
    throw Error(Errc::resource_limit, "minor of size " + std::to_string(size) +
                                          " exceeds the determinant bound " +
                                          std::to_string(size_bound));
  }
  return top_term(det(build_minor(t, p, Translate::identity).matrix));
}

Polynomial restrict_to_section(const Tableau& t, const MinorSpec& ms, const Section& sec) {
  const Polynomial value = leading_term_on(t, ms, SectionPoint(sec, true));
  const std::set<MatrixUnit> v(sec.V.begin(), sec.V.end());
  bool ok = value.term_count() == 1;
  if (ok) {
    const auto& [mono, coeff] = *value.terms().begin();
    ok = (coeff == 1 || coeff == -1) && !mono.is_one();
    for (const auto& [var, e] : mono.factors()) ok = ok && e == 1 && v.count(var) == 1;
  }
  if (!ok) {
    throw Error(Errc::section_defect, "minor of pair " + pair_name(ms.pair) +
                                          " restricts to " + value.to_string());
  }
  return value;
}

Polynomial restrict_to_E(const Tableau& t, const MinorSpec& ms, const Section& sec) {
  Polynomial value = leading_term_on(t, ms, SectionPoint(sec, false));
  if (!value.is_zero()) {
    throw Error(Errc::nilfibre_violation, "minor of pair " + pair_name(ms.pair) +
                                              " is " + value.to_string() + " on E");
  }
  return value;
}

Polynomial restrict_on_support(const Tableau& t, const MinorSpec& ms, const Section& sec) {
  return det(fill(t, ms, Translate::support, SectionPoint(sec, true)));
}

std::optional<SignedCoordinate> as_signed_coordinate(const Polynomial& p) {
  if (p.term_count() != 1) return std::nullopt;
  const auto& [mono, coeff] = *p.terms().begin();
  if (coeff != 1 && coeff != -1) return std::nullopt;
  if (mono.factors().size() != 1 || mono.factors().front().second != 1) return std::nullopt;
  return SignedCoordinate{coeff == 1 ? 1 : -1, mono.factors().front().first};
}

}  // namespace wsec
