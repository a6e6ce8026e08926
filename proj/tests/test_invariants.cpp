#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wsec/error.hpp"
#include "wsec/invariants.hpp"

using namespace wsec;

namespace {

Polynomial x(int i, int j) { return Polynomial::variable(MatrixUnit{i, j}); }

// e -> 1, V kept, every other nilradical coordinate -> 0.
Assignment section_assignment(const Tableau& t, const Section& sec, bool keep_v) {
  Assignment a;
  for (const MatrixUnit& u : nilradical_basis(t)) a[u] = Polynomial();
  for (const MatrixUnit& u : sec.e) a[u] = Polynomial::constant(1);
  for (const MatrixUnit& u : sec.V) a[u] = keep_v ? Polynomial::variable(u) : Polynomial();
  return a;
}

}  // namespace

TEST_CASE("minor bookkeeping") {
  const Tableau a = build_tableau(Composition({2, 1, 1, 2}));
  const MinorSpec inner = minor_spec(a, NeighborPair{2, 3, 1});
  CHECK(inner.size == 1);
  CHECK(inner.degree == 1);
  CHECK(inner.rows == std::vector<int>{3});
  CHECK(inner.cols == std::vector<int>{4});
  CHECK(inner.translated.empty());
  const Minor m = build_minor(a, NeighborPair{2, 3, 1});
  CHECK(m.matrix(0, 0) == x(3, 4));

  const MinorSpec outer = minor_spec(a, NeighborPair{1, 4, 2});
  CHECK(outer.size == 4);
  CHECK(outer.degree == 4);
  CHECK(outer.translated.empty());

  const Tableau b = build_tableau(Composition({1, 2, 2, 1}));
  const Minor q = build_minor(b, NeighborPair{2, 3, 2});
  CHECK(q.spec.translated.empty());
  CHECK(q.matrix(0, 0) == x(2, 4));
  CHECK(q.matrix(0, 1) == x(2, 5));
  CHECK(q.matrix(1, 0) == x(3, 4));
  CHECK(q.matrix(1, 1) == x(3, 5));

  const MinorSpec big = minor_spec(b, NeighborPair{1, 4, 1});
  CHECK(big.size == 5);
  CHECK(big.degree == 3);
  CHECK(big.translated == std::vector<int>{3, 5});
}

TEST_CASE("|L| = size - degree for every pair up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const Composition& c : compositions_of(n)) {
      const Tableau t = build_tableau(c);
      for (const NeighborPair& p : neighboring_pairs(t)) {
        const MinorSpec ms = minor_spec(t, p);
        CHECK(static_cast<int>(ms.translated.size()) == ms.size - ms.degree);
        CHECK(static_cast<int>(ms.rows.size()) == ms.size);
        CHECK(static_cast<int>(ms.cols.size()) == ms.size);
        for (int l : ms.translated) {
          CHECK(std::count(ms.rows.begin(), ms.rows.end(), l) == 1);
          CHECK(std::count(ms.cols.begin(), ms.cols.end(), l) == 1);
        }
      }
    }
  }
}

TEST_CASE("generic invariants of (1,2,2,1)") {
  const Tableau t = build_tableau(Composition({1, 2, 2, 1}));
  CHECK(generic_invariant(t, NeighborPair{2, 3, 2}) == x(2, 4) * x(3, 5) - x(2, 5) * x(3, 4));
  const Polynomial cubic = x(1, 2) * x(2, 4) * x(4, 6) + x(1, 3) * x(3, 4) * x(4, 6) +
                           x(1, 2) * x(2, 5) * x(5, 6) + x(1, 3) * x(3, 5) * x(5, 6);
  const Polynomial got = generic_invariant(t, NeighborPair{1, 4, 1});
  CHECK((got == cubic || got == -cubic));
}

TEST_CASE("generic invariants of small cases") {
  CHECK(generic_invariant(build_tableau(Composition({1, 1})), NeighborPair{1, 2, 1}) == x(1, 2));
  const Polynomial outer = generic_invariant(build_tableau(Composition({2, 1, 1, 2})), NeighborPair{1, 4, 2});
  CHECK(outer.degree() == 4);
  CHECK(top_term(outer) == outer);
  CHECK(outer.term_count() == 8);
}

TEST_CASE("generic invariant is guarded by the size bound") {
  const Tableau t = build_tableau(Composition({1, 2, 2, 1}));
  try {
    generic_invariant(t, NeighborPair{1, 4, 1}, 4);
    FAIL("expected resource_limit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource_limit);
  }
}

TEST_CASE("restrictions on the golden examples") {
  const LineSet a3 = construct(Composition({2, 1, 1, 2}), Step::moved);
  const Tableau& ta = a3.tableau();
  const Section sa = extract_section(a3);
  CHECK(restrict_to_section(ta, minor_spec(ta, NeighborPair{2, 3, 1}), sa) == x(3, 4));
  const Polynomial outer = restrict_to_section(ta, minor_spec(ta, NeighborPair{1, 4, 2}), sa);
  CHECK((outer == x(3, 6) || outer == -x(3, 6)));
  for (const NeighborPair& p : neighboring_pairs(ta)) CHECK(restrict_to_E(ta, minor_spec(ta, p), sa).is_zero());

  const LineSet a2 = construct(Composition({2, 1, 1, 2}), Step::labelled);
  const Polynomial early = restrict_to_section(ta, minor_spec(ta, NeighborPair{1, 4, 2}), extract_section(a2));
  CHECK((early == x(2, 6) * x(3, 4) || early == -(x(2, 6) * x(3, 4))));

  const LineSet b3 = construct(Composition({1, 2, 2, 1}), Step::moved);
  const Tableau& tb = b3.tableau();
  const Section sb = extract_section(b3);
  const Polynomial q = restrict_to_section(tb, minor_spec(tb, NeighborPair{2, 3, 2}), sb);
  CHECK((q == x(3, 5) || q == -x(3, 5)));
  const Polynomial cub = restrict_to_section(tb, minor_spec(tb, NeighborPair{1, 4, 1}), sb);
  CHECK((cub == x(4, 6) || cub == -x(4, 6)));
  for (const NeighborPair& p : neighboring_pairs(tb)) CHECK(restrict_to_E(tb, minor_spec(tb, p), sb).is_zero());
}

TEST_CASE("signed coordinates") {
  CHECK(as_signed_coordinate(-x(3, 6))->sign == -1);
  CHECK(as_signed_coordinate(x(3, 6))->coordinate == MatrixUnit{3, 6});
  CHECK_FALSE(as_signed_coordinate(x(3, 6) * x(2, 6)).has_value());
  CHECK_FALSE(as_signed_coordinate(Polynomial::constant(2) * x(3, 6)).has_value());
  CHECK_FALSE(as_signed_coordinate(Polynomial()).has_value());
}

TEST_CASE("restriction equals substitution into the generic invariant") {
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& c : compositions_of(n)) {
      const LineSet ls = construct(c, Step::moved);
      const Tableau& t = ls.tableau();
      const Section sec = extract_section(ls);
      for (const NeighborPair& p : neighboring_pairs(t)) {
        const MinorSpec ms = minor_spec(t, p);
        if (ms.size > 7) continue;
        const Polynomial generic = generic_invariant(t, p);
        CHECK(substitute(generic, section_assignment(t, sec, true)) == restrict_to_section(t, ms, sec));
        CHECK(substitute(generic, section_assignment(t, sec, false)).is_zero());
      }
    }
  }
}

TEST_CASE("restrictions are distinct signed coordinates exhausting V up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const Composition& c : compositions_of(n)) {
      const LineSet ls = construct(c, Step::moved);
      const Tableau& t = ls.tableau();
      const Section sec = extract_section(ls);
      std::set<MatrixUnit> hit;
      const auto pairs = neighboring_pairs(t);
      for (const NeighborPair& p : pairs) {
        const auto sc = as_signed_coordinate(restrict_to_section(t, minor_spec(t, p), sec));
        REQUIRE(sc.has_value());
        hit.insert(sc->coordinate);
      }
      CHECK(hit.size() == pairs.size());
      CHECK(hit == std::set<MatrixUnit>(sec.V.begin(), sec.V.end()));
    }
  }
}

TEST_CASE("exactly one permutation contributes to the leading term on the section") {
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& c : compositions_of(n)) {
      const LineSet ls = construct(c, Step::moved);
      const Tableau& t = ls.tableau();
      const Section sec = extract_section(ls);
      Assignment a;
      for (const MatrixUnit& u : nilradical_basis(t)) a[u] = Polynomial();
      for (const MatrixUnit& u : sec.e) a[u] = Polynomial::constant(1);
      for (const MatrixUnit& u : sec.V) a[u] = Polynomial::variable(u);
      for (const NeighborPair& p : neighboring_pairs(t)) {
        const Minor m = build_minor(t, p, Translate::symbolic);
        const int size = m.spec.size;
        if (size > 6) continue;
        std::vector<int> perm(static_cast<std::size_t>(size));
        std::iota(perm.begin(), perm.end(), 0);
        int contributing = 0;
        do {
          Polynomial term = Polynomial::constant(1);
          int diagonal = 0;
          for (int r = 0; r < size && !term.is_zero(); ++r) {
            const int col = perm[static_cast<std::size_t>(r)];
            if (m.spec.rows[static_cast<std::size_t>(r)] == m.spec.cols[static_cast<std::size_t>(col)]) ++diagonal;
            term *= substitute(m.matrix(r, col), a);
          }
          if (!term.is_zero() && diagonal == static_cast<int>(m.spec.translated.size())) ++contributing;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK_MESSAGE(contributing == 1, c.to_string() << " pair " << p.left << "," << p.right);
      }
    }
  }
}

TEST_CASE("the minor of two same-height columns with one between is the product of the two invariants") {
  int checked = 0;
  for (int n = 3; n <= 9; ++n) {
    for (const Composition& c : compositions_of(n)) {
      const Tableau t = build_tableau(c);
      const auto pairs = neighboring_pairs(t);
      for (const NeighborPair& a : pairs) {
        for (const NeighborPair& b : pairs) {
          if (a.height != b.height || a.right != b.left) continue;
          const int s = a.height;
          const int lo = c.offset(a.left);
          const int hi = c.offset(b.right);
          const int size = hi - lo;
          if (size > 6) continue;
          SymbolicMatrix m(size);
          for (int r = 0; r < size; ++r) {
            for (int k = 0; k < size; ++k) {
              const int i = lo + 1 + r;
              const int j = s + lo + 1 + k;
              if (i == j) m.set(r, k, Polynomial::constant(1));
              else if (j <= n && in_nilradical(t, MatrixUnit{i, j})) m.set(r, k, x(i, j));
            }
          }
          const Polynomial whole = top_term(det(m));
          const Polynomial product = generic_invariant(t, a) * generic_invariant(t, b);
          CHECK_MESSAGE((whole == product || whole == -product), c.to_string());
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}
