#include <doctest.h>

#include "oracles.hpp"
#include "wsec/error.hpp"
#include "wsec/poly.hpp"

using namespace wsec;

namespace {

Polynomial x(int i, int j) { return Polynomial::variable(MatrixUnit{i, j}); }
Polynomial c(int v) { return Polynomial::constant(v); }

}  // namespace

TEST_CASE("arithmetic and rendering") {
  const Polynomial p = x(1, 2) * x(2, 3) - x(1, 3) * x(2, 2);
  CHECK(p.to_string() == "x[1,2]*x[2,3] - x[1,3]*x[2,2]");
  CHECK(p.degree() == 2);
  CHECK(p.term_count() == 2);
  CHECK((p - p).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial().to_string() == "0");
  CHECK((x(1, 2) * x(1, 2)).to_string() == "x[1,2]^2");
  CHECK((c(3) * x(1, 2) - c(1)).to_string() == "3*x[1,2] - 1");
  CHECK(c(5).constant_value() == Integer(5));
  CHECK_FALSE(x(1, 2).constant_value().has_value());
  CHECK((-x(1, 2)).to_string() == "-x[1,2]");
}

TEST_CASE("coefficients do not overflow") {
  Polynomial p = c(1);
  for (int k = 0; k < 100; ++k) p *= c(3);
  Integer want = 1;
  for (int k = 0; k < 100; ++k) want *= 3;
  CHECK(p.constant_value() == want);
}

TEST_CASE("substitution") {
  CHECK(substitute(x(3, 4) * x(2, 6), {{MatrixUnit{3, 4}, c(1)}}) == x(2, 6));
  const Polynomial q = x(2, 4) * x(3, 5) - x(2, 5) * x(3, 4);
  CHECK(substitute(q, {{MatrixUnit{2, 5}, c(0)}, {MatrixUnit{3, 4}, c(0)}}) == x(2, 4) * x(3, 5));
  CHECK(substitute(x(1, 2), {{MatrixUnit{1, 2}, x(3, 4) + c(1)}}) == x(3, 4) + c(1));
}

TEST_CASE("the cubic invariant restricts to x[4,6]") {
  const Polynomial cubic = x(1, 2) * x(2, 4) * x(4, 6) + x(1, 3) * x(3, 4) * x(4, 6) +
                           x(1, 2) * x(2, 5) * x(5, 6) + x(1, 3) * x(3, 5) * x(5, 6);
  Assignment a;
  for (MatrixUnit u : {MatrixUnit{1, 2}, MatrixUnit{2, 4}}) a[u] = c(1);
  for (MatrixUnit u : {MatrixUnit{1, 3}, MatrixUnit{2, 5}, MatrixUnit{3, 4}, MatrixUnit{5, 6}}) a[u] = c(0);
  a[MatrixUnit{3, 5}] = x(3, 5);
  CHECK(substitute(cubic, a) == x(4, 6));
}

TEST_CASE("top term") {
  CHECK(top_term(c(1) + x(1, 2) + x(1, 2) * x(2, 3)) == x(1, 2) * x(2, 3));
  CHECK(top_term(c(5)) == c(5));
  CHECK_THROWS_AS(top_term(Polynomial()), Error);
  try {
    top_term(Polynomial());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::undefined_grading);
  }
  CHECK(homogeneous_component(c(1) + x(1, 2) + x(2, 3), 1) == x(1, 2) + x(2, 3));
}

TEST_CASE("small determinants") {
  SymbolicMatrix m(2);
  m.set(0, 0, x(1, 2));
  m.set(0, 1, x(1, 3));
  m.set(1, 0, x(2, 2));
  m.set(1, 1, x(2, 3));
  CHECK(det(m) == x(1, 2) * x(2, 3) - x(1, 3) * x(2, 2));

  for (int size = 1; size <= 7; ++size) {
    SymbolicMatrix id(size);
    for (int k = 0; k < size; ++k) id.set(k, k, c(1));
    CHECK(det(id) == c(1));
  }

  SymbolicMatrix swap(2);
  swap.set(0, 1, c(1));
  swap.set(1, 0, c(1));
  CHECK(det(swap) == c(-1));

  SymbolicMatrix zero_row(3);
  zero_row.set(0, 0, x(1, 1));
  zero_row.set(2, 2, x(3, 3));
  CHECK(det(zero_row).is_zero());
  CHECK_THROWS_AS(SymbolicMatrix(0), Error);
  CHECK_THROWS_AS(m(2, 0), Error);
}

TEST_CASE("determinant agrees with the Leibniz expansion on random matrices") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int s = size(rng);
    const SymbolicMatrix m = oracle::random_symbolic(rng, s, 3);
    REQUIRE(det(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("determinant is multiplicative on block upper-triangular matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = size(rng);
    const int b = size(rng);
    const SymbolicMatrix A = oracle::random_symbolic(rng, a, 3);
    const SymbolicMatrix B = oracle::random_symbolic(rng, b, 3);
    const SymbolicMatrix C = oracle::random_symbolic(rng, std::max(a, b), 3);
    SymbolicMatrix M(a + b);
    for (int r = 0; r < a; ++r) {
      for (int k = 0; k < a; ++k) M.set(r, k, A(r, k));
      for (int k = 0; k < b; ++k) M.set(r, a + k, C(r % C.size(), k % C.size()));
    }
    for (int r = 0; r < b; ++r) {
      for (int k = 0; k < b; ++k) M.set(a + r, a + k, B(r, k));
    }
    REQUIRE(det(M) == det(A) * det(B));
  }
}

TEST_CASE("substitutions of disjoint variables commute") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const SymbolicMatrix m = oracle::random_symbolic(rng, 3, 3);
    const Polynomial p = det(m);
    Assignment first{{MatrixUnit{1, 1}, c(coef(rng))}, {MatrixUnit{1, 2}, x(3, 3) + c(coef(rng))}};
    Assignment second{{MatrixUnit{2, 1}, c(coef(rng))}, {MatrixUnit{2, 2}, x(1, 3)}};
    Assignment both = first;
    both.insert(second.begin(), second.end());
    const Polynomial ab = substitute(substitute(p, first), second);
    const Polynomial ba = substitute(substitute(p, second), first);
    CHECK(ab == ba);
    CHECK(ab == substitute(p, both));
  }
}
