#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients, in the coordinates x_{i,j}, and exact symbolic determinants.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wsec/tableau.hpp"

namespace wsec {

using Integer = boost::multiprecision::cpp_int;

/// Product of variables with positive exponents, kept sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const MatrixUnit& v, int exponent = 1);

  const std::vector<std::pair<MatrixUnit, int>>& factors() const noexcept { return factors_; }
  int degree() const noexcept;
  int exponent(const MatrixUnit& v) const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<MatrixUnit, int>> factors_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer>;

  Polynomial() = default;
  static Polynomial constant(const Integer& c);
  static Polynomial variable(const MatrixUnit& v);
  static Polynomial term(const Integer& c, const Monomial& m);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::optional<Integer> constant_value() const;
  std::vector<MatrixUnit> variables() const;

  /// Deterministic rendering, e.g. "x[1,2]*x[2,3] - x[1,3]*x[2,2]".
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  void add_term(const Integer& c, const Monomial& m);

 private:
  TermMap terms_;
};

/// Partial assignment of variables; unassigned variables persist.
using Assignment = std::map<MatrixUnit, Polynomial>;

Polynomial substitute(const Polynomial& p, const Assignment& assignment);

/// Homogeneous component of maximal total degree; throws undefined_grading on 0.
Polynomial top_term(const Polynomial& p);

Polynomial homogeneous_component(const Polynomial& p, int degree);

/// Square matrix of polynomial entries (in practice constants or variables).
class SymbolicMatrix {
 public:
  explicit SymbolicMatrix(int size);

  int size() const noexcept { return size_; }
  const Polynomial& operator()(int row, int col) const { return entries_[index(row, col)]; }
  void set(int row, int col, Polynomial value) { entries_[index(row, col)] = std::move(value); }
  int nonzeros_in_row(int row) const;

 private:
  std::size_t index(int row, int col) const;

  int size_;
  std::vector<Polynomial> entries_;
};

/// Exact determinant by cofactor expansion with the sparsest rows expanded
/// first and minors memoised on their column sets. Sizes above 64 are rejected.
Polynomial det(const SymbolicMatrix& m);

}  // namespace wsec
