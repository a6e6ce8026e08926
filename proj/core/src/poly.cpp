#include "wsec/poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "wsec/error.hpp"

namespace wsec {

Monomial Monomial::variable(const MatrixUnit& v, int exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(const MatrixUnit& v) const noexcept {
  for (const auto& f : factors_) {
    if (f.first == v) return f.second;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::constant(const Integer& c) { return term(c, Monomial{}); }

Polynomial Polynomial::variable(const MatrixUnit& v) { return term(1, Monomial::variable(v)); }

Polynomial Polynomial::term(const Integer& c, const Monomial& m) {
  Polynomial p;
  p.add_term(c, m);
  return p;
}

void Polynomial::add_term(const Integer& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<Integer> Polynomial::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

std::vector<MatrixUnit> Polynomial::variables() const {
  std::vector<MatrixUnit> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Monomial*, const Integer*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first->degree() > b.first->degree();
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : order) {
    const bool negative = *c < 0;
    const Integer magnitude = negative ? Integer(-*c) : *c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (magnitude != 1 || m->is_one()) body = magnitude.str();
    for (const auto& [v, e] : m->factors()) {
      if (!body.empty()) body += '*';
      body += wsec::to_string(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial piece = Polynomial::constant(c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        kept = kept * Monomial::variable(v, e);
        continue;
      }
      for (int k = 0; k < e && !piece.is_zero(); ++k) piece *= it->second;
    }
    if (piece.is_zero()) continue;
    out += piece * Polynomial::term(1, kept);
  }
  return out;
}

Polynomial homogeneous_component(const Polynomial& p, int degree) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == degree) out.add_term(c, m);
  }
  return out;
}

Polynomial top_term(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::undefined_grading, "zero polynomial has no top term");
  return homogeneous_component(p, p.degree());
}

SymbolicMatrix::SymbolicMatrix(int size) : size_(size) {
  if (size < 1) throw Error(Errc::invalid_input, "matrix size must be positive");
  entries_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
}

std::size_t SymbolicMatrix::index(int row, int col) const {
  if (row < 0 || col < 0 || row >= size_ || col >= size_) {
    throw Error(Errc::invalid_input, "matrix index out of range");
  }
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) +
         static_cast<std::size_t>(col);
}

int SymbolicMatrix::nonzeros_in_row(int row) const {
  int count = 0;
  for (int c = 0; c < size_; ++c) count += (*this)(row, c).is_zero() ? 0 : 1;
  return count;
}

namespace {

class MemoDet {
 public:
  MemoDet(const SymbolicMatrix& m, std::vector<int> rows) : m_(m), rows_(std::move(rows)) {}

  // Determinant of the submatrix on rows_[popcount(used)..] and the columns
  // not in `used`.
  const Polynomial& minor(std::uint64_t used) {
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    const int k = std::popcount(used);
    Polynomial value;
    if (k == m_.size()) {
      value = Polynomial::constant(1);
    } else {
      const int row = rows_[static_cast<std::size_t>(k)];
      int free_index = 0;
      for (int c = 0; c < m_.size(); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (used & bit) continue;
        const Polynomial& entry = m_(row, c);
        if (!entry.is_zero()) {
          const Polynomial& sub = minor(used | bit);
          if (!sub.is_zero()) {
            Polynomial product = entry * sub;
            if (free_index % 2 == 0) {
              value += product;
            } else {
              value -= product;
            }
          }
        }
        ++free_index;
      }
    }
    return memo_.emplace(used, std::move(value)).first->second;
  }

 private:
  const SymbolicMatrix& m_;
  std::vector<int> rows_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

Polynomial det(const SymbolicMatrix& m) {
  if (m.size() > 64) throw Error(Errc::resource_limit, "determinant size exceeds 64");
  std::vector<int> rows(static_cast<std::size_t>(m.size()));
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<int> weight(rows.size());
  for (int r = 0; r < m.size(); ++r) weight[static_cast<std::size_t>(r)] = m.nonzeros_in_row(r);
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) {
    return weight[static_cast<std::size_t>(a)] < weight[static_cast<std::size_t>(b)];
  });
  for (int w : weight) {
    if (w == 0) return Polynomial{};
  }
  MemoDet expansion(m, rows);
  Polynomial value = expansion.minor(0);
  if (permutation_sign(rows) < 0) value = -value;
  return value;
}

}  // namespace wsec
