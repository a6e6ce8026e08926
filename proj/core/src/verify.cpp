#include "wsec/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wsec/error.hpp"

namespace wsec {

Weight line_weight(const Tableau& t, const MatrixUnit& u) {
  if (u.i < 1 || u.j > t.n() || u.i >= u.j) {
    throw Error(Errc::invalid_input, "line weight needs 1 <= i < j <= n");
  }
  Weight w(static_cast<std::size_t>(t.n() - 1), 0);
  for (int k = u.i; k < u.j; ++k) w[static_cast<std::size_t>(k - 1)] = 1;
  return w;
}

int coroot_pairing(int k, const Weight& w) {
  const auto at = [&](int idx) {
    return idx >= 1 && idx <= static_cast<int>(w.size()) ? w[static_cast<std::size_t>(idx - 1)] : 0;
  };
  return 2 * at(k) - at(k - 1) - at(k + 1);
}

int cartan_product(const Weight& a, const Weight& b) {
  int sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0) sum += a[k] * coroot_pairing(static_cast<int>(k) + 1, b);
  }
  return sum;
}

namespace {

void require_horizontal(const LineSet& ls) {
  if (ls.step() != Step::labelled) {
    throw Error(Errc::invalid_state, "expected a step-2 line set");
  }
}

}  // namespace

SeparationMatrix separation_matrix(const LineSet& ls) {
  require_horizontal(ls);
  const Tableau& t = ls.tableau();
  SeparationMatrix s;
  for (const Line& l : ls.lines()) {
    if (l.label == 1) s.lines.push_back(l);
  }
  for (const Box& b : t.boxes()) {
    if (b.row < t.column_height(b.col)) s.coroots.push_back(b.entry);
  }
  s.values = IntMatrix(s.lines.size(), s.coroots.size());
  for (std::size_t r = 0; r < s.lines.size(); ++r) {
    const Weight w = line_weight(t, s.lines[r]);
    for (std::size_t c = 0; c < s.coroots.size(); ++c) s.values(r, c) = coroot_pairing(s.coroots[c], w);
  }
  return s;
}

int separation_rank(const LineSet& ls) {
  return static_cast<int>(exact_rank(separation_matrix(ls).values));
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> triangular_witness(
    const SeparationMatrix& s) {
  const std::size_t rows = s.values.rows();
  const std::size_t cols = s.values.cols();
  std::vector<bool> row_alive(rows, true);
  std::vector<bool> col_alive(cols, true);
  std::vector<std::pair<std::size_t, std::size_t>> peeled;
  bool progress = true;
  while (peeled.size() < rows && progress) {
    progress = false;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!col_alive[c]) continue;
      std::size_t count = 0;
      std::size_t hit = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (row_alive[r] && s.values(r, c) != 0) {
          ++count;
          hit = r;
        }
      }
      if (count == 0) {
        col_alive[c] = false;
      } else if (count == 1 && (s.values(hit, c) == 1 || s.values(hit, c) == -1)) {
        peeled.emplace_back(hit, c);
        row_alive[hit] = false;
        col_alive[c] = false;
        progress = true;
      }
    }
  }
  if (peeled.size() != rows) return std::nullopt;
  return peeled;
}

std::vector<int> root_system_type(const LineSet& ls) {
  const Tableau& t = ls.tableau();
  std::vector<int> ranks;
  std::vector<Weight> all;
  for (int u = 1; u <= t.height(); ++u) {
    const auto row = t.row(u);
    std::vector<Weight> simple;
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      if (!ls.find(row[k].entry, row[k + 1].entry)) {
        throw Error(Errc::invalid_state, "root system type needs the horizontal lines");
      }
      simple.push_back(line_weight(t, MatrixUnit{row[k].entry, row[k + 1].entry}));
    }
    // Consecutive lines share a box: Gram matrix of A_{len} in Bourbaki form.
    for (std::size_t a = 0; a < simple.size(); ++a) {
      for (std::size_t b = 0; b < simple.size(); ++b) {
        const int expected = a == b ? 2 : (a + 1 == b || b + 1 == a ? -1 : 0);
        if (cartan_product(simple[a], simple[b]) != expected) {
          throw Error(Errc::internal_error, "row " + std::to_string(u) + " is not of type A");
        }
      }
    }
    for (const Weight& w : all) {
      for (const Weight& x : simple) {
        if (cartan_product(w, x) != 0) {
          throw Error(Errc::internal_error, "lines on distinct rows are not orthogonal");
        }
      }
    }
    all.insert(all.end(), simple.begin(), simple.end());
    if (!simple.empty()) ranks.push_back(static_cast<int>(simple.size()));
  }
  IntMatrix m;
  for (const Weight& w : all) m.append_row(std::vector<Integer>(w.begin(), w.end()));
  if (!all.empty() && exact_rank(m) != all.size()) {
    throw Error(Errc::internal_error, "horizontal line weights are dependent");
  }
  std::sort(ranks.rbegin(), ranks.rend());
  return ranks;
}

GradingElement grading_element(const LineSet& ls) {
  const Tableau& t = ls.tableau();
  const int n = t.n();
  std::vector<std::vector<std::pair<int, int>>> adjacent(static_cast<std::size_t>(n + 1));
  for (const Line& l : ls.lines()) {
    adjacent[static_cast<std::size_t>(l.from)].emplace_back(l.to, 1);
    adjacent[static_cast<std::size_t>(l.to)].emplace_back(l.from, -1);
  }
  GradingElement h;
  h.diagonal.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int root = 1; root <= n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (const auto& [b, step] : adjacent[static_cast<std::size_t>(a)]) {
        const long long want = h.diagonal[static_cast<std::size_t>(a - 1)] + step;
        if (!seen[static_cast<std::size_t>(b)]) {
          seen[static_cast<std::size_t>(b)] = true;
          h.diagonal[static_cast<std::size_t>(b - 1)] = want;
          stack.push_back(b);
        } else if (h.diagonal[static_cast<std::size_t>(b - 1)] != want) {
          throw Error(Errc::internal_error, "grading equations are inconsistent");
        }
      }
    }
  }
  return h;
}

namespace {

using SparseMatrix = std::map<MatrixUnit, Integer>;

// Basis of p' (or p) as sparse matrices.
std::vector<SparseMatrix> parabolic_basis(const Tableau& t, Group group) {
  std::vector<SparseMatrix> basis;
  const int n = t.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && t.column_of(i) <= t.column_of(j)) basis.push_back({{MatrixUnit{i, j}, 1}});
    }
  }
  if (group == Group::P) {
    for (int i = 1; i <= n; ++i) basis.push_back({{MatrixUnit{i, i}, 1}});
  } else {
    for (int i = 1; i < n; ++i) {
      if (t.column_of(i) == t.column_of(i + 1)) {
        basis.push_back({{MatrixUnit{i, i}, 1}, {MatrixUnit{i + 1, i + 1}, -1}});
      }
    }
  }
  return basis;
}

SparseMatrix bracket(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out;
  auto add = [&](const MatrixUnit& u, const Integer& v) {
    auto [it, inserted] = out.try_emplace(u, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [ua, va] : a) {
    for (const auto& [ub, vb] : b) {
      if (ua.j == ub.i) add(MatrixUnit{ua.i, ub.j}, va * vb);
      if (ub.j == ua.i) add(MatrixUnit{ub.i, ua.j}, -(va * vb));
    }
  }
  return out;
}

class NilradicalCoordinates {
 public:
  explicit NilradicalCoordinates(const Tableau& t) : t_(t) {
    for (const MatrixUnit& u : nilradical_basis(t)) index_.emplace(u, index_.size());
  }

  std::size_t dimension() const { return index_.size(); }

  std::vector<Integer> vector(const SparseMatrix& x) const {
    std::vector<Integer> out(index_.size());
    for (const auto& [u, v] : x) {
      auto it = index_.find(u);
      if (it == index_.end()) throw Error(Errc::internal_error, "bracket left the nilradical");
      out[it->second] = v;
    }
    return out;
  }

 private:
  const Tableau& t_;
  std::map<MatrixUnit, std::size_t> index_;
};

}  // namespace

DensityResult density_check(const LineSet& ls) {
  const Tableau& t = ls.tableau();
  if (ls.step() == Step::horizontal) throw Error(Errc::invalid_state, "density needs labelled lines");
  NilradicalCoordinates coords(t);
  DensityResult result;
  result.dim_m = static_cast<int>(coords.dimension());
  if (result.dim_m == 0) {
    result.dense = true;
    return result;
  }
  SparseMatrix point;
  for (const Line& l : ls.lines()) point[l.unit()] = 1;
  IntMatrix span;
  for (const SparseMatrix& b : parabolic_basis(t, Group::P_derived)) {
    span.append_row(coords.vector(bracket(b, point)));
  }
  for (const MatrixUnit& v : extract_section(ls).V) span.append_row(coords.vector({{v, 1}}));
  result.dimension = static_cast<int>(exact_rank(std::move(span)));
  result.dense = result.dimension == result.dim_m;
  return result;
}

int codim_orbit(const Tableau& t, const std::vector<WeightedUnit>& point, Group group) {
  NilradicalCoordinates coords(t);
  SparseMatrix x;
  for (const WeightedUnit& w : point) {
    if (!in_nilradical(t, w.unit)) {
      throw Error(Errc::invalid_input, to_string(w.unit) + " is not in the nilradical");
    }
    x[w.unit] += w.coefficient;
  }
  if (coords.dimension() == 0) return 0;
  IntMatrix span;
  for (const SparseMatrix& b : parabolic_basis(t, group)) span.append_row(coords.vector(bracket(b, x)));
  return static_cast<int>(coords.dimension()) - static_cast<int>(exact_rank(std::move(span)));
}

}  // namespace wsec
