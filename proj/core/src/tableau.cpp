#include "wsec/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "wsec/error.hpp"

namespace wsec {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::invalid_input, "empty composition");
  offsets_.reserve(parts_.size());
  for (int p : parts_) {
    if (p < 1) throw Error(Errc::invalid_input, "composition parts must be positive");
    offsets_.push_back(n_);
    n_ += p;
    max_part_ = std::max(max_part_, p);
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw Error(Errc::invalid_input, "malformed composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::part(int v) const {
  if (v < 1 || v > length()) throw Error(Errc::invalid_input, "column index out of range");
  return parts_[v - 1];
}

int Composition::offset(int v) const {
  if (v < 1 || v > length() + 1) throw Error(Errc::invalid_input, "column index out of range");
  return v == length() + 1 ? n_ : offsets_[v - 1];
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::string to_string(const MatrixUnit& u) {
  return "x[" + std::to_string(u.i) + "," + std::to_string(u.j) + "]";
}

Tableau::Tableau(Composition c) : composition_(std::move(c)) {
  boxes_.reserve(composition_.n());
  for (int v = 1; v <= composition_.length(); ++v) {
    for (int u = 1; u <= composition_.part(v); ++u) {
      boxes_.push_back(Box{u, v, u + composition_.offset(v)});
    }
  }
}

bool Tableau::has_box(int row, int col) const {
  return col >= 1 && col <= columns() && row >= 1 && row <= column_height(col);
}

int Tableau::entry(int row, int col) const {
  if (!has_box(row, col)) throw Error(Errc::invalid_input, "no such box");
  return row + composition_.offset(col);
}

Box Tableau::box(int entry) const {
  if (entry < 1 || entry > n()) {
    throw Error(Errc::invalid_input, "entry " + std::to_string(entry) + " outside [1," +
                                         std::to_string(n()) + "]");
  }
  return boxes_[entry - 1];
}

std::vector<Box> Tableau::row(int u) const {
  std::vector<Box> out;
  for (int v = 1; v <= columns(); ++v) {
    if (has_box(u, v)) out.push_back(Box{u, v, entry(u, v)});
  }
  return out;
}

std::vector<int> Tableau::column(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= column_height(v); ++u) out.push_back(entry(u, v));
  return out;
}

Tableau build_tableau(const Composition& c) { return Tableau(c); }

std::vector<NeighborPair> neighboring_pairs(const Tableau& t) {
  std::vector<NeighborPair> out;
  for (int v = 1; v <= t.columns(); ++v) {
    const int s = t.column_height(v);
    for (int w = v + 1; w <= t.columns(); ++w) {
      if (t.column_height(w) == s) {
        out.push_back(NeighborPair{v, w, s});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NeighborPair& a, const NeighborPair& b) {
    return a.height != b.height ? a.height < b.height : a.left < b.left;
  });
  return out;
}

bool is_neighboring(const Tableau& t, const NeighborPair& p) {
  if (p.left < 1 || p.right > t.columns() || p.left >= p.right) return false;
  if (t.column_height(p.left) != p.height || t.column_height(p.right) != p.height) return false;
  for (int w = p.left + 1; w < p.right; ++w) {
    if (t.column_height(w) == p.height) return false;
  }
  return true;
}

bool in_nilradical(const Tableau& t, const MatrixUnit& u) {
  return t.column_of(u.i) < t.column_of(u.j);
}

std::vector<MatrixUnit> nilradical_basis(const Tableau& t) {
  std::vector<MatrixUnit> out;
  for (int i = 1; i <= t.n(); ++i) {
    for (int j = 1; j <= t.n(); ++j) {
      if (t.column_of(i) < t.column_of(j)) out.push_back(MatrixUnit{i, j});
    }
  }
  return out;
}

int nilradical_dimension(const Composition& c) {
  int squares = 0;
  for (int p : c.parts()) squares += p * p;
  return (c.n() * c.n() - squares) / 2;
}

namespace {

void require_neighboring(const Tableau& t, const NeighborPair& p) {
  if (!is_neighboring(t, p)) {
    throw Error(Errc::invalid_input, "columns (" + std::to_string(p.left) + "," +
                                         std::to_string(p.right) + ") are not neighbouring");
  }
}

}  // namespace

int minor_size(const Tableau& t, const NeighborPair& p) {
  require_neighboring(t, p);
  return t.composition().offset(p.right + 1) - t.composition().offset(p.left + 1);
}

int bs_degree(const Tableau& t, const NeighborPair& p) {
  require_neighboring(t, p);
  int d = 0;
  for (int i = p.left + 1; i <= p.right; ++i) d += std::min(p.height, t.column_height(i));
  return d;
}

int supplementary_degree(const Composition& c) {
  const auto& n = c.parts();
  const int r = c.length();
  if (r < 2 || n.front() != n.back()) {
    throw Error(Errc::invalid_input, "supplementary invariant needs n_1 = n_r with r >= 2");
  }
  for (int i = 1; i + 1 < r; ++i) {
    if (n[i] == n.front()) {
      throw Error(Errc::invalid_input, "an interior column has height n_1");
    }
  }
  int d = 0;
  for (int i = 0; i + 1 < r; ++i) d += std::min(n[i], n.front());
  return d;
}

int gap_count(const Composition& c) {
  std::vector<int> distinct = c.parts();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return c.max_part() - static_cast<int>(distinct.size());
}

namespace {

void extend(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    extend(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw Error(Errc::invalid_input, "n must be positive");
  std::vector<Composition> out;
  std::vector<int> prefix;
  extend(n, prefix, out);
  return out;
}

}  // namespace wsec
