#include "wsec/construction.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "wsec/error.hpp"

namespace wsec {

std::string_view to_string(LabelMode mode) noexcept {
  return mode == LabelMode::leftmost ? "leftmost" : "rightmost";
}

LabelMode parse_label_mode(std::string_view text) {
  if (text == "leftmost") return LabelMode::leftmost;
  if (text == "rightmost") return LabelMode::rightmost;
  throw Error(Errc::invalid_input, "unknown labelling mode '" + std::string(text) + "'");
}

namespace {

bool key_less(const Line& a, int from, int to) {
  return a.from != from ? a.from < from : a.to < to;
}

std::string line_name(int from, int to) {
  return "l(" + std::to_string(from) + "," + std::to_string(to) + ")";
}

}  // namespace

const Line* LineSet::find(int from, int to) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), 0,
                             [&](const Line& l, int) { return key_less(l, from, to); });
  if (it == lines_.end() || it->from != from || it->to != to) return nullptr;
  return &*it;
}

void LineSet::add(Line line) {
  if (tableau_.column_of(line.from) >= tableau_.column_of(line.to)) {
    throw Error(Errc::internal_error, line_name(line.from, line.to) + " does not go rightwards");
  }
  if (line.gated && line.label != 0) {
    throw Error(Errc::internal_error, "only 0-lines can be gated");
  }
  auto it = std::lower_bound(lines_.begin(), lines_.end(), 0,
                             [&](const Line& l, int) { return key_less(l, line.from, line.to); });
  if (it != lines_.end() && it->from == line.from && it->to == line.to) {
    throw Error(Errc::internal_error, "duplicate line " + line_name(line.from, line.to));
  }
  lines_.insert(it, line);
}

void LineSet::remove(int from, int to) {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), 0,
                             [&](const Line& l, int) { return key_less(l, from, to); });
  if (it == lines_.end() || it->from != from || it->to != to) {
    throw Error(Errc::internal_error, "no line " + line_name(from, to) + " to remove");
  }
  lines_.erase(it);
}

Line& LineSet::at(int from, int to) {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), 0,
                             [&](const Line& l, int) { return key_less(l, from, to); });
  if (it == lines_.end() || it->from != from || it->to != to) {
    throw Error(Errc::internal_error, "no line " + line_name(from, to));
  }
  return *it;
}

const Line& LineSet::at(int from, int to) const { return const_cast<LineSet*>(this)->at(from, to); }

LineSet step1(const Tableau& t) {
  LineSet ls(t);
  for (int u = 1; u <= t.height(); ++u) {
    const auto row = t.row(u);
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      ls.add(Line{row[k].entry, row[k + 1].entry, 1, false, 0, 0});
    }
  }
  ls.set_step(Step::horizontal);
  return ls;
}

namespace {

/// Boxes of row u with column in [left, right], left to right.
std::vector<Box> row_between(const Tableau& t, int u, int left, int right) {
  std::vector<Box> out;
  for (const Box& b : t.row(u)) {
    if (b.col >= left && b.col <= right) out.push_back(b);
  }
  return out;
}

}  // namespace

LineSet step2(const LineSet& ls, LabelMode mode) {
  if (ls.step() != Step::horizontal) {
    throw Error(Errc::invalid_state, "labelling needs a step-1 line set");
  }
  LineSet out = ls;
  const Tableau& t = out.tableau();
  for (const NeighborPair& p : neighboring_pairs(t)) {
    const auto path = row_between(t, p.height, p.left, p.right);
    // Row `height` has a box in both columns, so the path has >= 2 boxes.
    const std::size_t k = mode == LabelMode::rightmost ? path.size() - 2 : 0;
    out.at(path[k].entry, path[k + 1].entry).label = 0;
  }
  out.set_mode(mode);
  out.set_step(Step::labelled);
  return out;
}

std::vector<Line> ungated_zero_lines_between(const LineSet& ls, int left_col, int right_col,
                                             int max_row) {
  const Tableau& t = ls.tableau();
  std::vector<Line> out;
  for (const Line& l : ls.lines()) {
    if (l.label != 0 || l.gated) continue;
    const Box a = t.box(l.from);
    const Box b = t.box(l.to);
    if (a.col < left_col || b.col > right_col) continue;
    if (a.row > max_row || b.row > max_row) continue;
    out.push_back(l);
  }
  std::sort(out.begin(), out.end(), [&](const Line& x, const Line& y) {
    const int cx = t.column_of(x.from);
    const int cy = t.column_of(y.from);
    return cx != cy ? cx < cy : t.column_of(x.to) < t.column_of(y.to);
  });
  return out;
}

namespace {

// One row-stage of step 3 for a neighbouring pair of height i.
//
// The row-i boxes b''_1 < ... < b''_v between the columns split the columns
// into segments [b''_k, b''_{k+1}]. Every ungated 0-line of the rows above
// lies inside exactly one segment. A segment holding lines (b_p,b'_p) ..
// (b_q,b'_q) loses its row-i line, which is replaced by the chain
//   b''_k -> b'_p,  b_p -> b'_{p+1}, ..., b_{q-1} -> b'_q,  b_q -> b''_{k+1}
// so every box that lost a line through gating or removal regains one in the
// same direction. The closing join inherits the 0 when it replaces the pair's
// own row-i 0-line (the last segment under rightmost labelling).
void move_pair(LineSet& ls, const NeighborPair& p, int stage) {
  const Tableau& t = ls.tableau();
  const int i = p.height;
  const auto zeros = ungated_zero_lines_between(ls, p.left, p.right, i - 1);
  if (zeros.empty()) return;

  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const int cb = t.column_of(zeros[j].from);
    const int cb_end = t.column_of(zeros[j].to);
    if (cb >= cb_end || (j + 1 < zeros.size() && cb_end > t.column_of(zeros[j + 1].from))) {
      throw Error(Errc::internal_error, "ungated 0-lines overlap between columns " +
                                            std::to_string(p.left) + " and " +
                                            std::to_string(p.right));
    }
  }

  for (const Line& z : zeros) {
    Line& l = ls.at(z.from, z.to);
    l.gated = true;
    l.gated_at = stage;
  }

  const auto path = row_between(t, i, p.left, p.right);
  const std::size_t segments = path.size() - 1;
  std::vector<std::vector<Line>> in_segment(segments);
  for (const Line& z : zeros) {
    const int a = t.column_of(z.from);
    const int b = t.column_of(z.to);
    bool placed = false;
    for (std::size_t k = 0; k < segments && !placed; ++k) {
      if (path[k].col <= a && b <= path[k + 1].col) {
        in_segment[k].push_back(z);
        placed = true;
      }
    }
    if (!placed) {
      throw Error(Errc::internal_error,
                  "0-line " + std::to_string(z.from) + "-" + std::to_string(z.to) +
                      " crosses a column taller than " + std::to_string(i));
    }
  }

  for (std::size_t k = 0; k < segments; ++k) {
    const auto& seg = in_segment[k];
    if (seg.empty()) continue;
    const int left_box = path[k].entry;
    const int right_box = path[k + 1].entry;
    const int removed_label = ls.at(left_box, right_box).label;
    ls.remove(left_box, right_box);
    ls.add(Line{left_box, seg.front().to, 1, false, 0, stage});
    for (std::size_t j = 0; j + 1 < seg.size(); ++j) {
      ls.add(Line{seg[j].from, seg[j + 1].to, 1, false, 0, stage});
    }
    ls.add(Line{seg.back().from, right_box, removed_label, false, 0, stage});
  }
}

}  // namespace

LineSet step3(const LineSet& ls, std::optional<int> through_row) {
  if (ls.step() == Step::horizontal || ls.mode() != LabelMode::rightmost) {
    throw Error(Errc::invalid_state, "step 3 needs a rightmost-labelled step-2 line set");
  }
  LineSet out = ls;
  const Tableau& t = out.tableau();
  const int last = std::min(through_row.value_or(t.height()), t.height());
  const auto pairs = neighboring_pairs(t);
  for (int i = out.rows_done() + 1; i <= last; ++i) {
    for (const NeighborPair& p : pairs) {
      if (p.height == i) move_pair(out, p, i);
    }
    out.set_rows_done(i);
  }
  out.set_step(Step::moved);
  return out;
}

std::vector<Line> usable_lines(const LineSet& ls, const NeighborPair& p) {
  const Tableau& t = ls.tableau();
  std::vector<Line> out;
  for (const Line& l : ls.lines()) {
    if (l.gated && l.gated_at <= p.height) continue;
    const Box a = t.box(l.from);
    const Box b = t.box(l.to);
    if (a.row > p.height || b.row > p.height) continue;
    if (a.col < p.left || b.col > p.right) continue;
    out.push_back(l);
  }
  return out;
}

namespace {

struct MatchingSearch {
  // Region boxes needing an outgoing line, in column order.
  std::vector<int> sources;
  std::map<int, std::vector<const Line*>> outgoing;
  std::map<int, bool> target_used;
  std::vector<const Line*> chosen;
  std::vector<const Line*> first_solution;
  int found = 0;

  void run(std::size_t k) {
    if (found >= 2) return;
    if (k == sources.size()) {
      if (++found == 1) first_solution = chosen;
      return;
    }
    for (const Line* l : outgoing[sources[k]]) {
      auto it = target_used.find(l->to);
      if (it == target_used.end() || it->second) continue;
      it->second = true;
      chosen.push_back(l);
      run(k + 1);
      chosen.pop_back();
      it->second = false;
      if (found >= 2) return;
    }
  }
};

}  // namespace

CompositeFamily verify_P1(const LineSet& ls, const NeighborPair& p) {
  const Tableau& t = ls.tableau();
  if (!is_neighboring(t, p)) throw Error(Errc::invalid_input, "pair is not neighbouring");

  const auto lines = usable_lines(ls, p);
  MatchingSearch search;
  for (int u = 1; u <= p.height; ++u) {
    for (const Box& b : row_between(t, u, p.left, p.right)) {
      if (b.col != p.right) search.sources.push_back(b.entry);
      if (b.col != p.left) search.target_used[b.entry] = false;
    }
  }
  std::stable_sort(search.sources.begin(), search.sources.end(),
                   [&](int a, int b) { return t.column_of(a) < t.column_of(b); });
  for (const Line& l : lines) search.outgoing[l.from].push_back(&l);
  search.run(0);

  const std::string where = "pair (" + std::to_string(p.left) + "," + std::to_string(p.right) + ")";
  if (search.found == 0) throw Error(Errc::p1_violation, "no composite family for " + where);
  if (search.found > 1) {
    throw Error(Errc::p1_uniqueness_violation, "several composite families for " + where);
  }

  std::map<int, const Line*> next;
  for (const Line* l : search.first_solution) next[l->from] = l;

  CompositeFamily family;
  for (const Line* l : search.first_solution) family.lines.push_back(*l);
  std::sort(family.lines.begin(), family.lines.end(),
            [](const Line& a, const Line& b) { return key_less(a, b.from, b.to); });
  for (int u = 1; u <= p.height; ++u) {
    std::vector<int> path{t.entry(u, p.left)};
    while (t.column_of(path.back()) != p.right) path.push_back(next.at(path.back())->to);
    family.sigma.push_back(t.row_of(path.back()));
    family.paths.push_back(std::move(path));
  }
  return family;
}

bool verify_P2(const LineSet& ls, const NeighborPair& p) {
  const auto family = verify_P1(ls, p);
  return std::count_if(family.lines.begin(), family.lines.end(),
                       [](const Line& l) { return l.label == 0; }) == 1;
}

Section extract_section(const LineSet& ls) {
  if (ls.step() == Step::horizontal) {
    throw Error(Errc::invalid_state, "section needs a labelled line set");
  }
  Section sec;
  for (const Line& l : ls.lines()) (l.label == 1 ? sec.e : sec.V).push_back(l.unit());
  return sec;
}

LineSet construct(const Composition& c, Step step, LabelMode mode) {
  LineSet ls = step1(build_tableau(c));
  if (step == Step::horizontal) return ls;
  ls = step2(ls, mode);
  if (step == Step::labelled) return ls;
  return step3(ls);
}

}  // namespace wsec
