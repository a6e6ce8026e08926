#pragma once

// The three-step line construction producing e + V.
//
// Step 1 joins horizontally adjacent boxes, step 2 labels every line 1 except
// one 0 per neighbouring pair, and step 3 works down the rows gating 0-lines
// and rerouting row lines until every neighbouring pair is joined by a unique
// disjoint family of composite lines carrying exactly one 0.

#include <optional>
#include <string_view>
#include <vector>

#include "wsec/tableau.hpp"

namespace wsec {

enum class LabelMode { leftmost, rightmost };

std::string_view to_string(LabelMode mode) noexcept;
LabelMode parse_label_mode(std::string_view text);

/// A directed line between two boxes, identified by their entries.
struct Line {
  int from = 0;
  int to = 0;
  int label = 1;
  bool gated = false;
  /// Row-stage of step 3 that gated the line; 0 when ungated.
  int gated_at = 0;
  /// Row-stage of step 3 that drew the line; 0 for the step-1 lines.
  int stage = 0;

  MatrixUnit unit() const noexcept { return MatrixUnit{from, to}; }
  friend bool operator==(const Line&, const Line&) = default;
};

enum class Step { horizontal = 1, labelled = 2, moved = 3 };

class LineSet {
 public:
  explicit LineSet(Tableau t) : tableau_(std::move(t)) {}

  const Tableau& tableau() const noexcept { return tableau_; }
  /// Sorted by (from, to); at most one line per ordered pair of boxes.
  const std::vector<Line>& lines() const noexcept { return lines_; }
  Step step() const noexcept { return step_; }
  LabelMode mode() const noexcept { return mode_; }
  /// Number of step-3 row-stages applied so far.
  int rows_done() const noexcept { return rows_done_; }

  const Line* find(int from, int to) const;

  void add(Line line);
  void remove(int from, int to);
  Line& at(int from, int to);
  const Line& at(int from, int to) const;
  void set_step(Step s) noexcept { step_ = s; }
  void set_mode(LabelMode m) noexcept { mode_ = m; }
  void set_rows_done(int rows) noexcept { rows_done_ = rows; }

 private:
  Tableau tableau_;
  std::vector<Line> lines_;
  Step step_ = Step::horizontal;
  LabelMode mode_ = LabelMode::rightmost;
  int rows_done_ = 0;
};

LineSet step1(const Tableau& t);

/// Requires a step-1 line set.
LineSet step2(const LineSet& ls, LabelMode mode);

/// Applies row-stages rows_done()+1 .. through_row (default: all rows).
/// Requires a rightmost-labelled step-2 (or partially moved) line set;
/// throws invalid_state otherwise.
LineSet step3(const LineSet& ls, std::optional<int> through_row = std::nullopt);

/// Ungated 0-lines with both ends in columns [left_col, right_col] and both
/// ends in rows <= max_row, ordered by source column.
std::vector<Line> ungated_zero_lines_between(const LineSet& ls, int left_col, int right_col,
                                             int max_row);

/// Lines that may take part in a composite family for the pair: both ends in
/// rows 1..height and columns left..right, not gated at a stage <= height.
std::vector<Line> usable_lines(const LineSet& ls, const NeighborPair& p);

struct CompositeFamily {
  /// One path per top-to-bottom box of the left column, as entries.
  std::vector<std::vector<int>> paths;
  /// sigma[i-1] is the row reached in the right column from row i.
  std::vector<int> sigma;
  std::vector<Line> lines;
};

/// Finds the unique box-disjoint family of composite lines joining the two
/// columns and covering rows 1..s between them. Throws p1_violation when no
/// family exists and p1_uniqueness_violation when more than one does.
CompositeFamily verify_P1(const LineSet& ls, const NeighborPair& p);

/// True iff the P1 family uses exactly one 0-labelled line.
bool verify_P2(const LineSet& ls, const NeighborPair& p);

struct Section {
  /// Matrix units of 1-lines.
  std::vector<MatrixUnit> e;
  /// Matrix units of 0-lines, gated ones included.
  std::vector<MatrixUnit> V;
};

/// Requires a labelled line set (step 2 or 3).
Section extract_section(const LineSet& ls);

/// step1 -> step2 -> step3 as far as `step` asks.
LineSet construct(const Composition& c, Step step, LabelMode mode = LabelMode::rightmost);

}  // namespace wsec
