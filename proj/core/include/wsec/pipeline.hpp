#pragma once

// Full verification of one composition, and sweeps over all compositions of
// each n up to a bound.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsec/construction.hpp"
#include "wsec/invariants.hpp"
#include "wsec/poly.hpp"
#include "wsec/tableau.hpp"

namespace wsec {

struct VerifyOptions {
  /// Largest minor whose generic determinant is expanded; bigger ones are skipped.
  int det_size_bound = kDefaultDetSizeBound;
};

/// Reads WS_DET_BOUND; returns fallback when unset. Throws invalid_input on
/// a malformed value.
int det_size_bound_from_env(int fallback);

struct PairReport {
  NeighborPair pair;
  int size = 0;
  int degree_formula = 0;
  /// Empty when the generic determinant was skipped.
  std::optional<int> degree_observed;
  std::optional<Polynomial> invariant;
  Polynomial restriction;
  int sign = 0;
  std::optional<MatrixUnit> coordinate;
  bool nilfibre_zero = false;
  bool p1 = false;
  bool p2 = false;
  bool degree_skipped = false;
};

struct CompositionReport {
  CompositionReport(Composition c, LineSet ls) : composition(std::move(c)), lines(std::move(ls)) {}

  Composition composition;
  LineSet lines;
  Section section;
  int g = 0;
  int separation_rank = 0;
  int expected_rank = 0;
  int separation_rank_leftmost = 0;
  int expected_rank_leftmost = 0;
  int density_dim = 0;
  int dim_m = 0;
  std::vector<PairReport> pairs;
  /// Check name -> passed.
  std::map<std::string, bool> checks;
  std::vector<std::string> failures;
  int skipped = 0;

  bool passed() const noexcept { return failures.empty(); }
};

CompositionReport verify_composition(const Composition& c, const VerifyOptions& options = {});

struct SweepResult {
  /// All compositions of 1..n_max, grouped by n, each group in lexicographic order.
  std::vector<CompositionReport> reports;
  int failed = 0;
  int skipped = 0;
};

inline constexpr int kMaxSweepN = 12;

/// workers = 0 picks the hardware concurrency. on_done, when set, is called
/// from worker threads after each composition.
SweepResult run_sweep(int n_max, const VerifyOptions& options = {}, unsigned workers = 0,
                      const std::function<void(const CompositionReport&)>& on_done = {});

}  // namespace wsec
