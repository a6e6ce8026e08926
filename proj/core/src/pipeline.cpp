#include "wsec/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

#include "wsec/error.hpp"
#include "wsec/verify.hpp"

namespace wsec {

int det_size_bound_from_env(int fallback) {
  const char* raw = std::getenv("WS_DET_BOUND");
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw Error(Errc::invalid_input, "WS_DET_BOUND must be a non-negative integer, got '" +
                                         std::string(text) + "'");
  }
  return value;
}

namespace {

std::string pair_label(const NeighborPair& p) {
  return "(" + std::to_string(p.left) + "," + std::to_string(p.right) + ")";
}

class Checks {
 public:
  explicit Checks(CompositionReport& r) : r_(r) {}

  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    auto [it, inserted] = r_.checks.try_emplace(name, ok);
    if (!inserted) it->second = it->second && ok;
    if (!ok) r_.failures.push_back(detail.empty() ? name : name + ": " + detail);
  }

 private:
  CompositionReport& r_;
};

int count_label(const LineSet& ls, int label) {
  return static_cast<int>(std::count_if(ls.lines().begin(), ls.lines().end(),
                                        [&](const Line& l) { return l.label == label; }));
}

bool extremal_boxes_kept(const LineSet& before, const LineSet& after) {
  const int n = before.tableau().n();
  auto profile = [n](const LineSet& ls) {
    std::vector<std::pair<bool, bool>> has(static_cast<std::size_t>(n + 1));
    for (const Line& l : ls.lines()) {
      has[static_cast<std::size_t>(l.from)].second = true;
      has[static_cast<std::size_t>(l.to)].first = true;
    }
    return has;
  };
  const auto a = profile(before);
  const auto b = profile(after);
  for (int k = 1; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if ((!a[i].first && b[i].first) || (!a[i].second && b[i].second)) return false;
  }
  return true;
}

void check_separation(Checks& checks, const LineSet& step2_lines, int& rank, int& expected) {
  const SeparationMatrix s = separation_matrix(step2_lines);
  rank = static_cast<int>(exact_rank(s.values));
  expected = static_cast<int>(s.lines.size());
  const std::string mode(to_string(step2_lines.mode()));
  checks.record("separation_" + mode, rank == expected,
                "rank " + std::to_string(rank) + " != |K| = " + std::to_string(expected));
  checks.record("separation_witness", triangular_witness(s).has_value(),
                "no triangular witness under " + mode);
}

void verify_pair(const Tableau& t, const LineSet& ls, const Section& sec, const NeighborPair& p,
                 const VerifyOptions& options, CompositionReport& r, Checks& checks) {
  PairReport pr;
  pr.pair = p;
  const MinorSpec ms = minor_spec(t, p);
  pr.size = ms.size;
  pr.degree_formula = ms.degree;
  const std::string where = " at " + pair_label(p);

  try {
    verify_P1(ls, p);
    pr.p1 = true;
  } catch (const Error& e) {
    checks.record("p1", false, std::string(e.what()) + where);
  }
  if (pr.p1) {
    pr.p2 = verify_P2(ls, p);
    checks.record("p2", pr.p2, "family does not carry exactly one 0-line" + where);
  }
  if (pr.p1) checks.record("p1", true);

  if (ms.size <= options.det_size_bound) {
    try {
      Polynomial inv = generic_invariant(t, p, options.det_size_bound);
      pr.degree_observed = inv.degree();
      pr.invariant = std::move(inv);
      checks.record("degree", *pr.degree_observed == pr.degree_formula,
                    "observed " + std::to_string(*pr.degree_observed) + ", formula " +
                        std::to_string(pr.degree_formula) + where);
    } catch (const Error& e) {
      checks.record("degree", false, std::string(e.what()) + where);
    }
  } else {
    pr.degree_skipped = true;
    ++r.skipped;
  }

  try {
    pr.restriction = restrict_to_section(t, ms, sec);
    const auto sc = as_signed_coordinate(pr.restriction);
    if (sc) {
      pr.sign = sc->sign;
      pr.coordinate = sc->coordinate;
    }
    checks.record("restriction_single", sc.has_value(),
                  "restriction " + pr.restriction.to_string() + " is not a signed coordinate" + where);
  } catch (const Error& e) {
    checks.record("restriction_single", false, std::string(e.what()) + where);
  }

  try {
    restrict_to_E(t, ms, sec);
    pr.nilfibre_zero = true;
  } catch (const Error&) {
    pr.nilfibre_zero = false;
  }
  checks.record("nilfibre", pr.nilfibre_zero, "restriction to E does not vanish" + where);
  r.pairs.push_back(std::move(pr));
}

}  // namespace

CompositionReport verify_composition(const Composition& c, const VerifyOptions& options) {
  const Tableau t = build_tableau(c);
  const LineSet s1 = step1(t);
  const LineSet s2r = step2(s1, LabelMode::rightmost);
  const LineSet s2l = step2(s1, LabelMode::leftmost);
  CompositionReport r(c, step3(s2r));
  r.section = extract_section(r.lines);
  Checks checks(r);
  const auto pairs = neighboring_pairs(t);
  r.g = static_cast<int>(pairs.size());
  r.dim_m = nilradical_dimension(c);

  int max_part = c.max_part();
  int sum = 0;
  for (int p : c.parts()) sum += p;
  checks.record("step1_count", static_cast<int>(s1.lines().size()) == sum - max_part,
                std::to_string(s1.lines().size()) + " lines, expected " + std::to_string(sum - max_part));
  for (const LineSet* ls : {&s2r, &s2l}) {
    const std::string mode(to_string(ls->mode()));
    checks.record("zero_count", count_label(*ls, 0) == r.g,
                  std::to_string(count_label(*ls, 0)) + " 0-lines under " + mode + ", g = " +
                      std::to_string(r.g));
    const int expected_ones = (c.n() - c.length()) - gap_count(c);
    checks.record("one_count_step2", count_label(*ls, 1) == expected_ones,
                  std::to_string(count_label(*ls, 1)) + " 1-lines under " + mode + ", expected " +
                      std::to_string(expected_ones));
  }
  checks.record("zero_count", count_label(r.lines, 0) == r.g, "0-line count changed in step 3");
  checks.record("extremal_boxes", extremal_boxes_kept(s1, r.lines));

  for (const NeighborPair& p : pairs) verify_pair(t, r.lines, r.section, p, options, r, checks);
  if (pairs.empty()) {
    for (const char* name : {"p1", "p2", "degree", "restriction_single", "nilfibre"}) checks.record(name, true);
  }

  std::set<MatrixUnit> hit;
  bool distinct = true;
  for (const PairReport& pr : r.pairs) {
    if (pr.coordinate && !hit.insert(*pr.coordinate).second) distinct = false;
  }
  checks.record("restriction_distinct", distinct, "two minors restrict to the same coordinate");
  const std::set<MatrixUnit> v(r.section.V.begin(), r.section.V.end());
  checks.record("restriction_exhausts_V", hit == v && v.size() == r.pairs.size(),
                "restrictions do not exhaust V");

  check_separation(checks, s2r, r.separation_rank, r.expected_rank);
  check_separation(checks, s2l, r.separation_rank_leftmost, r.expected_rank_leftmost);

  const DensityResult d = density_check(s2r);
  r.density_dim = d.dimension;
  checks.record("density", d.dense,
                "dimension " + std::to_string(d.dimension) + " < dim m = " + std::to_string(d.dim_m));

  try {
    const GradingElement h = grading_element(s2r);
    bool ok = true;
    for (const Line& l : s2r.lines()) ok = ok && h.value_on(l.unit()) == -1;
    checks.record("grading", ok, "grading element is not -1 on every line");
  } catch (const Error& e) {
    checks.record("grading", false, e.what());
  }

  try {
    const std::vector<int> ranks = root_system_type(s2r);
    int total = 0;
    for (int k : ranks) total += k;
    checks.record("root_system", total == static_cast<int>(s1.lines().size()),
                  "component ranks do not add up to the horizontal line count");
  } catch (const Error& e) {
    checks.record("root_system", false, e.what());
  }
  return r;
}

SweepResult run_sweep(int n_max, const VerifyOptions& options, unsigned workers,
                      const std::function<void(const CompositionReport&)>& on_done) {
  if (n_max < 1 || n_max > kMaxSweepN) {
    throw Error(Errc::invalid_input, "n_max must lie in 1.." + std::to_string(kMaxSweepN));
  }
  std::vector<Composition> all;
  for (int n = 1; n <= n_max; ++n) {
    auto cs = compositions_of(n);
    all.insert(all.end(), std::make_move_iterator(cs.begin()), std::make_move_iterator(cs.end()));
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(all.size()));

  std::vector<std::optional<CompositionReport>> slots(all.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      try {
        slots[i] = verify_composition(all[i], options);
        if (on_done) on_done(*slots[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  SweepResult result;
  for (auto& slot : slots) {
    if (!slot->passed()) ++result.failed;
    result.skipped += slot->skipped;
    result.reports.push_back(std::move(*slot));
  }
  return result;
}

}  // namespace wsec
