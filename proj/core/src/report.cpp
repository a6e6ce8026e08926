#include "wsec/report.hpp"

namespace wsec {

using nlohmann::json;

namespace {

json units(const std::vector<MatrixUnit>& us) {
  json a = json::array();
  for (const MatrixUnit& u : us) a.push_back(to_string(u));
  return a;
}

json lines_json(const LineSet& ls) {
  json a = json::array();
  for (const Line& l : ls.lines()) {
    json o = {{"from", l.from}, {"to", l.to}, {"gated", l.gated}, {"stage", l.stage}};
    if (ls.step() != Step::horizontal) o["label"] = l.label;
    if (l.gated) o["gated_at"] = l.gated_at;
    a.push_back(std::move(o));
  }
  return a;
}

std::string_view step_name(Step s) {
  switch (s) {
    case Step::horizontal: return "step1";
    case Step::labelled: return "step2";
    case Step::moved: return "step3";
  }
  return "?";
}

}  // namespace

json to_json(const LineSet& ls) {
  const Tableau& t = ls.tableau();
  json boxes = json::array();
  for (int k = 1; k <= t.n(); ++k) {
    const Box b = t.box(k);
    boxes.push_back({{"entry", b.entry}, {"row", b.row}, {"col", b.col}});
  }
  json j = {{"schema", kSchema},
            {"composition", t.composition().parts()},
            {"step", step_name(ls.step())},
            {"boxes", std::move(boxes)},
            {"lines", lines_json(ls)}};
  if (ls.step() != Step::horizontal) {
    j["mode"] = to_string(ls.mode());
    const Section s = extract_section(ls);
    j["e"] = units(s.e);
    j["V"] = units(s.V);
  }
  if (ls.step() == Step::moved) j["stages_done"] = ls.rows_done();
  return j;
}

json to_json(const PairReport& pr) {
  json j = {{"pair", {pr.pair.left, pr.pair.right}},
            {"height", pr.pair.height},
            {"size", pr.size},
            {"degree_formula", pr.degree_formula},
            {"degree_observed", nullptr},
            {"restriction", pr.restriction.to_string()},
            {"sign", pr.sign},
            {"coordinate", nullptr},
            {"nilfibre_zero", pr.nilfibre_zero},
            {"p1", pr.p1},
            {"p2", pr.p2},
            {"skipped", pr.degree_skipped}};
  if (pr.degree_observed) j["degree_observed"] = *pr.degree_observed;
  if (pr.invariant) j["invariant"] = pr.invariant->to_string();
  if (pr.coordinate) j["coordinate"] = to_string(*pr.coordinate);
  return j;
}

json to_json(const CompositionReport& r) {
  json pairs = json::array();
  for (const PairReport& pr : r.pairs) pairs.push_back(to_json(pr));
  return {{"schema", kSchema},
          {"composition", r.composition.parts()},
          {"g", r.g},
          {"lines", lines_json(r.lines)},
          {"e", units(r.section.e)},
          {"V", units(r.section.V)},
          {"pairs", std::move(pairs)},
          {"separation_rank", r.separation_rank},
          {"expected_rank", r.expected_rank},
          {"separation_rank_leftmost", r.separation_rank_leftmost},
          {"expected_rank_leftmost", r.expected_rank_leftmost},
          {"density_dim", r.density_dim},
          {"dim_m", r.dim_m},
          {"pass_flags", r.checks},
          {"failures", r.failures},
          {"skipped", r.skipped},
          {"passed", r.passed()}};
}

json to_json(const SweepResult& s, int n_max) {
  json rows = json::array();
  for (const CompositionReport& r : s.reports) {
    json degrees = json::array();
    for (const PairReport& pr : r.pairs) degrees.push_back(pr.degree_formula);
    rows.push_back({{"composition", r.composition.parts()},
                    {"g", r.g},
                    {"lines", r.lines.lines().size()},
                    {"degrees", std::move(degrees)},
                    {"pass_flags", r.checks},
                    {"failures", r.failures},
                    {"skipped", r.skipped},
                    {"passed", r.passed()}});
  }
  return {{"schema", kSchema},
          {"n_max", n_max},
          {"compositions", s.reports.size()},
          {"failed", s.failed},
          {"skipped", s.skipped},
          {"rows", std::move(rows)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace wsec
