#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>

#include "wsec/error.hpp"
#include "wsec/pipeline.hpp"
#include "wsec/report.hpp"

namespace wsec::cli {

namespace {

std::string slug(const Composition& c) {
  std::string s;
  for (int p : c.parts()) s += (s.empty() ? "" : "-") + std::to_string(p);
  return s;
}

std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name,
                                 const std::string& body) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_input, "cannot write " + path.string());
  f << body;
  return path;
}

std::string_view extension(Format f) {
  switch (f) {
    case Format::ascii: return ".txt";
    case Format::json: return ".json";
    case Format::tikz: return ".tex";
    case Format::svg: return ".svg";
  }
  return "";
}

std::string flags_summary(const CompositionReport& r) {
  std::string s;
  for (const auto& [name, ok] : r.checks) {
    if (!ok) s += (s.empty() ? "" : ",") + name;
  }
  return s.empty() ? "all" : "FAILED:" + s;
}

}  // namespace

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const LineSet ls = construct(*cfg.composition, static_cast<Step>(cfg.stage), cfg.mode);
  std::string body;
  switch (cfg.format) {
    case Format::ascii: body = render_ascii(ls); break;
    case Format::json: body = dump(to_json(ls)); break;
    case Format::tikz: body = render_tikz(ls, "step " + std::to_string(cfg.stage)); break;
    case Format::svg: body = render_svg(ls); break;
  }
  if (cfg.out_dir.empty()) {
    out << body;
  } else {
    const auto name = "construct-" + slug(*cfg.composition) + "-step" + std::to_string(cfg.stage) +
                      std::string(extension(cfg.format));
    out << write_file(cfg.out_dir, name, body).string() << '\n';
  }
  return kPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CompositionReport r = verify_composition(*cfg.composition, VerifyOptions{cfg.det_size_bound});
  const auto dir = cfg.out_dir.empty() ? std::filesystem::path(".") : cfg.out_dir;
  const auto path = write_file(dir, "verify-" + slug(r.composition) + ".json", dump(to_json(r)));
  out << "composition " << r.composition.to_string() << "  g=" << r.g << "  dim m=" << r.dim_m << '\n';
  for (const PairReport& pr : r.pairs) {
    out << "  pair (" << pr.pair.left << "," << pr.pair.right << ") size " << pr.size << " degree "
        << pr.degree_formula;
    if (pr.invariant) out << "  invariant " << pr.invariant->to_string();
    out << "  restriction " << pr.restriction.to_string() << '\n';
  }
  for (const auto& [name, ok] : r.checks) out << "  " << (ok ? "pass " : "FAIL ") << name << '\n';
  if (r.skipped) out << "  skipped " << r.skipped << " generic determinant(s) above the size bound\n";
  out << "report " << path.string() << '\n';
  for (const std::string& f : r.failures) err << "failure: " << f << '\n';
  return r.passed() ? kPass : kFail;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SweepResult s = run_sweep(cfg.n_max, VerifyOptions{cfg.det_size_bound}, cfg.workers);
  out << std::left << std::setw(28) << "composition" << std::setw(4) << "g" << std::setw(7) << "lines"
      << std::setw(20) << "degrees" << "checks\n";
  for (const CompositionReport& r : s.reports) {
    std::string degrees;
    for (const PairReport& pr : r.pairs) degrees += (degrees.empty() ? "" : ",") + std::to_string(pr.degree_formula);
    out << std::setw(28) << r.composition.to_string() << std::setw(4) << r.g << std::setw(7)
        << r.lines.lines().size() << std::setw(20) << (degrees.empty() ? "-" : degrees) << flags_summary(r)
        << '\n';
    for (const std::string& f : r.failures) err << r.composition.to_string() << ": " << f << '\n';
  }
  out << "compositions " << s.reports.size() << "  passed " << s.reports.size() - static_cast<std::size_t>(s.failed)
      << "  failed " << s.failed << "  skipped determinants " << s.skipped << '\n';
  const auto dir = cfg.out_dir.empty() ? std::filesystem::path(".") : cfg.out_dir;
  out << "report "
      << write_file(dir, "sweep-n" + std::to_string(cfg.n_max) + ".json", dump(to_json(s, cfg.n_max))).string()
      << '\n';
  return s.failed == 0 ? kPass : kFail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weierstrass sections for parabolic adjoint actions in type A", "wsec"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string composition;
  std::string mode = "rightmost";
  std::string format = "ascii";
  std::optional<int> det_bound;
  std::string out_dir;

  auto add_composition = [&](CLI::App* sub) {
    sub->add_option("-c,--composition", composition, "parts, e.g. 2,1,1,2")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--det-size-bound", det_bound, "largest generic determinant to expand")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("-o,--out-dir", out_dir, "output directory");
  };

  CLI::App* construct_cmd = app.add_subcommand("construct", "draw the lines of one composition");
  add_composition(construct_cmd);
  construct_cmd->add_option("--mode", mode, "step-2 labelling")->check(CLI::IsMember({"leftmost", "rightmost"}));
  construct_cmd->add_option("--stage", cfg.stage, "last step to apply")->check(CLI::Range(1, 3));
  construct_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"ascii", "json", "tikz", "svg"}));
  add_common(construct_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run every check on one composition");
  add_composition(verify_cmd);
  add_common(verify_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify every composition of n <= n-max");
  sweep_cmd->add_option("--n-max", cfg.n_max, "largest n")->required()->check(CLI::Range(1, kMaxSweepN));
  sweep_cmd->add_option("-j,--workers", cfg.workers, "worker threads (0: all cores)");
  add_common(sweep_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!composition.empty()) cfg.composition = Composition::parse(composition);
    cfg.mode = parse_label_mode(mode);
    if (cfg.mode == LabelMode::leftmost && cfg.stage == 3) {
      if (construct_cmd->count("--stage") > 0) {
        throw Error(Errc::invalid_input, "step 3 is defined for the rightmost labelling only");
      }
      cfg.stage = 2;
    }
    cfg.format = parse_format(format);
    cfg.det_size_bound = det_bound ? *det_bound : det_size_bound_from_env(kDefaultDetSizeBound);
    cfg.out_dir = out_dir;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (cfg.command == "construct") return cmd_construct(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    return cmd_sweep(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::invalid_input ? kUsage : kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace wsec::cli
