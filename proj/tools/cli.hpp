#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wsec/construction.hpp"
#include "wsec/render.hpp"
#include "wsec/tableau.hpp"

namespace wsec::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::optional<Composition> composition;
  int n_max = 0;
  LabelMode mode = LabelMode::rightmost;
  int stage = 3;
  Format format = Format::ascii;
  int det_size_bound = 0;
  /// Empty: construct prints to stdout, verify and sweep write to ".".
  std::filesystem::path out_dir;
  unsigned workers = 0;
};

int cmd_construct(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (WS_DET_BOUND included) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsec::cli
