#pragma once

// JSON documents for line sets, verification reports and sweeps. Keys are
// sorted and lines ordered by (from, to), so equal inputs give equal bytes.

#include <string>

#include <nlohmann/json.hpp>

#include "wsec/construction.hpp"
#include "wsec/pipeline.hpp"

namespace wsec {

inline constexpr const char* kSchema = "ws-report/1";

nlohmann::json to_json(const LineSet& ls);
nlohmann::json to_json(const PairReport& pr);
nlohmann::json to_json(const CompositionReport& r);
nlohmann::json to_json(const SweepResult& s, int n_max);

/// Two-space indentation and a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace wsec
