#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsec {

/// Failure categories surfaced by the engine.
enum class Errc {
  invalid_input,
  invalid_state,
  p1_violation,
  p1_uniqueness_violation,
  section_defect,
  nilfibre_violation,
  resource_limit,
  undefined_grading,
  internal_error,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wsec
