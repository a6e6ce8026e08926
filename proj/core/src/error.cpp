#include "wsec/error.hpp"

namespace wsec {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::invalid_state: return "invalid-state";
    case Errc::p1_violation: return "P1-violation";
    case Errc::p1_uniqueness_violation: return "P1-uniqueness-violation";
    case Errc::section_defect: return "section-defect";
    case Errc::nilfibre_violation: return "nilfibre-violation";
    case Errc::resource_limit: return "resource-limit";
    case Errc::undefined_grading: return "undefined-grading";
    case Errc::internal_error: return "internal-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace wsec
