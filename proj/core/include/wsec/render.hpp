#pragma once

// Text renderings of a line set: an ASCII grid, a standalone tikz-cd picture
// and an SVG drawing.

#include <string>
#include <string_view>

#include "wsec/construction.hpp"

namespace wsec {

enum class Format { ascii, json, tikz, svg };

std::string_view to_string(Format f) noexcept;
Format parse_format(std::string_view text);

/// Rows of entries with horizontal lines drawn inline, then every line, e and V.
std::string render_ascii(const LineSet& ls);

/// A standalone LaTeX document holding one tikzcd diagram. Gated lines are dashed.
std::string render_tikz(const LineSet& ls, std::string_view caption = {});

std::string render_svg(const LineSet& ls);

}  // namespace wsec
