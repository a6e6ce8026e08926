#include "wsec/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "wsec/error.hpp"

namespace wsec {

std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::ascii: return "ascii";
    case Format::json: return "json";
    case Format::tikz: return "tikz";
    case Format::svg: return "svg";
  }
  return "?";
}

Format parse_format(std::string_view text) {
  for (Format f : {Format::ascii, Format::json, Format::tikz, Format::svg}) {
    if (text == to_string(f)) return f;
  }
  throw Error(Errc::invalid_input, "unknown format '" + std::string(text) + "'");
}

namespace {

bool labelled(const LineSet& ls) { return ls.step() != Step::horizontal; }

std::string describe(const Line& l, bool with_label) {
  std::string s = std::to_string(l.from) + " -> " + std::to_string(l.to);
  if (with_label) s += " : " + std::to_string(l.label);
  if (l.gated) s += " (gated at stage " + std::to_string(l.gated_at) + ")";
  return s;
}

std::string join_units(const std::vector<MatrixUnit>& units, std::string_view sep) {
  std::string s;
  for (std::size_t k = 0; k < units.size(); ++k) {
    if (k) s += sep;
    s += to_string(units[k]);
  }
  return s;
}

}  // namespace

std::string render_ascii(const LineSet& ls) {
  const Tableau& t = ls.tableau();
  const int width = static_cast<int>(std::to_string(t.n()).size());
  const int pitch = width + 5;
  std::ostringstream out;
  out << "composition " << t.composition().to_string() << '\n';
  for (int u = 1; u <= t.height(); ++u) {
    std::string row(static_cast<std::size_t>(pitch * t.columns()), ' ');
    auto x_of = [&](int col) { return static_cast<std::size_t>((col - 1) * pitch); };
    for (const Line& l : ls.lines()) {
      const Box a = t.box(l.from);
      const Box b = t.box(l.to);
      if (a.row != u || b.row != u) continue;
      const std::size_t lo = x_of(a.col) + static_cast<std::size_t>(width) + 1;
      const std::size_t hi = x_of(b.col) - 1;
      const char fill = l.gated ? '.' : '-';
      for (std::size_t x = lo; x < hi; ++x) row[x] = fill;
      if (labelled(ls)) row[(lo + hi) / 2] = static_cast<char>('0' + l.label);
    }
    for (const Box& b : t.row(u)) {
      const std::string e = std::to_string(b.entry);
      row.replace(x_of(b.col) + static_cast<std::size_t>(width) - e.size(), e.size(), e);
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  out << "lines:\n";
  for (const Line& l : ls.lines()) out << "  " << describe(l, labelled(ls)) << '\n';
  if (labelled(ls)) {
    const Section s = extract_section(ls);
    out << "e = " << (s.e.empty() ? "0" : join_units(s.e, " + ")) << '\n';
    out << "V = {" << join_units(s.V, ", ") << "}\n";
  }
  return out.str();
}

std::string render_tikz(const LineSet& ls, std::string_view caption) {
  const Tableau& t = ls.tableau();
  std::ostringstream out;
  out << "\\documentclass[tikz]{standalone}\n"
      << "\\usepackage{tikz-cd}\n"
      << "\\begin{document}\n"
      << "\\begin{tikzcd}[row sep=tiny, column sep=1em]\n";
  for (int u = 1; u <= t.height(); ++u) {
    for (int v = 1; v <= t.columns(); ++v) {
      if (v > 1) out << '&';
      if (!t.has_box(u, v)) continue;
      const int entry = t.entry(u, v);
      out << entry;
      for (const Line& l : ls.lines()) {
        if (l.from != entry) continue;
        const Box b = t.box(l.to);
        std::string dir(static_cast<std::size_t>(b.col - v), 'r');
        dir.append(static_cast<std::size_t>(std::abs(b.row - u)), b.row > u ? 'd' : 'u');
        out << "\\arrow[-," << dir;
        if (labelled(ls)) out << ",\"" << l.label << '"';
        if (l.gated) out << ",dashed";
        out << ']';
      }
    }
    out << "\\\\\n";
  }
  if (!caption.empty()) {
    const int mid = (t.columns() + 1) / 2;
    for (int v = 1; v <= t.columns(); ++v) {
      if (v > 1) out << '&';
      if (v == mid) out << "\\arrow[-,\"\\text{" << caption << "}\"]";
    }
    out << "\\\\\n";
  }
  out << "\\end{tikzcd}\n"
      << "\\end{document}\n";
  return out.str();
}

std::string render_svg(const LineSet& ls) {
  const Tableau& t = ls.tableau();
  constexpr int dx = 60;
  constexpr int dy = 50;
  constexpr int margin = 30;
  auto cx = [&](int col) { return margin + (col - 1) * dx; };
  auto cy = [&](int row) { return margin + (row - 1) * dy; };
  const int w = 2 * margin + (t.columns() - 1) * dx;
  const int h = 2 * margin + (std::max(t.height(), 1) - 1) * dy;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\" font-family=\"serif\" font-size=\"14\">\n";
  for (const Line& l : ls.lines()) {
    const Box a = t.box(l.from);
    const Box b = t.box(l.to);
    out << "  <line x1=\"" << cx(a.col) + 10 << "\" y1=\"" << cy(a.row) << "\" x2=\"" << cx(b.col) - 10
        << "\" y2=\"" << cy(b.row) << "\" stroke=\"black\"";
    if (l.gated) out << " stroke-dasharray=\"4 3\"";
    out << "/>\n";
    if (labelled(ls)) {
      out << "  <text x=\"" << (cx(a.col) + cx(b.col)) / 2 << "\" y=\"" << (cy(a.row) + cy(b.row)) / 2 - 5
          << "\" text-anchor=\"middle\" font-size=\"11\">" << l.label << "</text>\n";
    }
  }
  for (const Box& b : t.boxes()) {
    out << "  <text x=\"" << cx(b.col) << "\" y=\"" << cy(b.row) + 5 << "\" text-anchor=\"middle\">"
        << b.entry << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace wsec
