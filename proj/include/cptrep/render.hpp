#pragma once

/// \file render.hpp
/// Plain-text, CSV and LaTeX renderings of groups, class lists and
/// character tables.  Text tables carry the class sizes in the column
/// headers ("2[iota]") so a table can be compared against a printed one
/// at a glance.  All output is deterministic.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "character_table.hpp"
#include "finite_group.hpp"
#include "representation.hpp"

namespace cptrep {

enum class RenderFormat { text, json, csv, latex };

inline std::optional<RenderFormat> parse_render_format(std::string_view s) {
  if (s == "text") return RenderFormat::text;
  if (s == "json") return RenderFormat::json;
  if (s == "csv") return RenderFormat::csv;
  if (s == "latex") return RenderFormat::latex;
  return std::nullopt;
}

namespace render_detail {

/// RFC-4180 style: quote when the field contains a comma, quote or
/// newline, doubling embedded quotes.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

/// Escapes LaTeX specials for text-mode cells (labels and row names).
inline std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      case '&': case '%': case '$': case '#': case '{': case '}':
        out += '\\';
        [[fallthrough]];
      default: out += c;
    }
  }
  return out;
}

/// Left-pads cell grids into aligned columns: the first column is
/// left-aligned (row names), the rest right-aligned, two spaces apart.
inline std::string aligned_grid(const std::vector<std::vector<std::string>>& grid) {
  std::vector<std::size_t> width;
  for (const auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j >= width.size()) width.resize(j + 1, 0);
      width[j] = std::max(width[j], row[j].size());
    }
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == 0) {
        line += row[j];
        line.append(width[j] - row[j].size(), ' ');
      } else {
        line += "  ";
        line.append(width[j] - row[j].size(), ' ');
        line += row[j];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline std::vector<std::string> class_headers(const CharacterTable& t) {
  std::vector<std::string> out;
  for (const auto& c : t.classes())
    out.push_back(std::to_string(c.size()) + "[" + t.group()->label(c.representative) + "]");
  return out;
}

}  // namespace render_detail

// ---- Character tables.

inline std::string render_text(const CharacterTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  for (const auto& h : render_detail::class_headers(t)) header.push_back(h);
  grid.push_back(std::move(header));
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    std::vector<std::string> row{t.rows()[i].name};
    for (std::size_t j = 0; j < t.classes().size(); ++j) row.push_back(t.value(i, j).to_string());
    grid.push_back(std::move(row));
  }
  std::string out = render_detail::aligned_grid(grid);
  if (t.dixon_prime())
    out += "(dixon prime " + std::to_string(*t.dixon_prime()) + ")\n";
  return out;
}

inline std::string render_csv(const CharacterTable& t) {
  std::string out;
  std::vector<std::string> header{"name"};
  std::vector<std::string> sizes{"size"};
  for (const auto& c : t.classes()) {
    header.push_back("[" + t.group()->label(c.representative) + "]");
    sizes.push_back(std::to_string(c.size()));
  }
  out += render_detail::csv_line(header);
  out += render_detail::csv_line(sizes);
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    std::vector<std::string> row{t.rows()[i].name};
    for (std::size_t j = 0; j < t.classes().size(); ++j) row.push_back(t.value(i, j).to_string());
    out += render_detail::csv_line(row);
  }
  return out;
}

inline std::string render_latex(const CharacterTable& t) {
  using render_detail::latex_escape;
  std::string out = "\\begin{tabular}{l|" + std::string(t.classes().size(), 'r') + "}\n";
  for (const auto& h : render_detail::class_headers(t)) out += " & " + latex_escape(h);
  out += " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    out += latex_escape(t.rows()[i].name);
    for (std::size_t j = 0; j < t.classes().size(); ++j)
      out += " & $" + t.value(i, j).to_latex() + "$";
    out += " \\\\\n";
  }
  return out + "\\end{tabular}\n";
}

// ---- Class lists.

inline std::string classes_text(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  std::string out = std::to_string(classes.size()) + " classes\n";
  for (const auto& c : classes) {
    out += std::to_string(c.size()) + "[" + g.label(c.representative) + "]:";
    for (ElementId x : c.members) out += " " + g.label(x);
    out += "\n";
  }
  return out;
}

inline std::string classes_csv(const FiniteGroup& g) {
  std::string out = render_detail::csv_line({"representative", "size", "members"});
  for (const auto& c : conjugacy_classes(g)) {
    std::string members;
    for (ElementId x : c.members) {
      if (!members.empty()) members += ' ';
      members += g.label(x);
    }
    out += render_detail::csv_line(
        {g.label(c.representative), std::to_string(c.size()), members});
  }
  return out;
}

inline std::string classes_latex(const FiniteGroup& g) {
  using render_detail::latex_escape;
  std::string out = "\\begin{tabular}{l|r|l}\nclass & size & members \\\\\n\\hline\n";
  for (const auto& c : conjugacy_classes(g)) {
    out += "$[" + latex_escape(g.label(c.representative)) + "]$ & " + std::to_string(c.size()) +
           " &";
    for (ElementId x : c.members) out += " " + latex_escape(g.label(x));
    out += " \\\\\n";
  }
  return out + "\\end{tabular}\n";
}

// ---- Groups.

inline std::string group_text(const FiniteGroup& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  out += "identity " + g.label(g.identity()) + "\n";
  out += "generators:";
  for (ElementId x : g.generators()) out += " " + g.label(x);
  out += "\nelements:";
  for (ElementId x = 0; x < g.order(); ++x) out += " " + g.label(x);
  return out + "\n";
}

/// Full Cayley table, one CSV row per left factor.
inline std::string cayley_csv(const FiniteGroup& g) {
  std::vector<std::string> header{"*"};
  for (ElementId x = 0; x < g.order(); ++x) header.push_back(g.label(x));
  std::string out = render_detail::csv_line(header);
  for (ElementId a = 0; a < g.order(); ++a) {
    std::vector<std::string> row{g.label(a)};
    for (ElementId b = 0; b < g.order(); ++b) row.push_back(g.label(g.mul(a, b)));
    out += render_detail::csv_line(row);
  }
  return out;
}

// ---- Representation lists.

inline std::string irreps_text(const std::vector<Representation>& reps) {
  std::string out;
  for (const auto& r : reps) {
    const FiniteGroup& g = *r.group();
    out += r.name() + " (dim " + std::to_string(r.dim()) + ")\n";
    for (ElementId x = 0; x < g.order(); ++x) {
      out += "  " + g.label(x) + ": ";
      out += r.dim() == 1 ? r.at(x).at(0, 0).to_string() : r.at(x).to_string();
      out += "\n";
    }
  }
  return out;
}

}  // namespace cptrep
