#pragma once

/// \file cli.hpp
/// Command-line surface.  Verbs: build, classes, chartable, irreps,
/// iso, embed, verify-paper, export.  Group ids come from a fixed
/// registry; unknown ids are rejected before any computation starts.
/// Exit codes: 0 success, 1 usage error, 2 when verify-paper records a
/// mismatch (documented paper defects alone still exit 0).

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "character_table.hpp"
#include "cpt/models.hpp"
#include "cpt/verify.hpp"
#include "json_io.hpp"
#include "render.hpp"
#include "subgroup_search.hpp"

namespace cptrep {

/// Stable group ids accepted by every verb.
inline const std::vector<std::string>& cli_group_ids() {
  static const std::vector<std::string> ids{"Q",         "Z2",  "Z2^3",     "D4",
                                            "C4xZ2",     "G_psi_hat", "G_A", "G_psi_eq",
                                            "G_QED",     "D4xZ2"};
  return ids;
}

namespace cli_detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_known_id(const std::string& id) {
  for (const auto& known : cli_group_ids())
    if (known == id) return;
  std::string msg = "unknown group id '" + id + "'; known ids:";
  for (const auto& known : cli_group_ids()) msg += " " + known;
  throw UsageError(msg);
}

}  // namespace cli_detail

inline GroupPtr cli_build_group(const std::string& id) {
  cli_detail::require_known_id(id);
  if (id == "Q") return cpt::quaternion_group();
  if (id == "Z2") return cpt::z2_group();
  if (id == "Z2^3") return cpt::z2_cubed_group();
  if (id == "D4") return cpt::d4_group();
  if (id == "C4xZ2") return cpt::c4_x_z2().group;
  if (id == "D4xZ2") return cpt::d4_x_z2().group;
  if (id == "G_psi_hat") return cpt::psi_hat_model().group;
  if (id == "G_A") return cpt::g_a_model().group;
  if (id == "G_psi_eq") return cpt::psi_eq_model().group;
  return cpt::qed_model().group;  // G_QED
}

/// Constructive irreducible families; groups outside the modeled list
/// have none (their tables still come from the chartable verb).
inline std::optional<std::vector<Representation>> cli_build_irreps(const std::string& id) {
  cli_detail::require_known_id(id);
  if (id == "Q") return cpt::quaternion_irreps(cpt::quaternion_group());
  if (id == "Z2") return cpt::z2_irreps(cpt::z2_group());
  if (id == "G_psi_hat") return cpt::irreps_g_psi_hat(cpt::psi_hat_model());
  if (id == "G_A") return cpt::irreps_g_a(cpt::g_a_model());
  if (id == "G_psi_eq") return cpt::irreps_g_psi_eq(cpt::psi_eq_model());
  if (id == "G_QED") return cpt::irreps_qed(cpt::qed_model());
  return std::nullopt;
}

namespace cli_detail {

inline Json classes_json(const std::string& id, const FiniteGroup& g) {
  Json classes = Json::array();
  for (const auto& c : conjugacy_classes(g)) {
    Json members = Json::array();
    for (ElementId x : c.members) members.push_back(g.label(x));
    classes.push_back(Json{{"label", "[" + g.label(c.representative) + "]"},
                           {"size", c.size()},
                           {"representative", g.label(c.representative)},
                           {"members", std::move(members)}});
  }
  return Json{{"group", id}, {"classes", std::move(classes)}};
}

inline Json irreps_json(const std::string& id, const std::vector<Representation>& reps) {
  const FiniteGroup& g = *reps.front().group();
  Json labels = Json::array();
  for (ElementId x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  Json list = Json::array();
  for (const auto& r : reps) {
    Json mats = Json::array();
    for (ElementId x = 0; x < g.order(); ++x) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < r.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < r.dim(); ++j) row.push_back(to_json(r.at(x).at(i, j)));
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    list.push_back(Json{{"name", r.name()}, {"dim", r.dim()}, {"matrices", std::move(mats)}});
  }
  return Json{{"group", id}, {"labels", std::move(labels)}, {"irreps", std::move(list)}};
}

inline Json hom_json(const GroupHom& hom) {
  Json map = Json::object();
  for (ElementId x = 0; x < hom.source->order(); ++x)
    map[hom.source->label(x)] = hom.target->label(hom.map[x]);
  return map;
}

inline std::string hom_text(const GroupHom& hom) {
  std::string out;
  for (ElementId x = 0; x < hom.source->order(); ++x)
    out += "  " + hom.source->label(x) + " -> " + hom.target->label(hom.map[x]) + "\n";
  return out;
}

inline std::string report_text(const cpt::DiscrepancyReport& report) {
  std::string out;
  for (const auto& f : report.findings) {
    switch (f.verdict) {
      case cpt::Verdict::match:
        out += "match                   " + f.location + ": " + f.computed + "\n";
        break;
      case cpt::Verdict::paper_defect_confirmed:
        out += "paper-defect-confirmed  " + f.location + ": printed " + f.expected +
               ", corrected " + f.computed + "\n";
        break;
      case cpt::Verdict::mismatch:
        out += "mismatch                " + f.location + ": expected " + f.expected +
               ", computed " + f.computed + "\n";
        break;
    }
  }
  out += std::to_string(report.count(cpt::Verdict::match)) + " match, " +
         std::to_string(report.count(cpt::Verdict::paper_defect_confirmed)) +
         " paper-defect-confirmed, " + std::to_string(report.count(cpt::Verdict::mismatch)) +
         " mismatch\n";
  return out;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact finite-group engine for the CPT groups of QED", "cptrep"};
  app.require_subcommand(1);

  std::string format;
  std::string output_path;
  std::string id1, id2;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-f,--format", format, "output format: text, json, csv or latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    sub->add_option("-o,--output", output_path, "write to this file instead of standard output");
  };

  auto* build = app.add_subcommand("build", "construct a group and print it");
  build->add_option("group", id1, "group id")->required();
  common(build);
  auto* classes = app.add_subcommand("classes", "conjugacy classes of a group");
  classes->add_option("group", id1, "group id")->required();
  common(classes);
  auto* chartable = app.add_subcommand("chartable", "character table (class-algebra route)");
  chartable->add_option("group", id1, "group id")->required();
  common(chartable);
  auto* irreps = app.add_subcommand("irreps", "constructive irreducible representations");
  irreps->add_option("group", id1, "group id")->required();
  common(irreps);
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two groups");
  iso->add_option("first", id1, "group id")->required();
  iso->add_option("second", id2, "group id")->required();
  common(iso);
  auto* embed = app.add_subcommand("embed", "decide embeddability of the first group into the second");
  embed->add_option("first", id1, "group id")->required();
  embed->add_option("second", id2, "group id")->required();
  common(embed);
  auto* verify = app.add_subcommand("verify-paper", "recompute and classify every published claim");
  common(verify);
  auto* export_cmd = app.add_subcommand("export", "write a group as JSON");
  export_cmd->add_option("group", id1, "group id")->required();
  common(export_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  if (format.empty()) format = verb == "export" ? "json" : "text";
  const RenderFormat fmt = *parse_render_format(format);

  std::string payload;
  int exit_code = 0;
  try {
    auto unsupported = [&]() -> std::string {
      throw cli_detail::UsageError("verb '" + verb + "' does not support " + format + " output");
    };

    if (verb == "build") {
      GroupPtr g = cli_build_group(id1);
      payload = fmt == RenderFormat::text  ? group_text(*g)
                : fmt == RenderFormat::json ? to_json(*g).dump(2) + "\n"
                : fmt == RenderFormat::csv  ? cayley_csv(*g)
                                            : unsupported();
    } else if (verb == "classes") {
      GroupPtr g = cli_build_group(id1);
      payload = fmt == RenderFormat::text  ? classes_text(*g)
                : fmt == RenderFormat::json ? cli_detail::classes_json(id1, *g).dump(2) + "\n"
                : fmt == RenderFormat::csv  ? classes_csv(*g)
                                            : classes_latex(*g);
    } else if (verb == "chartable") {
      CharacterTable t = character_table(cli_build_group(id1));
      payload = fmt == RenderFormat::text  ? render_text(t)
                : fmt == RenderFormat::json ? to_json(t).dump(2) + "\n"
                : fmt == RenderFormat::csv  ? render_csv(t)
                                            : render_latex(t);
    } else if (verb == "irreps") {
      auto reps = cli_build_irreps(id1);
      if (!reps)
        throw cli_detail::UsageError("no constructive irreducible family for '" + id1 +
                                     "'; use chartable for its characters");
      payload = fmt == RenderFormat::text  ? irreps_text(*reps)
                : fmt == RenderFormat::json ? cli_detail::irreps_json(id1, *reps).dump(2) + "\n"
                                            : unsupported();
    } else if (verb == "iso") {
      GroupPtr a = cli_build_group(id1);
      GroupPtr b = cli_build_group(id2);
      auto hom = is_isomorphic(a, b);
      // Isomorphic groups share their table; only compute both tables
      // when the groups came apart.
      bool tmatch = hom.has_value() ||
                    tables_match(character_table(a), character_table(b)).has_value();
      if (fmt == RenderFormat::json) {
        Json j{{"isomorphic", hom.has_value()}, {"tables_match", tmatch}};
        j["map"] = hom ? cli_detail::hom_json(*hom) : Json();
        payload = j.dump(2) + "\n";
      } else if (fmt == RenderFormat::text) {
        payload = hom ? "isomorphic\n" + cli_detail::hom_text(*hom)
                      : tmatch ? "not isomorphic; character tables match\n"
                               : "not isomorphic; character tables differ\n";
      } else {
        unsupported();
      }
    } else if (verb == "embed") {
      GroupPtr h = cli_build_group(id1);
      GroupPtr g = cli_build_group(id2);
      auto hom = embeds(h, g);
      if (fmt == RenderFormat::json) {
        Json j{{"embeds", hom.has_value()}};
        j["map"] = hom ? cli_detail::hom_json(*hom) : Json();
        payload = j.dump(2) + "\n";
      } else if (fmt == RenderFormat::text) {
        payload = hom ? "embeds\n" + cli_detail::hom_text(*hom) : "no embedding\n";
      } else {
        unsupported();
      }
    } else if (verb == "verify-paper") {
      cpt::DiscrepancyReport report = cpt::verify_paper();
      if (fmt == RenderFormat::json) payload = to_json(report).dump(2) + "\n";
      else if (fmt == RenderFormat::text) payload = cli_detail::report_text(report);
      else unsupported();
      if (report.count(cpt::Verdict::mismatch) > 0) exit_code = 2;
    } else {  // export
      if (fmt != RenderFormat::json)
        throw cli_detail::UsageError("export writes JSON; pass --format json or omit the flag");
      payload = to_json(*cli_build_group(id1)).dump(2) + "\n";
    }
  } catch (const cli_detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!output_path.empty()) {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << output_path << "' for writing\n";
      return 1;
    }
    file << payload;
    if (!file) {
      err << "error: failed writing '" << output_path << "'\n";
      return 1;
    }
  } else {
    out << payload;
  }
  return exit_code;
}

}  // namespace cptrep
