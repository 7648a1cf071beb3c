#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hstar/audit.hpp"
#include "hstar/mine.hpp"
#include "hstar/report.hpp"
#include "hstar/repro.hpp"

namespace hstar {

// Exit status contract: 0 success, 1 audit found counterexamples, 2 input or
// usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;

namespace cli_detail {

// HSTAR_MAX_N may lower (never raise) the enumeration cap.
inline int effective_cap(int hard_cap) {
  if (const char* env = std::getenv("HSTAR_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v < hard_cap) return static_cast<int>(v);
  }
  return hard_cap;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(ParseErrc::syntax_error, "cannot open space file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string yesno(bool v) { return v ? "yes" : "no"; }

inline void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// ---- classify --------------------------------------------------------------

inline int cmd_classify(std::ostream& out, const std::string& space_path,
                        const std::optional<std::string>& subset_arg, bool json) {
  const LabeledSpace ls = parse_space(read_file(space_path));
  if (ls.space.n() > kMaxLadderGround)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "classification enumerates all subsets and is limited to ground size " +
                            std::to_string(kMaxLadderGround));
  std::vector<Subset> subjects;
  if (subset_arg) {
    subjects.push_back(ls.subset_of_labels(split_commas(*subset_arg)));
  } else {
    for (std::uint32_t m = 0; m < ls.space.subset_count(); ++m)
      subjects.emplace_back(m, ls.space.n());
  }

  if (json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["space"] = space_to_json(ls.space, ls.labels);
    Json results = Json::array();
    for (Subset a : subjects) {
      const ClassVector cv = classify(ls.space, a);
      Json classes;
      for (int i = 0; i < kFamilyCount; ++i)
        classes[std::string(kFamilyNames[i])] = cv.flags[i];
      results.push_back({{"subset", subset_to_json(a, ls.labels)},
                         {"classes", std::move(classes)}});
    }
    doc["results"] = std::move(results);
    emit_json(out, doc);
    return kExitOk;
  }

  if (subjects.size() == 1) {
    const ClassVector cv = classify(ls.space, subjects[0]);
    out << "subset " << subjects[0].to_string() << " in space over "
        << ls.space.n() << " points\n";
    for (int i = 0; i < kFamilyCount; ++i)
      out << "  " << kFamilyNames[i] << ": " << yesno(cv.flags[i]) << '\n';
    return kExitOk;
  }
  out << "class membership for all " << subjects.size() << " subsets (families listed per "
      << "subset; absence means the subset is not in the class)\n";
  for (Subset a : subjects) {
    const ClassVector cv = classify(ls.space, a);
    out << "  " << a.to_string() << ": ";
    bool first = true;
    for (int i = 0; i < kFamilyCount; ++i) {
      if (!cv.flags[i]) continue;
      if (!first) out << ", ";
      out << kFamilyNames[i];
      first = false;
    }
    out << '\n';
  }
  return kExitOk;
}

// ---- normality -------------------------------------------------------------

inline int cmd_normality(std::ostream& out, const std::string& space_path, bool json) {
  const LabeledSpace ls = parse_space(read_file(space_path));
  const bool plain = is_normal_variant(ls.space, NormalityVariant::normal);
  const bool g = is_normal_variant(ls.space, NormalityVariant::g_normal);
  const bool hstar = is_normal_variant(ls.space, NormalityVariant::hstar_normal);
  const bool f1 = hstar_normal_characterization(ls.space, 1);
  const bool f2 = hstar_normal_characterization(ls.space, 2);
  const bool f3 = hstar_normal_characterization(ls.space, 3);
  if (json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["space"] = space_to_json(ls.space, ls.labels);
    doc["normal"] = plain;
    doc["g_normal"] = g;
    doc["hstar_normal"] = hstar;
    doc["hstar_characterizations"] = {
        {"separation", f1}, {"cover", f2}, {"squeeze", f3}, {"agree", f1 == f2 && f2 == f3}};
    emit_json(out, doc);
  } else {
    out << "normal:       " << yesno(plain) << '\n';
    out << "g-normal:     " << yesno(g) << '\n';
    out << "hstar-normal: " << yesno(hstar) << '\n';
    out << "hstar-normality renderings: separation=" << yesno(f1) << " cover=" << yesno(f2)
        << " squeeze=" << yesno(f3) << (f1 == f2 && f2 == f3 ? " (agree)" : " (DISAGREE)")
        << '\n';
  }
  return kExitOk;
}

// ---- map -------------------------------------------------------------------

inline int cmd_map(std::ostream& out, const std::string& domain_path,
                   const std::string& codomain_path, const std::string& table_arg,
                   const std::optional<std::string>& props_arg, bool json) {
  const LabeledSpace dom = parse_space(read_file(domain_path));
  const LabeledSpace cod = parse_space(read_file(codomain_path));
  const std::vector<std::string> entries = split_commas(table_arg);
  if (static_cast<int>(entries.size()) != dom.space.n())
    throw ParseError(ParseErrc::syntax_error,
                     "--table needs one codomain label per domain point, in domain order");
  std::vector<int> table;
  for (const auto& name : entries) {
    const Subset point = cod.subset_of_labels({name});
    table.push_back(std::countr_zero(point.bits()));
  }
  const SpaceMap m = SpaceMap::of(dom.space, cod.space, table);

  std::vector<MapProperty> props;
  if (props_arg) {
    for (const auto& name : split_commas(*props_arg)) {
      const auto p = map_property_from_name(name);
      if (!p)
        throw ParseError(ParseErrc::syntax_error, "unknown map property \"" + name + "\"");
      props.push_back(*p);
    }
  } else {
    for (int i = 0; i < kMapPropertyCount; ++i) props.push_back(static_cast<MapProperty>(i));
  }

  if (json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["domain"] = space_to_json(dom.space, dom.labels);
    doc["codomain"] = space_to_json(cod.space, cod.labels);
    Json tj;
    for (int i = 0; i < dom.space.n(); ++i) tj[dom.labels[i]] = cod.labels[table[i]];
    doc["table"] = std::move(tj);
    Json verdicts;
    for (MapProperty p : props)
      verdicts[std::string(map_property_name(p))] = check_map_property(m, p);
    doc["properties"] = std::move(verdicts);
    emit_json(out, doc);
  } else {
    out << "map: ";
    for (int i = 0; i < dom.space.n(); ++i)
      out << (i ? ", " : "") << dom.labels[i] << "->" << cod.labels[table[i]];
    out << '\n';
    for (MapProperty p : props)
      out << "  " << map_property_name(p) << ": " << yesno(check_map_property(m, p)) << '\n';
  }
  return kExitOk;
}

// ---- audit -----------------------------------------------------------------

inline int cmd_audit(std::ostream& out, const std::string& theorem_name, int max_n,
                     std::uint64_t seed, int samples, std::int64_t max_witnesses, bool json) {
  const auto id = theorem_from_name(theorem_name);
  if (!id)
    throw ParseError(ParseErrc::syntax_error,
                     "unknown theorem id \"" + theorem_name + "\" (see README for the catalog)");
  const UniverseShape shape = theorem_info(*id).shape;
  const int cap = effective_cap(max_audit_ground(shape));
  AuditBounds bounds;
  bounds.max_n = max_n == 0 ? std::min(default_audit_ground(shape), cap) : max_n;
  bounds.seed = seed;
  bounds.samples = samples;
  bounds.max_witnesses = max_witnesses;
  if (bounds.max_n > cap)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "--max-n " + std::to_string(bounds.max_n) +
                            " exceeds the enumeration cap " + std::to_string(cap) +
                            " for this audit");
  const AuditReport report = audit_theorem(*id, bounds);
  if (json)
    emit_json(out, audit_report_to_json(report));
  else
    print_audit_report(out, report);
  return report.counterexample_count > 0 ? kExitCounterexample : kExitOk;
}

// ---- mine ------------------------------------------------------------------

inline int cmd_mine(std::ostream& out, int max_n, bool json) {
  const int cap = effective_cap(kMaxMineGround);
  const int n = max_n == 0 ? std::min(4, cap) : max_n;
  if (n > cap)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "--max-n " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(cap));
  const ImplicationLattice lattice = mine_implications(n);
  if (json)
    emit_json(out, lattice_to_json(lattice));
  else
    print_lattice(out, lattice);
  return kExitOk;
}

// ---- repro -----------------------------------------------------------------

inline int cmd_repro(std::ostream& out, bool json) {
  const std::vector<DiscrepancyRecord> records = run_repro();
  if (json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    Json arr = Json::array();
    for (const auto& rec : records) arr.push_back(discrepancy_to_json(rec));
    doc["records"] = std::move(arr);
    emit_json(out, doc);
    return kExitOk;
  }
  for (const auto& rec : records) {
    out << rec.source << ": " << (rec.agree ? "agree" : "DISAGREE") << " — " << rec.claim
        << '\n';
    if (!rec.agree) {
      for (const auto& check : rec.evidence.at("checks")) {
        if (check.at("expected") == check.at("actual")) continue;
        out << "    " << check.dump() << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace cli_detail

// Command-line front end; argv excludes the program name. Reports go to out,
// diagnostics to err.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-topology engine for the generalized closed-set ladder"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "structured machine-readable output");

  auto* classify_cmd = app.add_subcommand("classify", "class membership for subsets of a space");
  std::string classify_path;
  std::optional<std::string> classify_subset;
  classify_cmd->add_option("space-file", classify_path, "space document (JSON)")->required();
  classify_cmd->add_option("--subset", classify_subset,
                           "comma-separated point labels (default: all subsets)");

  auto* normality_cmd = app.add_subcommand("normality", "normality variants of a space");
  std::string normality_path;
  normality_cmd->add_option("space-file", normality_path, "space document (JSON)")->required();

  auto* map_cmd = app.add_subcommand("map", "property verdicts for a map between two spaces");
  std::string map_dom, map_cod, map_table;
  std::optional<std::string> map_props;
  map_cmd->add_option("domain-file", map_dom, "domain space document")->required();
  map_cmd->add_option("codomain-file", map_cod, "codomain space document")->required();
  map_cmd->add_option("--table", map_table,
                      "codomain labels in domain point order, comma-separated")
      ->required();
  map_cmd->add_option("--props", map_props, "comma-separated property names (default: all)");

  auto* audit_cmd = app.add_subcommand("audit", "audit one claim over the bounded universe");
  std::string audit_id;
  int audit_max_n = 0;
  std::uint64_t audit_seed = 1;
  int audit_samples = 4000;
  std::int64_t audit_max_witnesses = -1;
  audit_cmd->add_option("theorem-id", audit_id, "claim tag, e.g. T1.10 or L4.2")->required();
  audit_cmd->add_option("--max-n", audit_max_n, "universe bound (per-shape default and cap)");
  audit_cmd->add_option("--seed", audit_seed, "seed for the sampled stage");
  audit_cmd->add_option("--samples", audit_samples, "sampled-stage instance count");
  audit_cmd->add_option("--max-witnesses", audit_max_witnesses,
                        "cap stored witnesses (-1 = keep all)");

  auto* mine_cmd = app.add_subcommand("mine", "mine the implication lattice");
  int mine_max_n = 0;
  mine_cmd->add_option("--max-n", mine_max_n, "universe bound (default 4)");

  app.add_subcommand("repro", "re-run the worked examples and report agreement");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  try {
    using namespace cli_detail;
    if (classify_cmd->parsed()) return cmd_classify(out, classify_path, classify_subset, json);
    if (normality_cmd->parsed()) return cmd_normality(out, normality_path, json);
    if (map_cmd->parsed()) return cmd_map(out, map_dom, map_cod, map_table, map_props, json);
    if (audit_cmd->parsed())
      return cmd_audit(out, audit_id, audit_max_n, audit_seed, audit_samples,
                       audit_max_witnesses, json);
    if (mine_cmd->parsed()) return cmd_mine(out, mine_max_n, json);
    return cmd_repro(out, json);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const TopologyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace hstar
