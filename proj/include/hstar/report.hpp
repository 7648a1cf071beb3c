#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hstar/audit.hpp"
#include "hstar/document.hpp"
#include "hstar/mine.hpp"

namespace hstar {

// ---------------------------------------------------------------------------
// JSON and plain-text renderings of engine reports. Both renderings carry the
// same verdicts; JSON adds the schema_version field and full witness payloads
// suitable for machine re-verification.
// ---------------------------------------------------------------------------

inline Json witness_to_json(const Witness& w) {
  Json out;
  Json spaces = Json::array();
  for (const Space& s : w.spaces) spaces.push_back(space_to_json(s));
  out["spaces"] = std::move(spaces);
  Json maps = Json::array();
  for (std::size_t i = 0; i < w.map_tables.size(); ++i) {
    Json table = Json::array();
    const auto labels = default_labels(w.spaces[i + 1].n());
    for (int v : w.map_tables[i]) table.push_back(labels[v]);
    maps.push_back({{"from", i}, {"to", i + 1}, {"table", std::move(table)}});
  }
  out["maps"] = std::move(maps);
  Json subsets = Json::array();
  for (Subset a : w.subsets) subsets.push_back(subset_to_json(a));
  out["subsets"] = std::move(subsets);
  out["note"] = w.note;
  return out;
}

inline Witness witness_from_json(const Json& j) {
  Witness w;
  for (const auto& sj : j.at("spaces")) {
    LabeledSpace ls = space_from_json(sj);
    w.spaces.push_back(std::move(ls.space));
  }
  for (const auto& mj : j.at("maps")) {
    const std::size_t to = mj.at("to").get<std::size_t>();
    const auto labels = default_labels(w.spaces[to].n());
    std::vector<int> table;
    for (const auto& entry : mj.at("table")) {
      const std::string name = entry.get<std::string>();
      int idx = -1;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) idx = static_cast<int>(i);
      if (idx < 0) throw ParseError(ParseErrc::unknown_label, "unknown label in map table");
      table.push_back(idx);
    }
    w.map_tables.push_back(std::move(table));
  }
  if (j.contains("note")) w.note = j.at("note").get<std::string>();
  return w;
}

inline Json audit_report_to_json(const AuditReport& r) {
  const TheoremInfo& info = theorem_info(r.theorem);
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["theorem"] = std::string(info.name);
  out["claim"] = std::string(info.claim);
  Json bounds;
  bounds["max_n"] = r.max_n;
  bounds["mode"] = r.sampled ? "exhaustive+sampled" : "exhaustive";
  if (r.sampled) {
    bounds["seed"] = r.seed;
    bounds["samples"] = r.samples;
  }
  out["bounds"] = std::move(bounds);
  out["instances_checked"] = r.instances_checked;
  out["skipped_precondition"] = r.skipped_precondition;
  out["counterexample_count"] = r.counterexample_count;
  Json cx = Json::array();
  for (const Witness& w : r.counterexamples) cx.push_back(witness_to_json(w));
  out["counterexamples"] = std::move(cx);
  return out;
}

inline void print_witness(std::ostream& os, const Witness& w, const std::string& indent) {
  for (std::size_t i = 0; i < w.spaces.size(); ++i) {
    os << indent << "space " << i << " (n=" << w.spaces[i].n() << "): ";
    for (Subset o : w.spaces[i].opens()) os << o.to_string() << ' ';
    os << '\n';
  }
  for (std::size_t i = 0; i < w.map_tables.size(); ++i) {
    os << indent << "map " << i << ": ";
    for (std::size_t p = 0; p < w.map_tables[i].size(); ++p) {
      if (p) os << ", ";
      os << Subset::point_name(static_cast<int>(p)) << "->"
         << Subset::point_name(w.map_tables[i][p]);
    }
    os << '\n';
  }
  for (Subset a : w.subsets) os << indent << "subset " << a.to_string() << '\n';
  if (!w.note.empty()) os << indent << "note: " << w.note << '\n';
}

inline void print_audit_report(std::ostream& os, const AuditReport& r) {
  const TheoremInfo& info = theorem_info(r.theorem);
  os << "audit " << info.name << ": " << info.claim << '\n';
  os << "  universe: max n " << r.max_n
     << (r.sampled ? " (exhaustive+sampled" : " (exhaustive");
  if (r.sampled) os << ", seed " << r.seed << ", samples " << r.samples;
  os << ")\n";
  os << "  instances checked:    " << r.instances_checked << '\n';
  os << "  skipped precondition: " << r.skipped_precondition << '\n';
  os << "  counterexamples:      " << r.counterexample_count << '\n';
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    os << "  counterexample " << i + 1 << ":\n";
    print_witness(os, r.counterexamples[i], "    ");
  }
  os << (r.counterexample_count == 0 ? "  verdict: no counterexample found\n"
                                     : "  verdict: COUNTEREXAMPLES FOUND\n");
}

inline Json lattice_to_json(const ImplicationLattice& l) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["max_n"] = l.max_n;
  Json nodes = Json::array();
  for (FamilyId id : l.nodes) nodes.push_back(std::string(family_name(id)));
  out["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const LatticeEdge& e : l.edges) {
    Json ej;
    ej["source"] = std::string(family_name(e.source));
    ej["target"] = std::string(family_name(e.target));
    ej["status"] = e.holds ? "holds-on-universe" : "fails-with-witness";
    if (e.witness) {
      ej["witness"] = {{"space", space_to_json(e.witness->first)},
                       {"subset", subset_to_json(e.witness->second)}};
    }
    edges.push_back(std::move(ej));
  }
  out["edges"] = std::move(edges);
  Json stats = Json::array();
  for (const ClosureInClassStat& s : l.closure_stats) {
    stats.push_back({{"operator", std::string(closure_op_name(s.op))},
                     {"subsets_in_class", s.subsets_in_class},
                     {"subsets_total", s.subsets_total},
                     {"spaces_all_in_class", s.spaces_all_in_class},
                     {"spaces_total", s.spaces_total}});
  }
  out["closure_in_class"] = std::move(stats);
  return out;
}

inline void print_lattice(std::ostream& os, const ImplicationLattice& l) {
  os << "implication lattice over all labeled topologies with n <= " << l.max_n << '\n';
  int holding = 0;
  for (const LatticeEdge& e : l.edges) holding += e.holds ? 1 : 0;
  os << "  " << l.edges.size() << " ordered pairs, " << holding << " hold on the universe\n";
  for (const LatticeEdge& e : l.edges) {
    os << "  " << family_name(e.source) << " => " << family_name(e.target) << ": "
       << (e.holds ? "holds-on-universe" : "fails-with-witness");
    if (e.witness) {
      os << "  [n=" << e.witness->first.n() << ", subset " << e.witness->second.to_string()
         << "]";
    }
    os << '\n';
  }
  os << "  closure operators landing in their own class:\n";
  for (const ClosureInClassStat& s : l.closure_stats) {
    os << "    " << closure_op_name(s.op) << ": " << s.subsets_in_class << "/"
       << s.subsets_total << " subsets, " << s.spaces_all_in_class << "/" << s.spaces_total
       << " spaces fully in-class\n";
  }
}

}  // namespace hstar
