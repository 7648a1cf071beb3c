#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hstar/document.hpp"
#include "hstar/ladder.hpp"
#include "hstar/separation.hpp"

namespace hstar {

// ---------------------------------------------------------------------------
// Worked-example regression fixtures. Each record restates one claim from the
// audited catalog, recomputes it, and reports agree/disagree together with a
// self-contained evidence payload. Disagreement is a result, not an error:
// the engine audits the catalog, it does not assume it.
// ---------------------------------------------------------------------------

struct DiscrepancyRecord {
  std::string source;  // catalog location, e.g. "Example 1.5"
  std::string claim;   // restatement of what the catalog asserts
  bool agree;          // engine verdict
  Json evidence;       // space + per-check payload; re-verifiable
};

namespace detail {

struct EvidenceBuilder {
  const LabeledSpace& ls;
  Json checks = Json::array();
  bool all_match = true;

  void class_flag(Subset subject, FamilyId family, bool expected) {
    const bool actual = in_family(ls.space, subject, family);
    all_match &= (actual == expected);
    checks.push_back({{"kind", "class-flag"},
                      {"subset", subset_to_json(subject, ls.labels)},
                      {"family", std::string(family_name(family))},
                      {"expected", expected},
                      {"actual", actual}});
  }
  void normality(NormalityVariant v, bool expected) {
    const bool actual = is_normal_variant(ls.space, v);
    all_match &= (actual == expected);
    checks.push_back({{"kind", "normality"},
                      {"variant", std::string(normality_name(v))},
                      {"expected", expected},
                      {"actual", actual}});
  }
  void disjoint(Subset a, Subset b, bool expected) {
    const bool actual = a.disjoint(b);
    all_match &= (actual == expected);
    checks.push_back({{"kind", "disjoint"},
                      {"a", subset_to_json(a, ls.labels)},
                      {"b", subset_to_json(b, ls.labels)},
                      {"expected", expected},
                      {"actual", actual}});
  }
  void contained(Subset a, Subset b, bool expected) {
    const bool actual = a.subset_of(b);
    all_match &= (actual == expected);
    checks.push_back({{"kind", "contained"},
                      {"a", subset_to_json(a, ls.labels)},
                      {"b", subset_to_json(b, ls.labels)},
                      {"expected", expected},
                      {"actual", actual}});
  }

  DiscrepancyRecord finish(std::string source, std::string claim) {
    Json evidence;
    evidence["space"] = space_to_json(ls.space, ls.labels);
    evidence["checks"] = std::move(checks);
    return {std::move(source), std::move(claim), all_match, std::move(evidence)};
  }
};

}  // namespace detail

// The fixture spaces, by the labels used in the catalog.
inline LabeledSpace fixture_space_ladder() {  // Examples 1.5 and 1.7
  std::vector<Subset> opens;
  for (std::uint32_t m : {0u, 1u, 2u, 3u, 7u, 15u}) opens.emplace_back(m, 4);
  return {Space(4, std::move(opens)), {"p", "q", "r", "s"}};
}

inline LabeledSpace fixture_space_three_generators() {  // Example 1.6
  std::vector<Subset> opens;
  for (std::uint32_t m : {0u, 1u, 8u, 16u, 9u, 17u, 24u, 25u, 31u}) opens.emplace_back(m, 5);
  return {Space(5, std::move(opens)), {"p", "q", "r", "s", "t"}};
}

inline LabeledSpace fixture_space_clopen() {  // Example 1.9
  std::vector<Subset> opens;
  for (std::uint32_t m : {0u, 1u, 2u, 3u, 12u, 13u, 14u, 15u}) opens.emplace_back(m, 4);
  return {Space(4, std::move(opens)), {"p", "q", "r", "s"}};
}

inline std::vector<DiscrepancyRecord> run_repro() {
  std::vector<DiscrepancyRecord> records;

  {
    const LabeledSpace ls = fixture_space_ladder();
    const Subset r = ls.subset_of_labels({"r"});
    detail::EvidenceBuilder b{ls};
    b.class_flag(r, FamilyId::h_closed, true);
    b.class_flag(r, FamilyId::hstar_closed, true);
    b.class_flag(r, FamilyId::closed, false);
    records.push_back(b.finish("Example 1.5",
                               "{r} is h-closed and hstar-closed but not closed"));
  }
  {
    const LabeledSpace ls = fixture_space_three_generators();
    const Subset a = ls.subset_of_labels({"p", "s", "t"});
    detail::EvidenceBuilder b{ls};
    b.class_flag(a, FamilyId::rgh_closed, true);
    b.class_flag(a, FamilyId::rghstar_closed, true);
    b.class_flag(a, FamilyId::gh_closed, false);
    b.class_flag(a, FamilyId::ghstar_closed, false);
    records.push_back(b.finish(
        "Example 1.6", "{p,s,t} is rgh-closed and rghstar-closed, neither gh-closed nor "
                       "ghstar-closed"));
  }
  {
    const LabeledSpace ls = fixture_space_ladder();
    const Subset r = ls.subset_of_labels({"r"});
    detail::EvidenceBuilder b{ls};
    b.class_flag(r, FamilyId::ghstar_closed, true);
    b.class_flag(r, FamilyId::closed, false);
    records.push_back(b.finish("Example 1.7", "{r} is ghstar-closed but not closed"));
  }
  {
    // The narrative exhibits A={s}, B=∅ as disjoint closed sets separated by
    // open U={p,r,s}, V={q}.
    const LabeledSpace ls = fixture_space_clopen();
    const Subset a = ls.subset_of_labels({"s"});
    const Subset b0 = ls.space.empty_set();
    const Subset u = ls.subset_of_labels({"p", "r", "s"});
    const Subset v = ls.subset_of_labels({"q"});
    detail::EvidenceBuilder b{ls};
    b.class_flag(a, FamilyId::closed, true);
    b.class_flag(b0, FamilyId::closed, true);
    b.disjoint(a, b0, true);
    b.class_flag(u, FamilyId::open, true);
    b.class_flag(v, FamilyId::open, true);
    b.disjoint(u, v, true);
    b.contained(a, u, true);
    b.contained(b0, v, true);
    records.push_back(b.finish(
        "Example 1.9 (narrative)",
        "{s} and {} are disjoint closed sets separated by disjoint opens {p,r,s} and {q}"));
  }
  {
    const LabeledSpace ls = fixture_space_clopen();
    detail::EvidenceBuilder b{ls};
    b.normality(NormalityVariant::normal, true);
    b.normality(NormalityVariant::g_normal, true);
    b.normality(NormalityVariant::hstar_normal, true);
    records.push_back(
        b.finish("Example 1.9 (normality)", "the space is normal, g-normal and hstar-normal"));
  }
  return records;
}

// Re-runs every check in a record's evidence payload from scratch. True means
// the record is faithful: each recomputed value matches the recorded actual,
// and the verdict equals the conjunction of expected==actual.
inline bool reverify_record(const DiscrepancyRecord& rec) {
  LabeledSpace ls = space_from_json(rec.evidence.at("space"));
  bool all_match = true;
  for (const auto& check : rec.evidence.at("checks")) {
    const std::string kind = check.at("kind").get<std::string>();
    const bool expected = check.at("expected").get<bool>();
    const bool recorded = check.at("actual").get<bool>();
    bool actual = false;
    const auto subset_arg = [&](const char* key) {
      return ls.subset_of_labels(check.at(key).get<std::vector<std::string>>());
    };
    if (kind == "class-flag") {
      const auto family = family_from_name(check.at("family").get<std::string>());
      if (!family) return false;
      actual = in_family(ls.space, subset_arg("subset"), *family);
    } else if (kind == "normality") {
      const auto variant = normality_from_name(check.at("variant").get<std::string>());
      if (!variant) return false;
      actual = is_normal_variant(ls.space, *variant);
    } else if (kind == "disjoint") {
      actual = subset_arg("a").disjoint(subset_arg("b"));
    } else if (kind == "contained") {
      actual = subset_arg("a").subset_of(subset_arg("b"));
    } else {
      return false;
    }
    if (actual != recorded) return false;
    all_match &= (actual == expected);
  }
  return all_match == rec.agree;
}

inline Json discrepancy_to_json(const DiscrepancyRecord& rec) {
  Json out;
  out["source"] = rec.source;
  out["claim"] = rec.claim;
  out["engine_verdict"] = rec.agree ? "agree" : "disagree";
  out["evidence"] = rec.evidence;
  return out;
}

}  // namespace hstar
