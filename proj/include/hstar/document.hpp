#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hstar/space.hpp"
#include "hstar/subset.hpp"

namespace hstar {

// Reports keep key order stable so identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ParseErrc { syntax_error, duplicate_label, unknown_label };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ParseErrc code() const noexcept { return code_; }

 private:
  ParseErrc code_;
};

// A space plus the point labels it was written with. Label order defines the
// point indexing, so documents round-trip losslessly.
struct LabeledSpace {
  Space space;
  std::vector<std::string> labels;

  Subset subset_of_labels(const std::vector<std::string>& names) const {
    std::uint32_t bits = 0;
    for (const auto& name : names) {
      bool found = false;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == name) {
          bits |= 1u << i;
          found = true;
          break;
        }
      }
      if (!found)
        throw ParseError(ParseErrc::unknown_label, "unknown point label \"" + name + "\"");
    }
    return {bits, space.n()};
  }

  std::vector<std::string> labels_of_subset(Subset a) const {
    std::vector<std::string> out;
    for (int i = 0; i < space.n(); ++i)
      if (a.contains(i)) out.push_back(labels[i]);
    return out;
  }
};

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(Subset::point_name(i));
  return out;
}

// Document shape: {"points": ["p", ...], "opens": [["p"], ...]}.
inline LabeledSpace space_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("opens") ||
      !doc["points"].is_array() || !doc["opens"].is_array())
    throw ParseError(ParseErrc::syntax_error,
                     "space document must be an object with \"points\" and \"opens\" arrays");
  std::vector<std::string> labels;
  for (const auto& p : doc["points"]) {
    if (!p.is_string())
      throw ParseError(ParseErrc::syntax_error, "point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw ParseError(ParseErrc::duplicate_label,
                         "duplicate point label \"" + labels[i] + "\"");
  const int n = static_cast<int>(labels.size());
  if (n < 1 || n > kMaxGround)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "a space document needs between 1 and " + std::to_string(kMaxGround) +
                            " points");

  auto label_index = [&](const std::string& name) -> int {
    for (int i = 0; i < n; ++i)
      if (labels[i] == name) return i;
    throw ParseError(ParseErrc::unknown_label, "unknown point label \"" + name + "\"");
  };

  std::vector<Subset> opens;
  for (const auto& open : doc["opens"]) {
    if (!open.is_array())
      throw ParseError(ParseErrc::syntax_error, "each open set must be an array of labels");
    std::uint32_t bits = 0;
    for (const auto& lbl : open) {
      if (!lbl.is_string())
        throw ParseError(ParseErrc::syntax_error, "each open set must be an array of labels");
      bits |= 1u << label_index(lbl.get<std::string>());
    }
    opens.emplace_back(bits, n);
  }
  return {Space(n, std::move(opens)), std::move(labels)};
}

inline LabeledSpace parse_space(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(ParseErrc::syntax_error, e.what());
  }
  return space_from_json(doc);
}

inline Json space_to_json(const Space& s, const std::vector<std::string>& labels) {
  Json doc;
  doc["points"] = labels;
  Json opens = Json::array();
  for (Subset o : s.opens()) {
    Json one = Json::array();
    for (int i = 0; i < s.n(); ++i)
      if (o.contains(i)) one.push_back(labels[i]);
    opens.push_back(std::move(one));
  }
  doc["opens"] = std::move(opens);
  return doc;
}

inline Json space_to_json(const Space& s) { return space_to_json(s, default_labels(s.n())); }

inline Json subset_to_json(Subset a, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (int i = 0; i < a.ground(); ++i)
    if (a.contains(i)) out.push_back(labels[i]);
  return out;
}

inline Json subset_to_json(Subset a) { return subset_to_json(a, default_labels(a.ground())); }

}  // namespace hstar
