#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "hstar/ladder.hpp"
#include "hstar/space.hpp"

namespace hstar {

// Normality and its two weakenings. Each variant asks that every pair of
// disjoint closed sets be separated by *disjoint* members of the designated
// family. Pairs with an empty side are included in the quantifier; they are
// always separable and need no special casing.
enum class NormalityVariant : std::uint8_t { normal, g_normal, hstar_normal };

inline constexpr int kNormalityVariantCount = 3;

inline constexpr std::array<std::string_view, kNormalityVariantCount> kNormalityNames = {
    "normal", "g-normal", "hstar-normal"};

constexpr std::string_view normality_name(NormalityVariant v) noexcept {
  return kNormalityNames[static_cast<std::size_t>(v)];
}

inline std::optional<NormalityVariant> normality_from_name(std::string_view name) noexcept {
  for (int i = 0; i < kNormalityVariantCount; ++i)
    if (kNormalityNames[i] == name) return static_cast<NormalityVariant>(i);
  return std::nullopt;
}

constexpr FamilyId separating_family(NormalityVariant v) noexcept {
  switch (v) {
    case NormalityVariant::normal: return FamilyId::open;
    case NormalityVariant::g_normal: return FamilyId::g_open;
    case NormalityVariant::hstar_normal: return FamilyId::hstar_open;
  }
  return FamilyId::open;
}

inline bool is_normal_variant(const Space& s, NormalityVariant v) {
  if (const int cached = s.cached_flag(static_cast<int>(v)); cached >= 0) return cached != 0;
  const auto& fam = extent(s, separating_family(v));
  const auto& closeds = s.closeds();
  bool result = true;
  for (std::size_t i = 0; result && i < closeds.size(); ++i) {
    for (std::size_t j = i; result && j < closeds.size(); ++j) {
      const Subset a = closeds[i], b = closeds[j];
      if (!a.disjoint(b)) continue;
      bool separated = false;
      for (Subset u : fam) {
        if (!a.subset_of(u)) continue;
        for (Subset w : fam) {
          if (b.subset_of(w) && u.disjoint(w)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      result = separated;
    }
  }
  return s.store_flag(static_cast<int>(v), result);
}

// The three equivalent renderings of hstar-normality. Form 1 is the
// separation definition; form 2 covers X by hstar-closed shrinkages of open
// covers; form 3 squeezes an hstar-open set with hstar-closure between a
// closed set and an open superset.
inline bool hstar_normal_characterization(const Space& s, int form) {
  switch (form) {
    case 1:
      return is_normal_variant(s, NormalityVariant::hstar_normal);
    case 2: {
      const auto& hc = extent(s, FamilyId::hstar_closed);
      for (Subset q : s.opens()) {
        for (Subset r : s.opens()) {
          if (!q.unite(r).is_full()) continue;
          bool covered = false;
          for (Subset d : hc) {
            if (!d.subset_of(q)) continue;
            for (Subset e : hc) {
              if (e.subset_of(r) && d.unite(e).is_full()) {
                covered = true;
                break;
              }
            }
            if (covered) break;
          }
          if (!covered) return false;
        }
      }
      return true;
    }
    case 3: {
      const auto& ho = extent(s, FamilyId::hstar_open);
      for (Subset j : s.closeds()) {
        for (Subset k : s.opens()) {
          if (!j.subset_of(k)) continue;
          bool squeezed = false;
          for (Subset q : ho) {
            if (j.subset_of(q) && derived_closure(s, q, ClosureOp::hstar_cl).subset_of(k)) {
              squeezed = true;
              break;
            }
          }
          if (!squeezed) return false;
        }
      }
      return true;
    }
    default:
      throw TopologyError(TopologyErrc::domain_mismatch,
                          "characterization form must be 1, 2 or 3");
  }
}

}  // namespace hstar
