#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace hstar {

// Every set class tracked by the engine. Open/closed variants of one notion
// sit next to each other so that dual() is a bit flip; alpha-star and c-set
// carry no polarity and are their own duals. The closed-side tags rgh-open,
// regular-h-closed and rghstar-open are included so duality is total even
// where the source definitions only ever name one side.
enum class FamilyId : std::uint8_t {
  open,
  closed,
  regular_open,
  regular_closed,
  semi_open,
  semi_closed,
  alpha_open,
  alpha_closed,
  alpha_star,
  c_set,
  w_open,
  w_closed,
  h_open,
  h_closed,
  gh_open,
  gh_closed,
  regular_h_open,
  regular_h_closed,
  rgh_open,
  rgh_closed,
  hcg_open,
  hcg_closed,
  hstar_open,
  hstar_closed,
  g_open,
  g_closed,
  ghstar_open,
  ghstar_closed,
  hstarg_open,
  hstarg_closed,
  regular_hstar_open,
  regular_hstar_closed,
  rghstar_open,
  rghstar_closed,
};

inline constexpr int kFamilyCount = 34;

constexpr FamilyId family_dual(FamilyId id) noexcept {
  if (id == FamilyId::alpha_star || id == FamilyId::c_set) return id;
  return static_cast<FamilyId>(static_cast<std::uint8_t>(id) ^ 1u);
}

constexpr bool family_is_closed_side(FamilyId id) noexcept {
  if (id == FamilyId::alpha_star || id == FamilyId::c_set) return false;
  return static_cast<std::uint8_t>(id) & 1u;
}

inline constexpr std::array<std::string_view, kFamilyCount> kFamilyNames = {
    "open",
    "closed",
    "regular-open",
    "regular-closed",
    "semi-open",
    "semi-closed",
    "alpha-open",
    "alpha-closed",
    "alpha-star",
    "c-set",
    "w-open",
    "w-closed",
    "h-open",
    "h-closed",
    "gh-open",
    "gh-closed",
    "regular-h-open",
    "regular-h-closed",
    "rgh-open",
    "rgh-closed",
    "hcg-open",
    "hcg-closed",
    "hstar-open",
    "hstar-closed",
    "g-open",
    "g-closed",
    "ghstar-open",
    "ghstar-closed",
    "hstarg-open",
    "hstarg-closed",
    "regular-hstar-open",
    "regular-hstar-closed",
    "rghstar-open",
    "rghstar-closed",
};

constexpr std::string_view family_name(FamilyId id) noexcept {
  return kFamilyNames[static_cast<std::size_t>(id)];
}

inline std::optional<FamilyId> family_from_name(std::string_view name) noexcept {
  for (int i = 0; i < kFamilyCount; ++i)
    if (kFamilyNames[i] == name) return static_cast<FamilyId>(i);
  return std::nullopt;
}

// The generalized closure operators. Each is the intersection of all members
// of the matching closed family that contain the argument; interiors are the
// complement duals.
enum class ClosureOp : std::uint8_t { cl, s_cl, h_cl, hstar_cl, ghstar_cl };

inline constexpr int kClosureOpCount = 5;

constexpr FamilyId closure_family(ClosureOp op) noexcept {
  switch (op) {
    case ClosureOp::cl: return FamilyId::closed;
    case ClosureOp::s_cl: return FamilyId::semi_closed;
    case ClosureOp::h_cl: return FamilyId::h_closed;
    case ClosureOp::hstar_cl: return FamilyId::hstar_closed;
    case ClosureOp::ghstar_cl: return FamilyId::ghstar_closed;
  }
  return FamilyId::closed;
}

inline constexpr std::array<std::string_view, kClosureOpCount> kClosureOpNames = {
    "cl", "s-cl", "h-cl", "hstar-cl", "ghstar-cl"};
inline constexpr std::array<std::string_view, kClosureOpCount> kInteriorOpNames = {
    "int", "s-int", "h-int", "hstar-int", "ghstar-int"};

constexpr std::string_view closure_op_name(ClosureOp op) noexcept {
  return kClosureOpNames[static_cast<std::size_t>(op)];
}

inline std::optional<ClosureOp> closure_op_from_name(std::string_view name) noexcept {
  for (int i = 0; i < kClosureOpCount; ++i)
    if (kClosureOpNames[i] == name) return static_cast<ClosureOp>(i);
  return std::nullopt;
}

}  // namespace hstar
