#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "hstar/family.hpp"
#include "hstar/space.hpp"
#include "hstar/subset.hpp"

namespace hstar {

// ---------------------------------------------------------------------------
// Extents: for a given space, the complete sorted list of subsets belonging
// to each set class. Closed-side extents are computed from their defining
// conditions; open-side extents are the complement images, so complement
// duality holds by construction. Results are memoized on the Space.
//
// Guarded classes all follow one schema: A is in the class iff the chosen
// closure of A stays inside every guard-family member that contains A.
// ---------------------------------------------------------------------------

const std::vector<Subset>& extent(const Space& s, FamilyId id);

// Intersection of all members of op's closed family that contain A. This is
// the literal intersection; for the h/hstar/ghstar operators the result is
// not guaranteed to lie in the class itself (the class need not be closed
// under intersections), and nothing here assumes it does.
Subset derived_closure(const Space& s, Subset a, ClosureOp op);

// Union of all members of op's open family contained in A; equals the
// complement of derived_closure on the complement.
Subset derived_interior(const Space& s, Subset a, ClosureOp op);

// The guarded-class schema as a standalone query: true iff for every U in
// extent(s, guard) with A ⊆ U, derived_closure(s, A, op) ⊆ U.
bool guarded_closed(const Space& s, Subset a, ClosureOp op, FamilyId guard);

bool in_family(const Space& s, Subset a, FamilyId id);

// One membership flag per set class, for a fixed (space, subset) pair.
struct ClassVector {
  std::array<bool, kFamilyCount> flags{};
  bool operator[](FamilyId id) const noexcept { return flags[static_cast<std::size_t>(id)]; }
  bool operator==(const ClassVector&) const = default;
};

ClassVector classify(const Space& s, Subset a);

// ---------------------------------------------------------------------------
// implementation
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Subset> complements_of(const std::vector<Subset>& v) {
  std::vector<Subset> out;
  out.reserve(v.size());
  for (Subset a : v) out.push_back(a.complement());
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_ladder_ground(const Space& s) {
  if (s.n() > kMaxLadderGround)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "class-ladder operations are limited to ground size " +
                            std::to_string(kMaxLadderGround) + ", got " + std::to_string(s.n()));
}

inline const std::vector<Subset>& closure_table(const Space& s, ClosureOp op) {
  if (const auto* c = s.cached_closure_table(op)) return *c;
  const auto& fam = extent(s, closure_family(op));
  std::vector<Subset> table(s.subset_count());
  for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
    const Subset a{m, s.n()};
    Subset acc = s.full_set();
    for (Subset f : fam)
      if (a.subset_of(f)) acc = acc.intersect(f);
    table[m] = acc;
  }
  return s.store_closure_table(op, std::move(table));
}

// Collects every subset whose op-closure stays inside all guard supersets.
inline std::vector<Subset> guarded_extent(const Space& s, ClosureOp op, FamilyId guard) {
  const auto& guards = extent(s, guard);
  const auto& table = closure_table(s, op);
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
    const Subset a{m, s.n()};
    const Subset acl = table[m];
    bool ok = true;
    for (Subset u : guards) {
      if (a.subset_of(u) && !acl.subset_of(u)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

// Subsets sandwiched between some regular-open U and its op-closure.
inline std::vector<Subset> regular_sandwich_extent(const Space& s, ClosureOp op) {
  const auto& ro = extent(s, FamilyId::regular_open);
  const auto& table = closure_table(s, op);
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
    const Subset a{m, s.n()};
    for (Subset u : ro) {
      if (u.subset_of(a) && a.subset_of(table[u.bits()])) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

template <typename Pred>
std::vector<Subset> pointwise_extent(const Space& s, Pred&& pred) {
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
    const Subset a{m, s.n()};
    if (pred(a)) out.push_back(a);
  }
  return out;
}

inline std::vector<Subset> compute_extent(const Space& s, FamilyId id) {
  switch (id) {
    case FamilyId::open:
      return s.opens();
    case FamilyId::closed:
      return s.closeds();
    case FamilyId::regular_closed:
      return pointwise_extent(s, [&](Subset a) { return s.closure(s.interior(a)) == a; });
    case FamilyId::semi_closed:
      return pointwise_extent(s, [&](Subset a) { return s.interior(s.closure(a)).subset_of(a); });
    case FamilyId::alpha_closed:
      return pointwise_extent(
          s, [&](Subset a) { return s.closure(s.interior(s.closure(a))).subset_of(a); });
    case FamilyId::alpha_star:
      return pointwise_extent(
          s, [&](Subset a) { return s.interior(s.closure(s.interior(a))) == s.interior(a); });
    case FamilyId::c_set: {
      // A = U ∩ V with U open and V an alpha-star set.
      std::vector<char> seen(s.subset_count(), 0);
      for (Subset u : s.opens())
        for (Subset v : extent(s, FamilyId::alpha_star)) seen[u.intersect(v).bits()] = 1;
      std::vector<Subset> out;
      for (std::uint32_t m = 0; m < s.subset_count(); ++m)
        if (seen[m]) out.emplace_back(m, s.n());
      return out;
    }
    case FamilyId::w_closed:
      return guarded_extent(s, ClosureOp::cl, FamilyId::semi_open);
    case FamilyId::h_closed:
      return guarded_extent(s, ClosureOp::s_cl, FamilyId::w_open);
    case FamilyId::gh_closed:
      return guarded_extent(s, ClosureOp::h_cl, FamilyId::h_open);
    case FamilyId::regular_h_open:
      return regular_sandwich_extent(s, ClosureOp::h_cl);
    case FamilyId::rgh_closed:
      return guarded_extent(s, ClosureOp::h_cl, FamilyId::regular_h_open);
    case FamilyId::hcg_closed:
      // The guard ranges over the c-sets themselves; no open dual is formed.
      return guarded_extent(s, ClosureOp::h_cl, FamilyId::c_set);
    case FamilyId::hstar_closed:
      return guarded_extent(s, ClosureOp::h_cl, FamilyId::hcg_open);
    case FamilyId::g_closed:
      return guarded_extent(s, ClosureOp::cl, FamilyId::open);
    case FamilyId::ghstar_closed:
      return guarded_extent(s, ClosureOp::hstar_cl, FamilyId::hstar_open);
    case FamilyId::hstarg_closed:
      // Guard ranges over the open sets, mirroring g-closed.
      return guarded_extent(s, ClosureOp::hstar_cl, FamilyId::open);
    case FamilyId::regular_hstar_open:
      return regular_sandwich_extent(s, ClosureOp::hstar_cl);
    case FamilyId::rghstar_closed:
      // Defined by analogy with rgh-closed, guard = regular-hstar-open.
      return guarded_extent(s, ClosureOp::hstar_cl, FamilyId::regular_hstar_open);
    default:
      // Open-side tags: complement image of the closed-side extent.
      return complements_of(extent(s, family_dual(id)));
  }
}

}  // namespace detail

inline const std::vector<Subset>& extent(const Space& s, FamilyId id) {
  if (const auto* c = s.cached_family(id)) return *c;
  detail::require_ladder_ground(s);
  return s.store_family(id, detail::compute_extent(s, id));
}

inline Subset derived_closure(const Space& s, Subset a, ClosureOp op) {
  return detail::closure_table(s, op)[a.bits()];
}

inline Subset derived_interior(const Space& s, Subset a, ClosureOp op) {
  return derived_closure(s, a.complement(), op).complement();
}

inline bool guarded_closed(const Space& s, Subset a, ClosureOp op, FamilyId guard) {
  const Subset acl = derived_closure(s, a, op);
  for (Subset u : extent(s, guard))
    if (a.subset_of(u) && !acl.subset_of(u)) return false;
  return true;
}

inline bool in_family(const Space& s, Subset a, FamilyId id) {
  const auto& e = extent(s, id);
  return std::binary_search(e.begin(), e.end(), a);
}

inline ClassVector classify(const Space& s, Subset a) {
  ClassVector v;
  for (int i = 0; i < kFamilyCount; ++i)
    v.flags[i] = in_family(s, a, static_cast<FamilyId>(i));
  return v;
}

}  // namespace hstar
