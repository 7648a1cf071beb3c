#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hstar/audit.hpp"
#include "hstar/enumerate.hpp"
#include "hstar/separation.hpp"

namespace hstar {

// ---------------------------------------------------------------------------
// Implication mining: for every ordered pair of closed-type classes, decide
// empirically whether source-membership forces target-membership across the
// whole bounded universe, recording the first witness when it does not.
// "First" means first space in enumeration order (ground size, then family
// order), then smallest subset by bit pattern.
// ---------------------------------------------------------------------------

inline constexpr std::array<FamilyId, 17> kClosedTypeNodes = {
    FamilyId::closed,        FamilyId::regular_closed, FamilyId::semi_closed,
    FamilyId::alpha_closed,  FamilyId::alpha_star,     FamilyId::c_set,
    FamilyId::w_closed,      FamilyId::h_closed,       FamilyId::gh_closed,
    FamilyId::rgh_closed,    FamilyId::hcg_closed,     FamilyId::hstar_closed,
    FamilyId::g_closed,      FamilyId::ghstar_closed,  FamilyId::hstarg_closed,
    FamilyId::regular_hstar_closed, FamilyId::rghstar_closed};

struct LatticeEdge {
  FamilyId source;
  FamilyId target;
  bool holds;  // no witness in the bounded universe
  std::optional<std::pair<Space, Subset>> witness;
};

// How often the literal-intersection closure operators land back inside
// their own class. Nothing in the engine assumes they do; this measures it.
struct ClosureInClassStat {
  ClosureOp op;
  std::int64_t subsets_in_class = 0;
  std::int64_t subsets_total = 0;
  std::int64_t spaces_all_in_class = 0;
  std::int64_t spaces_total = 0;
};

struct ImplicationLattice {
  int max_n = 0;
  std::vector<FamilyId> nodes;
  std::vector<LatticeEdge> edges;
  std::vector<ClosureInClassStat> closure_stats;
};

inline ImplicationLattice mine_implications(int n_max) {
  if (n_max < 1 || n_max > kMaxMineGround)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "implication mining supports ground sizes 1 to " +
                            std::to_string(kMaxMineGround) + ", got " + std::to_string(n_max));

  constexpr int k = static_cast<int>(kClosedTypeNodes.size());
  constexpr std::array<ClosureOp, 4> kMeasuredOps = {ClosureOp::s_cl, ClosureOp::h_cl,
                                                     ClosureOp::hstar_cl, ClosureOp::ghstar_cl};

  ImplicationLattice lattice;
  lattice.max_n = n_max;
  lattice.nodes.assign(kClosedTypeNodes.begin(), kClosedTypeNodes.end());
  lattice.edges.reserve(static_cast<std::size_t>(k) * (k - 1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) lattice.edges.push_back({kClosedTypeNodes[i], kClosedTypeNodes[j], true, {}});
  for (ClosureOp op : kMeasuredOps) lattice.closure_stats.push_back({op});

  for (int n = 1; n <= n_max; ++n) {
    for (const auto& sp : space_catalog(n)) {
      const Space& s = *sp;
      // Membership of every subset in every node class, packed per class.
      std::array<std::uint64_t, kClosedTypeNodes.size()> member{};
      for (int i = 0; i < k; ++i)
        for (Subset a : extent(s, kClosedTypeNodes[i])) member[i] |= 1ull << a.bits();

      std::size_t e = 0;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          LatticeEdge& edge = lattice.edges[e++];
          if (edge.holds) {
            const std::uint64_t breaks = member[i] & ~member[j];
            if (breaks != 0) {
              edge.holds = false;
              const auto bit = static_cast<std::uint32_t>(std::countr_zero(breaks));
              edge.witness = std::make_pair(s, Subset{bit, s.n()});
            }
          }
        }
      }

      for (std::size_t oi = 0; oi < kMeasuredOps.size(); ++oi) {
        ClosureInClassStat& stat = lattice.closure_stats[oi];
        std::uint64_t cls = 0;
        for (Subset a : extent(s, closure_family(kMeasuredOps[oi]))) cls |= 1ull << a.bits();
        bool all_in = true;
        for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
          const Subset c = derived_closure(s, Subset{m, s.n()}, kMeasuredOps[oi]);
          ++stat.subsets_total;
          if (cls >> c.bits() & 1ull)
            ++stat.subsets_in_class;
          else
            all_in = false;
        }
        stat.spaces_all_in_class += all_in ? 1 : 0;
        ++stat.spaces_total;
      }
    }
  }
  return lattice;
}

// ---------------------------------------------------------------------------
// Witness search: first (space, subset) matching a conjunction of class flags
// and space-level normality flags. For queries with no class flags the
// returned subset is the empty set.
// ---------------------------------------------------------------------------

struct WitnessQuery {
  std::vector<std::pair<FamilyId, bool>> class_flags;
  std::vector<std::pair<NormalityVariant, bool>> normality_flags;
};

inline std::optional<std::pair<Space, Subset>> find_witness(const WitnessQuery& q, int n_max) {
  if (n_max < 1 || n_max > kMaxMineGround)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "witness search supports ground sizes 1 to " +
                            std::to_string(kMaxMineGround) + ", got " + std::to_string(n_max));
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& sp : space_catalog(n)) {
      const Space& s = *sp;
      bool space_ok = true;
      for (auto [variant, wanted] : q.normality_flags)
        if (is_normal_variant(s, variant) != wanted) {
          space_ok = false;
          break;
        }
      if (!space_ok) continue;
      if (q.class_flags.empty()) return std::make_pair(s, s.empty_set());
      for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
        const Subset a{m, s.n()};
        bool ok = true;
        for (auto [family, wanted] : q.class_flags)
          if (in_family(s, a, family) != wanted) {
            ok = false;
            break;
          }
        if (ok) return std::make_pair(s, a);
      }
    }
  }
  return std::nullopt;
}

}  // namespace hstar
