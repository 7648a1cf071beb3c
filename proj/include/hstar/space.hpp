#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hstar/family.hpp"
#include "hstar/subset.hpp"

namespace hstar {

// Class-ladder operations enumerate all 2^n subsets of a space, with inner
// scans over guard families; they are gated well below the raw word-width
// bound that plain closure/interior queries tolerate.
inline constexpr int kMaxLadderGround = 14;

enum class TopologyErrc {
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  ground_too_large,
  subset_does_not_fit,
  domain_mismatch,
  precondition_unmet,
};

class TopologyError : public std::runtime_error {
 public:
  TopologyError(TopologyErrc code, std::string message, Subset a = {}, Subset b = {})
      : std::runtime_error(std::move(message)), code_(code), witness_a_(a), witness_b_(b) {}

  TopologyErrc code() const noexcept { return code_; }
  Subset witness_a() const noexcept { return witness_a_; }
  Subset witness_b() const noexcept { return witness_b_; }

 private:
  TopologyErrc code_;
  Subset witness_a_, witness_b_;
};

// A finite topological space: ground size n plus the full family of open
// sets, kept sorted and duplicate-free. Immutable once constructed. The
// lazily filled analysis caches are not synchronized: share one Space value
// across threads only after the extents it needs have been computed, or give
// each task its own copy.
class Space {
 public:
  // Validates that the family contains the empty set and the whole ground
  // set and is closed under pairwise union and intersection, then
  // canonicalizes it (sort + dedup). Throws TopologyError with a witness
  // pair on the first violation found.
  Space(int n, std::vector<Subset> opens) : Space(check_and_sort(n, std::move(opens)), n) {}

  // Trusted fast path for generators whose output is valid by construction.
  static Space unchecked(int n, std::vector<Subset> opens) {
    std::sort(opens.begin(), opens.end());
    return Space(std::move(opens), n);
  }

  int n() const noexcept { return n_; }
  Subset empty_set() const noexcept { return Subset::empty(n_); }
  Subset full_set() const noexcept { return Subset::full(n_); }
  std::uint64_t subset_count() const noexcept { return 1ull << n_; }

  const std::vector<Subset>& opens() const noexcept { return opens_; }
  const std::vector<Subset>& closeds() const noexcept { return closeds_; }

  bool is_open(Subset a) const noexcept {
    return std::binary_search(opens_.begin(), opens_.end(), a);
  }
  bool is_closed(Subset a) const noexcept {
    return std::binary_search(closeds_.begin(), closeds_.end(), a);
  }

  // Smallest closed superset, by scanning the closed family.
  Subset closure(Subset a) const noexcept {
    Subset acc = full_set();
    for (Subset f : closeds_)
      if (a.subset_of(f)) acc = acc.intersect(f);
    return acc;
  }

  // Largest open subset; equals the complement of closure(complement).
  Subset interior(Subset a) const noexcept {
    Subset acc = empty_set();
    for (Subset o : opens_)
      if (o.subset_of(a)) acc = acc.unite(o);
    return acc;
  }

  struct Regularity {
    bool regular_open;
    bool regular_closed;
  };
  Regularity regularity(Subset a) const noexcept {
    return {interior(closure(a)) == a, closure(interior(a)) == a};
  }

  // Intersection of all opens containing the point: the point's minimal open
  // neighborhood (open itself, since the family is intersection-closed).
  Subset minimal_neighborhood(int point) const noexcept {
    Subset acc = full_set();
    for (Subset o : opens_)
      if (o.contains(point)) acc = acc.intersect(o);
    return acc;
  }

  bool operator==(const Space& o) const noexcept { return n_ == o.n_ && opens_ == o.opens_; }
  // Spaces order by ground size, then lexicographically by the sorted open
  // family; this fixes the enumeration order used for first witnesses.
  bool operator<(const Space& o) const noexcept {
    if (n_ != o.n_) return n_ < o.n_;
    return std::lexicographical_compare(opens_.begin(), opens_.end(), o.opens_.begin(),
                                        o.opens_.end());
  }

  // --- analysis cache hooks (used by ladder.hpp) ------------------------
  using SubsetVec = std::vector<Subset>;
  const SubsetVec* cached_family(FamilyId id) const noexcept {
    return family_cache_[static_cast<std::size_t>(id)].get();
  }
  const SubsetVec& store_family(FamilyId id, SubsetVec v) const {
    auto& slot = family_cache_[static_cast<std::size_t>(id)];
    slot = std::make_shared<const SubsetVec>(std::move(v));
    return *slot;
  }
  const SubsetVec* cached_closure_table(ClosureOp op) const noexcept {
    return closure_cache_[static_cast<std::size_t>(op)].get();
  }
  const SubsetVec& store_closure_table(ClosureOp op, SubsetVec v) const {
    auto& slot = closure_cache_[static_cast<std::size_t>(op)];
    slot = std::make_shared<const SubsetVec>(std::move(v));
    return *slot;
  }
  int cached_flag(int slot) const noexcept { return flag_cache_[slot]; }
  bool store_flag(int slot, bool value) const noexcept {
    flag_cache_[slot] = value ? 1 : 0;
    return value;
  }

 private:
  Space(std::vector<Subset> sorted_opens, int n) : n_(n), opens_(std::move(sorted_opens)) {
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    closeds_.reserve(opens_.size());
    for (Subset o : opens_) closeds_.push_back(o.complement());
    std::sort(closeds_.begin(), closeds_.end());
  }

  static std::vector<Subset> check_and_sort(int n, std::vector<Subset> family) {
    if (n < 1 || n > kMaxGround)
      throw TopologyError(TopologyErrc::ground_too_large,
                          "ground size must be between 1 and " + std::to_string(kMaxGround) +
                              ", got " + std::to_string(n));
    const Subset full = Subset::full(n);
    for (Subset a : family)
      if (a.ground() != n || !a.subset_of(full))
        throw TopologyError(TopologyErrc::subset_does_not_fit,
                            "subset " + a.to_string() + " does not fit ground size " +
                                std::to_string(n),
                            a);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto member = [&](Subset s) {
      return std::binary_search(family.begin(), family.end(), s);
    };
    if (!member(Subset::empty(n)) || !member(full))
      throw TopologyError(TopologyErrc::missing_empty_or_full,
                          "family must contain the empty set and the full ground set");
    for (Subset a : family) {
      for (Subset b : family) {
        if (b < a) continue;
        if (!member(a.unite(b)))
          throw TopologyError(TopologyErrc::not_closed_under_union,
                              "family is not closed under union: " + a.to_string() + " with " +
                                  b.to_string(),
                              a, b);
        if (!member(a.intersect(b)))
          throw TopologyError(TopologyErrc::not_closed_under_intersection,
                              "family is not closed under intersection: " + a.to_string() +
                                  " with " + b.to_string(),
                              a, b);
      }
    }
    return family;
  }

  int n_;
  std::vector<Subset> opens_;
  std::vector<Subset> closeds_;

  mutable std::array<std::shared_ptr<const SubsetVec>, kFamilyCount> family_cache_{};
  mutable std::array<std::shared_ptr<const SubsetVec>, kClosureOpCount> closure_cache_{};
  // Memoized space-level predicates (normality variants); -1 = not computed.
  mutable std::array<signed char, 4> flag_cache_{-1, -1, -1, -1};
};

}  // namespace hstar
