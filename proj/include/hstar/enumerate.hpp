#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "hstar/map.hpp"
#include "hstar/space.hpp"

namespace hstar {

// Enumeration is the engine's universe generator; topology counts explode
// quickly, so the ground size is hard-capped.
inline constexpr int kMaxEnumGround = 6;
inline constexpr int kMaxMineGround = 5;
inline constexpr int kMaxCanonicalGround = 8;

namespace detail {

// Emits every labeled topology on n points by assigning each point its
// minimal open neighborhood. An assignment row[i] (with i ∈ row[i]) induces a
// topology iff j ∈ row[i] implies row[j] ⊆ row[i]; the opens are then exactly
// the unions of rows. Assignments are extended point by point with both
// consistency directions checked against earlier rows, which prunes hard.
inline void emit_topologies(int n, std::vector<std::vector<Subset>>& out) {
  const std::uint32_t subsets = 1u << n;
  std::vector<std::uint32_t> row(n, 0);
  std::vector<Subset> family;

  auto emit = [&] {
    family.clear();
    for (std::uint32_t m = 0; m < subsets; ++m) {
      bool open = true;
      for (int i = 0; i < n && open; ++i)
        if ((m >> i & 1u) && (row[i] & ~m) != 0) open = false;
      if (open) family.emplace_back(m, n);
    }
    out.push_back(family);
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      emit();
      return;
    }
    for (std::uint32_t r = 0; r < subsets; ++r) {
      if (!(r >> k & 1u)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        if ((r >> j & 1u) && (row[j] & ~r) != 0) ok = false;          // j ∈ r ⇒ row[j] ⊆ r
        if ((row[j] >> k & 1u) && (r & ~row[j]) != 0) ok = false;      // k ∈ row[j] ⇒ r ⊆ row[j]
      }
      if (!ok) continue;
      row[k] = r;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

std::string canonical_form(const Space& s);

// Every labeled topology on an n-point ground set, in the engine's canonical
// order (lexicographic on the sorted open family). With up_to_homeo, only the
// first representative of each homeomorphism class is kept.
inline std::vector<Space> enumerate_topologies(int n, bool up_to_homeo = false) {
  if (n < 1 || n > kMaxEnumGround)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "topology enumeration supports ground sizes 1 to " +
                            std::to_string(kMaxEnumGround) + ", got " + std::to_string(n));
  std::vector<std::vector<Subset>> families;
  detail::emit_topologies(n, families);
  std::vector<Space> spaces;
  spaces.reserve(families.size());
  for (auto& fam : families) spaces.push_back(Space::unchecked(n, std::move(fam)));
  std::sort(spaces.begin(), spaces.end());
  if (up_to_homeo) {
    std::map<std::string, bool> seen;
    std::vector<Space> reps;
    for (auto& sp : spaces) {
      auto [it, inserted] = seen.emplace(canonical_form(sp), true);
      if (inserted) reps.push_back(std::move(sp));
    }
    spaces = std::move(reps);
  }
  return spaces;
}

// Homeomorphism-invariant key: the lexicographically least relabeling of the
// sorted open family over all point permutations (finite topologies are
// homeomorphic exactly when one is a relabeling of the other, via the
// specialization preorder). Serialized as bytes: n, family size, then one
// byte per open set.
inline std::string canonical_form(const Space& s) {
  const int n = s.n();
  if (n > kMaxCanonicalGround)
    throw TopologyError(TopologyErrc::ground_too_large,
                        "canonical_form is limited to ground size " +
                            std::to_string(kMaxCanonicalGround) + ", got " + std::to_string(n));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best, cur;
  do {
    cur.clear();
    for (Subset o : s.opens()) {
      std::uint32_t m = 0;
      for (int i = 0; i < n; ++i)
        if (o.contains(i)) m |= 1u << perm[i];
      cur.push_back(m);
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::string bytes;
  bytes.reserve(best.size() + 2);
  bytes.push_back(static_cast<char>(n));
  bytes.push_back(static_cast<char>(best.size()));
  for (std::uint32_t m : best) bytes.push_back(static_cast<char>(m));
  return bytes;
}

// All total functions from X to Y as value tables, in lexicographic table
// order, optionally filtered by a property conjunction.
inline std::vector<SpaceMap> enumerate_maps(std::shared_ptr<const Space> x,
                                            std::shared_ptr<const Space> y,
                                            const std::vector<MapProperty>& filter = {}) {
  std::vector<SpaceMap> out;
  std::vector<int> table(x->n(), 0);
  for (;;) {
    SpaceMap m(x, y, table);
    bool keep = true;
    for (MapProperty p : filter)
      if (!check_map_property(m, p)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(std::move(m));
    int k = x->n() - 1;
    while (k >= 0 && table[k] == y->n() - 1) table[k--] = 0;
    if (k < 0) break;
    ++table[k];
  }
  return out;
}

inline std::vector<SpaceMap> enumerate_maps(const Space& x, const Space& y,
                                            const std::vector<MapProperty>& filter = {}) {
  return enumerate_maps(std::make_shared<Space>(x), std::make_shared<Space>(y), filter);
}

}  // namespace hstar
