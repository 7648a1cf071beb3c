#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hstar/ladder.hpp"
#include "hstar/space.hpp"

namespace hstar {

// A total function between two finite spaces, as an explicit value table.
// Domain and codomain are shared so that a stream of maps between the same
// pair of spaces reuses one set of extent caches.
class SpaceMap {
 public:
  SpaceMap(std::shared_ptr<const Space> domain, std::shared_ptr<const Space> codomain,
           std::vector<int> table)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    if (static_cast<int>(table.size()) != domain_->n())
      throw TopologyError(TopologyErrc::domain_mismatch,
                          "map table must assign exactly one image to each domain point");
    table_.reserve(table.size());
    for (int v : table) {
      if (v < 0 || v >= codomain_->n())
        throw TopologyError(TopologyErrc::domain_mismatch,
                            "map table entry " + std::to_string(v) + " is outside the codomain");
      table_.push_back(static_cast<std::uint8_t>(v));
    }
  }

  static SpaceMap of(const Space& domain, const Space& codomain, std::vector<int> table) {
    return SpaceMap(std::make_shared<Space>(domain), std::make_shared<Space>(codomain),
                    std::move(table));
  }

  const Space& domain() const noexcept { return *domain_; }
  const Space& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const Space>& domain_ptr() const noexcept { return domain_; }
  const std::shared_ptr<const Space>& codomain_ptr() const noexcept { return codomain_; }

  int apply(int point) const noexcept { return table_[point]; }
  std::vector<int> table() const { return {table_.begin(), table_.end()}; }

  Subset image(Subset a) const noexcept {
    std::uint32_t bits = 0;
    for (int i = 0; i < domain_->n(); ++i)
      if (a.contains(i)) bits |= 1u << table_[i];
    return {bits, codomain_->n()};
  }

  Subset preimage(Subset b) const noexcept {
    std::uint32_t bits = 0;
    for (int i = 0; i < domain_->n(); ++i)
      if (b.contains(table_[i])) bits |= 1u << i;
    return {bits, domain_->n()};
  }

  bool surjective() const noexcept {
    return image(domain_->full_set()) == codomain_->full_set();
  }
  bool injective() const noexcept {
    std::uint32_t seen = 0;
    for (std::uint8_t y : table_) {
      if (seen & (1u << y)) return false;
      seen |= 1u << y;
    }
    return true;
  }
  bool bijective() const noexcept { return injective() && surjective(); }

 private:
  std::shared_ptr<const Space> domain_, codomain_;
  std::vector<std::uint8_t> table_;
};

// compose(f, g) applies f first: the result sends i to g(f(i)). Requires the
// codomain of f and the domain of g to be the same space (same ground size
// and structurally equal open family).
inline SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
  if (!(f.codomain() == g.domain()))
    throw TopologyError(TopologyErrc::domain_mismatch,
                        "compose: codomain of the first map must equal the domain of the second");
  std::vector<int> table(f.domain().n());
  for (int i = 0; i < f.domain().n(); ++i) table[i] = g.apply(f.apply(i));
  return {f.domain_ptr(), g.codomain_ptr(), std::move(table)};
}

// ---------------------------------------------------------------------------
// Map properties
// ---------------------------------------------------------------------------

enum class MapProperty : std::uint8_t {
  continuous,
  closed_map,
  open_map,
  r_map,
  completely_continuous,
  rc_continuous,
  strongly_hstar_open,
  strongly_hstar_closed,
  almost_hstar_irresolute,
  hstar_closed_map,
  hstarg_closed_map,
  ghstar_closed_map,
  quasi_hstar_closed,
  hstar_hstarg_closed,
  hstar_ghstar_closed,
  almost_ghstar_closed,
  almost_hstarg_closed,
  hstar_ghstar_continuous,
  hstar_irresolute,
  surjective,
  injective,
  bijective,
};

inline constexpr int kMapPropertyCount = 22;

inline constexpr std::array<std::string_view, kMapPropertyCount> kMapPropertyNames = {
    "continuous",
    "closed-map",
    "open-map",
    "r-map",
    "completely-continuous",
    "rc-continuous",
    "strongly-hstar-open",
    "strongly-hstar-closed",
    "almost-hstar-irresolute",
    "hstar-closed-map",
    "hstarg-closed-map",
    "ghstar-closed-map",
    "quasi-hstar-closed",
    "hstar-hstarg-closed",
    "hstar-ghstar-closed",
    "almost-ghstar-closed",
    "almost-hstarg-closed",
    "hstar-ghstar-continuous",
    "hstar-irresolute",
    "surjective",
    "injective",
    "bijective",
};

constexpr std::string_view map_property_name(MapProperty p) noexcept {
  return kMapPropertyNames[static_cast<std::size_t>(p)];
}

inline std::optional<MapProperty> map_property_from_name(std::string_view name) noexcept {
  for (int i = 0; i < kMapPropertyCount; ++i)
    if (kMapPropertyNames[i] == name) return static_cast<MapProperty>(i);
  return std::nullopt;
}

namespace detail {

// Every image of a domain-side family member lands in the codomain family.
inline bool forward_preserves(const SpaceMap& m, FamilyId from, FamilyId to) {
  for (Subset d : extent(m.domain(), from))
    if (!in_family(m.codomain(), m.image(d), to)) return false;
  return true;
}

// Every preimage of a codomain-side family member lands in the domain family.
inline bool backward_preserves(const SpaceMap& m, FamilyId from, FamilyId to) {
  for (Subset v : extent(m.codomain(), from))
    if (!in_family(m.domain(), m.preimage(v), to)) return false;
  return true;
}

}  // namespace detail

// The inclusion rendering of almost hstar-irresoluteness: preimages of
// hstar-open sets sit inside the hstar-interior of their hstar-closure.
// This is the canonical decision procedure for the property.
inline bool almost_hstar_irresolute_inclusion(const SpaceMap& m) {
  const Space& x = m.domain();
  for (Subset s : extent(m.codomain(), FamilyId::hstar_open)) {
    const Subset pre = m.preimage(s);
    const Subset hull =
        derived_interior(x, derived_closure(x, pre, ClosureOp::hstar_cl), ClosureOp::hstar_cl);
    if (!pre.subset_of(hull)) return false;
  }
  return true;
}

// The neighborhood rendering: for every point and every set V whose image
// point lies in the hstar-interior of V, the hstar-closure of the preimage
// of V is an hstar-neighborhood of the point. Kept separate so agreement of
// the two renderings can itself be audited.
inline bool almost_hstar_irresolute_neighborhood(const SpaceMap& m) {
  const Space& x = m.domain();
  const Space& y = m.codomain();
  for (std::uint32_t vb = 0; vb < y.subset_count(); ++vb) {
    const Subset v{vb, y.n()};
    const Subset v_int = derived_interior(y, v, ClosureOp::hstar_cl);
    if (v_int.is_empty()) continue;
    const Subset hull = derived_interior(
        x, derived_closure(x, m.preimage(v), ClosureOp::hstar_cl), ClosureOp::hstar_cl);
    for (int p = 0; p < x.n(); ++p)
      if (v_int.contains(m.apply(p)) && !hull.contains(p)) return false;
  }
  return true;
}

inline bool check_map_property(const SpaceMap& m, MapProperty p) {
  using F = FamilyId;
  switch (p) {
    case MapProperty::continuous: return detail::backward_preserves(m, F::open, F::open);
    case MapProperty::closed_map: return detail::forward_preserves(m, F::closed, F::closed);
    case MapProperty::open_map: return detail::forward_preserves(m, F::open, F::open);
    case MapProperty::r_map:
      return detail::backward_preserves(m, F::regular_open, F::regular_open);
    case MapProperty::completely_continuous:
      return detail::backward_preserves(m, F::open, F::regular_open);
    case MapProperty::rc_continuous:
      return detail::backward_preserves(m, F::regular_closed, F::regular_closed);
    case MapProperty::strongly_hstar_open:
      return detail::forward_preserves(m, F::hstar_open, F::hstar_open);
    case MapProperty::strongly_hstar_closed:
      return detail::forward_preserves(m, F::hstar_closed, F::hstar_closed);
    case MapProperty::almost_hstar_irresolute: return almost_hstar_irresolute_inclusion(m);
    case MapProperty::hstar_closed_map:
      return detail::forward_preserves(m, F::closed, F::hstar_closed);
    case MapProperty::hstarg_closed_map:
      return detail::forward_preserves(m, F::closed, F::hstarg_closed);
    case MapProperty::ghstar_closed_map:
      return detail::forward_preserves(m, F::closed, F::ghstar_closed);
    case MapProperty::quasi_hstar_closed:
      return detail::forward_preserves(m, F::hstar_closed, F::closed);
    case MapProperty::hstar_hstarg_closed:
      return detail::forward_preserves(m, F::hstar_closed, F::hstarg_closed);
    case MapProperty::hstar_ghstar_closed:
      return detail::forward_preserves(m, F::hstar_closed, F::ghstar_closed);
    case MapProperty::almost_ghstar_closed:
      return detail::forward_preserves(m, F::regular_closed, F::ghstar_closed);
    case MapProperty::almost_hstarg_closed:
      // Images of regular-closed sets are hstarg-closed, the hstarg twin of
      // almost-ghstar-closed.
      return detail::forward_preserves(m, F::regular_closed, F::hstarg_closed);
    case MapProperty::hstar_ghstar_continuous:
      return detail::backward_preserves(m, F::hstar_closed, F::ghstar_closed);
    case MapProperty::hstar_irresolute:
      return detail::backward_preserves(m, F::hstar_open, F::hstar_open);
    case MapProperty::surjective: return m.surjective();
    case MapProperty::injective: return m.injective();
    case MapProperty::bijective: return m.bijective();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Characterization pairs: both sides of an "iff", computed independently so
// an auditor can assert they agree.
// ---------------------------------------------------------------------------

enum class CharacterizationId : std::uint8_t {
  T2_2,
  L2_3,
  T2_4,
  T2_7,
  L3_4,
  T3_7,
  L4_2_ambient,
  L4_5,
};

inline constexpr int kCharacterizationCount = 8;

inline constexpr std::array<std::string_view, kCharacterizationCount> kCharacterizationNames = {
    "T2.2", "L2.3", "T2.4", "T2.7", "L3.4", "T3.7", "L4.2-ambient", "L4.5"};

constexpr std::string_view characterization_name(CharacterizationId c) noexcept {
  return kCharacterizationNames[static_cast<std::size_t>(c)];
}

inline std::optional<CharacterizationId> characterization_from_name(std::string_view name) {
  for (int i = 0; i < kCharacterizationCount; ++i)
    if (kCharacterizationNames[i] == name) return static_cast<CharacterizationId>(i);
  return std::nullopt;
}

struct IffPair {
  bool lhs;
  bool rhs;
  bool agree() const noexcept { return lhs == rhs; }
};

namespace detail {

// For every target set D ⊆ Y and every guard-family member Q ⊇ preimage(D),
// some envelope-family member S satisfies D ⊆ S and preimage(S) ⊆ Q.
inline bool envelope_condition(const SpaceMap& m, FamilyId guard_on_domain,
                               FamilyId envelope_on_codomain) {
  const Space& y = m.codomain();
  const auto& guards = extent(m.domain(), guard_on_domain);
  const auto& envelopes = extent(y, envelope_on_codomain);
  std::vector<Subset> env_pre;
  env_pre.reserve(envelopes.size());
  for (Subset s : envelopes) env_pre.push_back(m.preimage(s));
  for (std::uint32_t db = 0; db < y.subset_count(); ++db) {
    const Subset d{db, y.n()};
    const Subset pre = m.preimage(d);
    for (Subset q : guards) {
      if (!pre.subset_of(q)) continue;
      bool found = false;
      for (std::size_t k = 0; k < envelopes.size(); ++k) {
        if (d.subset_of(envelopes[k]) && env_pre[k].subset_of(q)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace detail

// lhs: A is ghstar-open. rhs: every closed set inside A sits inside the
// hstar-interior of A.
inline IffPair ghstar_open_characterization(const Space& s, Subset a) {
  const bool lhs = in_family(s, a, FamilyId::ghstar_open);
  const Subset hint = derived_interior(s, a, ClosureOp::hstar_cl);
  bool rhs = true;
  for (Subset f : s.closeds()) {
    if (f.subset_of(a) && !f.subset_of(hint)) {
      rhs = false;
      break;
    }
  }
  return {lhs, rhs};
}

inline IffPair characterization_check(const SpaceMap& m, CharacterizationId which) {
  using P = MapProperty;
  using F = FamilyId;
  switch (which) {
    case CharacterizationId::T2_2:
      return {check_map_property(m, P::strongly_hstar_closed),
              detail::envelope_condition(m, F::hstar_open, F::hstar_open)};
    case CharacterizationId::L2_3:
      return {almost_hstar_irresolute_neighborhood(m), almost_hstar_irresolute_inclusion(m)};
    case CharacterizationId::T2_4: {
      // Type-correct reading: the image of the hstar-closure of every
      // hstar-open set lies in the hstar-closure of its image.
      const Space& x = m.domain();
      const Space& y = m.codomain();
      bool rhs = true;
      for (Subset q : extent(x, F::hstar_open)) {
        const Subset lhs_set = m.image(derived_closure(x, q, ClosureOp::hstar_cl));
        if (!lhs_set.subset_of(derived_closure(y, m.image(q), ClosureOp::hstar_cl))) {
          rhs = false;
          break;
        }
      }
      return {check_map_property(m, P::almost_hstar_irresolute), rhs};
    }
    case CharacterizationId::T2_7:
      if (!m.surjective())
        throw TopologyError(TopologyErrc::precondition_unmet,
                            "T2.7 characterization requires a surjective map");
      return {check_map_property(m, P::almost_hstarg_closed),
              detail::envelope_condition(m, F::regular_open, F::hstarg_open)};
    case CharacterizationId::L3_4:
      return {check_map_property(m, P::hstar_ghstar_closed),
              detail::envelope_condition(m, F::hstar_open, F::ghstar_open)};
    case CharacterizationId::T3_7:
      return {check_map_property(m, P::hstar_ghstar_continuous),
              detail::backward_preserves(m, F::hstar_open, F::ghstar_open)};
    case CharacterizationId::L4_2_ambient: {
      // Evaluated over every subset of the map's domain: returns the first
      // disagreeing pair, or (true, true) when the characterization holds
      // throughout.
      const Space& x = m.domain();
      for (std::uint32_t ab = 0; ab < x.subset_count(); ++ab) {
        const IffPair p = ghstar_open_characterization(x, Subset{ab, x.n()});
        if (!p.agree()) return p;
      }
      return {true, true};
    }
    case CharacterizationId::L4_5:
      return {check_map_property(m, P::almost_ghstar_closed),
              detail::envelope_condition(m, F::regular_open, F::ghstar_open)};
  }
  return {false, false};
}

}  // namespace hstar
