#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hstar/enumerate.hpp"
#include "hstar/map.hpp"
#include "hstar/separation.hpp"

namespace hstar {

// ---------------------------------------------------------------------------
// The audited claim catalog. Every numbered claim the engine can check gets a
// tag, a universe shape, and a checker. Audits are bounded-universe evidence,
// not proofs: the driver quantifies each claim over all instances within the
// bounds and records every instance where the hypothesis holds but the
// conclusion fails.
// ---------------------------------------------------------------------------

enum class TheoremId : std::uint8_t {
  T1_10,
  R1_4,
  R1_8,
  T2_2,
  L2_3,
  T2_4,
  T2_5,
  T2_6,
  T2_7,
  T3_2a,
  T3_2b,
  T3_2c,
  T3_3,
  L3_4,
  T3_5,
  R3_6,
  T3_7,
  T3_8,
  C3_9,
  T3_10,
  T3_11,
  T3_12,
  T4_1,
  L4_2,
  T4_3,
  C4_4,
  L4_5,
  L4_6,
};

inline constexpr int kTheoremCount = 28;

enum class UniverseShape : std::uint8_t { space, map, composition };

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  UniverseShape shape;
  std::string_view claim;
};

inline constexpr std::array<TheoremInfo, kTheoremCount> kTheorems = {{
    {TheoremId::T1_10, "T1.10", UniverseShape::space,
     "the three renderings of hstar-normality agree"},
    {TheoremId::R1_4, "R1.4", UniverseShape::space,
     "the forward implications of the closed-set ladder hold for every subset"},
    {TheoremId::R1_8, "R1.8", UniverseShape::space,
     "normal implies g-normal implies hstar-normal"},
    {TheoremId::T2_2, "T2.2", UniverseShape::map,
     "strongly hstar-closed iff every set D with an hstar-open guard around its preimage "
     "admits an hstar-open envelope S with D inside S and preimage(S) inside the guard"},
    {TheoremId::L2_3, "L2.3", UniverseShape::map,
     "the neighborhood and inclusion renderings of almost hstar-irresoluteness agree"},
    {TheoremId::T2_4, "T2.4", UniverseShape::map,
     "almost hstar-irresolute iff images of hstar-closures of hstar-open sets stay inside "
     "the hstar-closures of their images"},
    {TheoremId::T2_5, "T2.5", UniverseShape::map,
     "continuous strongly-hstar-open almost-hstar-irresolute surjections carry "
     "hstar-normality to the codomain"},
    {TheoremId::T2_6, "T2.6", UniverseShape::map,
     "continuous strongly-hstar-closed surjections carry hstar-normality to the codomain"},
    {TheoremId::T2_7, "T2.7", UniverseShape::map,
     "almost hstarg-closed surjections are exactly those where regular-open guards admit "
     "hstarg-open envelopes"},
    {TheoremId::T3_2a, "T3.2a", UniverseShape::composition,
     "hstar-ghstar-closed after (continuous and hstar-ghstar-closed) composes to "
     "hstar-ghstar-closed"},
    {TheoremId::T3_2b, "T3.2b", UniverseShape::composition,
     "strongly hstar-closed followed by hstar-ghstar-closed composes to hstar-ghstar-closed"},
    {TheoremId::T3_2c, "T3.2c", UniverseShape::composition,
     "quasi hstar-closed followed by ghstar-closed composes to hstar-ghstar-closed"},
    {TheoremId::T3_3, "T3.3", UniverseShape::composition,
     "if the composition is hstar-ghstar-closed and the first factor is an hstar-irresolute "
     "surjection, the second factor is hstar-ghstar-closed"},
    {TheoremId::L3_4, "L3.4", UniverseShape::map,
     "hstar-ghstar-closed iff hstar-open guards admit ghstar-open envelopes"},
    {TheoremId::T3_5, "T3.5", UniverseShape::map,
     "continuous hstar-ghstar-closed maps send ghstar-closed sets to ghstar-closed sets"},
    {TheoremId::R3_6, "R3.6", UniverseShape::map,
     "hstar-irresolute implies hstar-ghstar-continuous"},
    {TheoremId::T3_7, "T3.7", UniverseShape::map,
     "hstar-ghstar-continuous iff preimages of hstar-open sets are ghstar-open"},
    {TheoremId::T3_8, "T3.8", UniverseShape::map,
     "hstar-ghstar-continuous maps pull ghstar-closed sets back to ghstar-closed sets"},
    {TheoremId::C3_9, "C3.9", UniverseShape::map,
     "closed hstar-irresolute maps pull ghstar-closed sets back to ghstar-closed sets"},
    {TheoremId::T3_10, "T3.10", UniverseShape::map,
     "open bijective hstar-ghstar-continuous maps pull ghstar-closed sets back to "
     "ghstar-closed sets"},
    {TheoremId::T3_11, "T3.11", UniverseShape::composition,
     "if the composition is hstar-ghstar-closed and the second factor is an open bijective "
     "hstar-ghstar-continuous map, the first factor is hstar-ghstar-closed"},
    {TheoremId::T3_12, "T3.12", UniverseShape::composition,
     "if the composition is hstar-ghstar-closed and the second factor is a closed "
     "hstar-ghstar-continuous injection, the first factor is hstar-ghstar-closed"},
    {TheoremId::T4_1, "T4.1", UniverseShape::map,
     "continuous quasi-hstar-closed surjections carry hstar-normal domains to normal "
     "codomains"},
    {TheoremId::L4_2, "L4.2", UniverseShape::space,
     "a subset is ghstar-open exactly when every closed set inside it sits inside its "
     "hstar-interior"},
    {TheoremId::T4_3, "T4.3", UniverseShape::map,
     "closed hstar-ghstar-continuous injections pull hstar-normality back to the domain"},
    {TheoremId::C4_4, "C4.4", UniverseShape::map,
     "closed hstar-irresolute injections pull hstar-normality back to the domain"},
    {TheoremId::L4_5, "L4.5", UniverseShape::map,
     "almost ghstar-closed iff regular-open guards admit ghstar-open envelopes"},
    {TheoremId::L4_6, "L4.6", UniverseShape::map,
     "under almost ghstar-closed maps, every closed set whose preimage has a regular-open "
     "guard admits an hstar-open envelope inside the guard"},
}};

constexpr const TheoremInfo& theorem_info(TheoremId id) noexcept {
  return kTheorems[static_cast<std::size_t>(id)];
}

inline std::optional<TheoremId> theorem_from_name(std::string_view name) noexcept {
  for (const auto& t : kTheorems)
    if (t.name == name) return t.id;
  return std::nullopt;
}

// Per-shape universe caps. Space audits sample ground size 5 on top of the
// exhaustive sweep; map universes explode past ground size 3.
constexpr int max_audit_ground(UniverseShape shape) noexcept {
  switch (shape) {
    case UniverseShape::space: return 5;
    case UniverseShape::map: return 3;
    case UniverseShape::composition: return 3;
  }
  return 3;
}
constexpr int exhaustive_audit_ground(UniverseShape shape) noexcept {
  switch (shape) {
    case UniverseShape::space: return 4;
    case UniverseShape::map: return 3;
    case UniverseShape::composition: return 2;
  }
  return 2;
}
constexpr int default_audit_ground(UniverseShape shape) noexcept {
  switch (shape) {
    case UniverseShape::space: return 4;
    case UniverseShape::map: return 3;
    case UniverseShape::composition: return 3;
  }
  return 3;
}

// ---------------------------------------------------------------------------
// Witnesses and reports
// ---------------------------------------------------------------------------

// A fully serialized failing instance: the spaces involved, map tables
// between consecutive spaces, and any subsets that pin down the failure.
// Witnesses are self-contained; recheck_witness re-runs the theorem checker
// on them from scratch.
struct Witness {
  std::vector<Space> spaces;
  std::vector<std::vector<int>> map_tables;
  std::vector<Subset> subsets;
  std::string note;
};

struct AuditBounds {
  int max_n = 0;             // 0 = use the theorem's default
  std::uint64_t seed = 1;    // drives the sampled stage, recorded in the report
  int samples = 4000;        // sampled-stage instance count
  std::int64_t max_witnesses = -1;  // -1 = record every counterexample
};

struct AuditReport {
  TheoremId theorem;
  int max_n = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  int samples = 0;
  std::int64_t instances_checked = 0;
  std::int64_t skipped_precondition = 0;
  std::int64_t counterexample_count = 0;
  std::vector<Witness> counterexamples;
};

enum class CheckStatus : std::uint8_t { pass, fail, skip };

// ---------------------------------------------------------------------------
// Shared space catalog. Enumeration output is deterministic, so caching the
// catalogs (and with them each space's lazily computed extents) across audits
// is safe. Not synchronized; audits run single-threaded.
// ---------------------------------------------------------------------------

inline const std::vector<std::shared_ptr<const Space>>& space_catalog(int n) {
  static std::array<std::vector<std::shared_ptr<const Space>>, kMaxEnumGround + 1> cache;
  auto& slot = cache[n];
  if (slot.empty()) {
    for (Space& s : enumerate_topologies(n))
      slot.push_back(std::make_shared<const Space>(std::move(s)));
  }
  return slot;
}

// ---------------------------------------------------------------------------
// Instance checkers
// ---------------------------------------------------------------------------

namespace detail {

// Forward-implication edges of the closed-set ladder, audited by R1.4.
inline constexpr std::pair<FamilyId, FamilyId> kForwardChain[] = {
    {FamilyId::closed, FamilyId::alpha_closed},
    {FamilyId::alpha_closed, FamilyId::h_closed},
    {FamilyId::h_closed, FamilyId::hstar_closed},
    {FamilyId::hstar_closed, FamilyId::gh_closed},
    {FamilyId::gh_closed, FamilyId::rgh_closed},
    {FamilyId::hstar_closed, FamilyId::ghstar_closed},
    {FamilyId::ghstar_closed, FamilyId::rghstar_closed},
    {FamilyId::closed, FamilyId::g_closed},
};

inline std::string flag_note(FamilyId have, FamilyId missing, Subset a) {
  return "subset " + a.to_string() + " is " + std::string(family_name(have)) + " but not " +
         std::string(family_name(missing));
}

inline CheckStatus check_space_instance(TheoremId t, const Space& s, Witness& w) {
  switch (t) {
    case TheoremId::T1_10: {
      const bool f1 = hstar_normal_characterization(s, 1);
      const bool f2 = hstar_normal_characterization(s, 2);
      const bool f3 = hstar_normal_characterization(s, 3);
      if (f1 == f2 && f2 == f3) return CheckStatus::pass;
      w.note = "renderings disagree: separation=" + std::to_string(f1) +
               " cover=" + std::to_string(f2) + " squeeze=" + std::to_string(f3);
      return CheckStatus::fail;
    }
    case TheoremId::R1_4: {
      for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
        const Subset a{m, s.n()};
        for (auto [src, dst] : kForwardChain) {
          if (in_family(s, a, src) && !in_family(s, a, dst)) {
            w.subsets = {a};
            w.note = flag_note(src, dst, a);
            return CheckStatus::fail;
          }
        }
      }
      return CheckStatus::pass;
    }
    case TheoremId::R1_8: {
      const bool n0 = is_normal_variant(s, NormalityVariant::normal);
      const bool g0 = is_normal_variant(s, NormalityVariant::g_normal);
      const bool h0 = is_normal_variant(s, NormalityVariant::hstar_normal);
      if ((n0 && !g0) || (g0 && !h0)) {
        w.note = std::string("hierarchy broken: normal=") + std::to_string(n0) +
                 " g-normal=" + std::to_string(g0) + " hstar-normal=" + std::to_string(h0);
        return CheckStatus::fail;
      }
      return CheckStatus::pass;
    }
    case TheoremId::L4_2: {
      for (std::uint32_t m = 0; m < s.subset_count(); ++m) {
        const Subset a{m, s.n()};
        const IffPair p = ghstar_open_characterization(s, a);
        if (!p.agree()) {
          w.subsets = {a};
          w.note = "ghstar-open=" + std::to_string(p.lhs) +
                   " closed-inside-hstar-interior=" + std::to_string(p.rhs) + " for " +
                   a.to_string();
          return CheckStatus::fail;
        }
      }
      return CheckStatus::pass;
    }
    default:
      return CheckStatus::pass;
  }
}

inline CheckStatus iff_outcome(const IffPair& p, std::string_view what, Witness& w) {
  if (p.agree()) return CheckStatus::pass;
  w.note = std::string(what) + ": lhs=" + std::to_string(p.lhs) +
           " rhs=" + std::to_string(p.rhs);
  return CheckStatus::fail;
}

inline CheckStatus check_map_instance(TheoremId t, const SpaceMap& m, Witness& w) {
  using P = MapProperty;
  using F = FamilyId;
  const auto prop = [&](P p) { return check_map_property(m, p); };
  switch (t) {
    case TheoremId::T2_2:
      return iff_outcome(characterization_check(m, CharacterizationId::T2_2), "T2.2", w);
    case TheoremId::L2_3:
      return iff_outcome(characterization_check(m, CharacterizationId::L2_3), "L2.3", w);
    case TheoremId::T2_4:
      return iff_outcome(characterization_check(m, CharacterizationId::T2_4), "T2.4", w);
    case TheoremId::T2_5: {
      if (!m.surjective()) return CheckStatus::skip;
      if (prop(P::continuous) && prop(P::strongly_hstar_open) &&
          prop(P::almost_hstar_irresolute) &&
          is_normal_variant(m.domain(), NormalityVariant::hstar_normal) &&
          !is_normal_variant(m.codomain(), NormalityVariant::hstar_normal)) {
        w.note = "codomain lost hstar-normality";
        return CheckStatus::fail;
      }
      return CheckStatus::pass;
    }
    case TheoremId::T2_6: {
      if (!m.surjective()) return CheckStatus::skip;
      if (prop(P::continuous) && prop(P::strongly_hstar_closed) &&
          is_normal_variant(m.domain(), NormalityVariant::hstar_normal) &&
          !is_normal_variant(m.codomain(), NormalityVariant::hstar_normal)) {
        w.note = "codomain lost hstar-normality";
        return CheckStatus::fail;
      }
      return CheckStatus::pass;
    }
    case TheoremId::T2_7:
      if (!m.surjective()) return CheckStatus::skip;
      return iff_outcome(characterization_check(m, CharacterizationId::T2_7), "T2.7", w);
    case TheoremId::L3_4:
      return iff_outcome(characterization_check(m, CharacterizationId::L3_4), "L3.4", w);
    case TheoremId::T3_5: {
      if (!(prop(P::continuous) && prop(P::hstar_ghstar_closed))) return CheckStatus::pass;
      for (Subset n0 : extent(m.domain(), F::ghstar_closed)) {
        if (!in_family(m.codomain(), m.image(n0), F::ghstar_closed)) {
          w.subsets = {n0};
          w.note = "image of ghstar-closed " + n0.to_string() + " is not ghstar-closed";
          return CheckStatus::fail;
        }
      }
      return CheckStatus::pass;
    }
    case TheoremId::R3_6: {
      if (prop(P::hstar_irresolute) && !prop(P::hstar_ghstar_continuous)) {
        w.note = "hstar-irresolute but not hstar-ghstar-continuous";
        return CheckStatus::fail;
      }
      return CheckStatus::pass;
    }
    case TheoremId::T3_7:
      return iff_outcome(characterization_check(m, CharacterizationId::T3_7), "T3.7", w);
    case TheoremId::T3_8:
    case TheoremId::C3_9:
    case TheoremId::T3_10: {
      if (t == TheoremId::C3_9 && !prop(P::closed_map)) return CheckStatus::skip;
      if (t == TheoremId::T3_10 && !(prop(P::open_map) && m.bijective())) return CheckStatus::skip;
      const bool hyp = (t == TheoremId::C3_9) ? prop(P::hstar_irresolute)
                                              : prop(P::hstar_ghstar_continuous);
      if (!hyp) return CheckStatus::pass;
      for (Subset v : extent(m.codomain(), F::ghstar_closed)) {
        if (!in_family(m.domain(), m.preimage(v), F::ghstar_closed)) {
          w.subsets = {v};
          w.note = "preimage of ghstar-closed " + v.to_string() + " is not ghstar-closed";
          return CheckStatus::fail;
        }
      }
      return CheckStatus::pass;
    }
    case TheoremId::T4_1: {
      if (!m.surjective()) return CheckStatus::skip;
      if (prop(P::continuous) && prop(P::quasi_hstar_closed) &&
          is_normal_variant(m.domain(), NormalityVariant::hstar_normal) &&
          !is_normal_variant(m.codomain(), NormalityVariant::normal)) {
        w.note = "codomain is not normal";
        return CheckStatus::fail;
      }
      return CheckStatus::pass;
    }
    case TheoremId::T4_3:
    case TheoremId::C4_4: {
      if (!(prop(P::closed_map) && m.injective())) return CheckStatus::skip;
      const bool hyp = (t == TheoremId::T4_3) ? prop(P::hstar_ghstar_continuous)
                                              : prop(P::hstar_irresolute);
      if (hyp && is_normal_variant(m.codomain(), NormalityVariant::hstar_normal) &&
          !is_normal_variant(m.domain(), NormalityVariant::hstar_normal)) {
        w.note = "domain is not hstar-normal";
        return CheckStatus::fail;
      }
      return CheckStatus::pass;
    }
    case TheoremId::L4_5:
      return iff_outcome(characterization_check(m, CharacterizationId::L4_5), "L4.5", w);
    case TheoremId::L4_6: {
      if (!prop(P::almost_ghstar_closed)) return CheckStatus::pass;
      const auto& hstar_opens = extent(m.codomain(), F::hstar_open);
      for (Subset g : m.codomain().closeds()) {
        const Subset pre = m.preimage(g);
        for (Subset q : extent(m.domain(), F::regular_open)) {
          if (!pre.subset_of(q)) continue;
          bool found = false;
          for (Subset s0 : hstar_opens) {
            if (g.subset_of(s0) && m.preimage(s0).subset_of(q)) {
              found = true;
              break;
            }
          }
          if (!found) {
            w.subsets = {g, q};
            w.note = "no hstar-open envelope for closed " + g.to_string() +
                     " inside regular-open guard " + q.to_string();
            return CheckStatus::fail;
          }
        }
      }
      return CheckStatus::pass;
    }
    default:
      return CheckStatus::pass;
  }
}

inline CheckStatus check_composition_instance(TheoremId t, const SpaceMap& f, const SpaceMap& g,
                                              Witness& w) {
  using P = MapProperty;
  const auto fail_composed = [&](std::string note) {
    w.note = std::move(note);
    return CheckStatus::fail;
  };
  switch (t) {
    case TheoremId::T3_2a: {
      if (check_map_property(f, P::hstar_ghstar_closed) &&
          check_map_property(g, P::continuous) &&
          check_map_property(g, P::hstar_ghstar_closed) &&
          !check_map_property(compose(f, g), P::hstar_ghstar_closed))
        return fail_composed("composition is not hstar-ghstar-closed");
      return CheckStatus::pass;
    }
    case TheoremId::T3_2b: {
      if (check_map_property(f, P::strongly_hstar_closed) &&
          check_map_property(g, P::hstar_ghstar_closed) &&
          !check_map_property(compose(f, g), P::hstar_ghstar_closed))
        return fail_composed("composition is not hstar-ghstar-closed");
      return CheckStatus::pass;
    }
    case TheoremId::T3_2c: {
      if (check_map_property(f, P::quasi_hstar_closed) &&
          check_map_property(g, P::ghstar_closed_map) &&
          !check_map_property(compose(f, g), P::hstar_ghstar_closed))
        return fail_composed("composition is not hstar-ghstar-closed");
      return CheckStatus::pass;
    }
    case TheoremId::T3_3: {
      if (!f.surjective()) return CheckStatus::skip;
      if (check_map_property(compose(f, g), P::hstar_ghstar_closed) &&
          check_map_property(f, P::hstar_irresolute) &&
          !check_map_property(g, P::hstar_ghstar_closed))
        return fail_composed("second factor is not hstar-ghstar-closed");
      return CheckStatus::pass;
    }
    case TheoremId::T3_11: {
      if (!(check_map_property(g, P::open_map) && g.bijective())) return CheckStatus::skip;
      if (check_map_property(compose(f, g), P::hstar_ghstar_closed) &&
          check_map_property(g, P::hstar_ghstar_continuous) &&
          !check_map_property(f, P::hstar_ghstar_closed))
        return fail_composed("first factor is not hstar-ghstar-closed");
      return CheckStatus::pass;
    }
    case TheoremId::T3_12: {
      if (!(check_map_property(g, P::closed_map) && g.injective())) return CheckStatus::skip;
      if (check_map_property(compose(f, g), P::hstar_ghstar_closed) &&
          check_map_property(g, P::hstar_ghstar_continuous) &&
          !check_map_property(f, P::hstar_ghstar_closed))
        return fail_composed("first factor is not hstar-ghstar-closed");
      return CheckStatus::pass;
    }
    default:
      return CheckStatus::pass;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Audit driver
// ---------------------------------------------------------------------------

inline AuditReport audit_theorem(TheoremId t, AuditBounds bounds = {}) {
  const TheoremInfo& info = theorem_info(t);
  if (bounds.max_n == 0) bounds.max_n = default_audit_ground(info.shape);
  if (bounds.max_n < 1 || bounds.max_n > max_audit_ground(info.shape))
    throw TopologyError(TopologyErrc::ground_too_large,
                        std::string("audit ") + std::string(info.name) +
                            " supports --max-n between 1 and " +
                            std::to_string(max_audit_ground(info.shape)));

  AuditReport report;
  report.theorem = t;
  report.max_n = bounds.max_n;

  const auto note_failure = [&](CheckStatus st, Witness&& w) {
    if (st == CheckStatus::skip) {
      ++report.skipped_precondition;
      return;
    }
    ++report.instances_checked;
    if (st != CheckStatus::fail) return;
    ++report.counterexample_count;
    if (bounds.max_witnesses >= 0 &&
        static_cast<std::int64_t>(report.counterexamples.size()) >= bounds.max_witnesses)
      return;
    report.counterexamples.push_back(std::move(w));
  };

  // Deterministic sampled draws; plain modulo keeps the sequence identical
  // across standard libraries.
  std::mt19937_64 rng(bounds.seed);
  const auto draw = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };

  switch (info.shape) {
    case UniverseShape::space: {
      const int exhaustive_to = std::min(bounds.max_n, exhaustive_audit_ground(info.shape));
      for (int n = 1; n <= exhaustive_to; ++n) {
        for (const auto& sp : space_catalog(n)) {
          Witness w;
          const CheckStatus st = detail::check_space_instance(t, *sp, w);
          if (st == CheckStatus::fail) w.spaces = {*sp};
          note_failure(st, std::move(w));
        }
      }
      if (bounds.max_n > exhaustive_to) {
        report.sampled = true;
        report.seed = bounds.seed;
        report.samples = bounds.samples;
        const auto& pool = space_catalog(bounds.max_n);
        for (int i = 0; i < bounds.samples; ++i) {
          const auto& sp = pool[draw(pool.size())];
          Witness w;
          const CheckStatus st = detail::check_space_instance(t, *sp, w);
          if (st == CheckStatus::fail) w.spaces = {*sp};
          note_failure(st, std::move(w));
        }
      }
      break;
    }
    case UniverseShape::map: {
      for (int nx = 1; nx <= bounds.max_n; ++nx) {
        for (int ny = 1; ny <= bounds.max_n; ++ny) {
          for (const auto& x : space_catalog(nx)) {
            for (const auto& y : space_catalog(ny)) {
              std::vector<int> table(static_cast<std::size_t>(nx), 0);
              for (;;) {
                SpaceMap m(x, y, table);
                Witness w;
                const CheckStatus st = detail::check_map_instance(t, m, w);
                if (st == CheckStatus::fail) {
                  w.spaces = {*x, *y};
                  w.map_tables = {table};
                }
                note_failure(st, std::move(w));
                int k = nx - 1;
                while (k >= 0 && table[k] == ny - 1) table[k--] = 0;
                if (k < 0) break;
                ++table[k];
              }
            }
          }
        }
      }
      break;
    }
    case UniverseShape::composition: {
      const int exhaustive_to = std::min(bounds.max_n, exhaustive_audit_ground(info.shape));
      const auto run_pair = [&](const std::shared_ptr<const Space>& x,
                                const std::shared_ptr<const Space>& y,
                                const std::shared_ptr<const Space>& z,
                                const std::vector<int>& ft, const std::vector<int>& gt) {
        SpaceMap f(x, y, ft), g(y, z, gt);
        Witness w;
        const CheckStatus st = detail::check_composition_instance(t, f, g, w);
        if (st == CheckStatus::fail) {
          w.spaces = {*x, *y, *z};
          w.map_tables = {ft, gt};
        }
        note_failure(st, std::move(w));
      };
      for (int nx = 1; nx <= exhaustive_to; ++nx)
        for (int ny = 1; ny <= exhaustive_to; ++ny)
          for (int nz = 1; nz <= exhaustive_to; ++nz)
            for (const auto& x : space_catalog(nx))
              for (const auto& y : space_catalog(ny))
                for (const auto& z : space_catalog(nz)) {
                  std::vector<int> ft(static_cast<std::size_t>(nx), 0);
                  for (;;) {
                    std::vector<int> gt(static_cast<std::size_t>(ny), 0);
                    for (;;) {
                      run_pair(x, y, z, ft, gt);
                      int k = ny - 1;
                      while (k >= 0 && gt[k] == nz - 1) gt[k--] = 0;
                      if (k < 0) break;
                      ++gt[k];
                    }
                    int k = nx - 1;
                    while (k >= 0 && ft[k] == ny - 1) ft[k--] = 0;
                    if (k < 0) break;
                    ++ft[k];
                  }
                }
      if (bounds.max_n > exhaustive_to) {
        report.sampled = true;
        report.seed = bounds.seed;
        report.samples = bounds.samples;
        std::vector<std::shared_ptr<const Space>> pool;
        for (int n = 1; n <= bounds.max_n; ++n)
          for (const auto& sp : space_catalog(n)) pool.push_back(sp);
        for (int i = 0; i < bounds.samples; ++i) {
          const auto& x = pool[draw(pool.size())];
          const auto& y = pool[draw(pool.size())];
          const auto& z = pool[draw(pool.size())];
          std::vector<int> ft(static_cast<std::size_t>(x->n()));
          for (auto& v : ft) v = static_cast<int>(draw(static_cast<std::size_t>(y->n())));
          std::vector<int> gt(static_cast<std::size_t>(y->n()));
          for (auto& v : gt) v = static_cast<int>(draw(static_cast<std::size_t>(z->n())));
          run_pair(x, y, z, ft, gt);
        }
      }
      break;
    }
  }
  return report;
}

// Re-runs the theorem checker on a deserialized witness; true means the
// instance still fails. Spaces are revalidated on the way in.
inline bool recheck_witness(TheoremId t, const Witness& w) {
  const TheoremInfo& info = theorem_info(t);
  std::vector<std::shared_ptr<const Space>> spaces;
  for (const Space& s : w.spaces)
    spaces.push_back(std::make_shared<const Space>(s.n(), s.opens()));
  Witness scratch;
  switch (info.shape) {
    case UniverseShape::space:
      if (spaces.size() != 1) return false;
      return detail::check_space_instance(t, *spaces[0], scratch) == CheckStatus::fail;
    case UniverseShape::map: {
      if (spaces.size() != 2 || w.map_tables.size() != 1) return false;
      SpaceMap m(spaces[0], spaces[1], w.map_tables[0]);
      return detail::check_map_instance(t, m, scratch) == CheckStatus::fail;
    }
    case UniverseShape::composition: {
      if (spaces.size() != 3 || w.map_tables.size() != 2) return false;
      SpaceMap f(spaces[0], spaces[1], w.map_tables[0]);
      SpaceMap g(spaces[1], spaces[2], w.map_tables[1]);
      return detail::check_composition_instance(t, f, g, scratch) == CheckStatus::fail;
    }
  }
  return false;
}

}  // namespace hstar
