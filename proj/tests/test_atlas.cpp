#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hstar/audit.hpp"
#include "hstar/enumerate.hpp"
#include "hstar/mine.hpp"
#include "hstar/report.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace hstar;

TEST_CASE("labeled topology counts") {
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
}

TEST_CASE("generator agrees with the naive family filter") {
  // Set equality, not just counts; n = 4 doubles as the generator's
  // second-route cross-check.
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Family> naive;
    for (oracle::Family f : oracle::enumerate_families_naive(n)) naive.insert(f);
    std::set<oracle::Family> generated;
    for (const Space& s : enumerate_topologies(n)) generated.insert(oracle::family_bits_of(s));
    CHECK(naive == generated);
  }
}

TEST_CASE("enumeration order is deterministic and sorted") {
  const auto spaces = enumerate_topologies(3);
  CHECK(std::is_sorted(spaces.begin(), spaces.end(),
                       [](const Space& a, const Space& b) { return a < b; }));
  CHECK(enumerate_topologies(3) == spaces);
}

TEST_CASE("enumeration rejects out-of-range grounds") {
  CHECK_THROWS_AS(enumerate_topologies(0), TopologyError);
  CHECK_THROWS_AS(enumerate_topologies(kMaxEnumGround + 1), TopologyError);
}

TEST_CASE("canonical form is a relabeling invariant") {
  for (int n = 1; n <= 3; ++n) {
    for (const Space& s : enumerate_topologies(n)) {
      const std::string form = canonical_form(s);
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      do {
        std::vector<Subset> relabeled;
        for (Subset o : s.opens()) {
          std::uint32_t bits = 0;
          for (int i = 0; i < n; ++i)
            if (o.contains(i)) bits |= 1u << perm[i];
          relabeled.emplace_back(bits, n);
        }
        CHECK(canonical_form(Space(n, relabeled)) == form);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("canonical form separates non-homeomorphic spaces") {
  CHECK(canonical_form(fixtures::discrete(2)) != canonical_form(fixtures::indiscrete(2)));
  // Swapping p and q in the four-point fixture relabels the same topology.
  const Space swapped = fixtures::make(4, {0u, 2u, 1u, 3u, 7u, 15u});
  CHECK(canonical_form(fixtures::ladder4()) == canonical_form(swapped));
}

TEST_CASE("homeomorphism classes on three points") {
  CHECK(enumerate_topologies(3, true).size() == 9);
}

TEST_CASE("space-shaped audits are clean on small universes") {
  AuditBounds b;
  b.max_n = 3;
  const AuditReport t110 = audit_theorem(TheoremId::T1_10, b);
  CHECK(t110.instances_checked == 34);  // all labeled topologies with n <= 3
  CHECK(t110.counterexample_count == 0);
  CHECK_FALSE(t110.sampled);

  const AuditReport r14 = audit_theorem(TheoremId::R1_4, b);
  CHECK(r14.instances_checked == 34);
  CHECK(r14.counterexample_count == 0);

  const AuditReport l42 = audit_theorem(TheoremId::L4_2, b);
  CHECK(l42.counterexample_count == 0);
}

TEST_CASE("map-shaped audit over the two-point universe") {
  AuditBounds b;
  b.max_n = 2;
  const AuditReport r36 = audit_theorem(TheoremId::R3_6, b);
  // 5 spaces of ground size <= 2; all maps between ordered pairs.
  CHECK(r36.instances_checked == 77);
  CHECK(r36.skipped_precondition == 0);
  CHECK(r36.counterexample_count == 0);

  const AuditReport t27 = audit_theorem(TheoremId::T2_7, b);
  CHECK(t27.instances_checked + t27.skipped_precondition == 77);
  CHECK(t27.skipped_precondition > 0);
  CHECK(t27.counterexample_count == 0);
}

TEST_CASE("composition audit stays exhaustive below the sampling bound") {
  AuditBounds b;
  b.max_n = 2;
  const AuditReport r = audit_theorem(TheoremId::T3_2a, b);
  CHECK_FALSE(r.sampled);
  CHECK(r.instances_checked > 0);
  CHECK(r.counterexample_count == 0);
}

TEST_CASE("sampled audits are reproducible byte for byte") {
  AuditBounds b;
  b.max_n = 3;
  b.seed = 42;
  b.samples = 200;
  const std::string one = audit_report_to_json(audit_theorem(TheoremId::T3_2b, b)).dump(2);
  const std::string two = audit_report_to_json(audit_theorem(TheoremId::T3_2b, b)).dump(2);
  CHECK(one == two);
  b.seed = 43;
  const std::string three = audit_report_to_json(audit_theorem(TheoremId::T3_2b, b)).dump(2);
  CHECK(one != three);  // the seed is live, not decorative
}

TEST_CASE("audit bounds are validated") {
  AuditBounds b;
  b.max_n = max_audit_ground(UniverseShape::map) + 1;
  CHECK_THROWS_AS(audit_theorem(TheoremId::T2_2, b), TopologyError);
}

TEST_CASE("witness recheck machinery") {
  // A passing instance does not recheck as a failure.
  Witness w;
  w.spaces = {fixtures::sierpinski()};
  CHECK_FALSE(recheck_witness(TheoremId::T1_10, w));
}

TEST_CASE("witnesses survive serialization") {
  Witness w;
  w.spaces = {fixtures::ladder4(), fixtures::sierpinski()};
  w.map_tables = {{0, 0, 1, 1}};
  w.subsets = {Subset{4u, 4}};
  w.note = "round trip";
  const Witness back = witness_from_json(witness_to_json(w));
  REQUIRE(back.spaces.size() == 2);
  CHECK(back.spaces[0] == w.spaces[0]);
  CHECK(back.spaces[1] == w.spaces[1]);
  CHECK(back.map_tables == w.map_tables);
  CHECK(back.note == w.note);
  // Deserialized instances feed the checker directly.
  CHECK_FALSE(recheck_witness(TheoremId::T2_2, back));
}

TEST_CASE("the whole claim catalog audits at default bounds") {
  for (const TheoremInfo& info : kTheorems) {
    CAPTURE(info.name);
    const AuditReport r = audit_theorem(info.id);
    CHECK(r.instances_checked > 0);
    CHECK(static_cast<std::int64_t>(r.counterexamples.size()) == r.counterexample_count);
    for (const Witness& w : r.counterexamples) CHECK(recheck_witness(info.id, w));
  }
}

TEST_CASE("implication mining finds the catalog's failing edges") {
  const ImplicationLattice lattice = mine_implications(4);
  const auto edge = [&](FamilyId s, FamilyId t) -> const LatticeEdge& {
    for (const LatticeEdge& e : lattice.edges)
      if (e.source == s && e.target == t) return e;
    FAIL("edge not present");
    return lattice.edges.front();
  };

  const LatticeEdge& collapse = edge(FamilyId::hstar_closed, FamilyId::closed);
  REQUIRE_FALSE(collapse.holds);
  REQUIRE(collapse.witness.has_value());
  // Witnesses re-verify: in the source extent, not in the target extent.
  CHECK(in_family(collapse.witness->first, collapse.witness->second, FamilyId::hstar_closed));
  CHECK_FALSE(in_family(collapse.witness->first, collapse.witness->second, FamilyId::closed));

  const LatticeEdge& rgh = edge(FamilyId::rgh_closed, FamilyId::gh_closed);
  REQUIRE_FALSE(rgh.holds);
  REQUIRE(rgh.witness.has_value());
  CHECK(in_family(rgh.witness->first, rgh.witness->second, FamilyId::rgh_closed));
  CHECK_FALSE(in_family(rgh.witness->first, rgh.witness->second, FamilyId::gh_closed));

  for (auto [src, dst] : detail::kForwardChain) CHECK(edge(src, dst).holds);
}

TEST_CASE("mining reports closure in-class rates without asserting them") {
  const ImplicationLattice lattice = mine_implications(3);
  for (const ClosureInClassStat& stat : lattice.closure_stats) {
    CHECK(stat.subsets_total == 250);  // sum of 2^n over the 34 spaces
    if (stat.op == ClosureOp::s_cl) CHECK(stat.subsets_in_class == stat.subsets_total);
    // h-cl escapes its class for three subsets within the three-point universe.
    if (stat.op == ClosureOp::h_cl) CHECK(stat.subsets_in_class == 247);
  }
}

TEST_CASE("witness search honors class and normality conjunctions") {
  WitnessQuery q;
  q.class_flags = {{FamilyId::hstar_closed, true}, {FamilyId::closed, false}};
  const auto hit = find_witness(q, 4);
  REQUIRE(hit.has_value());
  CHECK(in_family(hit->first, hit->second, FamilyId::hstar_closed));
  CHECK_FALSE(in_family(hit->first, hit->second, FamilyId::closed));

  WitnessQuery impossible;
  impossible.class_flags = {{FamilyId::closed, true}, {FamilyId::g_closed, false}};
  CHECK_FALSE(find_witness(impossible, 4).has_value());

  WitnessQuery gap;
  gap.normality_flags = {{NormalityVariant::g_normal, true}, {NormalityVariant::normal, false}};
  CHECK_FALSE(find_witness(gap, 4).has_value());  // none in the n <= 4 universe

  WitnessQuery hstar_gap;
  hstar_gap.normality_flags = {{NormalityVariant::hstar_normal, true},
                               {NormalityVariant::g_normal, false}};
  const auto sep = find_witness(hstar_gap, 4);
  REQUIRE(sep.has_value());
  CHECK(is_normal_variant(sep->first, NormalityVariant::hstar_normal));
  CHECK_FALSE(is_normal_variant(sep->first, NormalityVariant::g_normal));
}
