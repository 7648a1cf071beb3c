#pragma once

// Test-side oracle, independent of the ladder machinery in the library: every
// class predicate is typed out from its definition, operators are full
// per-mask tables built in one eager pass, and extents are packed into one
// word of membership bits per class. Only Space/Subset accessors are shared.
// Ground sizes up to 6 (membership words are 64 bits).

#include <array>
#include <cstdint>
#include <vector>

#include "hstar/space.hpp"

namespace oracle {

using hstar::Space;
using hstar::Subset;

using Mask = std::uint32_t;   // one subset
using Family = std::uint64_t; // membership bit per subset mask

struct DirectTables {
  int n;
  Mask full;
  std::uint32_t count;
  std::vector<Mask> cl, in, s_cl, h_cl, hstar_cl;
  Family open = 0, closed = 0, regular_open = 0, semi_open = 0, semi_closed = 0,
         alpha_star = 0, c_set = 0, w_closed = 0, w_open = 0, h_closed = 0, h_open = 0,
         gh_closed = 0, regular_h_open = 0, rgh_closed = 0, hcg_closed = 0, hcg_open = 0,
         hstar_closed = 0, hstar_open = 0, g_closed = 0, ghstar_closed = 0,
         hstarg_closed = 0, regular_hstar_open = 0, rghstar_closed = 0;

  bool has(Family f, Mask m) const { return (f >> m) & 1ull; }

  explicit DirectTables(const Space& s)
      : n(s.n()), full((1u << n) - 1u), count(1u << n) {
    for (Subset o : s.opens()) open |= 1ull << o.bits();
    for (Mask m = 0; m <= full; ++m)
      if (has(open, full & ~m)) closed |= 1ull << m;

    in.assign(count, 0);
    cl.assign(count, 0);
    for (Mask m = 0; m <= full; ++m) {
      Mask i = 0;
      for (Mask u = 0; u <= full; ++u)
        if (has(open, u) && (u & ~m) == 0) i |= u;
      in[m] = i;
      Mask c = full;
      for (Mask f = 0; f <= full; ++f)
        if (has(closed, f) && (m & ~f) == 0) c &= f;
      cl[m] = c;
    }

    for (Mask m = 0; m <= full; ++m) {
      if (in[cl[m]] == m) regular_open |= 1ull << m;
      if ((m & ~cl[in[m]]) == 0) semi_open |= 1ull << m;      // A ⊆ cl(int A)
      if ((in[cl[m]] & ~m) == 0) semi_closed |= 1ull << m;    // int(cl A) ⊆ A
      if (in[cl[in[m]]] == in[m]) alpha_star |= 1ull << m;
    }
    for (Mask u = 0; u <= full; ++u)
      if (has(open, u))
        for (Mask v = 0; v <= full; ++v)
          if (has(alpha_star, v)) c_set |= 1ull << (u & v);

    s_cl = closure_table(semi_closed);

    // w-closed: cl(A) inside every semi-open superset.
    w_closed = guarded(cl, semi_open);
    for (Mask m = 0; m <= full; ++m)
      if (has(w_closed, full & ~m)) w_open |= 1ull << m;

    h_closed = guarded(s_cl, w_open);
    for (Mask m = 0; m <= full; ++m)
      if (has(h_closed, full & ~m)) h_open |= 1ull << m;
    h_cl = closure_table(h_closed);

    gh_closed = guarded(h_cl, h_open);
    regular_h_open = sandwich(h_cl);
    rgh_closed = guarded(h_cl, regular_h_open);
    hcg_closed = guarded(h_cl, c_set);
    for (Mask m = 0; m <= full; ++m)
      if (has(hcg_closed, full & ~m)) hcg_open |= 1ull << m;
    hstar_closed = guarded(h_cl, hcg_open);
    for (Mask m = 0; m <= full; ++m)
      if (has(hstar_closed, full & ~m)) hstar_open |= 1ull << m;
    hstar_cl = closure_table(hstar_closed);

    g_closed = guarded(cl, open);
    ghstar_closed = guarded(hstar_cl, hstar_open);
    hstarg_closed = guarded(hstar_cl, open);
    regular_hstar_open = sandwich(hstar_cl);
    rghstar_closed = guarded(hstar_cl, regular_hstar_open);
  }

 private:
  std::vector<Mask> closure_table(Family fam) const {
    std::vector<Mask> t(count);
    for (Mask m = 0; m <= full; ++m) {
      Mask c = full;
      for (Mask f = 0; f <= full; ++f)
        if (has(fam, f) && (m & ~f) == 0) c &= f;
      t[m] = c;
    }
    return t;
  }

  Family guarded(const std::vector<Mask>& op, Family guard) const {
    Family out = 0;
    for (Mask m = 0; m <= full; ++m) {
      bool ok = true;
      for (Mask u = 0; u <= full && ok; ++u)
        if (has(guard, u) && (m & ~u) == 0 && (op[m] & ~u) != 0) ok = false;
      if (ok) out |= 1ull << m;
    }
    return out;
  }

  Family sandwich(const std::vector<Mask>& op) const {
    Family out = 0;
    for (Mask m = 0; m <= full; ++m)
      for (Mask u = 0; u <= full; ++u)
        if (has(regular_open, u) && (u & ~m) == 0 && (m & ~op[u]) == 0) {
          out |= 1ull << m;
          break;
        }
    return out;
  }
};

// Brute-force topology enumeration: every subset family containing the empty
// set and the full set, filtered for closure under pairwise union and
// intersection. Feasible up to n = 4 (2^14 candidate families).
inline std::vector<Family> enumerate_families_naive(int n) {
  const Mask full = (1u << n) - 1u;
  const std::uint32_t nsub = 1u << n;
  const Family forced = 1ull | (1ull << full);
  std::vector<Family> out;
  for (Family fam = 0; fam < (1ull << nsub); ++fam) {
    if ((fam & forced) != forced) continue;
    bool ok = true;
    for (Mask a = 0; a <= full && ok; ++a) {
      if (!((fam >> a) & 1ull)) continue;
      for (Mask b = a; b <= full && ok; ++b) {
        if (!((fam >> b) & 1ull)) continue;
        if (!((fam >> (a | b)) & 1ull) || !((fam >> (a & b)) & 1ull)) ok = false;
      }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

inline Family family_bits_of(const Space& s) {
  Family fam = 0;
  for (Subset o : s.opens()) fam |= 1ull << o.bits();
  return fam;
}

}  // namespace oracle
