#pragma once

#include <initializer_list>
#include <vector>

#include "hstar/space.hpp"

namespace fixtures {

inline hstar::Space make(int n, std::initializer_list<std::uint32_t> masks) {
  std::vector<hstar::Subset> opens;
  for (std::uint32_t m : masks) opens.emplace_back(m, n);
  return hstar::Space(n, std::move(opens));
}

// Four points p,q,r,s with opens {∅,{p},{q},{p,q},{p,q,r},X}.
inline hstar::Space ladder4() { return make(4, {0u, 1u, 2u, 3u, 7u, 15u}); }

// Five points p,q,r,s,t; opens generated by {p},{s},{t}.
inline hstar::Space generated5() {
  return make(5, {0u, 1u, 8u, 16u, 9u, 17u, 24u, 25u, 31u});
}

// Four points where the open family is closed under complement.
inline hstar::Space clopen4() { return make(4, {0u, 1u, 2u, 3u, 12u, 13u, 14u, 15u}); }

inline hstar::Space sierpinski() { return make(2, {0u, 1u, 3u}); }

inline hstar::Space discrete(int n) {
  std::vector<hstar::Subset> opens;
  for (std::uint32_t m = 0; m < (1u << n); ++m) opens.emplace_back(m, n);
  return hstar::Space(n, std::move(opens));
}

inline hstar::Space indiscrete(int n) {
  return hstar::Space(n, {hstar::Subset::empty(n), hstar::Subset::full(n)});
}

}  // namespace fixtures
