#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace hstar {

// Points of a ground set are indices 0..n-1; a Subset packs membership into
// the low n bits of a word. Ground sizes above kMaxGround are rejected at
// Space construction.
inline constexpr int kMaxGround = 32;

class Subset {
 public:
  Subset() = default;
  constexpr Subset(std::uint32_t bits, int ground) noexcept
      : bits_(bits), ground_(static_cast<std::uint8_t>(ground)) {}

  static constexpr Subset empty(int ground) noexcept { return {0u, ground}; }
  static constexpr Subset full(int ground) noexcept {
    return {ground >= kMaxGround ? ~0u : (1u << ground) - 1u, ground};
  }
  static Subset of(std::initializer_list<int> points, int ground) noexcept {
    std::uint32_t b = 0;
    for (int p : points) b |= 1u << p;
    return {b, ground};
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr int ground() const noexcept { return ground_; }
  constexpr bool contains(int point) const noexcept { return (bits_ >> point) & 1u; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool is_empty() const noexcept { return bits_ == 0; }
  constexpr bool is_full() const noexcept { return bits_ == full(ground_).bits_; }

  constexpr Subset complement() const noexcept { return {bits_ ^ full(ground_).bits_, ground_}; }
  constexpr Subset unite(Subset o) const noexcept { return {bits_ | o.bits_, ground_}; }
  constexpr Subset intersect(Subset o) const noexcept { return {bits_ & o.bits_, ground_}; }
  constexpr Subset minus(Subset o) const noexcept { return {bits_ & ~o.bits_, ground_}; }
  constexpr bool subset_of(Subset o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(Subset o) const noexcept { return (bits_ & o.bits_) == 0; }

  // Ordered by the unsigned value of the bit pattern; this is the canonical
  // enumeration order for subsets everywhere in the engine.
  constexpr auto operator<=>(const Subset&) const = default;

  std::string to_string() const {
    std::string s = "{";
    for (int i = 0; i < ground_; ++i) {
      if (!contains(i)) continue;
      if (s.size() > 1) s += ',';
      s += point_name(i);
    }
    return s + "}";
  }

  // Display names for anonymous points: p,q,r,s,t,u for small grounds.
  static std::string point_name(int i) {
    static constexpr char kLetters[] = "pqrstu";
    if (i < 6) return std::string(1, kLetters[i]);
    return "x" + std::to_string(i);
  }

 private:
  std::uint32_t bits_ = 0;
  std::uint8_t ground_ = 0;
};

}  // namespace hstar
