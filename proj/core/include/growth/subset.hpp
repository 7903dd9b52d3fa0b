#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace growth {

/// Set of generator indices, bit i standing for generator i+1.
using Subset = std::uint32_t;

inline constexpr int kMaxRank = 16;

inline constexpr Subset full_subset(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
inline constexpr int cardinality(Subset s) { return std::popcount(s); }
inline constexpr bool contains(Subset s, int i) { return (s >> i) & 1u; }
inline constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline constexpr Subset singleton(int i) { return Subset{1} << i; }

/// Calls f(sub) for every sub ⊆ mask, in ascending numeric order.
template <class F>
void for_each_subset(Subset mask, F&& f) {
  Subset sub = 0;
  while (true) {
    f(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Calls f(sub) for every lower ⊆ sub ⊆ upper, ascending.
template <class F>
void for_each_between(Subset lower, Subset upper, F&& f) {
  for_each_subset(upper & ~lower, [&](Subset extra) { f(lower | extra); });
}

/// Zero-based member indices in increasing order.
inline std::vector<int> members(Subset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

/// One-based generator ids, as used on the command line.
inline std::vector<int> to_ids(Subset s) {
  auto out = members(s);
  for (auto& i : out) ++i;
  return out;
}

inline std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int id : to_ids(s)) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  return out + "}";
}

}  // namespace growth
