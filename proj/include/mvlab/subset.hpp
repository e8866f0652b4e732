#pragma once

// Ground-set combinatorics: subsets of [n] = {1,...,n} as bitmasks
// (element i sits at bit i-1) and the Gale order on k-subsets.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mvlab {

using Mask = std::uint32_t;
using Value = std::int64_t;

inline constexpr int kMaxGroundSet = 16;

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }
inline Mask element_mask(int i) { return Mask{1} << (i - 1); }

struct Subset {
  int n = 0;
  Mask mask = 0;

  Subset() = default;
  Subset(int n, Mask mask);  // throws if n or mask out of range

  static Subset from_elements(int n, const std::vector<int>& elements);

  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
  int cardinality() const { return std::popcount(mask); }
  std::vector<int> elements() const;
  std::string to_string() const;  // "{1,3}"

  friend bool operator==(const Subset&, const Subset&) = default;
};

std::vector<int> mask_elements(Mask m);
Mask mask_from_elements(const std::vector<int>& elements, int n);

// Lexicographic order on sorted element lists; the empty set is least.
bool subset_lex_less(Mask a, Mask b);

// All k-subsets of [n] in subset_lex order.
std::vector<Mask> k_subsets(int n, int k);

// Gale order.  gale_leq is the entrywise criterion on sorted elements;
// gale_leq_by_slices is the suffix-count criterion |A ∩ {i..n}| <= |B ∩ {i..n}|.
// The two agree on all pairs of k-subsets (cross-checked in tests).
bool gale_leq(const Subset& a, const Subset& b);
bool gale_leq_by_slices(const Subset& a, const Subset& b);

// All C with a <= C <= b, in subset_lex order.  Throws unless a <= b.
std::vector<Subset> gale_interval(const Subset& a, const Subset& b);

// The subsets covering b: b \ {i} ∪ {i+1} for each i in b with i+1 not in b.
std::vector<Subset> gale_covers(const Subset& b);

}  // namespace mvlab
