#pragma once

// Shared corpus generators for the test suites.  Everything is seeded and
// deterministic.

#include <random>
#include <utility>
#include <vector>

#include "mvlab/matroid.hpp"
#include "mvlab/polytope.hpp"

namespace mvlab::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random integer submodular table: a weighted sum of simplex support
// functions plus a (possibly negative) translation.
inline std::vector<Value> random_submodular_table(int n, Rng& rng) {
  const Mask N = Mask{1} << n;
  std::vector<Value> table(N, 0);
  const int pieces = rand_int(rng, 1, 2 * n);
  for (int p = 0; p < pieces; ++p) {
    const Mask t = static_cast<Mask>(rand_int(rng, 1, static_cast<int>(N) - 1));
    const Value w = rand_int(rng, 1, 3);
    for (Mask s = 0; s < N; ++s)
      if (s & t) table[s] += w;
  }
  std::vector<Value> shift(n);
  for (auto& x : shift) x = rand_int(rng, -3, 3);
  for (Mask s = 1; s < N; ++s)
    for (int e : mask_elements(s)) table[s] += shift[e - 1];
  return table;
}

inline GenPermutahedron random_polytope(int n, Rng& rng) {
  return GenPermutahedron::from_submodular(n, random_submodular_table(n, rng));
}

// Random lattice path matroid M[A, B] on [n].
inline Matroid random_lpm(int n, Rng& rng) {
  const int k = rand_int(rng, 1, n - 1);
  const auto subsets = k_subsets(n, k);
  while (true) {
    const Subset a(n, subsets[rand_int(rng, 0, static_cast<int>(subsets.size()) - 1)]);
    const Subset b(n, subsets[rand_int(rng, 0, static_cast<int>(subsets.size()) - 1)]);
    if (gale_leq(a, b)) return lattice_path_matroid(a, b);
  }
}

// Every lattice path matroid polytope on [n] (all Gale pairs A <= B, all ranks).
inline std::vector<std::pair<Subset, Subset>> all_lpm_pairs(int n) {
  std::vector<std::pair<Subset, Subset>> out;
  for (int k = 1; k < n; ++k) {
    const auto subsets = k_subsets(n, k);
    for (Mask a : subsets)
      for (Mask b : subsets) {
        const Subset sa(n, a), sb(n, b);
        if (gale_leq(sa, sb)) out.emplace_back(sa, sb);
      }
  }
  return out;
}

}  // namespace mvlab::testing
