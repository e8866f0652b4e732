#pragma once

// Matroids from validated basis families: rank functions, matroid polytopes,
// lattice path and Schubert matroid constructors, LPM detection, the
// hypersimplex membership test, and exhaustive small-matroid enumeration.

#include <vector>

#include "mvlab/polytope.hpp"

namespace mvlab {

class Matroid {
 public:
  // Validates the basis-exchange axiom; throws with a witness otherwise.
  // Rank-0 matroids (single empty basis) are allowed.
  static Matroid from_bases(int n, std::vector<Mask> bases);

  int n() const { return n_; }
  int rank() const { return k_; }
  const std::vector<Mask>& bases() const { return bases_; }  // subset_lex sorted

  int rank_of(Mask s) const;            // max |S ∩ B| over bases
  std::vector<Value> rank_table() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int k, std::vector<Mask> bases)
      : n_(n), k_(k), bases_(std::move(bases)) {}
  int n_ = 0;
  int k_ = 0;
  std::vector<Mask> bases_;
};

// The polytope with table[S] = rank_of(S); equals the hull of the basis
// indicator vectors (cross-checked in tests).
GenPermutahedron matroid_polytope(const Matroid& m);

// Bases = the Gale interval [s, t].  Throws unless s <= t.
Matroid lattice_path_matroid(const Subset& s, const Subset& t);

// Bases = all |a|-subsets that are <= a in Gale order.
Matroid schubert_matroid(const Subset& a);

// Gale-extreme bases, via the matroid greedy algorithm over the weight
// vectors (1,...,n) and (n,...,1).
Subset gale_min_basis(const Matroid& m);
Subset gale_max_basis(const Matroid& m);

// True iff the bases are exactly the Gale interval of the extreme bases.
bool is_lattice_path(const Matroid& m);

// GGMS test: every vertex has 0/1 coordinates summing to k.
bool is_matroid_polytope(const GenPermutahedron& p, int k);

// Every nonempty exchange-closed family of k-subsets of [n], one Matroid
// each, in ascending family-bitmask order over subset_lex-ordered k-subsets.
// Labeled matroids; isomorphic relabelings are distinct.  Requires n <= 6.
std::vector<Matroid> enumerate_matroids(int n, int k);

}  // namespace mvlab
