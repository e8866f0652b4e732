#pragma once

// Matroid quotients, flag matroids and their polytopes, twisted Bruhat
// interval polytopes, and the projection property.

#include <vector>

#include "mvlab/matroid.hpp"
#include "mvlab/perm.hpp"

namespace mvlab {

// True iff n is a quotient of m: rank_m(B) - rank_m(A) >= rank_n(B) - rank_n(A)
// for every nested pair A ⊆ B (full 3^n sweep).  Requires rank(m) > rank(n).
bool is_quotient(const Matroid& m, const Matroid& n);

class FlagMatroid {
 public:
  // Constituents on a common ground set, strictly increasing ranks, each
  // consecutive pair a matroid quotient (validated).
  explicit FlagMatroid(std::vector<Matroid> constituents);

  int n() const { return constituents_.front().n(); }
  const std::vector<Matroid>& constituents() const { return constituents_; }

 private:
  std::vector<Matroid> constituents_;
};

// Minkowski sum of the constituent polytopes.
GenPermutahedron flag_polytope(const FlagMatroid& fm);

// The full flag whose i-th constituent has bases proj_i([u, v]).  Each basis
// family is exchange-validated; a failure would falsify the decomposition
// theorem and raises an error.
FlagMatroid bip_constituents(const Permutation& u, const Permutation& v);

// (n+1-w^{-1}(1), ..., n+1-w^{-1}(n)).
LatticePoint twisted_point(const Permutation& w);

// Hull of the twisted points of [u, v].  Coincides exactly with
// flag_polytope(bip_constituents(u, v)); the calibration found the identity
// translation, asserted over S3 and S4 in the tests.
GenPermutahedron twisted_bip(const Permutation& u, const Permutation& v);

// proj_k([u, v]) == [proj_k(u), proj_k(v)] in the Gale order for every k.
bool projection_property(const Permutation& u, const Permutation& v);

}  // namespace mvlab
