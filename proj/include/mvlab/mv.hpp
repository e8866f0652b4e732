#pragma once

// MV certification via the positive tropical Plucker relations and the
// type-A crystal structure (raising/lowering operators, weight).

#include <optional>
#include <vector>

#include "mvlab/polytope.hpp"

namespace mvlab {

// A failed relation, reported in the supermodular (min) form:
// lhs = mu^(Sb) + mu^(Sac), rhs = min(mu^(Sa) + mu^(Sbc), mu^(Sab) + mu^(Sc)).
struct PluckerWitness {
  Subset s;
  int a = 0, b = 0, c = 0;
  Value lhs = 0;
  Value rhs = 0;
};

// The (S,a,b,c) relation in its two algebraic forms.  The supermodular form
// at (S,a,b,c) is identically the submodular form at the complementary tuple
// ([n] \ (S+a+b+c), a, b, c); at a FIXED tuple the two forms are inequivalent.
bool plucker_supermodular(const GenPermutahedron& p, const Subset& s, int a, int b, int c);
bool plucker_submodular(const GenPermutahedron& p, const Subset& s, int a, int b, int c);

// Supermodular form, cross-checked against the complementary submodular form.
bool check_plucker(const GenPermutahedron& p, const Subset& s, int a, int b, int c);

// First failing tuple in lexicographic (S mask, a, b, c) order, or nullopt.
// OpenMP-parallel over S; mvlab::serial holds the reference sweep.
std::optional<PluckerWitness> mv_witness(const GenPermutahedron& p);
bool is_mv(const GenPermutahedron& p);

namespace serial {
std::optional<PluckerWitness> mv_witness(const GenPermutahedron& p);
}

// c = mu([n] \ s_i[i]) - mu([n] \ [i]) - 1, the raising-offset constant.
Value crystal_c(const GenPermutahedron& p, int i);

// Number of times the lowering operator applies in direction i; zero exactly
// when the top vertices selected by w0 and s_i w0 coincide.
Value epsilon(const GenPermutahedron& p, int i);

// Raising operator.  raise_op validates that p is MV first; raise_table is
// the bare table rewrite (used by raise_power, where the Demazure identity
// holds for arbitrary diagrams regardless of MV-ness).
GenPermutahedron raise_table(const GenPermutahedron& p, int i);
GenPermutahedron raise_op(const GenPermutahedron& p, int i);
GenPermutahedron raise_power(const GenPermutahedron& p, int i, int m);

// Lowering operator: nullopt when epsilon(p, i) == 0, otherwise the unique
// MV polytope q with raise_op(q, i) == p.  The touched table entries are
// recovered by propagating tropical Plucker relations outward from the
// forced mask [n] \ [i], and the result is verified by re-raising.
std::optional<GenPermutahedron> lower_op(const GenPermutahedron& p, int i);

// wt(P) = the vertex selected by w0.
LatticePoint weight(const GenPermutahedron& p);

// Product over consecutive interval blocks in the order given:
// mu(S) = sum over parts of mu_j(S restricted to block j).
GenPermutahedron product(const std::vector<GenPermutahedron>& parts);

}  // namespace mvlab
