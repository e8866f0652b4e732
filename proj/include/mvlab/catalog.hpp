#pragma once

// Constructors for the classical example families: graphic zonotopes, graph
// associahedra, nestohedra, and Pitman-Stanley polytopes, with their
// closed-form set functions.

#include <utility>
#include <vector>

#include "mvlab/perm.hpp"
#include "mvlab/polytope.hpp"

namespace mvlab {

class SimpleGraph {
 public:
  // Edges as {i, j} pairs; loops and duplicates rejected.
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);
  static SimpleGraph star(int n);   // center 1
  static SimpleGraph cycle(int n);  // requires n >= 3
  static SimpleGraph edgeless(int n);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  int induced_edge_count(Mask s) const;
  bool connected() const;

  SimpleGraph relabel(const Permutation& w) const;  // vertex i -> w(i)

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized i < j, sorted
};

// Supermodular table mu^(S) = |E(G|_S)|, converted to the submodular table
// through the complement duality.
GenPermutahedron graphic_zonotope(const SimpleGraph& g);

// The MV classification predicate for zonotopes: every connected component
// induces a complete graph and occupies an interval of [n].
bool components_are_interval_cliques(const SimpleGraph& g);

// Connected induced subsets of size >= 2.
std::vector<Subset> tubes(const SimpleGraph& g);

// Minkowski sum of the simplices of the tubes.
GenPermutahedron graph_associahedron(const SimpleGraph& g);

class BuildingSet {
 public:
  // Requires closure: S, T in B with S ∩ T nonempty implies S ∪ T in B.
  BuildingSet(int n, std::vector<Mask> members);
  int n() const { return n_; }
  const std::vector<Mask>& members() const { return members_; }

 private:
  int n_ = 0;
  std::vector<Mask> members_;
};

GenPermutahedron nestohedron(const BuildingSet& b);

// Closed form mu(S) = a_m + ... + a_n with m = min(S); cross-checked against
// the Minkowski sum of initial-interval simplices in the tests.
GenPermutahedron pitman_stanley(const std::vector<Value>& a);

}  // namespace mvlab
