#pragma once

// Generalized permutahedra as dense integer submodular-function tables of
// length 2^n, with duality, greedy vertices, Minkowski operations and
// support-function hulls.  Tables are validated on construction: the full
// O(4^n) pairwise sweep for n <= 10 and the equivalent |S△T| <= 2 local
// criterion above that.

#include <optional>
#include <span>
#include <vector>

#include "mvlab/perm.hpp"
#include "mvlab/subset.hpp"

namespace mvlab {

using LatticePoint = std::vector<Value>;

struct SubmodularViolation {
  Mask s = 0;
  Mask t = 0;
};

// First violated pair (ascending s, then t > s), or nullopt if submodular.
// The default kernel is OpenMP-parallel over s; mvlab::serial holds the
// plain-loop reference used by the tests and the benchmark.
std::optional<SubmodularViolation> first_submodular_violation(std::span<const Value> table, int n);
std::optional<SubmodularViolation> first_local_violation(std::span<const Value> table, int n);

namespace serial {
std::optional<SubmodularViolation> first_submodular_violation(std::span<const Value> table, int n);
}

class GenPermutahedron {
 public:
  // Validates table[0] == 0 and submodularity; throws with a witness otherwise.
  static GenPermutahedron from_submodular(int n, std::vector<Value> table);
  static GenPermutahedron point(const LatticePoint& v);

  int n() const { return n_; }
  Value mu(Mask s) const { return table_[s]; }
  const std::vector<Value>& table() const { return table_; }

  Value rank() const { return table_.back(); }
  bool is_lattice() const { return true; }  // integer tables; guard for a rational extension

  friend bool operator==(const GenPermutahedron&, const GenPermutahedron&) = default;

 private:
  GenPermutahedron(int n, std::vector<Value> table) : n_(n), table_(std::move(table)) {}
  int n_ = 0;
  std::vector<Value> table_;
};

// mu^P(S) = mu_P([n]) - mu_P([n]\S), indexed by mask.
std::vector<Value> to_supermodular(const GenPermutahedron& p);

// Greedy vertex selected by w: x_{w(k)} = mu(w[1..k]) - mu(w[1..k-1]).
// Equals the argmin of (w^{-1}(1),...,w^{-1}(n)) . v over the vertex set.
LatticePoint vertex(const GenPermutahedron& p, const Permutation& w);

// Exact vertex set, deduplicated and sorted; sweeps S_n, so n <= 9.
std::vector<LatticePoint> vertices(const GenPermutahedron& p);

GenPermutahedron minkowski_sum(const GenPermutahedron& p, const GenPermutahedron& q);
GenPermutahedron dilate(const GenPermutahedron& p, Value a);  // a >= 1
GenPermutahedron translate(const GenPermutahedron& p, const LatticePoint& t);

// Support function of a point set; throws if the result is not submodular
// (i.e. the hull is not a generalized permutahedron).
GenPermutahedron hull_from_points(const std::vector<LatticePoint>& points);

// Not part of the validity contract; see from_submodular.
bool is_monotone(const GenPermutahedron& p);

}  // namespace mvlab
