#pragma once

// Permutations of [n] in one-line notation, the strong and (left) weak
// Bruhat orders, and the projections proj_k(w) = {w(1),...,w(k)}.

#include <vector>

#include "mvlab/subset.hpp"

namespace mvlab {

class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);  // validates

  static Permutation identity(int n);
  static Permutation longest(int n);                 // n, n-1, ..., 1
  static Permutation transposition(int i, int n);    // s_i = (i, i+1)

  int n() const { return static_cast<int>(line_.size()); }
  int operator()(int i) const { return line_[i - 1]; }  // w(i), 1-based
  const std::vector<int>& one_line() const { return line_; }

  Permutation inverse() const;
  int length() const;  // inversion count

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> line_;
};

// Composition: (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

// {w(1),...,w(k)}.  Throws unless 1 <= k <= n.
Subset proj_k(const Permutation& w, int k);

// Strong Bruhat order via the projection criterion:
// u <= v iff proj_k(u) <= proj_k(v) in Gale order for every k < n.
// Agrees with the covering-graph BFS oracle (tested for n <= 5).
bool bruhat_leq(const Permutation& u, const Permutation& v);

// Left weak order: v reachable from u by length-increasing left
// multiplications by simple transpositions.
bool weak_leq(const Permutation& u, const Permutation& v);

// All w with u <= w <= v in the strong order.  Throws unless u <= v.
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v);

// All of S_n in lexicographic one-line order.  Guarded to n <= 9.
std::vector<Permutation> all_permutations(int n);

}  // namespace mvlab
