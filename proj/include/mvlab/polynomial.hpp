#pragma once

// Exact multivariate polynomials over the integers, divided-difference and
// Demazure operators, Schubert and key polynomials, Rothe and skyline
// diagrams, and Newton polytopes.  Coefficient arithmetic is overflow-checked
// 64-bit: correctness never silently hinges on magnitudes.

#include <map>
#include <vector>

#include "mvlab/perm.hpp"
#include "mvlab/polytope.hpp"
#include "mvlab/schubitope.hpp"

namespace mvlab {

using Exponents = std::vector<int>;
using Composition = std::vector<int>;  // n nonnegative parts

class Polynomial {
 public:
  explicit Polynomial(int n);
  static Polynomial monomial(Exponents e, Value coeff);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Value>& terms() const { return terms_; }
  Value coeff(const Exponents& e) const;

  void add_term(const Exponents& e, Value coeff);  // drops cancellations

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;

  // Exchange the variables x_i and x_{i+1}.
  Polynomial swap_variables(int i) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int n_ = 0;
  std::map<Exponents, Value> terms_;  // exponent vector -> nonzero coefficient
};

// (f - s_i f) / (x_i - x_{i+1}), by synthetic division in x_i with the
// remainder asserted zero.
Polynomial divided_difference(const Polynomial& f, int i);

// (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}); equals divided_difference of
// x_i * f (asserted in tests).
Polynomial demazure(const Polynomial& f, int i);

// Reduced word for u as a product of simple transpositions, leftmost factor
// first, found by repeatedly peeling the smallest descent.
std::vector<int> reduced_word(const Permutation& u);

// Divided differences along a reduced word of w^{-1} w0 applied to the
// staircase monomial x_1^{n-1} ... x_{n-1}.
Polynomial schubert(const Permutation& w);

// Demazure recursion on the leftmost ascent of the composition.
Polynomial key_polynomial(const Composition& alpha);

// Column j of the Rothe diagram collects the rows i with i < w^{-1}(j) and
// j <= w(i); empty columns are dropped.  The row/column convention is pinned
// by the Newton == Schubitope identity over S3/S4 in the tests.
Diagram rothe(const Permutation& w);

// Column j = {i : alpha_i >= j}; empty columns dropped.
Diagram skyline(const Composition& alpha);

// Hull of the support exponent vectors.  Throws on the zero polynomial or
// when the support is not a generalized permutahedron.
GenPermutahedron newton(const Polynomial& f);

}  // namespace mvlab
