#pragma once

// Diagrams (column multisets) and their Schubitopes: the parenthesis-word
// submodular function, the Schubert-matroid Minkowski decomposition, ascents
// and row swaps, strong separation, and the orthodontic order search.

#include <optional>
#include <string>
#include <vector>

#include "mvlab/polytope.hpp"

namespace mvlab {

class Diagram {
 public:
  Diagram(int n, std::vector<Mask> columns);  // validates columns against [n]

  int n() const { return n_; }
  int column_count() const { return static_cast<int>(columns_.size()); }
  const std::vector<Mask>& columns() const { return columns_; }
  Mask column(int j) const;  // 1-based, throws when out of range

  // Multiset semantics: equality ignores column order.
  std::vector<Mask> canonical_columns() const;
  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.n_ == b.n_ && a.canonical_columns() == b.canonical_columns();
  }

 private:
  int n_ = 0;
  std::vector<Mask> columns_;
};

// Word of column j against S, rows read top to bottom:
// '(' cell absent and row in S, ')' cell present and row not in S,
// '*' cell present and row in S.
std::string column_word(int j, const Subset& s, const Diagram& d);

// Matched-pair count (left-to-right stack, innermost first) plus stars.
int theta(int j, const Subset& s, const Diagram& d);

// table[S] = sum over columns of theta.  schubitope_minkowski builds the same
// polytope as the Minkowski sum of Schubert matroid polytopes of the columns;
// the two routes are cross-checked in tests.
GenPermutahedron schubitope(const Diagram& d);
GenPermutahedron schubitope_minkowski(const Diagram& d);

// Every column C satisfies C ∩ {i, i+1} != {i+1}.
bool has_ascent(const Diagram& d, int i);

Diagram swap_rows(const Diagram& d, int i);

// Number of columns containing i but not i+1.
int ell(const Diagram& d, int i);

// Pairwise: one of the column-difference sets lies entirely below the other.
bool strongly_separated(const Diagram& d);

struct OrthodonticMove {
  enum Kind { kRemoveColumn, kUnswapRows } kind;
  int i = 0;       // row index for kUnswapRows
  Mask column = 0; // removed column for kRemoveColumn
};

// A sequence of downward moves reducing d to the empty diagram (remove a
// lex-minimal initial-interval column, or pass to s_i(d) when that diagram
// has an ascent at i), or nullopt when the bounded search exhausts.  Non-null
// exactly when d is strongly separated (tested).
std::optional<std::vector<OrthodonticMove>> orthodontic_chain(const Diagram& d);

}  // namespace mvlab
