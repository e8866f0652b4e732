#include "mvlab/schubitope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mvlab/matroid.hpp"

namespace mvlab {

Diagram::Diagram(int n, std::vector<Mask> columns) : n_(n), columns_(std::move(columns)) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("diagram row count out of range");
  for (Mask c : columns_)
    if (c & ~full_mask(n)) throw std::invalid_argument("diagram column uses rows outside [n]");
}

Mask Diagram::column(int j) const {
  if (j < 1 || j > column_count()) throw std::invalid_argument("column index out of range");
  return columns_[j - 1];
}

std::vector<Mask> Diagram::canonical_columns() const {
  std::vector<Mask> out = columns_;
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

std::string column_word(int j, const Subset& s, const Diagram& d) {
  if (s.n != d.n()) throw std::invalid_argument("column_word: ground set mismatch");
  const Mask col = d.column(j);
  std::string word;
  for (int i = 1; i <= d.n(); ++i) {
    const bool in_col = (col >> (i - 1)) & 1u;
    const bool in_s = s.contains(i);
    if (in_col && in_s)
      word += '*';
    else if (in_col)
      word += ')';
    else if (in_s)
      word += '(';
  }
  return word;
}

namespace {

int theta_of_column(Mask col, Mask s) {
  int stars = std::popcount(col & s);
  int open = 0, pairs = 0;
  Mask onesided = col ^ s;  // rows contributing '(' (in s only) or ')' (in col only)
  while (onesided) {
    const Mask bit = onesided & (~onesided + 1);
    if (s & bit)
      ++open;
    else if (open > 0) {
      --open;
      ++pairs;
    }
    onesided &= onesided - 1;
  }
  return stars + pairs;
}

}  // namespace

int theta(int j, const Subset& s, const Diagram& d) {
  if (s.n != d.n()) throw std::invalid_argument("theta: ground set mismatch");
  return theta_of_column(d.column(j), s.mask);
}

GenPermutahedron schubitope(const Diagram& d) {
  const Mask N = Mask{1} << d.n();
  std::vector<Value> table(N, 0);
  for (Mask s = 1; s < N; ++s) {
    Value acc = 0;
    for (Mask c : d.columns()) acc += theta_of_column(c, s);
    table[s] = acc;
  }
  // The empty set: every column contributes only ')' letters, no pairs.
  return GenPermutahedron::from_submodular(d.n(), std::move(table));
}

GenPermutahedron schubitope_minkowski(const Diagram& d) {
  const Mask N = Mask{1} << d.n();
  std::vector<Value> table(N, 0);
  for (Mask c : d.columns()) {
    if (c == 0) continue;  // empty column: a point at the origin
    const Matroid omega = schubert_matroid(Subset(d.n(), c));
    for (Mask s = 0; s < N; ++s) table[s] += omega.rank_of(s);
  }
  return GenPermutahedron::from_submodular(d.n(), std::move(table));
}

bool has_ascent(const Diagram& d, int i) {
  if (i < 1 || i >= d.n()) throw std::invalid_argument("has_ascent: index out of range");
  const Mask pair = element_mask(i) | element_mask(i + 1);
  for (Mask c : d.columns())
    if ((c & pair) == element_mask(i + 1)) return false;
  return true;
}

Diagram swap_rows(const Diagram& d, int i) {
  if (i < 1 || i >= d.n()) throw std::invalid_argument("swap_rows: index out of range");
  const Mask mi = element_mask(i), mi1 = element_mask(i + 1);
  std::vector<Mask> cols = d.columns();
  for (Mask& c : cols) {
    const Mask both = c & (mi | mi1);
    if (both == mi)
      c = (c ^ mi) | mi1;
    else if (both == mi1)
      c = (c ^ mi1) | mi;
  }
  return Diagram(d.n(), std::move(cols));
}

int ell(const Diagram& d, int i) {
  if (i < 1 || i >= d.n()) throw std::invalid_argument("ell: index out of range");
  int count = 0;
  for (Mask c : d.columns())
    if ((c & element_mask(i)) && !(c & element_mask(i + 1))) ++count;
  return count;
}

bool strongly_separated(const Diagram& d) {
  const auto& cols = d.columns();
  for (std::size_t p = 0; p < cols.size(); ++p) {
    for (std::size_t q = p + 1; q < cols.size(); ++q) {
      const Mask d1 = cols[p] & ~cols[q], d2 = cols[q] & ~cols[p];
      if (d1 == 0 || d2 == 0) continue;
      const int hi1 = 32 - std::countl_zero(d1), hi2 = 32 - std::countl_zero(d2);
      const int lo1 = std::countr_zero(d1) + 1, lo2 = std::countr_zero(d2) + 1;
      if (hi1 < lo2 || hi2 < lo1) continue;
      return false;
    }
  }
  return true;
}

namespace {

bool is_initial_interval(Mask c) { return (c & (c + 1)) == 0; }  // {1..k} or empty

}  // namespace

std::optional<std::vector<OrthodonticMove>> orthodontic_chain(const Diagram& d) {
  using Key = std::vector<Mask>;
  const Key start = d.canonical_columns();
  if (start.empty()) return std::vector<OrthodonticMove>{};

  Value cells = 0;
  for (Mask c : start) cells += std::popcount(c);
  const long bound = (cells + static_cast<long>(d.n()) * d.column_count()) *
                     (cells + static_cast<long>(d.n()) * d.column_count());

  std::map<Key, std::pair<Key, OrthodonticMove>> parent;
  parent.emplace(start, std::make_pair(Key{}, OrthodonticMove{}));
  std::vector<Key> frontier{start};
  long depth = 0;
  while (!frontier.empty() && depth <= bound) {
    std::vector<Key> next;
    for (const Key& cur : frontier) {
      std::vector<std::pair<Key, OrthodonticMove>> steps;
      // Remove the lex-minimal column when it is an initial interval.
      const Mask least = *std::min_element(cur.begin(), cur.end(), subset_lex_less);
      if (is_initial_interval(least)) {
        Key reduced = cur;
        reduced.erase(std::find(reduced.begin(), reduced.end(), least));
        steps.emplace_back(std::move(reduced),
                           OrthodonticMove{OrthodonticMove::kRemoveColumn, 0, least});
      }
      // Undo a row swap: cur -> s_i(cur) when s_i(cur) has an ascent at i.
      for (int i = 1; i < d.n(); ++i) {
        const Diagram sw = swap_rows(Diagram(d.n(), cur), i);
        Key key = sw.canonical_columns();
        if (key != cur && has_ascent(sw, i))
          steps.emplace_back(std::move(key), OrthodonticMove{OrthodonticMove::kUnswapRows, i, 0});
      }
      for (auto& [key, move] : steps) {
        if (parent.contains(key)) continue;
        parent.emplace(key, std::make_pair(cur, move));
        if (key.empty()) {
          std::vector<OrthodonticMove> chain;
          Key walk = key;
          while (walk != start) {
            const auto& [prev, mv] = parent.at(walk);
            chain.push_back(mv);
            walk = prev;
          }
          std::reverse(chain.begin(), chain.end());
          return chain;
        }
        next.push_back(key);
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return std::nullopt;
}

}  // namespace mvlab
