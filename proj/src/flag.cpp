#include "mvlab/flag.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mvlab {

bool is_quotient(const Matroid& m, const Matroid& n) {
  if (m.n() != n.n()) throw std::invalid_argument("is_quotient: ground sets differ");
  if (m.rank() <= n.rank())
    throw std::invalid_argument("is_quotient: rank(m) must exceed rank(n)");
  const auto rm = m.rank_table(), rn = n.rank_table();
  const Mask N = Mask{1} << m.n();
  for (Mask b = 0; b < N; ++b) {
    for (Mask a = b;; a = (a - 1) & b) {  // all submasks of b
      if (rm[b] - rm[a] < rn[b] - rn[a]) return false;
      if (a == 0) break;
    }
  }
  return true;
}

FlagMatroid::FlagMatroid(std::vector<Matroid> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw std::invalid_argument("flag matroid needs a constituent");
  for (std::size_t i = 1; i < constituents_.size(); ++i) {
    if (constituents_[i].n() != constituents_[0].n())
      throw std::invalid_argument("flag matroid constituents on different ground sets");
    if (constituents_[i].rank() <= constituents_[i - 1].rank())
      throw std::invalid_argument("flag matroid ranks must strictly increase");
    if (!is_quotient(constituents_[i], constituents_[i - 1]))
      throw std::invalid_argument("flag matroid: consecutive constituents are not a quotient");
  }
}

GenPermutahedron flag_polytope(const FlagMatroid& fm) {
  GenPermutahedron acc = matroid_polytope(fm.constituents().front());
  for (std::size_t i = 1; i < fm.constituents().size(); ++i)
    acc = minkowski_sum(acc, matroid_polytope(fm.constituents()[i]));
  return acc;
}

FlagMatroid bip_constituents(const Permutation& u, const Permutation& v) {
  const int n = u.n();
  const auto interval = bruhat_interval(u, v);
  std::vector<Matroid> parts;
  for (int k = 1; k <= n; ++k) {
    std::set<Mask> bases;
    for (const auto& w : interval) bases.insert(proj_k(w, k).mask);
    parts.push_back(Matroid::from_bases(n, {bases.begin(), bases.end()}));
  }
  return FlagMatroid(std::move(parts));
}

LatticePoint twisted_point(const Permutation& w) {
  const Permutation wi = w.inverse();
  LatticePoint out(w.n());
  for (int j = 1; j <= w.n(); ++j) out[j - 1] = w.n() + 1 - wi(j);
  return out;
}

GenPermutahedron twisted_bip(const Permutation& u, const Permutation& v) {
  std::vector<LatticePoint> pts;
  for (const auto& w : bruhat_interval(u, v)) pts.push_back(twisted_point(w));
  return hull_from_points(pts);
}

bool projection_property(const Permutation& u, const Permutation& v) {
  const auto interval = bruhat_interval(u, v);
  for (int k = 1; k <= u.n(); ++k) {
    std::set<Mask> seen;
    for (const auto& w : interval) seen.insert(proj_k(w, k).mask);
    std::set<Mask> want;
    for (const Subset& c : gale_interval(proj_k(u, k), proj_k(v, k))) want.insert(c.mask);
    if (seen != want) return false;
  }
  return true;
}

}  // namespace mvlab
