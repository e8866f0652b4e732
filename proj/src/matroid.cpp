#include "mvlab/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvlab {

namespace {

// Exchange check against a membership bitmap indexed by basis mask.
// Returns false and fills the witness (b1, b2, x) on failure.
bool exchange_ok(const std::vector<Mask>& bases, const std::vector<bool>& member, Mask* wb1,
                 Mask* wb2, Mask* wx) {
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      Mask out = b1 & ~b2;
      while (out) {
        const Mask x = out & (~out + 1);
        Mask in = b2 & ~b1;
        bool found = false;
        while (in) {
          const Mask y = in & (~in + 1);
          if (member[(b1 ^ x) | y]) {
            found = true;
            break;
          }
          in &= in - 1;
        }
        if (!found) {
          if (wb1) *wb1 = b1, *wb2 = b2, *wx = x;
          return false;
        }
        out &= out - 1;
      }
    }
  }
  return true;
}

}  // namespace

Matroid Matroid::from_bases(int n, std::vector<Mask> bases) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground-set size must be in [1, 16]");
  if (bases.empty()) throw std::invalid_argument("matroid needs at least one basis");
  std::sort(bases.begin(), bases.end(), subset_lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int k = std::popcount(bases[0]);
  for (Mask b : bases) {
    if (b & ~full_mask(n)) throw std::invalid_argument("basis uses elements outside [n]");
    if (std::popcount(b) != k) throw std::invalid_argument("bases have mixed cardinalities");
  }
  std::vector<bool> member(std::size_t{1} << n, false);
  for (Mask b : bases) member[b] = true;
  Mask b1, b2, x;
  if (!exchange_ok(bases, member, &b1, &b2, &x)) {
    throw std::invalid_argument("basis-exchange fails for B1=" + Subset(n, b1).to_string() +
                                ", B2=" + Subset(n, b2).to_string() + ", x=" +
                                std::to_string(std::countr_zero(x) + 1));
  }
  return Matroid(n, k, std::move(bases));
}

int Matroid::rank_of(Mask s) const {
  int best = 0;
  for (Mask b : bases_) best = std::max(best, std::popcount(s & b));
  return best;
}

std::vector<Value> Matroid::rank_table() const {
  const Mask N = Mask{1} << n_;
  std::vector<Value> out(N);
  for (Mask s = 0; s < N; ++s) out[s] = rank_of(s);
  return out;
}

GenPermutahedron matroid_polytope(const Matroid& m) {
  return GenPermutahedron::from_submodular(m.n(), m.rank_table());
}

Matroid lattice_path_matroid(const Subset& s, const Subset& t) {
  std::vector<Mask> bases;
  for (const Subset& c : gale_interval(s, t)) bases.push_back(c.mask);
  return Matroid::from_bases(s.n, std::move(bases));
}

Matroid schubert_matroid(const Subset& a) {
  const int k = a.cardinality();
  Mask bottom = full_mask(k);  // {1,...,k}, the Gale-least k-subset
  return lattice_path_matroid(Subset(a.n, bottom), a);
}

namespace {

Subset greedy_basis(const Matroid& m, bool ascending) {
  // Greedy over weights (1..n) resp. (n..1); independence = subset of a basis.
  Mask acc = 0;
  int size = 0;
  for (int step = 0; step < m.n() && size < m.rank(); ++step) {
    const int e = ascending ? step + 1 : m.n() - step;
    const Mask cand = acc | element_mask(e);
    for (Mask b : m.bases()) {
      if ((cand & b) == cand) {
        acc = cand;
        ++size;
        break;
      }
    }
  }
  return Subset(m.n(), acc);
}

}  // namespace

Subset gale_min_basis(const Matroid& m) { return greedy_basis(m, true); }
Subset gale_max_basis(const Matroid& m) { return greedy_basis(m, false); }

bool is_lattice_path(const Matroid& m) {
  const Subset lo = gale_min_basis(m), hi = gale_max_basis(m);
  std::vector<Mask> interval;
  for (const Subset& c : gale_interval(lo, hi)) interval.push_back(c.mask);
  return interval == m.bases();  // both subset_lex sorted
}

bool is_matroid_polytope(const GenPermutahedron& p, int k) {
  if (!p.is_lattice()) return false;
  for (const auto& v : vertices(p)) {
    Value sum = 0;
    for (Value x : v) {
      if (x != 0 && x != 1) return false;
      sum += x;
    }
    if (sum != k) return false;
  }
  return true;
}

std::vector<Matroid> enumerate_matroids(int n, int k) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_matroids: n must be <= 6");
  if (k < 1 || k > n) throw std::invalid_argument("enumerate_matroids: k out of range");
  const std::vector<Mask> subsets = k_subsets(n, k);
  const int m = static_cast<int>(subsets.size());
  std::vector<Matroid> out;
  std::vector<Mask> bases;
  std::vector<bool> member(std::size_t{1} << n, false);
  for (std::uint32_t family = 1; family < (std::uint32_t{1} << m); ++family) {
    bases.clear();
    for (int j = 0; j < m; ++j)
      if ((family >> j) & 1) bases.push_back(subsets[j]);
    for (Mask b : bases) member[b] = true;
    const bool ok = exchange_ok(bases, member, nullptr, nullptr, nullptr);
    for (Mask b : bases) member[b] = false;
    if (ok) out.push_back(Matroid::from_bases(n, bases));
  }
  return out;
}

}  // namespace mvlab
