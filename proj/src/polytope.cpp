#include "mvlab/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace mvlab {

namespace serial {

std::optional<SubmodularViolation> first_submodular_violation(std::span<const Value> table, int n) {
  const Mask N = Mask{1} << n;
  for (Mask s = 0; s < N; ++s) {
    for (Mask t = s + 1; t < N; ++t) {
      if (table[s & t] + table[s | t] > table[s] + table[t]) return SubmodularViolation{s, t};
    }
  }
  return std::nullopt;
}

}  // namespace serial

std::optional<SubmodularViolation> first_submodular_violation(std::span<const Value> table, int n) {
  const std::int64_t N = std::int64_t{1} << n;
  if (n < 8) return serial::first_submodular_violation(table, n);

  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t s = 0; s < N; ++s) {
    if (found.load(std::memory_order_relaxed)) continue;
    for (std::int64_t t = s + 1; t < N; ++t) {
      if (table[s & t] + table[s | t] > table[s] + table[t]) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  // Violations are rare; rescan serially for the canonical first witness.
  if (found.load()) return serial::first_submodular_violation(table, n);
  return std::nullopt;
}

std::optional<SubmodularViolation> first_local_violation(std::span<const Value> table, int n) {
  // mu(A+i) + mu(A+j) >= mu(A) + mu(A+i+j) for all A and i < j outside A,
  // equivalent to full submodularity.
  const std::int64_t N = std::int64_t{1} << n;
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < N; ++a) {
    if (found.load(std::memory_order_relaxed)) continue;
    for (int i = 1; i <= n; ++i) {
      if ((a >> (i - 1)) & 1) continue;
      for (int j = i + 1; j <= n; ++j) {
        if ((a >> (j - 1)) & 1) continue;
        const Mask A = static_cast<Mask>(a);
        const Mask ai = A | element_mask(i), aj = A | element_mask(j);
        if (table[ai] + table[aj] < table[A] + table[ai | aj]) {
          found.store(true, std::memory_order_relaxed);
        }
      }
    }
  }
  if (!found.load()) return std::nullopt;
  for (Mask a = 0; a < static_cast<Mask>(N); ++a) {
    for (int i = 1; i <= n; ++i) {
      if (a & element_mask(i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (a & element_mask(j)) continue;
        const Mask ai = a | element_mask(i), aj = a | element_mask(j);
        if (table[ai] + table[aj] < table[a] + table[ai | aj])
          return SubmodularViolation{ai, aj};
      }
    }
  }
  return std::nullopt;
}

GenPermutahedron GenPermutahedron::from_submodular(int n, std::vector<Value> table) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground-set size must be in [1, 16]");
  if (table.size() != (std::size_t{1} << n))
    throw std::invalid_argument("submodular table must have length 2^n");
  if (table[0] != 0) throw std::invalid_argument("submodular table must have mu(empty) = 0");
  const auto witness =
      n <= 10 ? first_submodular_violation(table, n) : first_local_violation(table, n);
  if (witness) {
    throw std::invalid_argument("table is not submodular: violated at S=" +
                                Subset(n, witness->s).to_string() +
                                ", T=" + Subset(n, witness->t).to_string());
  }
  return GenPermutahedron(n, std::move(table));
}

GenPermutahedron GenPermutahedron::point(const LatticePoint& v) {
  const int n = static_cast<int>(v.size());
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("point dimension out of range");
  std::vector<Value> table(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    Value acc = 0;
    for (int e : mask_elements(s)) acc += v[e - 1];
    table[s] = acc;
  }
  return GenPermutahedron(n, std::move(table));
}

std::vector<Value> to_supermodular(const GenPermutahedron& p) {
  const Mask N = Mask{1} << p.n();
  const Mask full = N - 1;
  std::vector<Value> out(N);
  for (Mask s = 0; s < N; ++s) out[s] = p.mu(full) - p.mu(full ^ s);
  return out;
}

LatticePoint vertex(const GenPermutahedron& p, const Permutation& w) {
  if (w.n() != p.n()) throw std::invalid_argument("vertex: permutation size mismatch");
  LatticePoint x(p.n());
  Mask prefix = 0;
  Value prev = 0;
  for (int k = 1; k <= p.n(); ++k) {
    prefix |= element_mask(w(k));
    const Value cur = p.mu(prefix);
    x[w(k) - 1] = cur - prev;
    prev = cur;
  }
  return x;
}

std::vector<LatticePoint> vertices(const GenPermutahedron& p) {
  if (p.n() > 9) throw std::invalid_argument("vertices: n too large for the factorial sweep");
  std::vector<LatticePoint> out;
  for (const auto& w : all_permutations(p.n())) out.push_back(vertex(p, w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GenPermutahedron minkowski_sum(const GenPermutahedron& p, const GenPermutahedron& q) {
  if (p.n() != q.n()) throw std::invalid_argument("minkowski_sum: ground sets differ");
  std::vector<Value> table(p.table());
  for (std::size_t s = 0; s < table.size(); ++s) table[s] += q.mu(static_cast<Mask>(s));
  return GenPermutahedron::from_submodular(p.n(), std::move(table));
}

GenPermutahedron dilate(const GenPermutahedron& p, Value a) {
  if (a < 1) throw std::invalid_argument("dilate: factor must be >= 1");
  std::vector<Value> table(p.table());
  for (auto& v : table) v *= a;
  return GenPermutahedron::from_submodular(p.n(), std::move(table));
}

GenPermutahedron translate(const GenPermutahedron& p, const LatticePoint& t) {
  if (static_cast<int>(t.size()) != p.n())
    throw std::invalid_argument("translate: dimension mismatch");
  std::vector<Value> table(p.table());
  for (Mask s = 1; s < (Mask{1} << p.n()); ++s) {
    Value acc = 0;
    for (int e : mask_elements(s)) acc += t[e - 1];
    table[s] += acc;
  }
  return GenPermutahedron::from_submodular(p.n(), std::move(table));
}

GenPermutahedron hull_from_points(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("hull_from_points: empty point set");
  const int n = static_cast<int>(points[0].size());
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != n)
      throw std::invalid_argument("hull_from_points: mixed dimensions");
  const Mask N = Mask{1} << n;
  std::vector<Value> table(N, 0);
  for (Mask s = 1; s < N; ++s) {
    Value best = 0;
    bool first = true;
    for (const auto& pt : points) {
      Value acc = 0;
      for (int e : mask_elements(s)) acc += pt[e - 1];
      if (first || acc > best) best = acc;
      first = false;
    }
    table[s] = best;
  }
  return GenPermutahedron::from_submodular(n, std::move(table));
}

bool is_monotone(const GenPermutahedron& p) {
  const Mask N = Mask{1} << p.n();
  for (Mask s = 0; s < N; ++s)
    for (int i = 1; i <= p.n(); ++i)
      if (!(s & element_mask(i)) && p.mu(s | element_mask(i)) < p.mu(s)) return false;
  return true;
}

}  // namespace mvlab
