#include "mvlab/mv.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace mvlab {

namespace {

void require_tuple(const GenPermutahedron& p, const Subset& s, int a, int b, int c) {
  if (s.n != p.n()) throw std::invalid_argument("plucker: subset ground set mismatch");
  if (!(1 <= a && a < b && b < c && c <= p.n()))
    throw std::invalid_argument("plucker: need 1 <= a < b < c <= n");
  if (s.contains(a) || s.contains(b) || s.contains(c))
    throw std::invalid_argument("plucker: a, b, c must avoid S");
}

// Supermodular values read off the submodular table: mu^(X) = r - mu(~X).
struct SupView {
  const GenPermutahedron& p;
  Mask full;
  Value operator()(Mask x) const { return p.mu(full) - p.mu(full ^ x); }
};

bool sup_relation(const SupView& sup, Mask s, Mask A, Mask B, Mask C, Value* lhs = nullptr,
                  Value* rhs = nullptr) {
  const Value l = sup(s | B) + sup(s | A | C);
  const Value r = std::min(sup(s | A) + sup(s | B | C), sup(s | A | B) + sup(s | C));
  if (lhs) *lhs = l;
  if (rhs) *rhs = r;
  return l == r;
}

bool sub_relation(const GenPermutahedron& p, Mask s, Mask A, Mask B, Mask C) {
  const Value l = p.mu(s | A | C) + p.mu(s | B);
  const Value r = std::max(p.mu(s | B | C) + p.mu(s | A), p.mu(s | A | B) + p.mu(s | C));
  return l == r;
}

}  // namespace

bool plucker_supermodular(const GenPermutahedron& p, const Subset& s, int a, int b, int c) {
  require_tuple(p, s, a, b, c);
  const SupView sup{p, full_mask(p.n())};
  return sup_relation(sup, s.mask, element_mask(a), element_mask(b), element_mask(c));
}

bool plucker_submodular(const GenPermutahedron& p, const Subset& s, int a, int b, int c) {
  require_tuple(p, s, a, b, c);
  return sub_relation(p, s.mask, element_mask(a), element_mask(b), element_mask(c));
}

bool check_plucker(const GenPermutahedron& p, const Subset& s, int a, int b, int c) {
  require_tuple(p, s, a, b, c);
  const bool sup = plucker_supermodular(p, s, a, b, c);
  const Mask comp =
      full_mask(p.n()) ^ s.mask ^ element_mask(a) ^ element_mask(b) ^ element_mask(c);
  const bool dual = plucker_submodular(p, Subset(p.n(), comp), a, b, c);
  if (sup != dual)
    throw std::logic_error("plucker forms disagree under complementation (internal bug)");
  return sup;
}

namespace {

// Scans the tuples of one S in (a, b, c) order; fills *out on failure.
bool first_failure_at(const GenPermutahedron& p, const SupView& sup, Mask s, PluckerWitness* out) {
  const int n = p.n();
  for (int a = 1; a <= n - 2; ++a) {
    if (s & element_mask(a)) continue;
    for (int b = a + 1; b <= n - 1; ++b) {
      if (s & element_mask(b)) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (s & element_mask(c)) continue;
        Value lhs, rhs;
        if (!sup_relation(sup, s, element_mask(a), element_mask(b), element_mask(c), &lhs, &rhs)) {
          *out = PluckerWitness{Subset(n, s), a, b, c, lhs, rhs};
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

namespace serial {

std::optional<PluckerWitness> mv_witness(const GenPermutahedron& p) {
  const SupView sup{p, full_mask(p.n())};
  const Mask N = Mask{1} << p.n();
  PluckerWitness w;
  for (Mask s = 0; s < N; ++s)
    if (first_failure_at(p, sup, s, &w)) return w;
  return std::nullopt;
}

}  // namespace serial

std::optional<PluckerWitness> mv_witness(const GenPermutahedron& p) {
  const int n = p.n();
  if (n < 10) return serial::mv_witness(p);

  const SupView sup{p, full_mask(n)};
  const std::int64_t N = std::int64_t{1} << n;
  std::atomic<std::int64_t> best_s{N};
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < N; ++s) {
    if (s >= best_s.load(std::memory_order_relaxed)) continue;
    PluckerWitness w;
    if (first_failure_at(p, sup, static_cast<Mask>(s), &w)) {
      std::int64_t prev = best_s.load();
      while (s < prev && !best_s.compare_exchange_weak(prev, s)) {
      }
    }
  }
  const std::int64_t s = best_s.load();
  if (s == N) return std::nullopt;
  PluckerWitness w;
  first_failure_at(p, sup, static_cast<Mask>(s), &w);
  return w;
}

bool is_mv(const GenPermutahedron& p) { return !mv_witness(p).has_value(); }

namespace {

void require_index(const GenPermutahedron& p, int i) {
  if (i < 1 || i >= p.n()) throw std::invalid_argument("crystal index must satisfy 1 <= i <= n-1");
}

bool touched(Mask s, int i) {
  return !(s & element_mask(i)) && (s & element_mask(i + 1));
}

Mask swap_down(Mask s, int i) {  // S \ {i+1} ∪ {i}
  return (s ^ element_mask(i + 1)) | element_mask(i);
}

}  // namespace

Value crystal_c(const GenPermutahedron& p, int i) {
  require_index(p, i);
  const Mask full = full_mask(p.n());
  const Mask prefix = full_mask(i);                                   // [i]
  const Mask swapped = (prefix ^ element_mask(i)) | element_mask(i + 1);  // s_i[i]
  return p.mu(full ^ swapped) - p.mu(full ^ prefix) - 1;
}

Value epsilon(const GenPermutahedron& p, int i) {
  require_index(p, i);
  Mask tail = 0;  // {i+2, ..., n}
  for (int j = i + 2; j <= p.n(); ++j) tail |= element_mask(j);
  const Mask mi = element_mask(i), mi1 = element_mask(i + 1);
  return p.mu(tail | mi) + p.mu(tail | mi1) - p.mu(tail) - p.mu(tail | mi | mi1);
}

GenPermutahedron raise_table(const GenPermutahedron& p, int i) {
  require_index(p, i);
  const Value c = crystal_c(p, i);
  std::vector<Value> out(p.table());
  for (Mask s = 0; s < (Mask{1} << p.n()); ++s)
    if (touched(s, i)) out[s] = std::max(p.mu(s), p.mu(swap_down(s, i)) - c);
  return GenPermutahedron::from_submodular(p.n(), std::move(out));
}

GenPermutahedron raise_op(const GenPermutahedron& p, int i) {
  require_index(p, i);
  if (const auto w = mv_witness(p))
    throw std::invalid_argument("raise_op: input is not MV (the rewrite is only valid there); "
                                "first failing tuple has S=" + w->s.to_string());
  return raise_table(p, i);
}

GenPermutahedron raise_power(const GenPermutahedron& p, int i, int m) {
  require_index(p, i);
  if (m < 0) throw std::invalid_argument("raise_power: m must be >= 0");
  GenPermutahedron cur = p;
  for (int k = 0; k < m; ++k) cur = raise_table(cur, i);
  return cur;
}

std::optional<GenPermutahedron> lower_op(const GenPermutahedron& p, int i) {
  require_index(p, i);
  if (const auto w = mv_witness(p))
    throw std::invalid_argument("lower_op: input is not MV; first failing tuple has S=" +
                                w->s.to_string());
  if (epsilon(p, i) == 0) return std::nullopt;

  const int n = p.n();
  const Mask mi = element_mask(i), mi1 = element_mask(i + 1);
  std::vector<Value> nu(p.table());

  // Inverting the raise rewrite leaves every touched mask ambiguous whenever
  // mu(S) == mu(S \ {i+1} ∪ {i}) - c - 1, so the touched values are instead
  // recovered from the tropical Plucker relations of the (unique, MV) result,
  // each relation solved for its single unknown.  The seed is the mask
  // {i+1,...,n}, which every raise bumps by exactly 1.

  // Masks {i+1} ∪ Y with Y ⊆ {i+2..n}, by decreasing |Y|.  For Y full this is
  // the seed; otherwise the tuple (Y, i, i+1, c) with c outside Y determines
  // the value from already-known larger ones.
  std::vector<int> above;
  for (int j = i + 2; j <= n; ++j) above.push_back(j);
  Mask above_mask = 0;
  for (int j : above) above_mask |= element_mask(j);

  std::vector<Mask> ys;
  {
    const int k = static_cast<int>(above.size());
    for (Mask code = 0; code < (Mask{1} << k); ++code) {
      Mask y = 0;
      for (int idx = 0; idx < k; ++idx)
        if ((code >> idx) & 1) y |= element_mask(above[idx]);
      ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end(),
              [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  }
  for (Mask y : ys) {
    const Mask x = y | mi1;
    if (y == above_mask) {
      nu[x] = p.mu(x) - 1;
      continue;
    }
    int celt = 0;
    for (int j : above)
      if (!(y & element_mask(j))) {
        celt = j;
        break;
      }
    const Mask mc = element_mask(celt);
    nu[x] = std::max(nu[y | mi1 | mc] + nu[y | mi], nu[y | mi | mi1] + nu[y | mc]) -
            nu[y | mi | mc];
  }

  // Masks with elements below i, by increasing count of those elements; the
  // tuple (X \ {a, i+1}, a, i, i+1) determines nu(X) from nu(X \ {a}).
  const Mask below = element_mask(i) - 1;
  std::vector<Mask> rest;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (touched(s, i) && (s & below)) rest.push_back(s);
  std::sort(rest.begin(), rest.end(), [below](Mask a, Mask b) {
    return std::popcount(a & below) < std::popcount(b & below);
  });
  for (Mask x : rest) {
    const Mask ma = x & (~x + 1);  // smallest element of X, necessarily < i
    const Mask s = x ^ ma ^ mi1;
    nu[x] = std::max(nu[s | mi | mi1] + nu[s | ma], nu[s | ma | mi] + nu[x ^ ma]) - nu[s | mi];
  }

  auto q = GenPermutahedron::from_submodular(n, std::move(nu));
  if (raise_table(q, i).table() != p.table())
    throw std::logic_error("lower_op: inversion failed to re-raise (internal bug)");
  return q;
}

LatticePoint weight(const GenPermutahedron& p) {
  return vertex(p, Permutation::longest(p.n()));
}

GenPermutahedron product(const std::vector<GenPermutahedron>& parts) {
  if (parts.empty()) throw std::invalid_argument("product: no parts");
  int n = 0;
  for (const auto& q : parts) n += q.n();
  if (n > kMaxGroundSet) throw std::invalid_argument("product: combined ground set too large");
  std::vector<Value> table(std::size_t{1} << n, 0);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    Value acc = 0;
    int offset = 0;
    for (const auto& q : parts) {
      const Mask block = static_cast<Mask>((s >> offset) & full_mask(q.n()));
      acc += q.mu(block);
      offset += q.n();
    }
    table[s] = acc;
  }
  return GenPermutahedron::from_submodular(n, std::move(table));
}

}  // namespace mvlab
