#include "mvlab/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvlab {

Subset::Subset(int n_, Mask mask_) : n(n_), mask(mask_) {
  if (n < 1 || n > kMaxGroundSet)
    throw std::invalid_argument("ground-set size must be in [1, 16]");
  if (mask & ~full_mask(n))
    throw std::invalid_argument("subset mask uses bits beyond the ground set");
}

Subset Subset::from_elements(int n, const std::vector<int>& elements) {
  return Subset(n, mask_from_elements(elements, n));
}

std::vector<int> Subset::elements() const { return mask_elements(mask); }

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    const int bit = std::countr_zero(m);
    out.push_back(bit + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_from_elements(const std::vector<int>& elements, int n) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("element out of range");
    m |= element_mask(e);
  }
  return m;
}

bool subset_lex_less(Mask a, Mask b) {
  // Compare sorted element sequences; a proper prefix is smaller.
  while (a && b) {
    const int ea = std::countr_zero(a), eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<Mask> k_subsets(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  std::vector<Mask> out;
  while (true) {
    Mask m = 0;
    for (int e : idx) m |= element_mask(e);
    out.push_back(m);
    // next combination in lex order
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (k == 0) out = {Mask{0}};
  return out;
}

bool gale_leq(const Subset& a, const Subset& b) {
  if (a.n != b.n) throw std::invalid_argument("gale_leq: ground sets differ");
  if (a.cardinality() != b.cardinality())
    throw std::invalid_argument("gale_leq: cardinalities differ");
  Mask ma = a.mask, mb = b.mask;
  while (ma) {
    if (std::countr_zero(ma) > std::countr_zero(mb)) return false;
    ma &= ma - 1;
    mb &= mb - 1;
  }
  return true;
}

bool gale_leq_by_slices(const Subset& a, const Subset& b) {
  if (a.n != b.n) throw std::invalid_argument("gale_leq: ground sets differ");
  if (a.cardinality() != b.cardinality())
    throw std::invalid_argument("gale_leq: cardinalities differ");
  for (int i = 1; i <= a.n; ++i) {
    const Mask suffix = full_mask(a.n) & ~(element_mask(i) - 1);
    if (std::popcount(a.mask & suffix) > std::popcount(b.mask & suffix)) return false;
  }
  return true;
}

std::vector<Subset> gale_interval(const Subset& a, const Subset& b) {
  if (!gale_leq(a, b)) throw std::invalid_argument("gale_interval: a is not <= b");
  std::vector<Subset> out;
  for (Mask c : k_subsets(a.n, a.cardinality())) {
    const Subset cs(a.n, c);
    if (gale_leq(a, cs) && gale_leq(cs, b)) out.push_back(cs);
  }
  return out;
}

std::vector<Subset> gale_covers(const Subset& b) {
  std::vector<Subset> out;
  for (int i = 1; i < b.n; ++i) {
    if (b.contains(i) && !b.contains(i + 1))
      out.emplace_back(b.n, (b.mask ^ element_mask(i)) | element_mask(i + 1));
  }
  return out;
}

}  // namespace mvlab
