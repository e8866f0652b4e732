#include "mvlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mvlab {

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
  const int n = static_cast<int>(line_.size());
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("permutation size out of range");
  Mask seen = 0;
  for (int v : line_) {
    if (v < 1 || v > n) throw std::invalid_argument("one-line entry out of range");
    seen |= element_mask(v);
  }
  if (seen != full_mask(n)) throw std::invalid_argument("one-line entries are not a permutation");
}

Permutation Permutation::identity(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 1);
  return Permutation(std::move(l));
}

Permutation Permutation::longest(int n) {
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = n - i;
  return Permutation(std::move(l));
}

Permutation Permutation::transposition(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple transposition index out of range");
  auto w = identity(n);
  std::swap(w.line_[i - 1], w.line_[i]);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(line_.size());
  for (int i = 0; i < n(); ++i) inv[line_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int len = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (line_[i] > line_[j]) ++len;
  return len;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> l(a.n());
  for (int i = 1; i <= a.n(); ++i) l[i - 1] = a(b(i));
  return Permutation(std::move(l));
}

Subset proj_k(const Permutation& w, int k) {
  if (k < 1 || k > w.n()) throw std::invalid_argument("proj_k: k out of range");
  Mask m = 0;
  for (int i = 1; i <= k; ++i) m |= element_mask(w(i));
  return Subset(w.n(), m);
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("bruhat_leq: sizes differ");
  for (int k = 1; k < u.n(); ++k)
    if (!gale_leq(proj_k(u, k), proj_k(v, k))) return false;
  return true;
}

bool weak_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("weak_leq: sizes differ");
  const int n = u.n();
  if (u == v) return true;
  std::vector<Permutation> frontier{u};
  std::vector<std::vector<int>> seen{u.one_line()};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier) {
      for (int i = 1; i < n; ++i) {
        Permutation sw = Permutation::transposition(i, n) * w;
        if (sw.length() != w.length() + 1) continue;
        if (sw == v) return true;
        if (std::find(seen.begin(), seen.end(), sw.one_line()) == seen.end()) {
          seen.push_back(sw.one_line());
          next.push_back(std::move(sw));
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v) {
  if (!bruhat_leq(u, v)) throw std::invalid_argument("bruhat_interval: u is not <= v");
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(u.n()))
    if (bruhat_leq(u, w) && bruhat_leq(w, v)) out.push_back(w);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("all_permutations: n out of range (max 9)");
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(l);
  } while (std::next_permutation(l.begin(), l.end()));
  return out;
}

}  // namespace mvlab
