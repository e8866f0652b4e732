#include "mvlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvlab {

namespace {

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

}  // namespace

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("variable count out of range");
}

Polynomial Polynomial::monomial(Exponents e, Value coeff) {
  Polynomial f(static_cast<int>(e.size()));
  f.add_term(e, coeff);
  return f;
}

Value Polynomial::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponents& e, Value coeff) {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("exponent vector has wrong length");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  if (n_ != g.n_) throw std::invalid_argument("adding polynomials in different variables");
  Polynomial out = *this;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  if (n_ != g.n_) throw std::invalid_argument("subtracting polynomials in different variables");
  Polynomial out = *this;
  for (const auto& [e, c] : g.terms_) out.add_term(e, checked_mul(c, -1));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  if (n_ != g.n_) throw std::invalid_argument("multiplying polynomials in different variables");
  Polynomial out(n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : g.terms_) {
      Exponents e(n_);
      for (int j = 0; j < n_; ++j) e[j] = e1[j] + e2[j];
      out.add_term(e, checked_mul(c1, c2));
    }
  }
  return out;
}

Polynomial Polynomial::swap_variables(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("swap_variables: index out of range");
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    std::swap(e2[i - 1], e2[i]);
    out.add_term(e2, c);
  }
  return out;
}

namespace {

Polynomial times_variable(const Polynomial& f, int var) {
  Polynomial out(f.n());
  for (const auto& [e, c] : f.terms()) {
    Exponents e2 = e;
    ++e2[var - 1];
    out.add_term(e2, c);
  }
  return out;
}

// Divides g by (x_i - x_{i+1}); throws std::logic_error on nonzero remainder.
Polynomial divide_by_root_difference(const Polynomial& g, int i) {
  const int n = g.n();
  // Synthetic division viewing g in x_i: q_{d-1} = g_d, q_{j-1} = g_j + x_{i+1} q_j,
  // remainder g_0 + x_{i+1} q_0.
  int deg = 0;
  for (const auto& [e, c] : g.terms()) deg = std::max(deg, e[i - 1]);
  std::vector<Polynomial> by_degree(deg + 1, Polynomial(n));  // coefficients in the other vars
  for (const auto& [e, c] : g.terms()) {
    Exponents stripped = e;
    const int d = stripped[i - 1];
    stripped[i - 1] = 0;
    by_degree[d].add_term(stripped, c);
  }
  Polynomial quotient(n);
  Polynomial carry(n);
  for (int d = deg; d >= 1; --d) {
    const Polynomial qcoef = by_degree[d] + carry;
    for (const auto& [e, c] : qcoef.terms()) {
      Exponents e2 = e;
      e2[i - 1] = d - 1;
      quotient.add_term(e2, c);
    }
    carry = times_variable(qcoef, i + 1);
  }
  const Polynomial remainder = by_degree[0] + carry;
  if (!remainder.is_zero())
    throw std::logic_error("division by x_i - x_{i+1} left a remainder (internal bug)");
  return quotient;
}

}  // namespace

Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1 || i >= f.n()) throw std::invalid_argument("divided_difference: index out of range");
  return divide_by_root_difference(f - f.swap_variables(i), i);
}

Polynomial demazure(const Polynomial& f, int i) {
  if (i < 1 || i >= f.n()) throw std::invalid_argument("demazure: index out of range");
  const Polynomial g = times_variable(f, i) - times_variable(f.swap_variables(i), i + 1);
  return divide_by_root_difference(g, i);
}

std::vector<int> reduced_word(const Permutation& u) {
  std::vector<int> line = u.one_line();
  const int n = u.n();
  std::vector<int> word;
  while (true) {
    int d = 0;
    for (int i = 1; i < n; ++i)
      if (line[i - 1] > line[i]) {
        d = i;
        break;
      }
    if (d == 0) break;
    std::swap(line[d - 1], line[d]);  // peel u -> u s_d
    word.push_back(d);
  }
  std::reverse(word.begin(), word.end());
  // Reconstruction check: s_{word[0]} ... s_{word.back()} == u.
  Permutation check = Permutation::identity(n);
  for (int i : word) check = check * Permutation::transposition(i, n);
  if (!(check == u)) throw std::logic_error("reduced_word reconstruction failed (internal bug)");
  return word;
}

Polynomial schubert(const Permutation& w) {
  const int n = w.n();
  const Permutation u = w.inverse() * Permutation::longest(n);
  Exponents stair(n);
  for (int j = 0; j < n; ++j) stair[j] = n - 1 - j;
  Polynomial f = Polynomial::monomial(stair, 1);
  const std::vector<int> word = reduced_word(u);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
  return f;
}

Polynomial key_polynomial(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("composition length out of range");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("composition parts must be nonnegative");
  bool decreasing = true;
  for (int j = 0; j + 1 < n; ++j)
    if (alpha[j] < alpha[j + 1]) decreasing = false;
  if (decreasing) return Polynomial::monomial(alpha, 1);
  int i = 1;
  while (alpha[i - 1] >= alpha[i]) ++i;  // leftmost ascent
  Composition swapped = alpha;
  std::swap(swapped[i - 1], swapped[i]);
  return divided_difference(times_variable(key_polynomial(swapped), i), i);
}

Diagram rothe(const Permutation& w) {
  const int n = w.n();
  const Permutation wi = w.inverse();
  std::vector<Mask> cols;
  for (int j = 1; j <= n; ++j) {
    Mask col = 0;
    for (int i = 1; i <= n; ++i)
      if (i < wi(j) && j <= w(i)) col |= element_mask(i);
    if (col) cols.push_back(col);
  }
  return Diagram(n, std::move(cols));
}

Diagram skyline(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("composition length out of range");
  const int width = *std::max_element(alpha.begin(), alpha.end());
  std::vector<Mask> cols;
  for (int j = 1; j <= width; ++j) {
    Mask col = 0;
    for (int i = 1; i <= n; ++i)
      if (alpha[i - 1] >= j) col |= element_mask(i);
    if (col) cols.push_back(col);
  }
  return Diagram(n, std::move(cols));
}

GenPermutahedron newton(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("newton: zero polynomial");
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : f.terms()) pts.emplace_back(e.begin(), e.end());
  return hull_from_points(pts);
}

}  // namespace mvlab
