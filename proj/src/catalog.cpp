#include "mvlab/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvlab {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("graph size out of range");
  for (auto& [i, j] : edges_) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("loops are not allowed");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::edgeless(int n) { return SimpleGraph(n, {}); }

bool SimpleGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

int SimpleGraph::induced_edge_count(Mask s) const {
  int count = 0;
  for (const auto& [i, j] : edges_)
    if ((s & element_mask(i)) && (s & element_mask(j))) ++count;
  return count;
}

namespace {

// Connected components as vertex masks.
std::vector<Mask> component_masks(int n, const std::vector<std::pair<int, int>>& edges,
                                  Mask within) {
  std::vector<int> parent(n + 1);
  for (int v = 0; v <= n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [i, j] : edges)
    if ((within & element_mask(i)) && (within & element_mask(j))) parent[find(i)] = find(j);
  std::vector<Mask> comp(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    if (within & element_mask(v)) comp[find(v)] |= element_mask(v);
  std::vector<Mask> out;
  for (Mask m : comp)
    if (m) out.push_back(m);
  return out;
}

}  // namespace

bool SimpleGraph::connected() const {
  return component_masks(n_, edges_, full_mask(n_)).size() == 1;
}

SimpleGraph SimpleGraph::relabel(const Permutation& w) const {
  if (w.n() != n_) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<std::pair<int, int>> e;
  for (const auto& [i, j] : edges_) e.emplace_back(w(i), w(j));
  return SimpleGraph(n_, std::move(e));
}

GenPermutahedron graphic_zonotope(const SimpleGraph& g) {
  const Mask N = Mask{1} << g.n();
  const Mask full = N - 1;
  const Value total = g.induced_edge_count(full);
  std::vector<Value> table(N);
  for (Mask s = 0; s < N; ++s) table[s] = total - g.induced_edge_count(full ^ s);
  return GenPermutahedron::from_submodular(g.n(), std::move(table));
}

bool components_are_interval_cliques(const SimpleGraph& g) {
  for (Mask comp : component_masks(g.n(), g.edges(), full_mask(g.n()))) {
    const auto vs = mask_elements(comp);
    if (vs.back() - vs.front() + 1 != static_cast<int>(vs.size())) return false;  // not an interval
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!g.has_edge(vs[a], vs[b])) return false;  // not a clique
  }
  return true;
}

std::vector<Subset> tubes(const SimpleGraph& g) {
  std::vector<Subset> out;
  for (Mask s = 1; s < (Mask{1} << g.n()); ++s) {
    if (std::popcount(s) < 2) continue;
    if (component_masks(g.n(), g.edges(), s).size() == 1) out.emplace_back(g.n(), s);
  }
  return out;
}

namespace {

// Adds the submodular table of the simplex conv(e_i : i in T).
void add_simplex(std::vector<Value>& table, Mask t, Value weight) {
  for (Mask s = 0; s < static_cast<Mask>(table.size()); ++s)
    if (s & t) table[s] += weight;
}

}  // namespace

GenPermutahedron graph_associahedron(const SimpleGraph& g) {
  std::vector<Value> table(std::size_t{1} << g.n(), 0);
  for (const Subset& t : tubes(g)) add_simplex(table, t.mask, 1);
  return GenPermutahedron::from_submodular(g.n(), std::move(table));
}

BuildingSet::BuildingSet(int n, std::vector<Mask> members)
    : n_(n), members_(std::move(members)) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("building set size out of range");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Mask m : members_) {
    if (m == 0) throw std::invalid_argument("building set members must be nonempty");
    if (m & ~full_mask(n)) throw std::invalid_argument("building set member outside [n]");
  }
  for (Mask a : members_) {
    for (Mask b : members_) {
      if ((a & b) && !std::binary_search(members_.begin(), members_.end(), a | b))
        throw std::invalid_argument("building set not closed: " + Subset(n, a).to_string() +
                                    " and " + Subset(n, b).to_string() +
                                    " meet but their union is missing");
    }
  }
}

GenPermutahedron nestohedron(const BuildingSet& b) {
  std::vector<Value> table(std::size_t{1} << b.n(), 0);
  for (Mask m : b.members()) add_simplex(table, m, 1);
  return GenPermutahedron::from_submodular(b.n(), std::move(table));
}

GenPermutahedron pitman_stanley(const std::vector<Value>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("pitman_stanley: size out of range");
  for (Value x : a)
    if (x < 0) throw std::invalid_argument("pitman_stanley: weights must be nonnegative");
  std::vector<Value> suffix(n + 2, 0);
  for (int i = n; i >= 1; --i) suffix[i] = suffix[i + 1] + a[i - 1];
  std::vector<Value> table(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int m = std::countr_zero(s) + 1;  // min(S)
    table[s] = suffix[m];
  }
  return GenPermutahedron::from_submodular(n, std::move(table));
}

}  // namespace mvlab
