#include "mvlab/json_io.hpp"

#include <stdexcept>

namespace mvlab {

using nlohmann::json;

namespace {

int get_n(const json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw std::invalid_argument("document needs an integer field \"n\"");
  return doc["n"].get<int>();
}

std::vector<int> int_array(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected an integer entry");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

json subset_to_json(const Subset& s) { return json(s.elements()); }

json point_to_json(const LatticePoint& v) { return json(v); }

json polytope_to_json(const GenPermutahedron& p, const std::optional<std::string>& label) {
  json doc;
  doc["n"] = p.n();
  doc["submodular"] = p.table();
  if (label) doc["label"] = *label;
  return doc;
}

GenPermutahedron polytope_from_json(const json& doc) {
  const int n = get_n(doc);
  if (!doc.contains("submodular") || !doc["submodular"].is_array())
    throw std::invalid_argument("polytope document needs a \"submodular\" array");
  std::vector<Value> table;
  for (const auto& x : doc["submodular"]) {
    if (!x.is_number_integer()) throw std::invalid_argument("submodular entries must be integers");
    table.push_back(x.get<Value>());
  }
  return GenPermutahedron::from_submodular(n, std::move(table));
}

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (Mask b : m.bases()) bases.push_back(mask_elements(b));
  return json{{"n", m.n()}, {"k", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& doc) {
  const int n = get_n(doc);
  if (!doc.contains("bases") || !doc["bases"].is_array())
    throw std::invalid_argument("matroid document needs a \"bases\" array");
  std::vector<Mask> bases;
  for (const auto& b : doc["bases"]) bases.push_back(mask_from_elements(int_array(b), n));
  Matroid m = Matroid::from_bases(n, std::move(bases));
  if (doc.contains("k") && doc["k"].get<int>() != m.rank())
    throw std::invalid_argument("matroid document \"k\" disagrees with the bases");
  return m;
}

json diagram_to_json(const Diagram& d) {
  json cols = json::array();
  for (Mask c : d.columns()) cols.push_back(mask_elements(c));
  return json{{"n", d.n()}, {"columns", cols}};
}

Diagram diagram_from_json(const json& doc) {
  const int n = get_n(doc);
  if (!doc.contains("columns") || !doc["columns"].is_array())
    throw std::invalid_argument("diagram document needs a \"columns\" array");
  std::vector<Mask> cols;
  for (const auto& c : doc["columns"]) cols.push_back(mask_from_elements(int_array(c), n));
  return Diagram(n, std::move(cols));
}

json polynomial_to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json::array({json(e), json(c)}));
  return json{{"n", f.n()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& doc) {
  const int n = get_n(doc);
  if (!doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("polynomial document needs a \"terms\" array");
  Polynomial f(n);
  for (const auto& t : doc["terms"]) {
    if (!t.is_array() || t.size() != 2)
      throw std::invalid_argument("polynomial term must be [[exponents], coeff]");
    f.add_term(int_array(t[0]), t[1].get<Value>());
  }
  return f;
}

}  // namespace mvlab
