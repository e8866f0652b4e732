#pragma once

// JSON wire formats shared by the CLI and the tests.
//
// PolytopeDoc   {"n": N, "submodular": [2^N ints], "label"?: str}
//               submodular[mask] with mask bit 0 = element 1, so for n = 2
//               the order is mu({}), mu({1}), mu({2}), mu({1,2}).
// Matroid       {"n": N, "k": K, "bases": [[ints]]}
// Diagram       {"n": N, "columns": [[ints]]}
// Polynomial    {"n": N, "terms": [[[exponents], coeff]]}
//
// Subsets are always sorted integer arrays on the wire, never masks.

#include <optional>
#include <string>

#include "json.hpp"
#include "mvlab/matroid.hpp"
#include "mvlab/polynomial.hpp"
#include "mvlab/polytope.hpp"
#include "mvlab/schubitope.hpp"

namespace mvlab {

nlohmann::json polytope_to_json(const GenPermutahedron& p,
                                const std::optional<std::string>& label = std::nullopt);
GenPermutahedron polytope_from_json(const nlohmann::json& doc);

nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& doc);

nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& doc);

nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& doc);

nlohmann::json subset_to_json(const Subset& s);
nlohmann::json point_to_json(const LatticePoint& v);

}  // namespace mvlab
