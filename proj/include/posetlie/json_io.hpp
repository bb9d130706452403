#pragma once

#include "posetlie/bijection_analysis.hpp"
#include "posetlie/chain_equivalence.hpp"
#include "posetlie/edge_bijection.hpp"
#include "posetlie/group_structure.hpp"
#include "posetlie/incidence_algebra.hpp"
#include "posetlie/poset.hpp"

#include <json.hpp>

#include <optional>

namespace posetlie {

using Json = nlohmann::ordered_json;

/// [[[x,y],[u,v]], ...] with element indices, one entry per pair of B.
Json to_json(const Poset& poset, const EdgeBijection& theta);
/// Throws ParseError on malformed input.
EdgeBijection edge_bijection_from_json(const Poset& poset, const Json& json);

/// {"pairs": [[x, y, "num/den"], ...]} listing the nonzero coefficients.
Json to_json(const IncidenceElement& f);
IncidenceElement incidence_element_from_json(const AlgebraPtr& algebra, const Json& json);

/// {"basis": [[x,y], ...], "columns": [{"pairs": ...}, ...]}
Json to_json(const LinearMap& map);

Json to_json(const Poset& poset, const PosetMap& map);

/// {"classes": [{"chains": [[labels]], "support": [labels]}]}
Json class_report(const Poset& poset, const std::vector<ChainClass>& classes);

/// order, element-order histogram, generators and any structural witnesses.
Json structure_report(const Poset& poset, const FiniteGroupOnEdges& group,
                      const std::optional<DihedralWitness>& dihedral,
                      const std::optional<CrownParityReport>& parity);

Json to_json(const Poset& poset, const Verdict& verdict);

} // namespace posetlie
