#pragma once

#include "posetlie/bijection_analysis.hpp"
#include "posetlie/edge_bijection.hpp"
#include "posetlie/enumeration.hpp"
#include "posetlie/poset.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace posetlie {

/// A ~-class of maximal chains.
struct ChainClass
{
  std::vector<std::size_t> chains; // indices into poset.chains(), ascending
  std::vector<Element> support;    // ascending
};

/// C and D share an element that is neither minimal nor maximal.
bool linked(const Poset& poset, const MaximalChain& c, const MaximalChain& d);

/// The classes ordered by their least chain.
std::vector<ChainClass> chain_classes(const Poset& poset);

/// class index of every chain
std::vector<std::size_t> class_lookup(const Poset& poset, const std::vector<ChainClass>& classes);

struct ClassMap
{
  std::vector<std::size_t> target;   // class -> class
  std::vector<Direction> direction;  // common direction on the class
};

/// The bijection induced on classes. Throws PreconditionError unless theta is
/// monotone, WellDefinednessError if a class is split or mixes directions.
ClassMap induced_class_map(const Poset& poset, const EdgeBijection& theta);

/// lambda : supp(c) -> supp(theta~(c)) for one class.
struct SupportMap
{
  std::size_t source;
  std::size_t target;
  MapKind kind;
  std::vector<std::pair<Element, Element>> pairs; // (x, lambda(x)), ascending in x
};

/// Position-wise lambda on each class, verified to be an (anti-)isomorphism
/// agreeing with theta on the support. Throws ExtractionError.
std::vector<SupportMap> support_maps(const Poset& poset, const EdgeBijection& theta);

struct Verdict
{
  bool all_proper = false;
  std::optional<EdgeBijection> counterexample; // in AM(X) but not P(X)
  std::size_t am_order = 0;
  std::size_t p_order = 0;
  std::size_t class_count = 0;
  /// one ~-class, which alone already forces every bijection to be proper
  bool single_class = false;
};

/// Compares AM(X) with P(X). Throws BoundExceeded.
Verdict decide_all_proper(const Poset& poset, const EnumerationOptions& options = {});

} // namespace posetlie
