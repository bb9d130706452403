#pragma once

#include "posetlie/edge_bijection.hpp"
#include "posetlie/poset.hpp"

#include <cstddef>
#include <vector>

namespace posetlie {

struct EnumerationOptions
{
  /// Largest |B| for which S(B) is scanned exhaustively.
  std::size_t bound = 9;
  /// Worker threads; results do not depend on it.
  unsigned jobs = 1;
};

/// M(X), sorted. Length-1 posets scan S(B) (subject to the bound); others use
/// chain-assignment backtracking. Throws BoundExceeded.
std::vector<EdgeBijection> enumerate_M(const Poset& poset, const EnumerationOptions& options = {});

/// Admissible elements of M(X), sorted. Throws BoundExceeded.
std::vector<EdgeBijection> enumerate_AM(const Poset& poset, const EnumerationOptions& options = {});

/// Restrictions of lambda-hat to B over Aut+-(X), deduplicated and sorted.
std::vector<EdgeBijection> enumerate_P(const Poset& poset);

/// S(B) filtered by in_M, whatever the length. Throws BoundExceeded.
std::vector<EdgeBijection> scan_M(const Poset& poset, const EnumerationOptions& options = {});

} // namespace posetlie
