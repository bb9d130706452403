#pragma once

#include "posetlie/poset.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace posetlie {

/// A bijection of B = strict_pairs(), stored as perm[i] = index of the image of pair i.
struct EdgeBijection
{
  std::vector<std::uint32_t> perm;

  static EdgeBijection identity(std::size_t size);

  std::size_t size() const noexcept { return perm.size(); }
  std::size_t operator()(std::size_t pair) const { return perm[pair]; }
  EdgeBijection inverse() const;
  bool is_identity() const;

  auto operator<=>(const EdgeBijection&) const = default;
};

/// (a * b)(e) = a(b(e))
EdgeBijection compose(const EdgeBijection& a, const EdgeBijection& b);

/// Whether `perm` is a permutation of 0..n-1 with n = |B|.
bool is_edge_bijection(const Poset& poset, const EdgeBijection& theta);

/// theta(e_xy) as a strict pair.
StrictPair image(const Poset& poset, const EdgeBijection& theta, StrictPair pair);

/// lambda-hat restricted to B.
EdgeBijection restrict_to_edges(const Poset& poset, const PosetMap& map);

struct EdgeBijectionHash
{
  std::size_t operator()(const EdgeBijection& theta) const noexcept;
};

} // namespace posetlie
