#pragma once

#include "posetlie/edge_bijection.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace posetlie {

/// A permutation group on B, elements sorted.
class FiniteGroupOnEdges
{
public:
  const std::vector<EdgeBijection>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  bool contains(const EdgeBijection& theta) const { return index_.count(theta) != 0; }
  std::optional<std::size_t> index_of(const EdgeBijection& theta) const;
  /// A generating set picked greedily in sorted order.
  const std::vector<EdgeBijection>& generators() const noexcept { return generators_; }

private:
  friend FiniteGroupOnEdges verify_group(std::vector<EdgeBijection> elements);

  std::vector<EdgeBijection> elements_;
  std::unordered_map<EdgeBijection, std::size_t, EdgeBijectionHash> index_;
  std::vector<EdgeBijection> generators_;
  std::size_t degree_ = 0;
};

/// Checks identity and closure (inverses follow for finite sets of
/// permutations). Duplicates are dropped. Throws NotClosed, whose indices refer
/// to the sorted, deduplicated input, and InvalidParameter for malformed input.
FiniteGroupOnEdges verify_group(std::vector<EdgeBijection> elements);

/// Least k >= 1 with theta^k = id.
std::size_t element_order(const EdgeBijection& theta);

/// order -> number of elements of that order
std::map<std::size_t, std::size_t> order_histogram(const FiniteGroupOnEdges& group);

/// <generators>, sorted. `degree` is |B|, used when `generators` is empty.
std::vector<EdgeBijection> generated_subgroup(const std::vector<EdgeBijection>& generators, std::size_t degree);

struct DihedralWitness
{
  EdgeBijection r; // order 2n
  EdgeBijection s; // order 2, s r s = r^-1
};

/// r, s with |G| = 4n, order(r) = 2n, order(s) = 2, srs = r^-1 and <r,s> = G.
std::optional<DihedralWitness> find_dihedral_witness(const FiniteGroupOnEdges& group, std::size_t n);

bool dihedral_witness(const FiniteGroupOnEdges& group, std::size_t n);

struct CrownParityReport
{
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0; // bijections keeping the odd chains odd
  std::size_t index = 0;
};

/// Checks G = {theta : theta(O) = O or theta(O) = E} on the edges of Cr_n, that
/// the odd-preserving subgroup H has index 2 and order (n!)^2, and that
/// restriction H -> S(O) x S(E) is a bijection. Throws StructureMismatch.
CrownParityReport crown_parity_witness(const FiniteGroupOnEdges& group, std::size_t n);

} // namespace posetlie
