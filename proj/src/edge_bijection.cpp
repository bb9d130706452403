#include "posetlie/edge_bijection.hpp"

#include "posetlie/errors.hpp"

#include <boost/container_hash/hash.hpp>

namespace posetlie {

EdgeBijection EdgeBijection::identity(std::size_t size)
{
  EdgeBijection id;
  id.perm.resize(size);
  for (std::size_t i = 0; i < size; ++i)
    id.perm[i] = static_cast<std::uint32_t>(i);
  return id;
}

EdgeBijection EdgeBijection::inverse() const
{
  EdgeBijection inv;
  inv.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv.perm[perm[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

bool EdgeBijection::is_identity() const
{
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i)
      return false;
  return true;
}

EdgeBijection compose(const EdgeBijection& a, const EdgeBijection& b)
{
  if (a.size() != b.size())
    throw InvalidParameter("edge bijections on different sets");
  EdgeBijection out;
  out.perm.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out.perm[i] = a.perm[b.perm[i]];
  return out;
}

bool is_edge_bijection(const Poset& poset, const EdgeBijection& theta)
{
  if (theta.size() != poset.pair_count())
    return false;
  std::vector<bool> seen(theta.size(), false);
  for (auto v : theta.perm) {
    if (v >= theta.size() || seen[v])
      return false;
    seen[v] = true;
  }
  return true;
}

StrictPair image(const Poset& poset, const EdgeBijection& theta, StrictPair pair)
{
  return poset.strict_pairs()[theta(poset.pair_index(pair))];
}

EdgeBijection restrict_to_edges(const Poset& poset, const PosetMap& map)
{
  if (!is_poset_map(poset, map))
    throw PreconditionError("not an automorphism or anti-automorphism of the poset");
  EdgeBijection theta;
  theta.perm.reserve(poset.pair_count());
  for (const auto& [x, y] : poset.strict_pairs()) {
    const auto idx = map.kind == MapKind::Iso ? poset.pair_index(map(x), map(y))
                                              : poset.pair_index(map(y), map(x));
    theta.perm.push_back(static_cast<std::uint32_t>(idx));
  }
  return theta;
}

std::size_t EdgeBijectionHash::operator()(const EdgeBijection& theta) const noexcept
{
  return boost::hash_range(theta.perm.begin(), theta.perm.end());
}

} // namespace posetlie
