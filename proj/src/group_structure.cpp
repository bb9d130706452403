#include "posetlie/group_structure.hpp"

#include "posetlie/errors.hpp"
#include "posetlie/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace posetlie {

std::optional<std::size_t> FiniteGroupOnEdges::index_of(const EdgeBijection& theta) const
{
  const auto it = index_.find(theta);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

FiniteGroupOnEdges verify_group(std::vector<EdgeBijection> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty())
    throw NotClosed("the empty set has no identity", 0, 0);

  FiniteGroupOnEdges g;
  g.degree_ = elements.front().size();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    std::vector<bool> seen(g.degree_, false);
    if (e.size() != g.degree_)
      throw InvalidParameter("bijections of different sizes");
    for (auto v : e.perm) {
      if (v >= g.degree_ || seen[v])
        throw InvalidParameter("element " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
    }
    g.index_.emplace(e, i);
  }
  g.elements_ = std::move(elements);

  const auto id = EdgeBijection::identity(g.degree_);
  if (!g.contains(id))
    throw NotClosed("the identity is missing", 0, 0);

  // Grow H = <generators> inside S; every new product is checked for membership.
  std::vector<EdgeBijection> list = {id};
  std::unordered_set<EdgeBijection, EdgeBijectionHash> in_h = {id};
  auto close = [&](std::size_t from, std::size_t old_count) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t k = (i < from ? old_count : 0); k < g.generators_.size(); ++k) {
        auto p = compose(list[i], g.generators_[k]);
        if (in_h.count(p))
          continue;
        if (!g.contains(p))
          throw NotClosed("a product lies outside the set", *g.index_of(list[i]),
                          *g.index_of(g.generators_[k]));
        in_h.insert(p);
        list.push_back(std::move(p));
      }
  };
  for (const auto& s : g.elements_) {
    if (in_h.count(s))
      continue;
    const std::size_t old_count = g.generators_.size();
    g.generators_.push_back(s);
    close(list.size(), old_count);
  }
  return g;
}

std::size_t element_order(const EdgeBijection& theta)
{
  std::vector<bool> seen(theta.size(), false);
  std::size_t order = 1;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = theta(j)) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::map<std::size_t, std::size_t> order_histogram(const FiniteGroupOnEdges& group)
{
  std::map<std::size_t, std::size_t> hist;
  for (const auto& e : group.elements())
    ++hist[element_order(e)];
  return hist;
}

std::vector<EdgeBijection> generated_subgroup(const std::vector<EdgeBijection>& generators, std::size_t degree)
{
  const auto id = EdgeBijection::identity(generators.empty() ? degree : generators.front().size());
  std::vector<EdgeBijection> list = {id};
  std::set<EdgeBijection> seen = {id};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& g : generators) {
      auto p = compose(list[i], g);
      if (seen.insert(p).second)
        list.push_back(std::move(p));
    }
  return {seen.begin(), seen.end()};
}

std::optional<DihedralWitness> find_dihedral_witness(const FiniteGroupOnEdges& group, std::size_t n)
{
  if (n == 0 || group.order() != 4 * n)
    return std::nullopt;
  for (const auto& r : group.elements()) {
    if (element_order(r) != 2 * n)
      continue;
    const auto r_inv = r.inverse();
    for (const auto& s : group.elements()) {
      if (element_order(s) != 2 || compose(compose(s, r), s) != r_inv)
        continue;
      if (generated_subgroup({r, s}, group.degree()) == group.elements())
        return DihedralWitness{r, s};
    }
  }
  return std::nullopt;
}

bool dihedral_witness(const FiniteGroupOnEdges& group, std::size_t n)
{
  return find_dihedral_witness(group, n).has_value();
}

CrownParityReport crown_parity_witness(const FiniteGroupOnEdges& group, std::size_t n)
{
  const Poset cr = crown(n);
  if (group.degree() != cr.pair_count())
    throw StructureMismatch("the group does not act on the edges of Cr_" + std::to_string(n));

  // odd[i] = x_i < y_i, even[i] = x_{i+1} < y_i
  std::vector<std::uint32_t> odd(n), even(n);
  for (Element i = 0; i < n; ++i) {
    const auto y = static_cast<Element>(n + i);
    odd[i] = static_cast<std::uint32_t>(cr.pair_index(i, y));
    even[i] = static_cast<std::uint32_t>(cr.pair_index(static_cast<Element>((i + 1) % n), y));
  }

  std::set<EdgeBijection> expected;
  std::vector<std::size_t> sigma(n), tau(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::iota(tau.begin(), tau.end(), 0);
    do {
      EdgeBijection keep, swap;
      keep.perm.resize(2 * n);
      swap.perm.resize(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        keep.perm[odd[i]] = odd[sigma[i]];
        keep.perm[even[i]] = even[tau[i]];
        swap.perm[odd[i]] = even[sigma[i]];
        swap.perm[even[i]] = odd[tau[i]];
      }
      expected.insert(keep);
      expected.insert(swap);
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  if (group.order() != expected.size())
    throw StructureMismatch("|G| = " + std::to_string(group.order()) + " but " + std::to_string(expected.size()) +
                            " bijections keep or swap the odd and even chains");
  if (!std::equal(group.elements().begin(), group.elements().end(), expected.begin()))
    throw StructureMismatch("G is not the set of bijections keeping or swapping the odd and even chains");

  std::vector<bool> is_odd(2 * n, false);
  for (auto e : odd)
    is_odd[e] = true;
  std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> restrictions;
  std::size_t h = 0;
  for (const auto& theta : group.elements()) {
    if (!std::all_of(odd.begin(), odd.end(), [&](auto e) { return is_odd[theta(e)]; }))
      continue;
    ++h;
    std::vector<std::uint32_t> on_odd, on_even;
    for (std::size_t i = 0; i < n; ++i) {
      on_odd.push_back(theta.perm[odd[i]]);
      on_even.push_back(theta.perm[even[i]]);
    }
    restrictions.emplace(std::move(on_odd), std::move(on_even));
  }
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= n; ++k)
    factorial *= k;
  if (h != factorial * factorial)
    throw StructureMismatch("|H| = " + std::to_string(h) + ", expected (n!)^2 = " +
                            std::to_string(factorial * factorial));
  if (group.order() != 2 * h)
    throw StructureMismatch("H does not have index 2");
  if (restrictions.size() != h)
    throw StructureMismatch("restriction H -> S(O) x S(E) is not injective");
  return {group.order(), h, group.order() / h};
}

} // namespace posetlie
