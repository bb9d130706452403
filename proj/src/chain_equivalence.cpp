#include "posetlie/chain_equivalence.hpp"

#include "posetlie/errors.hpp"

#include <algorithm>
#include <map>
#include <iterator>
#include <numeric>

namespace posetlie {

namespace {

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // the smaller root wins, so roots are least members
  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

bool linked(const Poset& poset, const MaximalChain& c, const MaximalChain& d)
{
  return std::any_of(c.elements.begin(), c.elements.end(),
                     [&](Element x) { return !poset.is_extremal(x) && d.contains(x); });
}

std::vector<ChainClass> chain_classes(const Poset& poset)
{
  const auto& chains = poset.chains();
  UnionFind uf(chains.size());
  for (std::size_t a = 0; a < chains.size(); ++a)
    for (std::size_t b = a + 1; b < chains.size(); ++b)
      if (linked(poset, chains[a], chains[b]))
        uf.unite(a, b);

  std::map<std::size_t, ChainClass> by_root;
  for (std::size_t k = 0; k < chains.size(); ++k)
    by_root[uf.find(k)].chains.push_back(k);
  std::vector<ChainClass> out;
  for (auto& [root, cls] : by_root) {
    std::vector<bool> in(poset.size(), false);
    for (auto k : cls.chains)
      for (auto x : chains[k].elements)
        in[x] = true;
    for (Element x = 0; x < poset.size(); ++x)
      if (in[x])
        cls.support.push_back(x);
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> class_lookup(const Poset& poset, const std::vector<ChainClass>& classes)
{
  std::vector<std::size_t> lookup(poset.chains().size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto k : classes[c].chains)
      lookup[k] = c;
  return lookup;
}

ClassMap induced_class_map(const Poset& poset, const EdgeBijection& theta)
{
  if (!in_M(poset, theta))
    throw PreconditionError("the bijection is not monotone on maximal chains");
  const auto classes = chain_classes(poset);
  const auto lookup = class_lookup(poset, classes);
  ClassMap map;
  map.target.resize(classes.size());
  map.direction.assign(classes.size(), Direction::Both);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::optional<std::size_t> target;
    for (auto k : classes[c].chains) {
      const auto img = chain_image(poset, theta, k);
      const auto t = lookup[*img.target];
      if (target && *target != t)
        throw WellDefinednessError("class " + std::to_string(c) + " is sent to two classes");
      target = t;
      if (img.direction == Direction::Both)
        continue;
      if (map.direction[c] != Direction::Both && map.direction[c] != img.direction)
        throw WellDefinednessError("direction is not constant on class " + std::to_string(c));
      map.direction[c] = img.direction;
    }
    map.target[c] = *target;
  }
  auto sorted = map.target;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw WellDefinednessError("the induced class map is not injective");
  return map;
}

std::vector<SupportMap> support_maps(const Poset& poset, const EdgeBijection& theta)
{
  const auto classes = chain_classes(poset);
  const auto cmap = induced_class_map(poset, theta);
  const auto& chains = poset.chains();
  std::vector<SupportMap> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto fail = [&](const std::string& why) {
      throw ExtractionError("class " + std::to_string(c) + ": " + why);
    };
    SupportMap sm{c, cmap.target[c], cmap.direction[c] == Direction::Decreasing ? MapKind::AntiIso : MapKind::Iso, {}};
    const bool reversed = sm.kind == MapKind::AntiIso;

    std::map<Element, Element> lambda;
    for (auto k : classes[c].chains) {
      const auto& u = chains[k].elements;
      const auto& v = chains[*chain_image(poset, theta, k).target].elements;
      const std::size_t m = u.size();
      for (std::size_t i = 0; i < m; ++i) {
        const Element y = reversed ? v[m - 1 - i] : v[i];
        const auto [it, fresh] = lambda.emplace(u[i], y);
        if (!fresh && it->second != y)
          fail(poset.name(u[i]) + " is sent to both " + poset.name(it->second) + " and " + poset.name(y));
      }
    }

    const auto& source = classes[c].support;
    const auto& target = classes[sm.target].support;
    if (source.size() != target.size())
      fail("supports have different sizes " + std::to_string(source.size()) + " and " +
           std::to_string(target.size()));
    std::vector<Element> image;
    for (const auto& [x, y] : lambda)
      image.push_back(y);
    std::sort(image.begin(), image.end());
    if (image != target)
      fail("lambda is not a bijection between the supports");

    for (Element x : source)
      for (Element y : source) {
        const Element lx = lambda.at(x);
        const Element ly = lambda.at(y);
        const bool want = reversed ? poset.less(ly, lx) : poset.less(lx, ly);
        if (poset.less(x, y) != want)
          fail("lambda does not preserve the order between " + poset.name(x) + " and " + poset.name(y));
        if (poset.less(x, y)) {
          const StrictPair hat = reversed ? StrictPair{ly, lx} : StrictPair{lx, ly};
          if (posetlie::image(poset, theta, StrictPair{x, y}) != hat)
            fail("theta differs from lambda-hat on (" + poset.name(x) + "," + poset.name(y) + ")");
        }
      }
    sm.pairs.assign(lambda.begin(), lambda.end());
    out.push_back(std::move(sm));
  }
  return out;
}

Verdict decide_all_proper(const Poset& poset, const EnumerationOptions& options)
{
  const auto am = enumerate_AM(poset, options);
  const auto p = enumerate_P(poset);
  Verdict v;
  v.am_order = am.size();
  v.p_order = p.size();
  v.all_proper = am == p;
  std::vector<EdgeBijection> extra;
  std::set_difference(am.begin(), am.end(), p.begin(), p.end(), std::back_inserter(extra));
  if (!extra.empty())
    v.counterexample = extra.front();
  v.class_count = chain_classes(poset).size();
  v.single_class = v.class_count == 1;
  return v;
}

} // namespace posetlie
