#include "posetlie/bijection_analysis.hpp"

#include "posetlie/errors.hpp"

#include <algorithm>

namespace posetlie {

const char* to_string(Direction direction)
{
  switch (direction) {
  case Direction::Increasing:
    return "increasing";
  case Direction::Decreasing:
    return "decreasing";
  case Direction::Both:
    return "both";
  case Direction::None:
    break;
  }
  return "none";
}

std::optional<std::size_t> chain_index(const Poset& poset, const MaximalChain& chain)
{
  const auto& chains = poset.chains();
  const auto it = std::lower_bound(chains.begin(), chains.end(), chain);
  if (it == chains.end() || *it != chain)
    return std::nullopt;
  return static_cast<std::size_t>(it - chains.begin());
}

ChainImage chain_image(const Poset& poset, const EdgeBijection& theta, std::size_t chain)
{
  const auto& u = poset.chains().at(chain).elements;
  const std::size_t m = u.size();
  if (m < 2)
    return {Direction::Both, chain};

  const auto& pairs = poset.strict_pairs();
  auto img = [&](std::size_t i, std::size_t j) { return pairs[theta(poset.pair_index(u[i], u[j]))]; };
  const StrictPair outer = img(0, m - 1);

  // candidate D for each direction, then every pair is checked against it
  auto check = [&](const std::vector<Element>& v, bool reversed) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (!poset.less(v[i], v[i + 1]))
        return std::nullopt;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const StrictPair want = reversed ? StrictPair{v[m - 1 - j], v[m - 1 - i]} : StrictPair{v[i], v[j]};
        if (img(i, j) != want)
          return std::nullopt;
      }
    return chain_index(poset, MaximalChain{v});
  };

  std::optional<std::size_t> inc, dec;
  {
    std::vector<Element> v(m);
    v.front() = outer.lo;
    v.back() = outer.hi;
    bool ok = true;
    for (std::size_t i = 1; i + 1 < m && ok; ++i) {
      const auto p = img(0, i);
      ok = p.lo == outer.lo;
      v[i] = p.hi;
    }
    if (ok)
      inc = check(v, false);
  }
  {
    std::vector<Element> v(m);
    v.front() = outer.lo;
    v.back() = outer.hi;
    bool ok = true;
    for (std::size_t i = 1; i + 1 < m && ok; ++i) {
      const auto p = img(0, i);
      ok = p.hi == outer.hi;
      v[m - 1 - i] = p.lo;
    }
    if (ok)
      dec = check(v, true);
  }
  if (inc && dec)
    return {Direction::Both, inc};
  if (inc)
    return {Direction::Increasing, inc};
  if (dec)
    return {Direction::Decreasing, dec};
  return {};
}

Direction monotone_direction(const Poset& poset, const EdgeBijection& theta, const MaximalChain& chain)
{
  const auto idx = chain_index(poset, chain);
  if (!idx)
    throw PreconditionError("not a maximal chain");
  return chain_image(poset, theta, *idx).direction;
}

bool in_M(const Poset& poset, const EdgeBijection& theta)
{
  if (!is_edge_bijection(poset, theta))
    return false;
  for (std::size_t k = 0; k < poset.chains().size(); ++k)
    if (chain_image(poset, theta, k).direction == Direction::None)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// counting

namespace {

std::size_t step_pair(const Poset& poset, Element a, Element b, bool& ascending)
{
  ascending = poset.less(a, b);
  return ascending ? poset.pair_index(a, b) : poset.pair_index(b, a);
}

void require_monotone(const Poset& poset, const EdgeBijection& theta)
{
  if (!in_M(poset, theta))
    throw PreconditionError("the bijection is not monotone on maximal chains");
}

} // namespace

CountStats count_stats(const Poset& poset, const EdgeBijection& theta, const Semiwalk& walk, Element z)
{
  if (!is_semiwalk(poset, walk) || !walk.closed())
    throw PreconditionError("expected a closed semiwalk");
  if (z >= poset.size())
    throw InvalidParameter("element out of range");
  CountStats stats;
  const auto& u = walk.vertices;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    bool ascending = false;
    const auto edge = step_pair(poset, u[i], u[i + 1], ascending);
    const bool s = std::any_of(poset.strictly_above(z).begin(), poset.strictly_above(z).end(),
                               [&](Element w) { return theta(poset.pair_index(z, w)) == edge; });
    const bool t = std::any_of(poset.strictly_below(z).begin(), poset.strictly_below(z).end(),
                               [&](Element w) { return theta(poset.pair_index(w, z)) == edge; });
    if (s)
      ++(ascending ? stats.s_plus : stats.s_minus);
    if (t)
      ++(ascending ? stats.t_plus : stats.t_minus);
  }
  return stats;
}

std::vector<long> defects(const Poset& poset, const EdgeBijection& theta, const std::vector<Element>& walk)
{
  const auto inverse = theta.inverse();
  std::vector<long> d(poset.size(), 0);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    bool ascending = false;
    const auto edge = step_pair(poset, walk[i], walk[i + 1], ascending);
    const auto pre = poset.strict_pairs()[inverse(edge)];
    const long sign = ascending ? 1 : -1;
    d[pre.lo] += sign;
    d[pre.hi] -= sign;
  }
  return d;
}

AdmissibilityChecker::AdmissibilityChecker(const Poset& poset)
  : poset_(&poset)
  , crowns_(weak_crowns(poset))
{
  steps_.reserve(crowns_.size());
  for (const auto& crown : crowns_) {
    const auto walk = crown.as_semiwalk().vertices;
    std::vector<Step> steps;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      bool ascending = false;
      const auto edge = step_pair(poset, walk[i], walk[i + 1], ascending);
      steps.push_back({static_cast<std::uint32_t>(edge), ascending ? 1 : -1});
    }
    steps_.push_back(std::move(steps));
  }
}

bool AdmissibilityChecker::holds(const std::vector<Step>& steps, const EdgeBijection& inverse,
                                 std::vector<long>& d) const
{
  const auto& pairs = poset_->strict_pairs();
  for (const auto& s : steps) {
    const auto pre = pairs[inverse(s.pair)];
    d[pre.lo] += s.sign;
    d[pre.hi] -= s.sign;
  }
  bool ok = true;
  for (const auto& s : steps) {
    const auto pre = pairs[inverse(s.pair)];
    ok = ok && d[pre.lo] == 0 && d[pre.hi] == 0;
    d[pre.lo] = 0;
    d[pre.hi] = 0;
  }
  return ok;
}

bool AdmissibilityChecker::operator()(const EdgeBijection& theta) const
{
  const auto inverse = theta.inverse();
  std::vector<long> d(poset_->size(), 0);
  for (const auto& steps : steps_)
    if (!holds(steps, inverse, d))
      return false;
  return true;
}

std::optional<std::pair<WeakCrown, Element>> AdmissibilityChecker::first_violation(const EdgeBijection& theta) const
{
  for (const auto& crown : crowns_) {
    const auto d = defects(*poset_, theta, crown.as_semiwalk().vertices);
    for (Element z = 0; z < d.size(); ++z)
      if (d[z] != 0)
        return std::make_pair(crown, z);
  }
  return std::nullopt;
}

bool is_admissible(const Poset& poset, const EdgeBijection& theta)
{
  require_monotone(poset, theta);
  return AdmissibilityChecker(poset)(theta);
}

bool is_admissible_oracle(const Poset& poset, const EdgeBijection& theta, std::size_t max_length)
{
  require_monotone(poset, theta);
  bool ok = true;
  for_each_closed_semiwalk(poset, max_length, [&](const std::vector<Element>& walk) {
    if (!ok)
      return;
    const Semiwalk w{walk};
    for (Element z = 0; z < poset.size() && ok; ++z)
      ok = count_stats(poset, theta, w, z).defect() == 0;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// properness

std::optional<PosetMap> proper_witness(const Poset& poset, const EdgeBijection& theta)
{
  if (!is_edge_bijection(poset, theta))
    return std::nullopt;
  for (const auto& map : poset_maps(poset))
    if (restrict_to_edges(poset, map) == theta)
      return map;
  return std::nullopt;
}

bool is_separating(const Poset& poset, const EdgeBijection& theta)
{
  if (!is_edge_bijection(poset, theta))
    return false;
  const auto& chains = poset.chains();
  std::vector<std::size_t> target(chains.size());
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const auto img = chain_image(poset, theta, k);
    if (!img.target)
      return false;
    target[k] = *img.target;
  }
  auto disjoint = [](const MaximalChain& a, const MaximalChain& b) {
    return std::none_of(a.elements.begin(), a.elements.end(), [&](Element x) { return b.contains(x); });
  };
  for (std::size_t a = 0; a < chains.size(); ++a)
    for (std::size_t b = a + 1; b < chains.size(); ++b)
      if (!disjoint(chains[a], chains[b]) && disjoint(chains[target[a]], chains[target[b]]))
        return true;
  return false;
}

std::optional<EdgeBijection> separating_bijection(const Poset& poset)
{
  if (poset.length() != 1 || poset.minimal().size() < 2 || poset.maximal().size() < 2)
    return std::nullopt;
  const auto& pairs = poset.strict_pairs();
  const std::size_t n = pairs.size();
  auto share = [](StrictPair a, StrictPair b) {
    return a.lo == b.lo || a.lo == b.hi || a.hi == b.lo || a.hi == b.hi;
  };
  for (std::size_t e1 = 0; e1 < n; ++e1)
    for (std::size_t e2 = e1 + 1; e2 < n; ++e2) {
      if (!share(pairs[e1], pairs[e2]))
        continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (c == d || share(pairs[c], pairs[d]))
            continue;
          // send e1 -> c, e2 -> d, fix what can be fixed, fill the rest in order
          EdgeBijection theta;
          theta.perm.assign(n, static_cast<std::uint32_t>(n));
          std::vector<bool> used(n, false);
          theta.perm[e1] = static_cast<std::uint32_t>(c);
          theta.perm[e2] = static_cast<std::uint32_t>(d);
          used[c] = used[d] = true;
          for (std::size_t i = 0; i < n; ++i)
            if (i != e1 && i != e2 && !used[i]) {
              theta.perm[i] = static_cast<std::uint32_t>(i);
              used[i] = true;
            }
          std::size_t next = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (theta.perm[i] != n)
              continue;
            while (used[next])
              ++next;
            theta.perm[i] = static_cast<std::uint32_t>(next);
            used[next] = true;
          }
          if (is_separating(poset, theta))
            return theta;
        }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// sign maps

SignMap build_compatible_sigma(const Poset& poset, const EdgeBijection& theta, const Field& field)
{
  require_monotone(poset, theta);
  const auto& chains = poset.chains();
  std::vector<Direction> dirs(chains.size());
  for (std::size_t k = 0; k < chains.size(); ++k)
    dirs[k] = chain_image(poset, theta, k).direction;

  SignMap sigma;
  sigma.values.reserve(poset.pair_count());
  for (const auto& [x, y] : poset.strict_pairs()) {
    if (poset.is_minimal(x)) {
      sigma.values.push_back(field.one());
      continue;
    }
    bool inc = false;
    bool dec = false;
    for (std::size_t k = 0; k < chains.size(); ++k)
      if (chains[k].contains(x) && chains[k].contains(y)) {
        inc = inc || dirs[k] == Direction::Increasing;
        dec = dec || dirs[k] == Direction::Decreasing;
      }
    if (inc && dec)
      throw PreconditionError("theta is increasing and decreasing on chains through " + poset.name(x) +
                              " < " + poset.name(y));
    sigma.values.push_back(dec ? -field.one() : field.one());
  }
  return sigma;
}

bool is_compatible(const Poset& poset, const SignMap& sigma, const EdgeBijection& theta)
{
  if (sigma.values.size() != poset.pair_count() || !is_edge_bijection(poset, theta))
    return false;
  if (std::any_of(sigma.values.begin(), sigma.values.end(), [](const Scalar& s) { return s.is_zero(); }))
    return false;
  const auto& pairs = poset.strict_pairs();
  for (Element x = 0; x < poset.size(); ++x)
    for (Element y : poset.strictly_above(x))
      for (Element z : poset.strictly_above(y)) {
        const auto ixy = poset.pair_index(x, y);
        const auto iyz = poset.pair_index(y, z);
        const auto ixz = poset.pair_index(x, z);
        const auto [a, b] = pairs[theta(ixy)];
        const auto [c, d] = pairs[theta(iyz)];
        const auto img = pairs[theta(ixz)];
        const auto product = sigma.values[ixy] * sigma.values[iyz];
        if (b == c && img == StrictPair{a, d} && sigma.values[ixz] != product)
          return false;
        if (d == a && img == StrictPair{c, b} && sigma.values[ixz] != -product)
          return false;
      }
  return true;
}

} // namespace posetlie
