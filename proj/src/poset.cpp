#include "posetlie/poset.hpp"

#include "posetlie/errors.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace posetlie {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace

bool MaximalChain::contains(Element x) const
{
  return std::find(elements.begin(), elements.end(), x) != elements.end();
}

Semiwalk WeakCrown::as_semiwalk() const
{
  Semiwalk walk;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    walk.vertices.push_back(mins[i]);
    walk.vertices.push_back(maxs[i]);
  }
  if (!mins.empty())
    walk.vertices.push_back(mins.front());
  return walk;
}

const char* to_string(MapKind kind)
{
  return kind == MapKind::Iso ? "iso" : "anti";
}

PosetMap PosetMap::inverse() const
{
  PosetMap inv;
  inv.kind = kind;
  inv.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv.perm[perm[i]] = static_cast<Element>(i);
  return inv;
}

PosetMap compose(const PosetMap& f, const PosetMap& g)
{
  PosetMap h;
  h.kind = f.kind == g.kind ? MapKind::Iso : MapKind::AntiIso;
  h.perm.resize(g.perm.size());
  for (std::size_t i = 0; i < g.perm.size(); ++i)
    h.perm[i] = f.perm[g.perm[i]];
  return h;
}

Poset Poset::from_relations(std::vector<std::string> names,
                            const std::vector<std::pair<Element, Element>>& relations)
{
  const std::size_t n = names.size();
  if (n == 0)
    throw InvalidParameter("a poset needs at least one element");
  {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty())
        throw InvalidParameter("empty element label");
      if (!seen.insert(name).second)
        throw InvalidParameter("duplicate element label '" + name + "'");
    }
  }

  Poset p;
  p.names_ = std::move(names);
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    p.leq_[i * n + i] = 1;
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n)
      throw InvalidParameter("relation refers to an unknown element");
    if (a == b)
      throw CycleError("relation " + p.names_[a] + "<" + p.names_[b] + " is not strict");
    p.leq_[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j])
            p.leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw CycleError("elements " + p.names_[i] + " and " + p.names_[j] +
                         " are forced equal by the relations");

  // connectivity of the comparability graph
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y)
      if (!seen[y] && (p.leq_[x * n + y] || p.leq_[y * n + x])) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != n)
    throw DisconnectedError("the poset is not connected (" + std::to_string(reached) + " of " +
                            std::to_string(n) + " elements reachable from " + p.names_[0] + ")");

  p.derive();
  return p;
}

void Poset::derive()
{
  const std::size_t n = size();
  above_.assign(n, {});
  below_.assign(n, {});
  comparable_.assign(n, {});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (less(x, y)) {
        above_[x].push_back(y);
        below_[y].push_back(x);
      }
  for (Element x = 0; x < n; ++x) {
    auto& c = comparable_[x];
    c = below_[x];
    c.insert(c.end(), above_[x].begin(), above_[x].end());
    std::sort(c.begin(), c.end());
  }

  is_min_.assign(n, 0);
  is_max_.assign(n, 0);
  min_.clear();
  max_.clear();
  for (Element x = 0; x < n; ++x) {
    if (below_[x].empty()) {
      is_min_[x] = 1;
      min_.push_back(x);
    }
    if (above_[x].empty()) {
      is_max_[x] = 1;
      max_.push_back(x);
    }
  }

  covers_.clear();
  pairs_.clear();
  pair_lookup_.assign(n * n, npos);
  for (Element x = 0; x < n; ++x)
    for (Element y : above_[x]) {
      pair_lookup_[x * n + y] = pairs_.size();
      pairs_.push_back({x, y});
      if (covers(x, y))
        covers_.push_back({x, y});
    }

  // maximal chains: saturated chains from a minimal to a maximal element
  chains_.clear();
  std::vector<Element> path;
  std::function<void(Element)> walk = [&](Element x) {
    path.push_back(x);
    if (is_maximal(x)) {
      chains_.push_back({path});
    } else {
      for (Element y : above_[x])
        if (covers(x, y))
          walk(y);
    }
    path.pop_back();
  };
  for (Element m : min_)
    walk(m);
  std::sort(chains_.begin(), chains_.end());

  length_ = 0;
  for (const auto& c : chains_)
    length_ = std::max(length_, static_cast<int>(c.size()) - 1);
}

bool Poset::covers(Element x, Element y) const
{
  if (!less(x, y))
    return false;
  for (Element z : above_[x])
    if (z != y && less(z, y))
      return false;
  return true;
}

std::optional<Element> Poset::find(std::string_view label) const
{
  for (Element i = 0; i < names_.size(); ++i)
    if (names_[i] == label)
      return i;
  return std::nullopt;
}

std::size_t Poset::pair_index(Element x, Element y) const
{
  const auto idx = find_pair(x, y);
  if (!idx)
    throw InvalidParameter("(" + std::to_string(x) + "," + std::to_string(y) +
                           ") is not a strict pair");
  return *idx;
}

std::optional<std::size_t> Poset::find_pair(Element x, Element y) const
{
  if (x >= size() || y >= size())
    return std::nullopt;
  const auto idx = pair_lookup_[x * size() + y];
  if (idx == npos)
    return std::nullopt;
  return idx;
}

std::string Poset::to_text() const
{
  std::ostringstream out;
  out << "poset v1\nelements:";
  for (const auto& name : names_)
    out << ' ' << name;
  out << "\nrelations:";
  for (const auto& c : covers_)
    out << ' ' << names_[c.lo] << '<' << names_[c.hi];
  out << '\n';
  return out.str();
}

Poset parse_poset(std::string_view text)
{
  enum class Stage { Header, Elements, Relations, Done } stage = Stage::Header;
  std::vector<std::string> names;
  std::map<std::string, Element, std::less<>> index;
  std::vector<std::pair<Element, Element>> relations;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size())
        break;
      continue;
    }

    switch (stage) {
    case Stage::Header:
      if (split_ws(line) != std::vector<std::string_view>{"poset", "v1"})
        throw ParseError(line_no, "expected header 'poset v1'");
      stage = Stage::Elements;
      break;
    case Stage::Elements: {
      constexpr std::string_view key = "elements:";
      if (!line.starts_with(key))
        throw ParseError(line_no, "expected 'elements:'");
      for (auto token : split_ws(line.substr(key.size()))) {
        if (token.find('<') != std::string_view::npos)
          throw ParseError(line_no, "label '" + std::string(token) + "' contains '<'");
        if (index.contains(token))
          throw ParseError(line_no, "duplicate label '" + std::string(token) + "'");
        index.emplace(std::string(token), static_cast<Element>(names.size()));
        names.emplace_back(token);
      }
      if (names.empty())
        throw ParseError(line_no, "no elements listed");
      stage = Stage::Relations;
      break;
    }
    case Stage::Relations: {
      constexpr std::string_view key = "relations:";
      if (!line.starts_with(key))
        throw ParseError(line_no, "expected 'relations:'");
      for (auto token : split_ws(line.substr(key.size()))) {
        const auto lt = token.find('<');
        if (lt == std::string_view::npos || lt == 0 || lt + 1 == token.size() ||
            token.find('<', lt + 1) != std::string_view::npos)
          throw ParseError(line_no, "malformed relation '" + std::string(token) + "'");
        const auto a = index.find(token.substr(0, lt));
        const auto b = index.find(token.substr(lt + 1));
        if (a == index.end() || b == index.end())
          throw ParseError(line_no, "relation '" + std::string(token) + "' uses an unknown label");
        relations.emplace_back(a->second, b->second);
      }
      stage = Stage::Done;
      break;
    }
    case Stage::Done:
      throw ParseError(line_no, "unexpected content after 'relations:'");
    }
    if (end == text.size())
      break;
  }
  if (stage == Stage::Header)
    throw ParseError(line_no, "missing header 'poset v1'");
  if (stage == Stage::Elements)
    throw ParseError(line_no, "missing 'elements:' line");
  if (stage == Stage::Relations)
    throw ParseError(line_no, "missing 'relations:' line");
  return Poset::from_relations(std::move(names), relations);
}

Poset load_poset(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

const std::vector<MaximalChain>& maximal_chains(const Poset& poset)
{
  return poset.chains();
}

// ---------------------------------------------------------------------------
// automorphisms and anti-automorphisms

namespace {

struct Signature
{
  std::size_t below;
  std::size_t above;
  int rank;
  int corank;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Poset& p)
{
  const std::size_t n = p.size();
  std::vector<int> rank(n, 0), corank(n, 0);
  // ranks via repeated relaxation; n is small
  for (std::size_t round = 0; round < n; ++round)
    for (Element x = 0; x < n; ++x)
      for (Element y : p.strictly_above(x)) {
        rank[y] = std::max(rank[y], rank[x] + 1);
        corank[x] = std::max(corank[x], corank[y] + 1);
      }
  std::vector<Signature> sig(n);
  for (Element x = 0; x < n; ++x)
    sig[x] = {p.strictly_below(x).size(), p.strictly_above(x).size(), rank[x], corank[x]};
  return sig;
}

} // namespace

std::vector<PosetMap> poset_maps(const Poset& poset)
{
  const std::size_t n = poset.size();
  const auto sig = signatures(poset);

  // assignment order: breadth first over comparabilities so each new element
  // is constrained by an already placed neighbour
  std::vector<Element> order;
  {
    std::vector<std::uint8_t> seen(n, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (Element y : poset.neighbours(order[head]))
        if (!seen[y]) {
          seen[y] = 1;
          order.push_back(y);
        }
  }

  std::vector<PosetMap> result;
  for (MapKind kind : {MapKind::Iso, MapKind::AntiIso}) {
    const bool anti = kind == MapKind::AntiIso;
    std::vector<Element> image(n, 0);
    std::vector<std::uint8_t> used(n, 0);

    auto target_matches = [&](Element x, Element t) {
      const auto& s = sig[x];
      const auto& u = sig[t];
      return anti ? (s.below == u.above && s.above == u.below && s.rank == u.corank &&
                     s.corank == u.rank)
                  : s == u;
    };

    std::function<void(std::size_t)> place = [&](std::size_t depth) {
      if (depth == n) {
        result.push_back({image, kind});
        return;
      }
      const Element x = order[depth];
      for (Element t = 0; t < n; ++t) {
        if (used[t] || !target_matches(x, t))
          continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
          const Element a = order[d];
          const Element ta = image[a];
          if (anti)
            ok = poset.leq(x, a) == poset.leq(ta, t) && poset.leq(a, x) == poset.leq(t, ta);
          else
            ok = poset.leq(x, a) == poset.leq(t, ta) && poset.leq(a, x) == poset.leq(ta, t);
        }
        if (!ok)
          continue;
        image[x] = t;
        used[t] = 1;
        place(depth + 1);
        used[t] = 0;
      }
    };
    place(0);
  }
  std::sort(result.begin(), result.end(), [](const PosetMap& a, const PosetMap& b) {
    return std::tie(a.kind, a.perm) < std::tie(b.kind, b.perm);
  });
  return result;
}

bool is_poset_map(const Poset& poset, const PosetMap& map)
{
  const std::size_t n = poset.size();
  if (map.perm.size() != n)
    return false;
  std::vector<std::uint8_t> hit(n, 0);
  for (Element v : map.perm) {
    if (v >= n || hit[v])
      return false;
    hit[v] = 1;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const bool img = map.kind == MapKind::Iso ? poset.leq(map(x), map(y))
                                                 : poset.leq(map(y), map(x));
      if (poset.leq(x, y) != img)
        return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// weak crowns

WeakCrown canonical_form(const WeakCrown& crown)
{
  const std::size_t k = crown.size();
  WeakCrown best = crown;
  WeakCrown reversed;
  reversed.mins.resize(k);
  reversed.maxs.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    reversed.mins[i] = crown.mins[(k - i) % k];
    reversed.maxs[i] = crown.maxs[k - 1 - i];
  }
  for (const WeakCrown* base : {&crown, static_cast<const WeakCrown*>(&reversed)})
    for (std::size_t r = 0; r < k; ++r) {
      WeakCrown rot;
      rot.mins.resize(k);
      rot.maxs.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        rot.mins[i] = base->mins[(i + r) % k];
        rot.maxs[i] = base->maxs[(i + r) % k];
      }
      if (std::tie(rot.mins, rot.maxs) < std::tie(best.mins, best.maxs))
        best = std::move(rot);
    }
  return best;
}

bool is_weak_crown(const Poset& poset, const WeakCrown& crown)
{
  const std::size_t k = crown.size();
  if (k < 2 || crown.maxs.size() != k)
    return false;
  std::set<Element> all(crown.mins.begin(), crown.mins.end());
  all.insert(crown.maxs.begin(), crown.maxs.end());
  if (all.size() != 2 * k || *all.rbegin() >= poset.size())
    return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!poset.less(crown.mins[i], crown.maxs[i]))
      return false;
    if (!poset.less(crown.mins[(i + 1) % k], crown.maxs[i]))
      return false;
  }
  return true;
}

std::vector<WeakCrown> weak_crowns(const Poset& poset)
{
  const std::size_t n = poset.size();
  std::set<WeakCrown> found;
  std::vector<std::uint8_t> used(n, 0);
  WeakCrown path;

  // the first minimum has the smallest index among the minima of the cycle
  std::function<void(Element, Element)> up = [&](Element start, Element x) {
    for (Element y : poset.strictly_above(x)) {
      if (used[y])
        continue;
      used[y] = 1;
      path.maxs.push_back(y);
      if (path.maxs.size() >= 2 && poset.less(start, y))
        found.insert(canonical_form(path));
      for (Element next : poset.strictly_below(y)) {
        if (used[next] || next < start)
          continue;
        used[next] = 1;
        path.mins.push_back(next);
        up(start, next);
        path.mins.pop_back();
        used[next] = 0;
      }
      path.maxs.pop_back();
      used[y] = 0;
    }
  };
  for (Element start = 0; start < n; ++start) {
    used[start] = 1;
    path.mins = {start};
    path.maxs.clear();
    up(start, start);
    used[start] = 0;
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// semiwalks

void for_each_closed_semiwalk(const Poset& poset, std::size_t max_length,
                              const std::function<void(const std::vector<Element>&)>& visit)
{
  if (max_length < 2)
    throw PreconditionError("closed semiwalks need a maximum length of at least 2");
  std::vector<Element> walk;
  std::function<void()> extend = [&]() {
    const Element last = walk.back();
    for (Element next : poset.neighbours(last)) {
      walk.push_back(next);
      if (next == walk.front() && walk.size() >= 3)
        visit(walk);
      if (walk.size() <= max_length)
        extend();
      walk.pop_back();
    }
  };
  for (Element start = 0; start < poset.size(); ++start) {
    walk.assign(1, start);
    extend();
  }
}

std::vector<Semiwalk> closed_semiwalks(const Poset& poset, std::size_t max_length)
{
  std::vector<Semiwalk> out;
  for_each_closed_semiwalk(poset, max_length,
                           [&](const std::vector<Element>& w) { out.push_back({w}); });
  return out;
}

bool is_semiwalk(const Poset& poset, const Semiwalk& walk)
{
  for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
    const Element a = walk.vertices[i];
    const Element b = walk.vertices[i + 1];
    if (a >= poset.size() || b >= poset.size() || a == b || !poset.comparable(a, b))
      return false;
  }
  return !walk.vertices.empty();
}

std::optional<std::pair<MaximalChain, MaximalChain>> disjoint_chains(const Poset& poset)
{
  const auto& chains = poset.chains();
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      bool meet = false;
      for (Element x : chains[i].elements)
        meet = meet || chains[j].contains(x);
      if (!meet)
        return std::make_pair(chains[i], chains[j]);
    }
  return std::nullopt;
}

} // namespace posetlie
