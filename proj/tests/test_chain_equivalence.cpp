#include "posetlie/bijection_analysis.hpp"
#include "posetlie/chain_equivalence.hpp"
#include "posetlie/enumeration.hpp"
#include "posetlie/errors.hpp"
#include "posetlie/families.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

using namespace posetlie;

namespace {

MaximalChain chain_of(const Poset& p, std::initializer_list<const char*> labels)
{
  MaximalChain c;
  for (const char* l : labels)
    c.elements.push_back(*p.find(l));
  return c;
}

std::vector<std::string> names(const Poset& p, const std::vector<Element>& xs)
{
  std::vector<std::string> out;
  for (auto x : xs)
    out.push_back(p.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

// 2 <-> 3, 4 <-> 6
EdgeBijection example6_reflection(const Poset& p)
{
  std::vector<Element> perm(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    const std::string& n = p.name(x);
    const std::string m = n == "2" ? "3" : n == "3" ? "2" : n == "4" ? "6" : n == "6" ? "4" : n;
    perm[x] = *p.find(m);
  }
  const PosetMap lam{perm, MapKind::Iso};
  REQUIRE(is_poset_map(p, lam));
  return restrict_to_edges(p, lam);
}

void check_support_map(const Poset& p, const EdgeBijection& theta, const std::vector<ChainClass>& classes,
                       const SupportMap& s)
{
  std::map<Element, Element> lam(s.pairs.begin(), s.pairs.end());
  std::vector<Element> domain;
  std::vector<Element> range;
  for (const auto& [x, y] : s.pairs) {
    domain.push_back(x);
    range.push_back(y);
  }
  std::sort(range.begin(), range.end());
  CHECK(domain == classes[s.source].support);
  CHECK(range == classes[s.target].support);
  for (auto x : domain)
    for (auto y : domain)
      if (p.less(x, y)) {
        const auto img = image(p, theta, StrictPair{x, y});
        const StrictPair want = s.kind == MapKind::Iso ? StrictPair{lam[x], lam[y]} : StrictPair{lam[y], lam[x]};
        CHECK(img == want);
      }
}

} // namespace

TEST_CASE("linked chains")
{
  const Poset p = example6();
  CHECK(linked(p, chain_of(p, {"1", "2", "4"}), chain_of(p, {"1", "2", "5"})));
  CHECK_FALSE(linked(p, chain_of(p, {"1", "2", "5"}), chain_of(p, {"1", "3", "5"})));
  CHECK(linked(p, chain_of(p, {"1", "3", "6"}), chain_of(p, {"1", "3", "6"})));
  const Poset c = crown(3);
  CHECK_FALSE(linked(c, c.chains()[0], c.chains()[0]));
}

TEST_CASE("classes of the example posets")
{
  const Poset p = example6();
  const auto classes = chain_classes(p);
  REQUIRE(classes.size() == 2);
  CHECK(names(p, classes[0].support) == std::vector<std::string>{"1", "2", "4", "5"});
  CHECK(names(p, classes[1].support) == std::vector<std::string>{"1", "3", "5", "6"});
  CHECK(classes[0].chains == std::vector<std::size_t>{0, 1});
  CHECK(class_lookup(p, classes) == std::vector<std::size_t>{0, 0, 1, 1});

  const Poset q = example20();
  const auto c20 = chain_classes(q);
  REQUIRE(c20.size() == 2);
  CHECK(names(q, c20[0].support) ==
        std::vector<std::string>{"1", "10", "2", "3", "4", "5", "6", "7", "8", "9"});
  CHECK(names(q, c20[1].support) ==
        std::vector<std::string>{"1'", "10", "2'", "3'", "4'", "5'", "6'", "7'", "7''", "8'", "9'"});

  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(chain_classes(chain(n)).size() == 1);
  CHECK(chain_classes(crown(4)).size() == 8);
}

TEST_CASE("classes partition the chains and supports meet only at extremal elements")
{
  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    const auto classes = chain_classes(p);
    std::vector<int> seen(p.chains().size(), 0);
    std::vector<bool> covered(p.size(), false);
    std::size_t least = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& c = classes[k];
      REQUIRE(!c.chains.empty());
      if (k > 0)
        CHECK(c.chains.front() > least);
      least = c.chains.front();
      std::set<Element> support;
      for (auto i : c.chains) {
        ++seen[i];
        for (auto x : p.chains()[i].elements)
          support.insert(x);
      }
      CHECK(std::vector<Element>(support.begin(), support.end()) == c.support);
      for (auto x : c.support)
        covered[x] = true;
      for (std::size_t l = k + 1; l < classes.size(); ++l)
        for (auto x : c.support)
          if (std::binary_search(classes[l].support.begin(), classes[l].support.end(), x))
            CHECK(p.is_extremal(x));
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    // linked chains share a class
    const auto lookup = class_lookup(p, classes);
    for (std::size_t a = 0; a < p.chains().size(); ++a)
      for (std::size_t b = 0; b < p.chains().size(); ++b)
        if (linked(p, p.chains()[a], p.chains()[b]))
          CHECK(lookup[a] == lookup[b]);
  }
}

TEST_CASE("induced class maps")
{
  const Poset p = example6();
  const auto id = induced_class_map(p, EdgeBijection::identity(p.pair_count()));
  CHECK(id.target == std::vector<std::size_t>{0, 1});
  CHECK(id.direction == std::vector<Direction>{Direction::Increasing, Direction::Increasing});
  const auto swap = induced_class_map(p, example6_reflection(p));
  CHECK(swap.target == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(induced_class_map(chain(3), EdgeBijection{{1, 0, 2}}), PreconditionError);

  for (const auto& sel : suite_selectors()) {
    const Poset q = family(sel);
    if (q.pair_count() > 9)
      continue;
    const auto n = chain_classes(q).size();
    for (const auto& theta : enumerate_AM(q)) {
      const auto m = induced_class_map(q, theta);
      std::vector<std::size_t> sorted = m.target;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), 0);
      CHECK_MESSAGE(sorted == all, sel);
    }
  }
}

TEST_CASE("support maps")
{
  const Poset p = example6();
  const auto classes = chain_classes(p);
  const auto id = support_maps(p, EdgeBijection::identity(p.pair_count()));
  REQUIRE(id.size() == 2);
  for (const auto& s : id) {
    CHECK(s.source == s.target);
    CHECK(s.kind == MapKind::Iso);
    for (const auto& [x, y] : s.pairs)
      CHECK(x == y);
  }

  const auto theta = example6_reflection(p);
  const auto mirror = support_maps(p, theta);
  REQUIRE(mirror.size() == 2);
  CHECK(mirror[0].target == 1);
  CHECK(mirror[1].target == 0);
  for (const auto& s : mirror)
    check_support_map(p, theta, classes, s);
  // the two maps are mutually inverse
  std::map<Element, Element> l1(mirror[0].pairs.begin(), mirror[0].pairs.end());
  for (const auto& [x, y] : mirror[1].pairs)
    CHECK(l1.at(y) == x);

  const Poset q = example20();
  CHECK_THROWS_AS(support_maps(q, example20_theta(q)), ExtractionError);
}

TEST_CASE("support maps exist for every admissible bijection")
{
  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    if (p.pair_count() > 9)
      continue;
    const auto classes = chain_classes(p);
    for (const auto& theta : enumerate_AM(p)) {
      const auto maps = support_maps(p, theta);
      CHECK_MESSAGE(maps.size() == classes.size(), sel);
      for (const auto& s : maps)
        check_support_map(p, theta, classes, s);
    }
  }
}

TEST_CASE("deciding whether every admissible bijection is proper")
{
  const auto cr2 = decide_all_proper(crown(2));
  CHECK(cr2.all_proper);
  CHECK_FALSE(cr2.counterexample.has_value());
  CHECK(cr2.am_order == 8);

  const Poset c3 = crown(3);
  const auto cr3 = decide_all_proper(c3);
  CHECK_FALSE(cr3.all_proper);
  REQUIRE(cr3.counterexample.has_value());
  CHECK(is_admissible(c3, *cr3.counterexample));
  CHECK_FALSE(proper_witness(c3, *cr3.counterexample).has_value());
  CHECK(cr3.am_order == 72);
  CHECK(cr3.p_order == 12);
  CHECK(cr3.class_count == 6);
  CHECK_FALSE(cr3.single_class);

  CHECK(decide_all_proper(kmn(2, 3)).all_proper);

  // one class is sufficient, not necessary
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto v = decide_all_proper(chain(n));
    CHECK(v.single_class);
    CHECK(v.all_proper);
  }
  const auto e6 = decide_all_proper(example6());
  CHECK(e6.all_proper);
  CHECK_FALSE(e6.single_class);
  CHECK(e6.class_count == 2);

  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    if (p.pair_count() > 9)
      continue;
    const auto v = decide_all_proper(p);
    if (v.single_class)
      CHECK_MESSAGE(v.all_proper, sel);
  }
}
