#include "oracles.hpp"

#include "posetlie/bijection_analysis.hpp"
#include "posetlie/enumeration.hpp"
#include "posetlie/errors.hpp"
#include "posetlie/families.hpp"

#include <doctest.h>

using namespace posetlie;

namespace {

Element at(const Poset& p, const std::string& label)
{
  const auto x = p.find(label);
  REQUIRE_MESSAGE(x.has_value(), label);
  return *x;
}

std::uint32_t edge(const Poset& p, const std::string& lo, const std::string& hi)
{
  return static_cast<std::uint32_t>(p.pair_index(at(p, lo), at(p, hi)));
}

Semiwalk walk(const Poset& p, std::initializer_list<const char*> labels)
{
  Semiwalk w;
  for (const char* l : labels)
    w.vertices.push_back(at(p, l));
  return w;
}

// theta(e_{x_i y_i}) = e_{x_{i+1} y_i} and back
EdgeBijection crown_swap(const Poset& p, std::size_t n)
{
  auto theta = EdgeBijection::identity(p.pair_count());
  for (std::size_t i = 1; i <= n; ++i) {
    const auto odd = edge(p, "x" + std::to_string(i), "y" + std::to_string(i));
    const auto even = edge(p, "x" + std::to_string(i % n + 1), "y" + std::to_string(i));
    theta.perm[odd] = even;
    theta.perm[even] = odd;
  }
  return theta;
}

PosetMap anti_of_chain3()
{
  return poset_maps(chain(3))[1];
}

} // namespace

TEST_CASE("monotone directions on chain(3)")
{
  const Poset p = chain(3);
  const auto& c = p.chains().front();
  CHECK(monotone_direction(p, EdgeBijection::identity(3), c) == Direction::Increasing);
  const auto anti = anti_of_chain3();
  REQUIRE(anti.kind == MapKind::AntiIso);
  CHECK(monotone_direction(p, restrict_to_edges(p, anti), c) == Direction::Decreasing);
  const EdgeBijection swap{{1, 0, 2}};
  CHECK(monotone_direction(p, swap, c) == Direction::None);
  CHECK_FALSE(in_M(p, swap));
  CHECK(in_M(p, EdgeBijection::identity(3)));
}

TEST_CASE("every bijection of a length-one poset is monotone in both directions")
{
  const Poset p = crown(2);
  auto theta = EdgeBijection::identity(p.pair_count());
  do {
    for (const auto& c : p.chains())
      CHECK(monotone_direction(p, theta, c) == Direction::Both);
    CHECK(in_M(p, theta));
  } while (std::next_permutation(theta.perm.begin(), theta.perm.end()));
}

TEST_CASE("chain images")
{
  const Poset p = example6();
  const auto id = EdgeBijection::identity(p.pair_count());
  for (std::size_t k = 0; k < p.chains().size(); ++k) {
    const auto img = chain_image(p, id, k);
    CHECK(img.direction == Direction::Increasing);
    CHECK(img.target == k);
    CHECK(chain_index(p, p.chains()[k]) == k);
  }
  CHECK_FALSE(chain_index(p, MaximalChain{{0, 1}}).has_value());
}

TEST_CASE("monotonicity agrees with trying every image chain")
{
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    const Poset p = oracle::random_poset(rng, 4 + t % 3, 0.45);
    if (p.pair_count() > 7)
      continue;
    const auto chains = oracle::maximal_chains(p);
    auto theta = EdgeBijection::identity(p.pair_count());
    do {
      CHECK(in_M(p, theta) == oracle::monotone(p, theta, chains));
    } while (std::next_permutation(theta.perm.begin(), theta.perm.end()));
  }
}

TEST_CASE("counting statistics")
{
  const Poset c2 = chain(2);
  const auto id = EdgeBijection::identity(1);
  CHECK(count_stats(c2, id, Semiwalk{{0, 1, 0}}, 0) == CountStats{1, 1, 0, 0});
  CHECK(count_stats(c2, id, Semiwalk{{0, 1, 0}}, 1) == CountStats{0, 0, 1, 1});
  CHECK_THROWS_AS(count_stats(c2, id, Semiwalk{{0, 1}}, 0), PreconditionError);
  CHECK_THROWS_AS(count_stats(c2, id, Semiwalk{{0, 0}}, 0), PreconditionError);

  const Poset p = example20();
  const auto theta = example20_theta(p);
  REQUIRE(in_M(p, theta));
  const auto gamma = walk(p, {"5", "7", "6", "8", "5"});
  CHECK(count_stats(p, theta, gamma, at(p, "7'")) == CountStats{0, 0, 0, 1});

  // elements off every preimage edge count nothing
  const Poset cr = crown(3);
  const auto g = walk(cr, {"x1", "y1", "x2", "y1", "x1"});
  for (const char* z : {"x3", "y2", "y3"})
    CHECK(count_stats(cr, EdgeBijection::identity(cr.pair_count()), g, at(cr, z)) == CountStats{});
}

TEST_CASE("counting statistics agree with the pair scan")
{
  for (const char* sel : {"crown:3", "example:6", "kmn:2x3"}) {
    const Poset p = family(sel);
    const auto ms = enumerate_M(p);
    for (std::size_t i = 0; i < ms.size(); i += 1 + ms.size() / 40) {
      const auto& theta = ms[i];
      for (const auto& w : oracle::closed_walks(p, 4)) {
        const auto d = defects(p, theta, w);
        for (Element z = 0; z < p.size(); ++z) {
          const auto c = count_stats(p, theta, Semiwalk{w}, z);
          const auto o = oracle::counts(p, theta, w, z);
          CHECK(std::array<int, 4>{int(c.s_plus), int(c.s_minus), int(c.t_plus), int(c.t_minus)} == o);
          CHECK(d[z] == c.defect());
        }
      }
    }
  }
}

TEST_CASE("the counting identity is invariant under shift and reversal")
{
  const Poset p = crown(3);
  const auto ms = enumerate_M(p);
  for (std::size_t i = 0; i < ms.size(); i += 37) {
    for (const auto& w : oracle::closed_walks(p, 4)) {
      std::vector<Element> rev(w.rbegin(), w.rend());
      std::vector<Element> shifted(w.begin() + 1, w.end());
      shifted.push_back(shifted.front());
      for (Element z = 0; z < p.size(); ++z) {
        const auto a = count_stats(p, ms[i], Semiwalk{w}, z);
        const auto r = count_stats(p, ms[i], Semiwalk{rev}, z);
        const auto s = count_stats(p, ms[i], Semiwalk{shifted}, z);
        CHECK(r == CountStats{a.s_minus, a.s_plus, a.t_minus, a.t_plus});
        CHECK(s == a);
      }
    }
  }
}

TEST_CASE("collapsing a monotone run preserves the differences")
{
  for (const char* sel : {"example:6", "chain:4", "fence:5"}) {
    const Poset p = family(sel);
    for (const auto& theta : enumerate_M(p))
      for (const auto& w : oracle::closed_walks(p, 5))
        for (std::size_t i = 1; i + 1 < w.size(); ++i) {
          const bool up = p.less(w[i - 1], w[i]) && p.less(w[i], w[i + 1]);
          const bool down = p.less(w[i], w[i - 1]) && p.less(w[i + 1], w[i]);
          if (!up && !down)
            continue;
          auto shorter = w;
          shorter.erase(shorter.begin() + static_cast<long>(i));
          for (Element z = 0; z < p.size(); ++z) {
            const auto a = count_stats(p, theta, Semiwalk{w}, z);
            const auto b = count_stats(p, theta, Semiwalk{shorter}, z);
            CHECK(long(a.s_plus) - long(a.t_plus) == long(b.s_plus) - long(b.t_plus));
            CHECK(long(a.s_minus) - long(a.t_minus) == long(b.s_minus) - long(b.t_minus));
          }
        }
  }
}

TEST_CASE("admissibility on the example poset fails at 7'")
{
  const Poset p = example20();
  const auto theta = example20_theta(p);
  CHECK_FALSE(is_admissible(p, theta));
  CHECK_FALSE(is_admissible_oracle(p, theta, 4));
  const AdmissibilityChecker check(p);
  const auto v = check.first_violation(theta);
  REQUIRE(v.has_value());
  CHECK(count_stats(p, theta, v->first.as_semiwalk(), v->second).defect() != 0);
  CHECK(is_admissible(p, EdgeBijection::identity(p.pair_count())));
  CHECK(is_admissible_oracle(p, EdgeBijection::identity(p.pair_count()), 6));
}

TEST_CASE("admissibility requires monotonicity")
{
  const Poset p = chain(3);
  CHECK_THROWS_AS(is_admissible(p, EdgeBijection{{1, 0, 2}}), PreconditionError);
  CHECK_THROWS_AS(is_admissible_oracle(p, EdgeBijection{{1, 0, 2}}, 4), PreconditionError);
}

TEST_CASE("on trees every monotone bijection is admissible")
{
  for (const char* sel : {"chain:4", "star:4", "fence:5", "fence:6"}) {
    const Poset p = family(sel);
    for (const auto& theta : enumerate_M(p))
      CHECK(is_admissible(p, theta));
  }
}

TEST_CASE("the crown criterion agrees with the semiwalk oracle")
{
  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    if (p.pair_count() > 6)
      continue;
    for (const auto& theta : enumerate_M(p))
      CHECK_MESSAGE(is_admissible(p, theta) == is_admissible_oracle(p, theta, 6), sel);
  }
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    const Poset p = oracle::random_poset(rng, 5, 0.5);
    if (p.pair_count() > 6)
      continue;
    const auto walks = oracle::closed_walks(p, 6);
    for (const auto& theta : enumerate_M(p)) {
      bool holds = true;
      for (const auto& w : walks)
        for (Element z = 0; z < p.size() && holds; ++z) {
          const auto c = oracle::counts(p, theta, w, z);
          holds = c[0] - c[1] == c[2] - c[3];
        }
      CHECK(is_admissible(p, theta) == holds);
    }
  }
}

TEST_CASE("crown parity characterises admissibility on Cr3")
{
  const Poset p = crown(3);
  // chain k is odd iff it joins x_i and y_i
  auto odd = [&](std::size_t k) {
    const auto& c = p.chains()[k];
    return p.name(c.front()).substr(1) == p.name(c.back()).substr(1);
  };
  const AdmissibilityChecker check(p);
  std::size_t admissible = 0;
  auto theta = EdgeBijection::identity(p.pair_count());
  do {
    bool parity = true;
    for (std::size_t a = 0; a < p.chains().size(); ++a)
      for (std::size_t b = a + 1; b < p.chains().size(); ++b) {
        const auto& ca = p.chains()[a].elements;
        const auto& cb = p.chains()[b].elements;
        if (std::find_first_of(ca.begin(), ca.end(), cb.begin(), cb.end()) == ca.end())
          continue;
        const auto ia = *chain_image(p, theta, a).target;
        const auto ib = *chain_image(p, theta, b).target;
        parity = parity && odd(ia) != odd(ib);
      }
    CHECK(check(theta) == parity);
    admissible += check(theta) ? 1 : 0;
  } while (std::next_permutation(theta.perm.begin(), theta.perm.end()));
  CHECK(admissible == 72);
}

TEST_CASE("proper witnesses")
{
  const Poset p = kmn(2, 3);
  const auto id = proper_witness(p, EdgeBijection::identity(p.pair_count()));
  REQUIRE(id.has_value());
  CHECK(id->kind == MapKind::Iso);
  for (const auto& lam : poset_maps(p)) {
    const auto w = proper_witness(p, restrict_to_edges(p, lam));
    REQUIRE(w.has_value());
    CHECK(*w == lam);
  }
  const Poset cr = crown(3);
  const auto swap = crown_swap(cr, 3);
  CHECK(in_M(cr, swap));
  CHECK(is_admissible(cr, swap));
  CHECK_FALSE(proper_witness(cr, swap).has_value());
}

TEST_CASE("separating bijections")
{
  const Poset p = fence(4);
  CHECK_FALSE(is_separating(p, EdgeBijection::identity(p.pair_count())));
  const auto theta = separating_bijection(p);
  REQUIRE(theta.has_value());
  CHECK(is_separating(p, *theta));
  CHECK_FALSE(proper_witness(p, *theta).has_value());
  CHECK_FALSE(separating_bijection(chain(3)).has_value());
  CHECK_FALSE(separating_bijection(star(3)).has_value());
  for (const auto& sel : suite_selectors()) {
    const Poset q = family(sel);
    for (const auto& lam : poset_maps(q))
      CHECK_MESSAGE(!is_separating(q, restrict_to_edges(q, lam)), sel);
    if (q.length() == 1 && q.minimal().size() > 1 && q.maximal().size() > 1) {
      const auto s = separating_bijection(q);
      REQUIRE_MESSAGE(s.has_value(), sel);
      CHECK(is_separating(q, *s));
    }
  }
  CHECK_FALSE(is_separating(chain(3), EdgeBijection{{1, 0, 2}}));
}

TEST_CASE("compatible sign maps")
{
  const Poset p = chain(3);
  const auto one = build_compatible_sigma(p, EdgeBijection::identity(3));
  for (const auto& s : one.values)
    CHECK(s.is_one());
  CHECK(is_compatible(p, one, EdgeBijection::identity(3)));

  const auto dec = restrict_to_edges(p, anti_of_chain3());
  const auto sigma = build_compatible_sigma(p, dec);
  const Field q = Field::rationals();
  CHECK(sigma.at(p, 0, 1) == q.one());
  CHECK(sigma.at(p, 1, 2) == q.from_int(-1));
  CHECK(sigma.at(p, 0, 2) == q.one());
  CHECK(is_compatible(p, sigma, dec));
  CHECK_FALSE(is_compatible(p, one, dec));
  CHECK_THROWS_AS(build_compatible_sigma(p, EdgeBijection{{1, 0, 2}}), PreconditionError);

  const auto f3 = build_compatible_sigma(p, dec, Field::prime(3));
  CHECK(f3.at(p, 1, 2) == Field::prime(3).from_int(2));

  for (const auto& sel : suite_selectors()) {
    const Poset x = family(sel);
    if (x.pair_count() > 9 || x.length() < 2)
      continue;
    for (const auto& theta : enumerate_M(x))
      CHECK_MESSAGE(is_compatible(x, build_compatible_sigma(x, theta), theta), sel);
  }
}

TEST_CASE("an increasing and a decreasing chain meet only at extremal elements")
{
  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    if (p.length() < 2 || p.pair_count() > 12)
      continue;
    for (const auto& theta : enumerate_M(p)) {
      const auto& chains = p.chains();
      for (std::size_t a = 0; a < chains.size(); ++a)
        for (std::size_t b = 0; b < chains.size(); ++b) {
          if (chain_image(p, theta, a).direction != Direction::Increasing ||
              chain_image(p, theta, b).direction != Direction::Decreasing)
            continue;
          std::vector<Element> common;
          for (auto x : chains[a].elements)
            if (chains[b].contains(x))
              common.push_back(x);
          for (auto x : common)
            CHECK(p.is_extremal(x));
          for (auto x : common)
            for (auto y : common)
              if (p.less(x, y)) {
                CHECK(x == chains[a].front());
                CHECK(x == chains[b].front());
                CHECK(y == chains[a].back());
                CHECK(y == chains[b].back());
              }
        }
    }
  }
}
