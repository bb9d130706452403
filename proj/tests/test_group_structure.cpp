#include "posetlie/enumeration.hpp"
#include "posetlie/errors.hpp"
#include "posetlie/families.hpp"
#include "posetlie/group_structure.hpp"

#include <doctest.h>

#include <numeric>

using namespace posetlie;

namespace {

EdgeBijection cycle(std::size_t n)
{
  EdgeBijection t = EdgeBijection::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    t.perm[i] = static_cast<std::uint32_t>((i + 1) % n);
  return t;
}

// the element orders of the dihedral group of order 2m
std::map<std::size_t, std::size_t> dihedral_histogram(std::size_t m)
{
  std::map<std::size_t, std::size_t> h;
  for (std::size_t k = 0; k < m; ++k)
    ++h[m / std::gcd(k, m)];
  h[2] += m;
  return h;
}

} // namespace

TEST_CASE("closure checks")
{
  const auto trivial = verify_group({EdgeBijection::identity(3)});
  CHECK(trivial.order() == 1);
  CHECK(trivial.degree() == 3);
  CHECK(trivial.generators().empty());

  const auto c = cycle(4);
  const auto c2 = compose(c, c);
  const auto c3 = compose(c2, c);
  const auto z4 = verify_group({c, c2, c3, EdgeBijection::identity(4), c2});
  CHECK(z4.order() == 4);
  CHECK(z4.contains(c3));
  CHECK(z4.index_of(EdgeBijection::identity(4)) == 0u);
  CHECK(generated_subgroup(z4.generators(), 4) == z4.elements());

  CHECK_THROWS_AS(verify_group({c, c2, c3}), NotClosed);
  CHECK_THROWS_AS(verify_group({EdgeBijection::identity(4), c, c2}), NotClosed);
  CHECK_THROWS_AS(verify_group({EdgeBijection::identity(3), EdgeBijection::identity(4)}), InvalidParameter);
  CHECK_THROWS_AS(verify_group({EdgeBijection{{0, 0}}}), InvalidParameter);
  CHECK_THROWS_AS(verify_group({}), NotClosed);
}

TEST_CASE("NotClosed names the offending elements")
{
  const auto c = cycle(3);
  try {
    verify_group({EdgeBijection::identity(3), c});
    FAIL("expected NotClosed");
  } catch (const NotClosed& e) {
    const std::vector<EdgeBijection> sorted{EdgeBijection::identity(3), c};
    CHECK(e.first() < 2);
    CHECK(e.second() < 2);
    const auto product = compose(sorted[e.first()], sorted[e.second()]);
    CHECK(std::find(sorted.begin(), sorted.end(), product) == sorted.end());
  }
}

TEST_CASE("element orders")
{
  CHECK(element_order(EdgeBijection::identity(5)) == 1);
  CHECK(element_order(cycle(5)) == 5);
  CHECK(element_order(EdgeBijection{{1, 0, 3, 4, 2}}) == 6);
  CHECK(generated_subgroup({}, 3) == std::vector<EdgeBijection>{EdgeBijection::identity(3)});
  CHECK(generated_subgroup({cycle(6)}, 6).size() == 6);
}

TEST_CASE("orders of the enumerated groups")
{
  CHECK(verify_group(enumerate_AM(crown(2))).order() == 8);
  CHECK(verify_group(enumerate_P(kmn(2, 3))).order() == 12);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto am = verify_group(enumerate_AM(crown(n)));
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k)
      f *= k;
    CHECK(am.order() == 2 * f * f);
    CHECK(verify_group(enumerate_P(crown(n))).order() == 4 * n);
    for (const auto& [order, count] : order_histogram(am)) {
      CHECK(am.order() % order == 0);
      CHECK(count > 0);
    }
  }
}

TEST_CASE("P of a crown is dihedral")
{
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = verify_group(enumerate_P(crown(n)));
    const auto w = find_dihedral_witness(g, n);
    REQUIRE(w.has_value());
    CHECK(element_order(w->r) == 2 * n);
    CHECK(element_order(w->s) == 2);
    CHECK(compose(compose(w->s, w->r), w->s) == w->r.inverse());
    CHECK(generated_subgroup({w->r, w->s}, g.degree()) == g.elements());
    CHECK(order_histogram(g) == dihedral_histogram(2 * n));
  }
  CHECK_FALSE(dihedral_witness(verify_group(enumerate_AM(crown(3))), 3));
  CHECK_FALSE(dihedral_witness(verify_group(enumerate_P(crown(3))), 4));
}

TEST_CASE("AM of a crown preserves or swaps the parity classes")
{
  const auto g3 = verify_group(enumerate_AM(crown(3)));
  const auto r3 = crown_parity_witness(g3, 3);
  CHECK(r3.group_order == 72);
  CHECK(r3.subgroup_order == 36);
  CHECK(r3.index == 2);

  const auto r2 = crown_parity_witness(verify_group(enumerate_AM(crown(2))), 2);
  CHECK(r2.group_order == 8);
  CHECK(r2.subgroup_order == 4);

  const auto r4 = crown_parity_witness(verify_group(enumerate_AM(crown(4))), 4);
  CHECK(r4.group_order == 1152);
  CHECK(r4.subgroup_order == 576);

  CHECK_THROWS_AS(crown_parity_witness(verify_group(enumerate_P(crown(3))), 3), StructureMismatch);
  CHECK_THROWS_AS(crown_parity_witness(g3, 4), StructureMismatch);
}
