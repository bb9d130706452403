#include "posetlie/errors.hpp"
#include "posetlie/families.hpp"
#include "posetlie/incidence_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace posetlie;

namespace {

IncidenceElement random_element(const AlgebraPtr& a, std::mt19937& rng, bool invertible = false)
{
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::bernoulli_distribution sparse(0.5);
  std::vector<Scalar> cs;
  for (const auto& [x, y] : a->basis()) {
    int v = sparse(rng) ? coeff(rng) : 0;
    if (x == y && invertible && v == 0)
      v = 1;
    cs.push_back(a->field().from_int(v));
  }
  return IncidenceElement(a, cs);
}

Element at(const Poset& p, const char* label)
{
  return *p.find(label);
}

// the map sending every e_x to delta and every e_xy to zero
LinearMap diagonal_to_delta(const AlgebraPtr& a)
{
  std::vector<IncidenceElement> images;
  for (const auto& [x, y] : a->basis())
    images.push_back(x == y ? a->identity() : a->zero());
  return LinearMap(a, images);
}

} // namespace

TEST_CASE("convolution of basis elements")
{
  const auto a = IncidenceAlgebra::create(chain(3));
  CHECK(a->dimension() == 6);
  CHECK(a->unit(0, 1) * a->unit(1, 2) == a->unit(0, 2));
  CHECK(a->unit(0, 0) * a->unit(0, 2) == a->unit(0, 2));
  CHECK((a->unit(0, 1) * a->unit(0, 2)).is_zero());
  CHECK((a->unit(1, 2) * a->unit(0, 1)).is_zero());
  CHECK_THROWS_AS(a->unit(2, 0), InvalidParameter);

  // every product of basis elements against the definition
  const auto p = example6();
  const auto b = IncidenceAlgebra::create(p);
  for (const auto& [x, y] : b->basis())
    for (const auto& [z, w] : b->basis()) {
      const auto prod = b->unit(x, y) * b->unit(z, w);
      CHECK(prod == (y == z ? b->unit(x, w) : b->zero()));
    }
}

TEST_CASE("delta is a two-sided identity and inverses are two-sided")
{
  std::mt19937 rng(3);
  for (const char* sel : {"chain:4", "crown:3", "example:6"}) {
    const auto a = IncidenceAlgebra::create(family(sel));
    for (int t = 0; t < 20; ++t) {
      const auto f = random_element(a, rng);
      CHECK(a->identity() * f == f);
      CHECK(f * a->identity() == f);
      const auto g = random_element(a, rng, true);
      const auto gi = inverse(g);
      CHECK(g * gi == a->identity());
      CHECK(gi * g == a->identity());
    }
  }
  const auto a = IncidenceAlgebra::create(chain(2));
  CHECK_THROWS_AS(inverse(a->unit(0, 1)), NotInvertible);
}

TEST_CASE("associativity, the Jacobi identity and antisymmetry")
{
  std::mt19937 rng(5);
  for (const char* sel : {"chain:3", "fence:5", "kmn:2x3", "example:6"}) {
    for (const Field& field : {Field::rationals(), Field::prime(5)}) {
      const auto a = IncidenceAlgebra::create(family(sel), field);
      for (int t = 0; t < 10; ++t) {
        const auto f = random_element(a, rng);
        const auto g = random_element(a, rng);
        const auto h = random_element(a, rng);
        CHECK((f * g) * h == f * (g * h));
        CHECK(bracket(f, f).is_zero());
        CHECK(bracket(f, g) == -bracket(g, f));
        CHECK((bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).is_zero());
      }
    }
  }
}

TEST_CASE("bracket of an idempotent with a radical element")
{
  const auto p = example6();
  const auto a = IncidenceAlgebra::create(p);
  for (const auto& [x, y] : a->basis())
    if (x != y) {
      CHECK(bracket(a->unit(x, x), a->unit(x, y)) == a->unit(x, y));
      CHECK(bracket(a->unit(y, y), a->unit(x, y)) == -a->unit(x, y));
    }
}

TEST_CASE("algebra mismatch")
{
  const auto a = IncidenceAlgebra::create(chain(2));
  const auto b = IncidenceAlgebra::create(chain(2), Field::prime(3));
  const auto c = IncidenceAlgebra::create(chain(3));
  CHECK_THROWS_AS(a->identity() * b->identity(), AlgebraMismatch);
  CHECK_THROWS_AS(a->identity() + c->identity(), AlgebraMismatch);
}

TEST_CASE("diagonal plus radical decomposition")
{
  std::mt19937 rng(11);
  const auto a = IncidenceAlgebra::create(crown(3));
  for (int t = 0; t < 10; ++t) {
    const auto f = random_element(a, rng);
    const auto d = f.diagonal_part();
    const auto j = f.radical_part();
    CHECK(d + j == f);
    for (const auto& [x, y] : a->basis()) {
      if (x == y)
        CHECK(j(x, y).is_zero());
      else
        CHECK(d(x, y).is_zero());
    }
  }
}

TEST_CASE("commutator subspace equals the radical")
{
  CHECK(commutator_subspace(IncidenceAlgebra::create(chain(3))).size() == 3);
  CHECK(commutator_subspace(IncidenceAlgebra::create(example6())).size() == 9);
  CHECK(commutator_subspace(IncidenceAlgebra::create(chain(1))).empty());
  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    if (p.size() > 6)
      continue;
    for (const Field& field : {Field::rationals(), Field::prime(2)}) {
      const auto a = IncidenceAlgebra::create(p, field);
      CHECK_MESSAGE(same_span(a, commutator_subspace(a), radical_basis(a)), sel);
    }
  }
}

TEST_CASE("the center of a connected poset is spanned by delta")
{
  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    if (p.pair_count() > 30)
      continue;
    const auto a = IncidenceAlgebra::create(p);
    const auto z = center(a);
    REQUIRE_MESSAGE(z.size() == 1, sel);
    CHECK(in_span(z, a->identity()));
  }
  const auto a = IncidenceAlgebra::create(chain(1));
  CHECK(center(a).size() == 1);
}

TEST_CASE("induced maps")
{
  const auto a = IncidenceAlgebra::create(chain(2));
  const auto maps = poset_maps(chain(2));
  CHECK(induced_map(a, maps[0]) == LinearMap::identity(a));
  const auto flip = induced_map(a, maps[1]);
  CHECK(flip(a->unit(0, 0)) == a->unit(1, 1));
  CHECK(flip(a->unit(1, 1)) == a->unit(0, 0));
  CHECK(flip(a->unit(0, 1)) == a->unit(0, 1));
  CHECK(is_anti_automorphism(flip));
  CHECK_FALSE(is_algebra_automorphism(flip));
  CHECK(is_lie_automorphism(-flip));
  CHECK_THROWS_AS(induced_map(a, PosetMap{{1, 0}, MapKind::Iso}), PreconditionError);

  // a rotation of Cr2 has order 4 on the basis
  const Poset cr = crown(2);
  const auto b = IncidenceAlgebra::create(cr);
  const PosetMap rot{{at(cr, "x2"), at(cr, "x1"), at(cr, "y2"), at(cr, "y1")}, MapKind::Iso};
  REQUIRE(is_poset_map(cr, rot));
  const auto r = induced_map(b, rot);
  auto power = r;
  int order = 1;
  while (!(power == LinearMap::identity(b))) {
    power = compose(power, r);
    ++order;
  }
  CHECK(order == 2);
}

TEST_CASE("a permutation of order 4 on the Cr2 basis")
{
  // x1 -> x2 -> x1 with y1 -> y2 -> y1 is an involution; the order-4
  // rotation of the square alternates between kinds.
  const Poset cr = crown(2);
  const auto a = IncidenceAlgebra::create(cr);
  const auto x1 = at(cr, "x1"), x2 = at(cr, "x2"), y1 = at(cr, "y1"), y2 = at(cr, "y2");
  std::vector<Element> perm(4);
  perm[x1] = y1;
  perm[y1] = x2;
  perm[x2] = y2;
  perm[y2] = x1;
  const PosetMap rot{perm, MapKind::AntiIso};
  REQUIRE(is_poset_map(cr, rot));
  const auto r = induced_map(a, rot);
  auto power = r;
  int order = 1;
  while (!(power == LinearMap::identity(a))) {
    power = compose(power, r);
    ++order;
  }
  CHECK(order == 4);
  for (std::size_t j = 0; j < a->dimension(); ++j) {
    int nonzero = 0;
    for (std::size_t i = 0; i < a->dimension(); ++i)
      nonzero += r.entry(i, j).is_zero() ? 0 : 1;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("induced maps are functorial")
{
  for (const char* sel : {"chain:3", "crown:3", "example:6", "kmn:2x2"}) {
    const Poset p = family(sel);
    const auto a = IncidenceAlgebra::create(p);
    const auto maps = poset_maps(p);
    for (const auto& f : maps)
      for (const auto& g : maps) {
        CHECK(induced_map(a, compose(f, g)) == compose(induced_map(a, f), induced_map(a, g)));
        const auto h = induced_map(a, f);
        CHECK((f.kind == MapKind::Iso ? is_algebra_automorphism(h) : is_anti_automorphism(h)));
      }
  }
}

TEST_CASE("multiplicative maps")
{
  const auto a = IncidenceAlgebra::create(chain(2));
  CHECK(multiplicative_map(a->identity() + a->unit(0, 1)) == LinearMap::identity(a));

  auto sigma = a->identity();
  sigma.set(0, 1, a->field().from_int(2));
  const auto m = multiplicative_map(sigma);
  CHECK(m(a->unit(0, 1)) == a->field().from_int(2) * a->unit(0, 1));
  CHECK(is_algebra_automorphism(m));

  const auto b = IncidenceAlgebra::create(chain(3));
  auto bad = b->identity();
  bad.set(0, 1, b->field().from_int(2));
  bad.set(1, 2, b->field().from_int(3));
  bad.set(0, 2, b->field().from_int(5));
  CHECK_THROWS_AS(multiplicative_map(bad), CocycleError);
  bad.set(0, 2, b->field().from_int(6));
  CHECK(is_algebra_automorphism(multiplicative_map(bad)));
  bad.set(0, 0, b->field().from_int(2));
  CHECK_THROWS_AS(multiplicative_map(bad), CocycleError);
  CHECK_THROWS_AS(multiplicative_map(b->identity()), CocycleError);
}

TEST_CASE("inner maps conjugate by f")
{
  const auto a = IncidenceAlgebra::create(chain(2));
  CHECK(inner_map(a->identity()) == LinearMap::identity(a));
  const auto f = a->identity() + a->unit(0, 1);
  const auto ex = a->unit(0, 0);
  CHECK(inner_map(f)(ex) == f * ex * inverse(f));
  CHECK(inner_map(f)(ex) == ex - a->unit(0, 1));
  CHECK(inner_map(inverse(f))(ex) == ex + a->unit(0, 1));
  CHECK(is_algebra_automorphism(inner_map(f)));
  CHECK_THROWS_AS(inner_map(a->unit(0, 1)), NotInvertible);
}

TEST_CASE("conjugates of e_xy are multiples of e_uv only when (x,y) = (u,v)")
{
  std::mt19937 rng(23);
  const Poset p = example6();
  const auto a = IncidenceAlgebra::create(p);
  for (int t = 0; t < 10; ++t) {
    const auto h = random_element(a, rng, true);
    const auto xi = inner_map(h);
    for (const auto& [x, y] : a->basis()) {
      if (x == y)
        continue;
      const auto c = xi(a->unit(x, y));
      for (const auto& [u, v] : a->basis()) {
        if (u == v)
          continue;
        const auto s = c(u, v);
        if (!s.is_zero() && c == s * a->unit(u, v))
          CHECK((x == u && y == v));
      }
    }
  }
}

TEST_CASE("Lie automorphisms")
{
  const Poset p = crown(3);
  const auto a = IncidenceAlgebra::create(p);
  for (const auto& m : poset_maps(p)) {
    const auto h = induced_map(a, m);
    CHECK(is_lie_automorphism(m.kind == MapKind::Iso ? h : -h));
  }
  CHECK_FALSE(is_lie_automorphism(LinearMap::zero(a)));
}

TEST_CASE("proper decompositions")
{
  const Poset p = chain(3);
  const auto a = IncidenceAlgebra::create(p);
  const auto maps = poset_maps(p);
  const auto lam = induced_map(a, maps[0]);
  const auto mu = induced_map(a, maps[1]);

  const auto same = check_proper_decomposition(lam, lam);
  REQUIRE(same);
  CHECK(*same.nu == LinearMap::zero(a));

  const auto tau = lam + diagonal_to_delta(a);
  REQUIRE(is_lie_automorphism(tau));
  const auto shifted = check_proper_decomposition(tau, lam);
  REQUIRE(shifted);
  CHECK(*shifted.nu == diagonal_to_delta(a));

  const auto bad = check_proper_decomposition(lam, -mu);
  CHECK_FALSE(bad);
  REQUIRE(bad.witness);
  CHECK(bad.witness->constraint == NotProperWitness::Constraint::KillsCommutators);

  CHECK_THROWS_AS(check_proper_decomposition(LinearMap::zero(a), lam), PreconditionError);
  CHECK_THROWS_AS(check_proper_decomposition(lam, mu), PreconditionError);
}

TEST_CASE("prime field arithmetic in the algebra")
{
  const auto a = IncidenceAlgebra::create(chain(3), Field::prime(2));
  const auto f = a->identity() + a->unit(0, 1) + a->unit(1, 2);
  const auto fi = inverse(f);
  CHECK(f * fi == a->identity());
  CHECK(fi(0, 2) == Field::prime(2).one()); // -1 = 1
  CHECK((a->unit(0, 1) + a->unit(0, 1)).is_zero());
}
