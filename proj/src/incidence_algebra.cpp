#include "posetlie/incidence_algebra.hpp"

#include "posetlie/errors.hpp"
#include "posetlie/linear_algebra.hpp"

#include <algorithm>
#include <limits>

namespace posetlie {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

void require_same(const AlgebraPtr& a, const AlgebraPtr& b)
{
  if (a != b)
    throw AlgebraMismatch("operands belong to different incidence algebras");
}

std::string pair_label(const IncidenceAlgebra& alg, std::size_t index)
{
  const auto [x, y] = alg.basis()[index];
  const auto& p = alg.poset();
  if (x == y)
    return "e_" + p.name(x);
  return "e_(" + p.name(x) + "," + p.name(y) + ")";
}

std::vector<IncidenceElement> to_elements(const AlgebraPtr& alg, std::vector<ScalarRow> rows)
{
  std::vector<IncidenceElement> out;
  out.reserve(rows.size());
  for (auto& r : rows)
    out.emplace_back(alg, std::move(r));
  return out;
}

std::vector<ScalarRow> to_rows(const std::vector<IncidenceElement>& elements)
{
  std::vector<ScalarRow> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements)
    rows.push_back(e.coefficients());
  return rows;
}

} // namespace

// ---------------------------------------------------------------------------
// IncidenceAlgebra

IncidenceAlgebra::IncidenceAlgebra(Poset poset, Field field)
  : poset_(std::move(poset))
  , field_(field)
{
  const std::size_t n = poset_.size();
  lookup_.assign(n * n, npos);
  starting_at_.assign(n, {});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (poset_.leq(x, y)) {
        lookup_[x * n + y] = basis_.size();
        starting_at_[x].push_back(basis_.size());
        basis_.emplace_back(x, y);
      }
  linear_extension_.resize(n);
  for (Element x = 0; x < n; ++x)
    linear_extension_[x] = x;
  // x < y implies strictly fewer elements below x than below y
  std::stable_sort(linear_extension_.begin(), linear_extension_.end(), [this](Element a, Element b) {
    return poset_.strictly_below(a).size() < poset_.strictly_below(b).size();
  });
}

std::shared_ptr<const IncidenceAlgebra> IncidenceAlgebra::create(Poset poset, Field field)
{
  return std::shared_ptr<const IncidenceAlgebra>(new IncidenceAlgebra(std::move(poset), field));
}

std::optional<std::size_t> IncidenceAlgebra::find_basis(Element x, Element y) const
{
  const std::size_t n = poset_.size();
  if (x >= n || y >= n || lookup_[x * n + y] == npos)
    return std::nullopt;
  return lookup_[x * n + y];
}

std::size_t IncidenceAlgebra::basis_index(Element x, Element y) const
{
  const auto idx = find_basis(x, y);
  if (!idx)
    throw InvalidParameter("e_xy requires x <= y");
  return *idx;
}

IncidenceElement IncidenceAlgebra::zero() const
{
  return IncidenceElement(shared_from_this(), std::vector<Scalar>(dimension(), field_.zero()));
}

IncidenceElement IncidenceAlgebra::identity() const
{
  auto d = zero();
  for (Element x = 0; x < poset_.size(); ++x)
    d.set(x, x, field_.one());
  return d;
}

IncidenceElement IncidenceAlgebra::unit(Element x, Element y) const
{
  return unit(basis_index(x, y));
}

IncidenceElement IncidenceAlgebra::unit(std::size_t index) const
{
  auto e = zero();
  std::vector<Scalar> coeffs = e.coefficients();
  coeffs.at(index) = field_.one();
  return IncidenceElement(shared_from_this(), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// IncidenceElement

IncidenceElement::IncidenceElement(AlgebraPtr algebra, std::vector<Scalar> coefficients)
  : algebra_(std::move(algebra))
  , coeffs_(std::move(coefficients))
{
  if (coeffs_.size() != algebra_->dimension())
    throw InvalidParameter("coefficient vector does not match the algebra dimension");
  for (const auto& c : coeffs_)
    if (c.field() != algebra_->field())
      throw FieldMismatch("coefficient outside the algebra's field");
}

Scalar IncidenceElement::operator()(Element x, Element y) const
{
  if (const auto idx = algebra_->find_basis(x, y))
    return coeffs_[*idx];
  return algebra_->field().zero();
}

void IncidenceElement::set(Element x, Element y, Scalar value)
{
  if (value.field() != algebra_->field())
    throw FieldMismatch("coefficient outside the algebra's field");
  coeffs_[algebra_->basis_index(x, y)] = std::move(value);
}

bool IncidenceElement::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

IncidenceElement IncidenceElement::diagonal_part() const
{
  auto out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (algebra_->basis()[i].first != algebra_->basis()[i].second)
      out.coeffs_[i] = algebra_->field().zero();
  return out;
}

IncidenceElement IncidenceElement::radical_part() const
{
  auto out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (algebra_->basis()[i].first == algebra_->basis()[i].second)
      out.coeffs_[i] = algebra_->field().zero();
  return out;
}

IncidenceElement IncidenceElement::operator-() const
{
  auto out = *this;
  for (auto& c : out.coeffs_)
    c = -c;
  return out;
}

IncidenceElement operator+(const IncidenceElement& f, const IncidenceElement& g)
{
  require_same(f.algebra_, g.algebra_);
  auto out = f;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] += g.coeffs_[i];
  return out;
}

IncidenceElement operator-(const IncidenceElement& f, const IncidenceElement& g)
{
  require_same(f.algebra_, g.algebra_);
  auto out = f;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] -= g.coeffs_[i];
  return out;
}

IncidenceElement operator*(const Scalar& c, const IncidenceElement& f)
{
  auto out = f;
  for (auto& x : out.coeffs_)
    x = c * x;
  return out;
}

IncidenceElement operator*(const IncidenceElement& f, const IncidenceElement& g)
{
  return multiply(f, g);
}

bool operator==(const IncidenceElement& f, const IncidenceElement& g)
{
  return f.algebra_ == g.algebra_ && f.coeffs_ == g.coeffs_;
}

IncidenceElement multiply(const IncidenceElement& f, const IncidenceElement& g)
{
  require_same(f.algebra_ptr(), g.algebra_ptr());
  const auto& alg = f.algebra();
  auto out = alg.zero();
  std::vector<Scalar> acc = out.coefficients();
  for (std::size_t i = 0; i < alg.dimension(); ++i) {
    const auto& fi = f.coefficient(i);
    if (fi.is_zero())
      continue;
    const auto [x, z] = alg.basis()[i];
    for (std::size_t j : alg.starting_at(z)) {
      const auto& gj = g.coefficient(j);
      if (gj.is_zero())
        continue;
      acc[*alg.find_basis(x, alg.basis()[j].second)] += fi * gj;
    }
  }
  return IncidenceElement(f.algebra_ptr(), std::move(acc));
}

IncidenceElement bracket(const IncidenceElement& f, const IncidenceElement& g)
{
  return multiply(f, g) - multiply(g, f);
}

IncidenceElement inverse(const IncidenceElement& f)
{
  const auto& alg = f.algebra();
  const auto& poset = alg.poset();
  for (Element x = 0; x < poset.size(); ++x)
    if (f(x, x).is_zero())
      throw NotInvertible("f(" + poset.name(x) + "," + poset.name(x) + ") = 0");

  // g f = delta, solved row by row: g(x,y) f(y,y) = -sum_{x<=z<y} g(x,z) f(z,y)
  auto g = alg.zero();
  for (Element x = 0; x < poset.size(); ++x)
    for (Element y : alg.linear_extension()) {
      if (!poset.leq(x, y))
        continue;
      if (x == y) {
        g.set(x, x, f(x, x).inverse());
        continue;
      }
      Scalar sum = alg.field().zero();
      for (Element z : poset.strictly_below(y))
        if (poset.leq(x, z))
          sum += g(x, z) * f(z, y);
      g.set(x, y, -sum / f(y, y));
    }
  return g;
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(AlgebraPtr algebra, const std::vector<IncidenceElement>& images)
  : algebra_(std::move(algebra))
{
  if (images.size() != algebra_->dimension())
    throw InvalidParameter("a linear map needs one image per basis element");
  columns_.reserve(images.size());
  for (const auto& img : images) {
    require_same(algebra_, img.algebra_ptr());
    columns_.push_back(img.coefficients());
  }
}

LinearMap::LinearMap(AlgebraPtr algebra, std::vector<std::vector<Scalar>> columns)
  : algebra_(std::move(algebra))
  , columns_(std::move(columns))
{
}

LinearMap LinearMap::identity(const AlgebraPtr& algebra)
{
  std::vector<IncidenceElement> images;
  for (std::size_t j = 0; j < algebra->dimension(); ++j)
    images.push_back(algebra->unit(j));
  return LinearMap(algebra, images);
}

LinearMap LinearMap::zero(const AlgebraPtr& algebra)
{
  return LinearMap(algebra, std::vector<IncidenceElement>(algebra->dimension(), algebra->zero()));
}

IncidenceElement LinearMap::column(std::size_t j) const
{
  return IncidenceElement(algebra_, columns_.at(j));
}

IncidenceElement LinearMap::operator()(const IncidenceElement& f) const
{
  require_same(algebra_, f.algebra_ptr());
  std::vector<Scalar> out(dimension(), algebra_->field().zero());
  for (std::size_t j = 0; j < dimension(); ++j) {
    const auto& c = f.coefficient(j);
    if (c.is_zero())
      continue;
    for (std::size_t i = 0; i < dimension(); ++i)
      if (!columns_[j][i].is_zero())
        out[i] += c * columns_[j][i];
  }
  return IncidenceElement(algebra_, std::move(out));
}

bool LinearMap::is_invertible() const
{
  return rank(columns_) == dimension();
}

LinearMap LinearMap::operator-() const
{
  auto cols = columns_;
  for (auto& col : cols)
    for (auto& c : col)
      c = -c;
  return LinearMap(algebra_, std::move(cols));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b)
{
  require_same(a.algebra_, b.algebra_);
  auto cols = a.columns_;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i)
      cols[j][i] += b.columns_[j][i];
  return LinearMap(a.algebra_, std::move(cols));
}

LinearMap operator-(const LinearMap& a, const LinearMap& b)
{
  return a + (-b);
}

bool operator==(const LinearMap& a, const LinearMap& b)
{
  return a.algebra_ == b.algebra_ && a.columns_ == b.columns_;
}

LinearMap compose(const LinearMap& a, const LinearMap& b)
{
  require_same(a.algebra_, b.algebra_);
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(b.dimension());
  for (std::size_t j = 0; j < b.dimension(); ++j)
    cols.push_back(a(b.column(j)).coefficients());
  return LinearMap(a.algebra_, std::move(cols));
}

// ---------------------------------------------------------------------------
// subspaces

std::vector<IncidenceElement> radical_basis(const AlgebraPtr& algebra)
{
  std::vector<IncidenceElement> out;
  for (std::size_t j = 0; j < algebra->dimension(); ++j)
    if (algebra->basis()[j].first != algebra->basis()[j].second)
      out.push_back(algebra->unit(j));
  return out;
}

std::vector<IncidenceElement> span_basis(const AlgebraPtr& algebra,
                                         const std::vector<IncidenceElement>& elements)
{
  for (const auto& e : elements)
    require_same(algebra, e.algebra_ptr());
  return to_elements(algebra, row_reduce(to_rows(elements)));
}

bool same_span(const AlgebraPtr& algebra, const std::vector<IncidenceElement>& a,
               const std::vector<IncidenceElement>& b)
{
  const auto ra = span_basis(algebra, a);
  const auto rb = span_basis(algebra, b);
  return ra == rb;
}

bool in_span(const std::vector<IncidenceElement>& basis, const IncidenceElement& f)
{
  return in_span(to_rows(basis), f.coefficients());
}

std::vector<IncidenceElement> commutator_subspace(const AlgebraPtr& algebra)
{
  const std::size_t dim = algebra->dimension();
  std::vector<IncidenceElement> units;
  for (std::size_t j = 0; j < dim; ++j)
    units.push_back(algebra->unit(j));
  std::vector<ScalarRow> rows;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      auto b = bracket(units[i], units[j]);
      if (!b.is_zero())
        rows.push_back(b.coefficients());
    }
  return to_elements(algebra, row_reduce(std::move(rows)));
}

std::vector<IncidenceElement> center(const AlgebraPtr& algebra)
{
  const std::size_t dim = algebra->dimension();
  const auto& field = algebra->field();
  std::vector<IncidenceElement> units;
  for (std::size_t j = 0; j < dim; ++j)
    units.push_back(algebra->unit(j));

  // row (j, r): sum_k c_k [b_k, b_j]_r = 0
  std::vector<std::vector<IncidenceElement>> brackets(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j)
      brackets[k].push_back(bracket(units[k], units[j]));
  std::vector<ScalarRow> rows;
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < dim; ++r) {
      ScalarRow row(dim, field.zero());
      bool nonzero = false;
      for (std::size_t k = 0; k < dim; ++k) {
        row[k] = brackets[k][j].coefficient(r);
        nonzero = nonzero || !row[k].is_zero();
      }
      if (nonzero)
        rows.push_back(std::move(row));
    }
  return to_elements(algebra, nullspace(rows, dim, field));
}

// ---------------------------------------------------------------------------
// classical maps

LinearMap induced_map(const AlgebraPtr& algebra, const PosetMap& map)
{
  if (!is_poset_map(algebra->poset(), map))
    throw PreconditionError("not an automorphism or anti-automorphism of the poset");
  std::vector<IncidenceElement> images;
  for (const auto& [x, y] : algebra->basis())
    images.push_back(map.kind == MapKind::Iso ? algebra->unit(map(x), map(y))
                                              : algebra->unit(map(y), map(x)));
  return LinearMap(algebra, images);
}

LinearMap multiplicative_map(const IncidenceElement& sigma)
{
  const auto& alg = sigma.algebra();
  const auto& poset = alg.poset();
  for (std::size_t j = 0; j < alg.dimension(); ++j) {
    const auto [x, y] = alg.basis()[j];
    if (sigma.coefficient(j).is_zero())
      throw CocycleError("sigma(" + poset.name(x) + "," + poset.name(y) + ") = 0");
    if (x == y && !sigma.coefficient(j).is_one())
      throw CocycleError("sigma(" + poset.name(x) + "," + poset.name(x) + ") != 1");
  }
  for (Element x = 0; x < poset.size(); ++x)
    for (Element y : poset.strictly_above(x))
      for (Element z : poset.strictly_above(y))
        if (sigma(x, y) * sigma(y, z) != sigma(x, z))
          throw CocycleError("sigma(" + poset.name(x) + "," + poset.name(y) + ") sigma(" +
                             poset.name(y) + "," + poset.name(z) + ") != sigma(" + poset.name(x) +
                             "," + poset.name(z) + ")");
  std::vector<IncidenceElement> images;
  for (std::size_t j = 0; j < alg.dimension(); ++j)
    images.push_back(sigma.coefficient(j) * alg.unit(j));
  return LinearMap(sigma.algebra_ptr(), images);
}

LinearMap inner_map(const IncidenceElement& f)
{
  const auto f_inv = inverse(f);
  const auto& alg = f.algebra();
  std::vector<IncidenceElement> images;
  for (std::size_t j = 0; j < alg.dimension(); ++j)
    images.push_back(multiply(multiply(f, alg.unit(j)), f_inv));
  return LinearMap(f.algebra_ptr(), images);
}

namespace {

// checks map(b_i b_j) against map(b_i) map(b_j), or map(b_j) map(b_i) when reversed
bool preserves_products(const LinearMap& map, bool reversed)
{
  if (!map.is_invertible())
    return false;
  const auto& alg = map.algebra();
  const std::size_t dim = alg.dimension();
  std::vector<IncidenceElement> images;
  for (std::size_t j = 0; j < dim; ++j)
    images.push_back(map.column(j));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const auto [a, b] = alg.basis()[i];
      const auto [c, d] = alg.basis()[j];
      const auto lhs = b == c ? images[*alg.find_basis(a, d)] : alg.zero();
      const auto rhs = reversed ? multiply(images[j], images[i]) : multiply(images[i], images[j]);
      if (lhs != rhs)
        return false;
    }
  return true;
}

} // namespace

bool is_algebra_automorphism(const LinearMap& map)
{
  return preserves_products(map, false);
}

bool is_anti_automorphism(const LinearMap& map)
{
  return preserves_products(map, true);
}

bool is_lie_automorphism(const LinearMap& map)
{
  if (!map.is_invertible())
    return false;
  const auto& alg = map.algebra();
  const std::size_t dim = alg.dimension();
  std::vector<IncidenceElement> units, images;
  for (std::size_t j = 0; j < dim; ++j) {
    units.push_back(alg.unit(j));
    images.push_back(map.column(j));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (map(bracket(units[i], units[j])) != bracket(images[i], images[j]))
        return false;
  return true;
}

ProperDecomposition check_proper_decomposition(const LinearMap& tau, const LinearMap& phi)
{
  require_same(tau.algebra_ptr(), phi.algebra_ptr());
  if (!is_lie_automorphism(tau))
    throw PreconditionError("tau is not a Lie automorphism");
  if (!is_algebra_automorphism(phi) && !is_anti_automorphism(-phi))
    throw PreconditionError("phi is neither an automorphism nor the negative of an anti-automorphism");

  const auto& algebra = tau.algebra_ptr();
  const auto nu = tau - phi;
  ProperDecomposition result;

  const auto commutators = commutator_subspace(algebra);
  for (std::size_t k = 0; k < commutators.size(); ++k)
    if (!nu(commutators[k]).is_zero()) {
      result.witness = NotProperWitness{NotProperWitness::Constraint::KillsCommutators, k,
                                        "nu does not vanish on commutator basis vector " +
                                          std::to_string(k)};
      return result;
    }

  const auto central = center(algebra);
  for (std::size_t j = 0; j < algebra->dimension(); ++j)
    if (!in_span(central, nu.column(j))) {
      result.witness = NotProperWitness{NotProperWitness::Constraint::CentralValued, j,
                                        "nu(" + pair_label(*algebra, j) + ") is not central"};
      return result;
    }

  result.nu = nu;
  return result;
}

} // namespace posetlie
