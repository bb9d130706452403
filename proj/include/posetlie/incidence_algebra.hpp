#pragma once

#include "posetlie/poset.hpp"
#include "posetlie/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace posetlie {

class IncidenceElement;

/// I(X,K) with the standard basis {e_xy : x <= y} ordered by (x, y).
/// Always held through a shared pointer; elements keep their algebra alive.
class IncidenceAlgebra : public std::enable_shared_from_this<IncidenceAlgebra>
{
public:
  using Pair = std::pair<Element, Element>;

  static std::shared_ptr<const IncidenceAlgebra> create(Poset poset,
                                                         Field field = Field::rationals());

  const Poset& poset() const noexcept { return poset_; }
  const Field& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Pair>& basis() const noexcept { return basis_; }
  std::optional<std::size_t> find_basis(Element x, Element y) const;
  /// Throws InvalidParameter unless x <= y.
  std::size_t basis_index(Element x, Element y) const;
  /// Indices of the basis elements e_zy for fixed z, ascending in y.
  const std::vector<std::size_t>& starting_at(Element z) const { return starting_at_[z]; }
  /// Elements in an order compatible with <=.
  const std::vector<Element>& linear_extension() const noexcept { return linear_extension_; }

  IncidenceElement zero() const;
  /// delta, the identity of the algebra
  IncidenceElement identity() const;
  /// e_xy
  IncidenceElement unit(Element x, Element y) const;
  IncidenceElement unit(std::size_t basis_index) const;

private:
  IncidenceAlgebra(Poset poset, Field field);

  Poset poset_;
  Field field_;
  std::vector<Pair> basis_;
  std::vector<std::size_t> lookup_;
  std::vector<std::vector<std::size_t>> starting_at_;
  std::vector<Element> linear_extension_;
};

using AlgebraPtr = std::shared_ptr<const IncidenceAlgebra>;

/// f : X x X -> K with f(x,y) = 0 unless x <= y, stored densely over the basis.
class IncidenceElement
{
public:
  IncidenceElement(AlgebraPtr algebra, std::vector<Scalar> coefficients);

  const IncidenceAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }

  /// f(x,y); zero when x is not below y.
  Scalar operator()(Element x, Element y) const;
  const Scalar& coefficient(std::size_t basis_index) const { return coeffs_[basis_index]; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  void set(Element x, Element y, Scalar value);

  bool is_zero() const;
  IncidenceElement diagonal_part() const;
  IncidenceElement radical_part() const;

  IncidenceElement operator-() const;
  friend IncidenceElement operator+(const IncidenceElement& f, const IncidenceElement& g);
  friend IncidenceElement operator-(const IncidenceElement& f, const IncidenceElement& g);
  friend IncidenceElement operator*(const Scalar& c, const IncidenceElement& f);
  /// Convolution.
  friend IncidenceElement operator*(const IncidenceElement& f, const IncidenceElement& g);
  friend bool operator==(const IncidenceElement& f, const IncidenceElement& g);

private:
  AlgebraPtr algebra_;
  std::vector<Scalar> coeffs_;
};

/// (fg)(x,y) = sum over x <= z <= y of f(x,z) g(z,y). Throws AlgebraMismatch.
IncidenceElement multiply(const IncidenceElement& f, const IncidenceElement& g);
/// fg - gf
IncidenceElement bracket(const IncidenceElement& f, const IncidenceElement& g);
/// Two-sided inverse by back-substitution along a linear extension.
/// Throws NotInvertible if some f(x,x) is zero.
IncidenceElement inverse(const IncidenceElement& f);

/// A linear endomorphism of I(X,K), stored by the images of the basis.
class LinearMap
{
public:
  /// images[j] is the image of basis element j.
  explicit LinearMap(AlgebraPtr algebra, const std::vector<IncidenceElement>& images);

  static LinearMap identity(const AlgebraPtr& algebra);
  static LinearMap zero(const AlgebraPtr& algebra);

  const IncidenceAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  std::size_t dimension() const noexcept { return columns_.size(); }

  /// Image of basis element j.
  IncidenceElement column(std::size_t j) const;
  const Scalar& entry(std::size_t row, std::size_t col) const { return columns_[col][row]; }

  IncidenceElement operator()(const IncidenceElement& f) const;

  bool is_invertible() const;

  LinearMap operator-() const;
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b);

private:
  LinearMap(AlgebraPtr algebra, std::vector<std::vector<Scalar>> columns);
  friend LinearMap compose(const LinearMap& a, const LinearMap& b);

  AlgebraPtr algebra_;
  std::vector<std::vector<Scalar>> columns_;
};

/// a o b
LinearMap compose(const LinearMap& a, const LinearMap& b);

/// {e_xy : x < y}, a basis of the Jacobson radical.
std::vector<IncidenceElement> radical_basis(const AlgebraPtr& algebra);

/// Reduced row echelon basis of span{[f,g]}, from all brackets of basis pairs.
std::vector<IncidenceElement> commutator_subspace(const AlgebraPtr& algebra);

/// Basis of {z : [z, e_xy] = 0 for all basis elements}.
std::vector<IncidenceElement> center(const AlgebraPtr& algebra);

/// Reduced row echelon form of the span of `elements`.
std::vector<IncidenceElement> span_basis(const AlgebraPtr& algebra,
                                         const std::vector<IncidenceElement>& elements);

bool same_span(const AlgebraPtr& algebra, const std::vector<IncidenceElement>& a,
               const std::vector<IncidenceElement>& b);

bool in_span(const std::vector<IncidenceElement>& basis, const IncidenceElement& f);

/// lambda-hat: e_xy -> e_{l(x) l(y)} for Iso, e_{l(y) l(x)} for AntiIso.
/// Throws PreconditionError if the map is not a poset (anti-)automorphism.
LinearMap induced_map(const AlgebraPtr& algebra, const PosetMap& map);

/// M_sigma: e_xy -> sigma(x,y) e_xy. Throws CocycleError unless sigma is
/// nowhere zero, sigma(x,x) = 1 and sigma(x,y) sigma(y,z) = sigma(x,z).
LinearMap multiplicative_map(const IncidenceElement& sigma);

/// g -> f g f^-1. Throws NotInvertible.
LinearMap inner_map(const IncidenceElement& f);

bool is_algebra_automorphism(const LinearMap& map);
bool is_anti_automorphism(const LinearMap& map);
/// Invertible and M[f,g] = [Mf, Mg] on all basis pairs.
bool is_lie_automorphism(const LinearMap& map);

/// The first constraint a candidate decomposition tau = phi + nu violates.
struct NotProperWitness
{
  enum class Constraint
  {
    KillsCommutators, // nu(v) != 0 for a commutator-subspace basis vector v
    CentralValued,    // nu(e_xy) is not central
  };
  Constraint constraint;
  std::size_t index; // into commutator_subspace() or the algebra basis
  std::string message;
};

struct ProperDecomposition
{
  std::optional<LinearMap> nu;
  std::optional<NotProperWitness> witness;

  explicit operator bool() const noexcept { return nu.has_value(); }
};

/// Checks tau = phi + nu with nu central-valued and vanishing on [I,I].
/// Throws PreconditionError if tau is not a Lie automorphism or phi is neither
/// an automorphism nor the negative of an anti-automorphism.
ProperDecomposition check_proper_decomposition(const LinearMap& tau, const LinearMap& phi);

} // namespace posetlie
