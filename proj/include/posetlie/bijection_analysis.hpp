#pragma once

#include "posetlie/edge_bijection.hpp"
#include "posetlie/poset.hpp"
#include "posetlie/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace posetlie {

enum class Direction
{
  Increasing,
  Decreasing,
  Both, // 2-element chains, where the two conditions coincide
  None,
};

const char* to_string(Direction direction);

struct ChainImage
{
  Direction direction = Direction::None;
  std::optional<std::size_t> target; // index into poset.chains()
};

/// Direction of theta on chains()[chain] and the image chain D.
ChainImage chain_image(const Poset& poset, const EdgeBijection& theta, std::size_t chain);

/// Index of a maximal chain in poset.chains(), if it is one.
std::optional<std::size_t> chain_index(const Poset& poset, const MaximalChain& chain);

Direction monotone_direction(const Poset& poset, const EdgeBijection& theta, const MaximalChain& chain);

/// Monotone on every maximal chain.
bool in_M(const Poset& poset, const EdgeBijection& theta);

struct CountStats
{
  std::size_t s_plus = 0;
  std::size_t s_minus = 0;
  std::size_t t_plus = 0;
  std::size_t t_minus = 0;

  /// s+ - s- - (t+ - t-); zero when the counting identity holds at z.
  long defect() const
  {
    return static_cast<long>(s_plus) - static_cast<long>(s_minus) - static_cast<long>(t_plus) +
           static_cast<long>(t_minus);
  }

  friend bool operator==(const CountStats&, const CountStats&) = default;
};

/// The four counts at z, searching the witnesses w directly.
/// Throws PreconditionError unless `walk` is a closed semiwalk.
CountStats count_stats(const Poset& poset, const EdgeBijection& theta, const Semiwalk& walk, Element z);

/// The defect at every z at once, from the preimage of each step.
std::vector<long> defects(const Poset& poset, const EdgeBijection& theta, const std::vector<Element>& walk);

/// Checks the counting identity on the weak crowns of one poset, with the
/// crowns precomputed as signed step lists. Does not test monotonicity.
class AdmissibilityChecker
{
public:
  explicit AdmissibilityChecker(const Poset& poset);

  bool operator()(const EdgeBijection& theta) const;
  /// First crown (in canonical order) and element where the identity fails.
  std::optional<std::pair<WeakCrown, Element>> first_violation(const EdgeBijection& theta) const;
  std::size_t crown_count() const noexcept { return crowns_.size(); }

private:
  struct Step
  {
    std::uint32_t pair;
    int sign;
  };
  bool holds(const std::vector<Step>& steps, const EdgeBijection& inverse, std::vector<long>& d) const;

  const Poset* poset_;
  std::vector<WeakCrown> crowns_;
  std::vector<std::vector<Step>> steps_;
};

/// Throws PreconditionError unless theta is monotone.
bool is_admissible(const Poset& poset, const EdgeBijection& theta);

/// Checks every closed semiwalk of length <= max_length with count_stats.
/// Throws PreconditionError unless theta is monotone.
bool is_admissible_oracle(const Poset& poset, const EdgeBijection& theta, std::size_t max_length);

/// Some lambda in poset_maps(poset) with theta = lambda-hat on B.
std::optional<PosetMap> proper_witness(const Poset& poset, const EdgeBijection& theta);

/// Some pair of non-disjoint maximal chains with disjoint images.
/// False when theta is not monotone.
bool is_separating(const Poset& poset, const EdgeBijection& theta);

/// For length-1 posets with |Min|,|Max| > 1: a bijection sending two edges
/// that share an element onto two disjoint edges. Absent otherwise.
std::optional<EdgeBijection> separating_bijection(const Poset& poset);

/// sigma on the strict pairs, indexed like strict_pairs().
struct SignMap
{
  std::vector<Scalar> values;

  const Scalar& at(const Poset& poset, Element x, Element y) const { return values[poset.pair_index(x, y)]; }
};

/// sigma(x,y) = 1 for minimal x, otherwise +1 or -1 as theta is increasing or
/// decreasing on the chains through x and y. Throws PreconditionError unless
/// theta is monotone.
SignMap build_compatible_sigma(const Poset& poset, const EdgeBijection& theta,
                               const Field& field = Field::rationals());

bool is_compatible(const Poset& poset, const SignMap& sigma, const EdgeBijection& theta);

} // namespace posetlie
