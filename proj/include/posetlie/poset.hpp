#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetlie {

/// Index of an element in file order.
using Element = std::uint32_t;

/// An ordered pair x < y; an element of the radical basis B.
struct StrictPair
{
  Element lo;
  Element hi;

  auto operator<=>(const StrictPair&) const = default;
};

struct MaximalChain
{
  std::vector<Element> elements; // strictly increasing in the order

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Element x) const;
  Element front() const { return elements.front(); }
  Element back() const { return elements.back(); }

  auto operator<=>(const MaximalChain&) const = default;
};

/// A sequence u0,...,um where consecutive entries are distinct and comparable.
struct Semiwalk
{
  std::vector<Element> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool closed() const noexcept { return vertices.size() > 1 && vertices.front() == vertices.back(); }

  auto operator<=>(const Semiwalk&) const = default;
};

/// mins[i] < maxs[i], mins[i+1] < maxs[i], mins[0] < maxs[k-1]; all 2k distinct.
struct WeakCrown
{
  std::vector<Element> mins;
  std::vector<Element> maxs;

  std::size_t size() const noexcept { return mins.size(); }
  /// x1,y1,x2,y2,...,xk,yk,x1
  Semiwalk as_semiwalk() const;

  auto operator<=>(const WeakCrown&) const = default;
};

enum class MapKind
{
  Iso,
  AntiIso,
};

const char* to_string(MapKind kind);

/// An automorphism or anti-automorphism of a poset.
struct PosetMap
{
  std::vector<Element> perm;
  MapKind kind = MapKind::Iso;

  Element operator()(Element x) const { return perm[x]; }
  PosetMap inverse() const;

  auto operator<=>(const PosetMap&) const = default;
};

/// (f * g)(x) = f(g(x)); kinds compose like signs.
PosetMap compose(const PosetMap& f, const PosetMap& g);

/// A finite connected poset. Immutable once built.
class Poset
{
public:
  /// Builds the transitive closure of `relations` over `names` and validates it.
  /// Throws InvalidParameter, CycleError or DisconnectedError.
  static Poset from_relations(std::vector<std::string> names,
                              const std::vector<std::pair<Element, Element>>& relations);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_[x]; }
  std::optional<Element> find(std::string_view label) const;

  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  /// y covers x
  bool covers(Element x, Element y) const;

  const std::vector<StrictPair>& cover_pairs() const noexcept { return covers_; }
  const std::vector<Element>& minimal() const noexcept { return min_; }
  const std::vector<Element>& maximal() const noexcept { return max_; }
  bool is_minimal(Element x) const { return is_min_[x] != 0; }
  bool is_maximal(Element x) const { return is_max_[x] != 0; }
  bool is_extremal(Element x) const { return is_minimal(x) || is_maximal(x); }
  int length() const noexcept { return length_; }

  const std::vector<Element>& strictly_above(Element x) const { return above_[x]; }
  const std::vector<Element>& strictly_below(Element x) const { return below_[x]; }
  /// Elements comparable to and distinct from x, ascending.
  const std::vector<Element>& neighbours(Element x) const { return comparable_[x]; }

  /// B = {(x,y) : x < y}, sorted by (x, y).
  const std::vector<StrictPair>& strict_pairs() const noexcept { return pairs_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  /// Index of (x,y) in strict_pairs(); throws InvalidParameter unless x < y.
  std::size_t pair_index(Element x, Element y) const;
  std::size_t pair_index(StrictPair p) const { return pair_index(p.lo, p.hi); }
  std::optional<std::size_t> find_pair(Element x, Element y) const;

  /// All maximal chains, lexicographically sorted.
  const std::vector<MaximalChain>& chains() const noexcept { return chains_; }

  /// Text in the `poset v1` file format.
  std::string to_text() const;

  friend bool operator==(const Poset& a, const Poset& b)
  {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

private:
  Poset() = default;
  void derive();

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<StrictPair> covers_;
  std::vector<Element> min_;
  std::vector<Element> max_;
  std::vector<std::uint8_t> is_min_;
  std::vector<std::uint8_t> is_max_;
  int length_ = 0;
  std::vector<std::vector<Element>> above_;
  std::vector<std::vector<Element>> below_;
  std::vector<std::vector<Element>> comparable_;
  std::vector<StrictPair> pairs_;
  std::vector<std::size_t> pair_lookup_; // n*n, npos where x !< y
  std::vector<MaximalChain> chains_;
};

/// Parses the `poset v1` text format. Throws ParseError, CycleError, DisconnectedError.
Poset parse_poset(std::string_view text);

/// Reads a file and parses it.
Poset load_poset(const std::string& path);

const std::vector<MaximalChain>& maximal_chains(const Poset& poset);

/// Every automorphism and anti-automorphism. On a singleton the identity
/// is reported once with each kind.
std::vector<PosetMap> poset_maps(const Poset& poset);

bool is_poset_map(const Poset& poset, const PosetMap& map);

/// Every weak crown in canonical form, sorted.
std::vector<WeakCrown> weak_crowns(const Poset& poset);

/// Lexicographically least form among rotations and the reversal.
WeakCrown canonical_form(const WeakCrown& crown);

bool is_weak_crown(const Poset& poset, const WeakCrown& crown);

/// Visits every closed semiwalk with 2 <= length <= max_length. The
/// callback receives the vertex sequence including the repeated endpoint.
void for_each_closed_semiwalk(const Poset& poset, std::size_t max_length,
                              const std::function<void(const std::vector<Element>&)>& visit);

/// Materialised form of for_each_closed_semiwalk; throws PreconditionError if max_length < 2.
std::vector<Semiwalk> closed_semiwalks(const Poset& poset, std::size_t max_length);

bool is_semiwalk(const Poset& poset, const Semiwalk& walk);

/// Two maximal chains sharing no element, if any.
std::optional<std::pair<MaximalChain, MaximalChain>> disjoint_chains(const Poset& poset);

} // namespace posetlie
