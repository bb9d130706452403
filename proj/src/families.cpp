#include "posetlie/families.hpp"

#include "posetlie/errors.hpp"

#include <charconv>
#include <map>

namespace posetlie {

namespace {

using Relations = std::vector<std::pair<Element, Element>>;

std::vector<std::string> labels(const std::string& prefix, std::size_t n)
{
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i)
    out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw InvalidParameter(what);
}

std::size_t parse_count(std::string_view text, std::string_view selector)
{
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidParameter("malformed family selector '" + std::string(selector) + "'");
  return value;
}

} // namespace

Poset chain(std::size_t n)
{
  require(n >= 1, "chain(n) needs n >= 1");
  Relations rel;
  for (Element i = 0; i + 1 < n; ++i)
    rel.emplace_back(i, i + 1);
  return Poset::from_relations(labels("", n), rel);
}

Poset star(std::size_t n)
{
  require(n >= 1, "star(n) needs n >= 1");
  Relations rel;
  for (Element j = 1; j <= n; ++j)
    rel.emplace_back(0, j);
  return Poset::from_relations(concat({"x1"}, labels("y", n)), rel);
}

Poset fence(std::size_t n)
{
  require(n >= 1, "fence(n) needs n >= 1");
  std::vector<std::string> names;
  Relations rel;
  for (Element v = 0; v < n; ++v) {
    names.push_back((v % 2 == 0 ? "x" : "y") + std::to_string(v / 2 + 1));
    if (v > 0)
      rel.emplace_back(v % 2 == 0 ? v : v - 1, v % 2 == 0 ? v - 1 : v);
  }
  return Poset::from_relations(names, rel);
}

Poset crown(std::size_t n)
{
  require(n >= 2, "crown(n) needs n >= 2");
  Relations rel;
  for (Element i = 0; i < n; ++i) {
    const auto y = static_cast<Element>(n + i);
    rel.emplace_back(i, y);
    rel.emplace_back((i + 1) % n, y);
  }
  return Poset::from_relations(concat(labels("x", n), labels("y", n)), rel);
}

Poset kmn(std::size_t m, std::size_t n)
{
  require(m >= 1 && n >= 1, "kmn(m,n) needs m, n >= 1");
  Relations rel;
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < n; ++j)
      rel.emplace_back(i, static_cast<Element>(m + j));
  return Poset::from_relations(concat(labels("x", m), labels("y", n)), rel);
}

Poset example6()
{
  return Poset::from_relations(labels("", 6), {{0, 1}, {1, 3}, {1, 4}, {0, 2}, {2, 4}, {2, 5}});
}

Poset example20()
{
  // 0..9 are 1..10, 10..18 are 1'..9', 19 is 7''
  auto names = concat(labels("", 10), {"1'", "2'", "3'", "4'", "5'", "6'", "7'", "8'", "9'", "7''"});
  auto p = [](int i) { return static_cast<Element>(9 + i); };
  auto y = [](int i) { return static_cast<Element>(i - 1); };
  const Element top = 9;
  const Element seven2 = 19;
  Relations rel = {
    {y(1), y(5)}, {y(2), y(5)}, {y(5), y(7)}, {y(5), y(8)}, {y(6), y(7)},
    {y(6), y(8)}, {y(3), y(6)}, {y(4), y(6)}, {y(8), y(9)}, {y(8), top},
    {p(1), p(5)}, {p(2), p(5)}, {p(5), p(8)}, {p(5), seven2}, {p(3), p(6)},
    {p(4), p(6)}, {p(6), p(7)}, {p(6), p(8)}, {p(8), p(9)}, {p(8), top},
  };
  return Poset::from_relations(names, rel);
}

EdgeBijection example20_theta(const Poset& poset)
{
  require(poset == example20(), "example20_theta needs the 20-element example");
  // i <-> i', except that 7 goes to 7'' below 1, 2, 5 and to 7' below 3, 4, 6
  auto other = [&](Element x, Element lo) -> Element {
    if (x == 9)
      return 9;
    if (x == 19 || x == 16)
      return 6;
    if (x == 6) {
      const auto& l = poset.name(lo);
      return (l == "1" || l == "2" || l == "5") ? 19 : 16;
    }
    return x < 9 ? x + 10 : x - 10;
  };
  EdgeBijection theta;
  for (const auto& [lo, hi] : poset.strict_pairs())
    theta.perm.push_back(static_cast<std::uint32_t>(poset.pair_index(other(lo, lo), other(hi, lo))));
  if (!is_edge_bijection(poset, theta))
    throw InvalidParameter("example20_theta is not a bijection");
  return theta;
}

Poset family(std::string_view selector)
{
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos)
    throw InvalidParameter("malformed family selector '" + std::string(selector) + "'");
  const auto name = selector.substr(0, colon);
  const auto arg = selector.substr(colon + 1);
  if (name == "chain")
    return chain(parse_count(arg, selector));
  if (name == "star")
    return star(parse_count(arg, selector));
  if (name == "fence")
    return fence(parse_count(arg, selector));
  if (name == "crown")
    return crown(parse_count(arg, selector));
  if (name == "kmn") {
    const auto x = arg.find('x');
    if (x == std::string_view::npos)
      throw InvalidParameter("malformed family selector '" + std::string(selector) + "'");
    return kmn(parse_count(arg.substr(0, x), selector), parse_count(arg.substr(x + 1), selector));
  }
  if (name == "example") {
    const auto which = parse_count(arg, selector);
    if (which == 6)
      return example6();
    if (which == 20)
      return example20();
    throw InvalidParameter("unknown example '" + std::string(arg) + "' (expected 6 or 20)");
  }
  throw InvalidParameter("unknown family '" + std::string(name) + "'");
}

const std::vector<std::string>& suite_selectors()
{
  static const std::vector<std::string> suite = {
    "chain:2", "chain:3", "chain:4", "star:3",  "star:4",  "star:5",    "fence:4",   "fence:5",
    "fence:6", "crown:2", "crown:3", "crown:4", "crown:5", "kmn:2x2",   "kmn:2x3",   "kmn:3x3",
    "example:6", "example:20",
  };
  return suite;
}

} // namespace posetlie
