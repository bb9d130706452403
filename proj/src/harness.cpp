#include "posetlie/harness.hpp"

#include "posetlie/bijection_analysis.hpp"
#include "posetlie/chain_equivalence.hpp"
#include "posetlie/enumeration.hpp"
#include "posetlie/errors.hpp"
#include "posetlie/families.hpp"
#include "posetlie/group_structure.hpp"
#include "posetlie/incidence_algebra.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace posetlie {

namespace {

struct Spec
{
  int id;
  const char* title;
  double limit;
};

const std::vector<Spec>& specs()
{
  static const std::vector<Spec> table = {
    {1, "crown group orders and dihedral witnesses", 60},
    {2, "properness dichotomy on crowns", 120},
    {3, "bipartite posets K_{2,3} and K_{3,3}", 600},
    {4, "crownless length-one posets", 30},
    {5, "20-element example", 5},
    {6, "6-element example", 10},
    {7, "crown test agrees with the semiwalk oracle", 300},
    {8, "compatible sign maps", 120},
    {9, "support isomorphisms", 120},
    {10, "algebra layer", 60},
    {11, "property suites", 300},
  };
  return table;
}

const Spec& spec_of(int id)
{
  for (const auto& s : specs())
    if (s.id == id)
      return s;
  throw InvalidParameter("unknown criterion " + std::to_string(id));
}

class Checks
{
public:
  void expect(bool ok, const std::string& what)
  {
    if (!ok && std::find(failures_.begin(), failures_.end(), what) == failures_.end())
      failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool ok() const { return failures_.empty(); }
  std::string detail() const
  {
    std::string out;
    for (const auto& n : notes_)
      out += (out.empty() ? "" : "; ") + n;
    for (const auto& f : failures_)
      out += (out.empty() ? "FAILED " : "; FAILED ") + f;
    return out;
  }

private:
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

std::size_t factorial(std::size_t n)
{
  return n <= 1 ? 1 : n * factorial(n - 1);
}

Element label(const Poset& poset, std::string_view name)
{
  const auto x = poset.find(name);
  if (!x)
    throw InvalidParameter("no element " + std::string(name));
  return *x;
}

std::vector<std::string> names_of(const Poset& poset, const std::vector<Element>& xs)
{
  std::vector<std::string> out;
  for (auto x : xs)
    out.push_back(poset.name(x));
  return out;
}

// --- criteria ---------------------------------------------------------------

void crown_orders(Checks& c, const HarnessOptions& opt)
{
  const EnumerationOptions eo{9, opt.jobs};
  for (std::size_t n : {2, 3}) {
    const auto am = enumerate_AM(crown(n), eo);
    const auto want = 2 * factorial(n) * factorial(n);
    c.note("|AM(Cr" + std::to_string(n) + ")|=" + std::to_string(am.size()));
    c.expect(am.size() == want, "|AM(Cr" + std::to_string(n) + ")| != " + std::to_string(want));
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto p = enumerate_P(crown(n));
    c.note("|P(Cr" + std::to_string(n) + ")|=" + std::to_string(p.size()));
    c.expect(p.size() == 4 * n, "|P(Cr" + std::to_string(n) + ")| != " + std::to_string(4 * n));
    c.expect(dihedral_witness(verify_group(p), n), "no dihedral witness for P(Cr" + std::to_string(n) + ")");
  }
}

void crown_dichotomy(Checks& c, const HarnessOptions& opt)
{
  const EnumerationOptions eo{9, opt.jobs};
  const auto v2 = decide_all_proper(crown(2), eo);
  c.note("Cr2 all_proper=" + std::string(v2.all_proper ? "true" : "false"));
  c.expect(v2.all_proper, "Cr2 is not all-proper");
  for (std::size_t n : {3, 4}) {
    const Poset cr = crown(n);
    const auto v = decide_all_proper(cr, eo);
    const auto tag = "Cr" + std::to_string(n);
    c.note(tag + " all_proper=" + std::string(v.all_proper ? "true" : "false") + " |AM|=" +
           std::to_string(v.am_order) + " |P|=" + std::to_string(v.p_order));
    c.expect(!v.all_proper, tag + " reported all-proper");
    c.expect(v.counterexample.has_value(), tag + " has no witness");
    if (v.counterexample) {
      const auto& theta = *v.counterexample;
      c.expect(in_M(cr, theta) && is_admissible(cr, theta), tag + " witness is not in AM");
      c.expect(!proper_witness(cr, theta), tag + " witness is proper");
    }
  }
}

void bipartite(Checks& c, const HarnessOptions& opt)
{
  const EnumerationOptions eo{9, opt.jobs};
  for (auto [m, n, want] : {std::tuple{2u, 3u, 12u}, std::tuple{3u, 3u, 72u}}) {
    const auto v = decide_all_proper(kmn(m, n), eo);
    const auto tag = "K" + std::to_string(m) + std::to_string(n);
    c.note(tag + " |AM|=" + std::to_string(v.am_order) + " |P|=" + std::to_string(v.p_order));
    c.expect(v.all_proper, tag + " is not all-proper");
    c.expect(v.am_order == want && v.p_order == want, tag + " orders differ from " + std::to_string(want));
  }
}

void length_one(Checks& c, const HarnessOptions& opt)
{
  const EnumerationOptions eo{9, opt.jobs};
  for (std::size_t n : {3, 4, 5}) {
    const Poset s = star(n);
    const auto m = enumerate_M(s, eo);
    const auto p = enumerate_P(s);
    const auto tag = "star" + std::to_string(n);
    c.note(tag + " |M|=" + std::to_string(m.size()));
    c.expect(m == p, tag + ": M != P");
    c.expect(m.size() == factorial(n), tag + ": |M| != n!");
    c.expect(poset_maps(s).size() == factorial(n), tag + ": |Aut+-| != n!");
  }
  for (std::size_t n : {4, 6}) {
    const Poset f = fence(n);
    const auto m = enumerate_M(f, eo);
    const auto p = enumerate_P(f);
    const auto tag = "fence" + std::to_string(n);
    c.note(tag + " |M|=" + std::to_string(m.size()) + " |P|=" + std::to_string(p.size()));
    c.expect(m != p, tag + ": M == P");
    const auto theta = separating_bijection(f);
    c.expect(theta.has_value(), tag + ": no separating witness");
    if (theta) {
      c.expect(in_M(f, *theta) && is_separating(f, *theta), tag + ": witness is not separating");
      c.expect(!proper_witness(f, *theta), tag + ": witness is proper");
      c.expect(std::binary_search(m.begin(), m.end(), *theta), tag + ": witness missing from M");
    }
  }
}

void example20_block(Checks& c, const HarnessOptions&)
{
  const Poset x = example20();
  const auto theta = example20_theta(x);
  c.expect(in_M(x, theta), "theta is not monotone");
  c.expect(!is_admissible(x, theta), "theta is admissible");
  const Semiwalk gamma{{label(x, "5"), label(x, "7"), label(x, "6"), label(x, "8"), label(x, "5")}};
  const auto s = count_stats(x, theta, gamma, label(x, "7'"));
  c.note("stats at 7' = (" + std::to_string(s.s_plus) + "," + std::to_string(s.s_minus) + "," +
         std::to_string(s.t_plus) + "," + std::to_string(s.t_minus) + ")");
  c.expect(s == CountStats{0, 0, 0, 1}, "count_stats differs from (0,0,0,1)");
  c.expect(!is_admissible_oracle(x, theta, 4), "the oracle accepts theta at L=4");
}

void example6_block(Checks& c, const HarnessOptions& opt)
{
  const Poset x = example6();
  const auto classes = chain_classes(x);
  c.note(std::to_string(classes.size()) + " classes");
  c.expect(classes.size() == 2, "expected 2 classes");
  std::set<std::vector<std::string>> supports;
  for (const auto& cls : classes)
    supports.insert(names_of(x, cls.support));
  c.expect(supports == std::set<std::vector<std::string>>{{"1", "2", "4", "5"}, {"1", "3", "5", "6"}},
           "supports differ from {1,2,4,5} and {1,3,5,6}");
  const auto am = enumerate_AM(x, {9, opt.jobs});
  c.note("|AM|=" + std::to_string(am.size()));
  c.expect(am.size() == 2, "|AM| != 2");
  for (const auto& theta : am)
    c.expect(proper_witness(x, theta).has_value(), "an element of AM is not proper");
  const auto v = decide_all_proper(x, {9, opt.jobs});
  c.expect(v.all_proper && !v.single_class, "verdict is not all-proper with two classes");
}

void oracle(Checks& c, const HarnessOptions& opt)
{
  std::size_t total = 0;
  for (const auto& [name, p] : suite_posets(6)) {
    for (const auto& theta : enumerate_M(p, {9, opt.jobs})) {
      ++total;
      c.expect(is_admissible(p, theta) == is_admissible_oracle(p, theta, 8), name + ": disagreement");
    }
  }
  c.note(std::to_string(total) + " bijections compared");
}

void sigma(Checks& c, const HarnessOptions& opt)
{
  std::size_t total = 0;
  for (const auto& [name, p] : suite_posets(6))
    for (const auto& theta : enumerate_M(p, {9, opt.jobs})) {
      ++total;
      c.expect(is_compatible(p, build_compatible_sigma(p, theta), theta), name + ": sigma not compatible");
    }
  c.note(std::to_string(total) + " bijections checked");
}

void supports(Checks& c, const HarnessOptions& opt)
{
  std::size_t total = 0;
  for (const auto& [name, p] : suite_posets(6))
    for (const auto& theta : enumerate_AM(p, {9, opt.jobs})) {
      ++total;
      try {
        support_maps(p, theta);
      } catch (const Error& e) {
        c.expect(false, name + ": " + e.what());
      }
    }
  c.note(std::to_string(total) + " admissible bijections checked");
}

void algebra(Checks& c, const HarnessOptions&)
{
  std::size_t count = 0;
  for (const auto& sel : suite_selectors()) {
    const Poset p = family(sel);
    if (p.size() > 6)
      continue;
    ++count;
    const auto alg = IncidenceAlgebra::create(p);
    c.expect(same_span(alg, commutator_subspace(alg), radical_basis(alg)), sel + ": [I,I] != J");
    c.expect(same_span(alg, center(alg), {alg->identity()}), sel + ": center != K delta");
    for (const auto& lambda : poset_maps(p)) {
      const auto hat = induced_map(alg, lambda);
      const auto tau = lambda.kind == MapKind::Iso ? hat : -hat;
      c.expect(is_lie_automorphism(tau), sel + ": induced map is not a Lie automorphism");
      const auto d = check_proper_decomposition(tau, tau);
      c.expect(d && *d.nu == LinearMap::zero(alg), sel + ": nu != 0");
    }
  }
  c.note(std::to_string(count) + " posets");
}

CountStats swapped(const CountStats& s)
{
  return {s.s_minus, s.s_plus, s.t_minus, s.t_plus};
}

void properties(Checks& c, const HarnessOptions& opt)
{
  auto posets = suite_posets(6);
  posets.emplace_back("example:6", example6());
  std::mt19937 rng(20261017);
  std::size_t lemma_checks = 0;
  std::size_t walk_checks = 0;

  for (const auto& [name, p] : posets) {
    const auto& chains = p.chains();
    const auto all = enumerate_M(p, {9, opt.jobs});
    for (const auto& theta : all) {
      std::vector<Direction> dir(chains.size());
      for (std::size_t k = 0; k < chains.size(); ++k)
        dir[k] = chain_image(p, theta, k).direction;
      for (std::size_t a = 0; a < chains.size(); ++a)
        for (std::size_t b = 0; b < chains.size(); ++b) {
          const bool inc = dir[a] == Direction::Increasing || dir[a] == Direction::Both;
          const bool dec = dir[b] == Direction::Decreasing || dir[b] == Direction::Both;
          if (!inc || !dec)
            continue;
          const auto& c1 = chains[a];
          const auto& c2 = chains[b];
          ++lemma_checks;
          for (auto x : c1.elements) {
            if (!c2.contains(x))
              continue;
            c.expect(p.is_extremal(x), name + ": common element of an increasing and a decreasing chain is interior");
            for (auto y : c1.elements)
              if (p.less(x, y) && c2.contains(y))
                c.expect(x == c1.front() && x == c2.front() && y == c1.back() && y == c2.back(),
                         name + ": x < y shared by increasing and decreasing chains are not their ends");
          }
        }
    }

    // walk properties on a seeded sample of M
    std::vector<EdgeBijection> sample = all;
    std::shuffle(sample.begin(), sample.end(), rng);
    sample.resize(std::min<std::size_t>(sample.size(), 24));
    const auto walks = closed_semiwalks(p, 6);
    for (const auto& theta : sample)
      for (const auto& w : walks) {
        const auto& v = w.vertices;
        const std::size_t m = w.length();
        std::vector<CountStats> base(p.size());
        for (Element z = 0; z < p.size(); ++z)
          base[z] = count_stats(p, theta, w, z);

        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, m - 1)(rng);
        Semiwalk rot;
        for (std::size_t i = 0; i <= m; ++i)
          rot.vertices.push_back(v[(i + r) % m]);
        const Semiwalk rev{{v.rbegin(), v.rend()}};
        for (Element z = 0; z < p.size(); ++z) {
          c.expect(count_stats(p, theta, rot, z) == base[z], name + ": shift changes the counts");
          c.expect(count_stats(p, theta, rev, z) == swapped(base[z]), name + ": reversal does not swap the counts");
        }

        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t l = 2; k + l <= m; ++l) {
            bool up = true;
            bool down = true;
            for (std::size_t i = k; i < k + l; ++i) {
              up = up && p.less(v[i], v[i + 1]);
              down = down && p.less(v[i + 1], v[i]);
            }
            if (!up && !down)
              break;
            Semiwalk collapsed;
            collapsed.vertices.assign(v.begin(), v.begin() + static_cast<long>(k) + 1);
            collapsed.vertices.insert(collapsed.vertices.end(), v.begin() + static_cast<long>(k + l), v.end());
            for (Element z = 0; z < p.size(); ++z) {
              const auto s = count_stats(p, theta, collapsed, z);
              const auto& b = base[z];
              c.expect(static_cast<long>(s.s_plus) - static_cast<long>(s.t_plus) ==
                           static_cast<long>(b.s_plus) - static_cast<long>(b.t_plus) &&
                         static_cast<long>(s.s_minus) - static_cast<long>(s.t_minus) ==
                           static_cast<long>(b.s_minus) - static_cast<long>(b.t_minus),
                       name + ": collapsing a monotone run changes s-t");
            }
          }
        ++walk_checks;
      }
  }

  // Cr3: admissible iff non-disjoint chains go to chains of opposite parity
  const Poset cr = crown(3);
  const auto& chains = cr.chains();
  auto odd = [&](const MaximalChain& ch) {
    const auto lo = cr.name(ch.front()).substr(1);
    const auto hi = cr.name(ch.back()).substr(1);
    return lo == hi;
  };
  const AdmissibilityChecker admissible(cr);
  std::size_t parity_checks = 0;
  for (const auto& theta : enumerate_M(cr, {9, opt.jobs})) {
    bool criterion = true;
    for (std::size_t a = 0; a < chains.size(); ++a)
      for (std::size_t b = a + 1; b < chains.size(); ++b) {
        const bool meet = std::any_of(chains[a].elements.begin(), chains[a].elements.end(),
                                      [&](Element x) { return chains[b].contains(x); });
        if (!meet)
          continue;
        const auto ta = *chain_image(cr, theta, a).target;
        const auto tb = *chain_image(cr, theta, b).target;
        criterion = criterion && odd(chains[ta]) != odd(chains[tb]);
      }
    c.expect(criterion == admissible(theta), "Cr3: parity criterion disagrees with admissibility");
    ++parity_checks;
  }
  c.note(std::to_string(lemma_checks) + " chain pairs, " + std::to_string(walk_checks) + " walks, " +
         std::to_string(parity_checks) + " Cr3 bijections");
}

using Block = void (*)(Checks&, const HarnessOptions&);

Block block_of(int id)
{
  static const std::map<int, Block> blocks = {
    {1, crown_orders}, {2, crown_dichotomy}, {3, bipartite}, {4, length_one},  {5, example20_block}, {6, example6_block},
    {7, oracle},       {8, sigma},           {9, supports},  {10, algebra},    {11, properties},
  };
  return blocks.at(id);
}

} // namespace

const std::vector<int>& criterion_ids()
{
  static const std::vector<int> ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  return ids;
}

std::string criterion_title(int id)
{
  return spec_of(id).title;
}

double criterion_limit(int id)
{
  return spec_of(id).limit;
}

CriterionResult run_criterion(int id, const HarnessOptions& options)
{
  const auto& spec = spec_of(id);
  CriterionResult result{id, spec.title, false, 0, spec.limit, {}};
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    block_of(id)(checks, options);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds >= spec.limit)
    checks.expect(false, "runtime limit exceeded");
  result.passed = checks.ok();
  result.detail = checks.detail();
  return result;
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = {"all",       "crowns",    "bipartite", "length-one",
                                                 "example20", "example6",  "oracle",    "sigma",
                                                 "supports",  "algebra",   "properties"};
  return names;
}

std::vector<int> suite_criteria(std::string_view suite)
{
  if (suite == "all")
    return criterion_ids();
  static const std::map<std::string_view, std::vector<int>> named = {
    {"crowns", {1, 2}}, {"bipartite", {3}}, {"length-one", {4}}, {"example20", {5}},
    {"example6", {6}},  {"oracle", {7}},    {"sigma", {8}},      {"supports", {9}},
    {"algebra", {10}},  {"properties", {11}},
  };
  if (const auto it = named.find(suite); it != named.end())
    return it->second;
  for (int id : criterion_ids())
    if (suite == std::to_string(id))
      return {id};
  throw InvalidParameter("unknown suite '" + std::string(suite) + "'");
}

std::vector<CriterionResult> run_suite(std::string_view suite, const HarnessOptions& options,
                                       const std::function<void(const CriterionResult&)>& report)
{
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) {
    out.push_back(run_criterion(id, options));
    if (report)
      report(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r)
{
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s / %.0f s)", r.seconds, r.limit_seconds);
  return "criterion " + std::to_string(r.id) + ": " + (r.passed ? "PASS" : "FAIL") + "  " + r.title + "  " +
         timing + (r.detail.empty() ? "" : "  " + r.detail);
}

std::vector<std::pair<std::string, Poset>> suite_posets(std::size_t max_pairs)
{
  std::vector<std::pair<std::string, Poset>> out;
  for (const auto& sel : suite_selectors()) {
    auto p = family(sel);
    if (p.pair_count() <= max_pairs)
      out.emplace_back(sel, std::move(p));
  }
  return out;
}

} // namespace posetlie
