// posetlie: inspect posets, enumerate edge-bijection groups, decide properness.

#include "posetlie/bijection_analysis.hpp"
#include "posetlie/chain_equivalence.hpp"
#include "posetlie/enumeration.hpp"
#include "posetlie/errors.hpp"
#include "posetlie/families.hpp"
#include "posetlie/group_structure.hpp"
#include "posetlie/harness.hpp"
#include "posetlie/incidence_algebra.hpp"
#include "posetlie/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace posetlie;

namespace {

enum Exit
{
  ok = 0,
  verification_failure = 1,
  usage = 2,
  bound_exceeded = 3,
};

struct Options
{
  std::string family;
  std::string file;
  std::string format = "text";
  std::size_t bound = 9;
  std::string field = "q";
  unsigned jobs = 1;
};

Poset load(const Options& o)
{
  if (o.family.empty() == o.file.empty())
    throw InvalidParameter("give exactly one of --family or --file");
  return o.family.empty() ? load_poset(o.file) : family(o.family);
}

// n when the source is crown:n
std::optional<std::size_t> crown_size(const Options& o)
{
  if (!o.family.starts_with("crown:"))
    return std::nullopt;
  return std::stoul(o.family.substr(6));
}

std::string join(const Poset& p, const std::vector<Element>& xs, const char* sep)
{
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? sep : "") + p.name(xs[i]);
  return out;
}

std::string edge(const Poset& p, StrictPair e)
{
  return p.name(e.lo) + "<" + p.name(e.hi);
}

std::string text(const Poset& p, const EdgeBijection& theta)
{
  std::string out;
  const auto& pairs = p.strict_pairs();
  for (std::size_t i = 0; i < theta.size(); ++i)
    out += (i ? "  " : "") + edge(p, pairs[i]) + "->" + edge(p, pairs[theta(i)]);
  return out;
}

std::string text(const Poset& p, const PosetMap& m)
{
  std::string out = std::string(to_string(m.kind)) + ":";
  for (Element x = 0; x < p.size(); ++x)
    out += " " + p.name(x) + "->" + p.name(m(x));
  return out;
}

void emit(const Json& j)
{
  std::cout << j.dump(2) << '\n';
}

int cmd_info(const Options& o)
{
  const Poset p = load(o);
  const auto alg = IncidenceAlgebra::create(p, Field::parse(o.field));
  const bool crownless = weak_crowns(p).empty();
  const auto commutators = commutator_subspace(alg).size();
  const auto centre = center(alg).size();
  if (o.format == "json") {
    Json names = Json::array();
    for (const auto& n : p.names())
      names.push_back(n);
    Json mins = Json::array(), maxs = Json::array();
    for (auto x : p.minimal())
      mins.push_back(p.name(x));
    for (auto x : p.maximal())
      maxs.push_back(p.name(x));
    emit(Json{{"elements", names},
              {"n", p.size()},
              {"length", p.length()},
              {"min", mins},
              {"max", maxs},
              {"pairs", p.pair_count()},
              {"maximal_chains", p.chains().size()},
              {"crownless", crownless},
              {"field", alg->field().to_string()},
              {"algebra_dimension", alg->dimension()},
              {"commutator_dimension", commutators},
              {"center_dimension", centre}});
    return ok;
  }
  std::cout << "elements: " << p.size() << '\n'
            << "length: " << p.length() << '\n'
            << "min: " << join(p, p.minimal(), " ") << '\n'
            << "max: " << join(p, p.maximal(), " ") << '\n'
            << "|B|: " << p.pair_count() << '\n'
            << "maximal chains: " << p.chains().size() << '\n'
            << "crownless: " << (crownless ? "yes" : "no") << '\n'
            << "I(X," << alg->field().to_string() << "): dim " << alg->dimension() << ", [I,I] dim " << commutators
            << ", center dim " << centre << '\n';
  return ok;
}

int cmd_chains(const Options& o)
{
  const Poset p = load(o);
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& c : p.chains()) {
      Json chain = Json::array();
      for (auto x : c.elements)
        chain.push_back(p.name(x));
      out.push_back(chain);
    }
    emit(Json{{"chains", out}});
    return ok;
  }
  for (const auto& c : p.chains())
    std::cout << join(p, c.elements, " < ") << '\n';
  return ok;
}

int cmd_classes(const Options& o)
{
  const Poset p = load(o);
  const auto classes = chain_classes(p);
  if (o.format == "json") {
    emit(class_report(p, classes));
    return ok;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::cout << "class " << i + 1 << ": support {" << join(p, classes[i].support, ",") << "}\n";
    for (auto k : classes[i].chains)
      std::cout << "  " << join(p, p.chains()[k].elements, " < ") << '\n';
  }
  return ok;
}

int cmd_aut(const Options& o)
{
  const Poset p = load(o);
  const auto maps = poset_maps(p);
  if (o.format == "json") {
    Json iso = Json::array(), anti = Json::array();
    for (const auto& m : maps)
      (m.kind == MapKind::Iso ? iso : anti).push_back(to_json(p, m)["map"]);
    emit(Json{{"automorphisms", iso}, {"anti_automorphisms", anti}});
    return ok;
  }
  std::size_t iso = 0;
  for (const auto& m : maps)
    iso += m.kind == MapKind::Iso;
  std::cout << "|Aut| = " << iso << ", |Aut-| = " << maps.size() - iso << '\n';
  for (const auto& m : maps)
    std::cout << text(p, m) << '\n';
  return ok;
}

int cmd_enumerate(const Options& o, const std::string& which)
{
  const Poset p = load(o);
  const EnumerationOptions eo{o.bound, o.jobs};
  const auto elements = which == "m" ? enumerate_M(p, eo) : which == "am" ? enumerate_AM(p, eo) : enumerate_P(p);
  const auto group = verify_group(elements);
  std::optional<DihedralWitness> dihedral;
  std::optional<CrownParityReport> parity;
  if (const auto n = crown_size(o)) {
    dihedral = find_dihedral_witness(group, *n);
    if (group.order() == 2 * [n] {
          std::size_t f = 1;
          for (std::size_t k = 2; k <= *n; ++k)
            f *= k;
          return f * f;
        }())
      parity = crown_parity_witness(group, *n);
  }
  const auto report = structure_report(p, group, dihedral, parity);
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& e : elements)
      list.push_back(to_json(p, e));
    emit(Json{{"set", which}, {"structure", report}, {"elements", list}});
    return ok;
  }
  std::cout << which << ": order " << group.order() << '\n' << "element orders:";
  for (const auto& [order, count] : order_histogram(group))
    std::cout << ' ' << order << "^" << count;
  std::cout << '\n' << "generators: " << group.generators().size() << '\n';
  if (dihedral)
    std::cout << "dihedral witness: r = " << text(p, dihedral->r) << "\n                  s = " << text(p, dihedral->s)
              << '\n';
  if (parity)
    std::cout << "crown parity: |H| = " << parity->subgroup_order << ", index " << parity->index << '\n';
  for (const auto& e : elements)
    std::cout << text(p, e) << '\n';
  return ok;
}

int cmd_decide(const Options& o)
{
  const Poset p = load(o);
  const auto v = decide_all_proper(p, {o.bound, o.jobs});
  if (o.format == "json") {
    emit(to_json(p, v));
    return ok;
  }
  std::cout << "all_proper=" << (v.all_proper ? "true" : "false") << '\n'
            << "|AM| = " << v.am_order << ", |P| = " << v.p_order << '\n'
            << "classes: " << v.class_count << (v.single_class ? " (one class: every Lie automorphism is proper)" : "")
            << '\n';
  if (v.counterexample)
    std::cout << "witness: " << text(p, *v.counterexample) << '\n';
  return ok;
}

int cmd_verify(const Options& o, const std::string& suite)
{
  bool all = true;
  Json results = Json::array();
  run_suite(suite, HarnessOptions{o.jobs}, [&](const CriterionResult& r) {
    all = all && r.passed;
    if (o.format == "json")
      results.push_back(Json{{"criterion", r.id},
                             {"title", r.title},
                             {"passed", r.passed},
                             {"seconds", r.seconds},
                             {"limit_seconds", r.limit_seconds},
                             {"detail", r.detail}});
    else
      std::cout << format_result(r) << std::endl;
  });
  if (o.format == "json")
    emit(Json{{"suite", suite}, {"passed", all}, {"results", results}});
  return all ? ok : verification_failure;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Posets, incidence algebras and their Lie automorphisms"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--family", o.family, "built-in poset, e.g. crown:3, kmn:2x3, example:6");
  app.add_option("--file", o.file, "poset file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", o.bound, "largest |B| scanned exhaustively")->check(CLI::PositiveNumber);
  app.add_option("--field", o.field, "coefficient field: q or fp:<p>");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string which;
  std::string suite = "all";
  auto* info = app.add_subcommand("info", "validation summary");
  auto* chains = app.add_subcommand("chains", "maximal chains");
  auto* classes = app.add_subcommand("classes", "~-classes of maximal chains and their supports");
  auto* aut = app.add_subcommand("aut", "automorphisms and anti-automorphisms");
  auto* enumerate = app.add_subcommand("enumerate", "enumerate M, AM or P with a structure report");
  enumerate->add_option("set", which, "m, am or p")->required()->check(CLI::IsMember({"m", "am", "p"}));
  auto* decide = app.add_subcommand("decide", "are all Lie automorphisms proper?");
  auto* verify = app.add_subcommand("verify", "run acceptance blocks");
  verify->add_option("suite", suite, "all, a block name or a criterion number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    if (*info)
      return cmd_info(o);
    if (*chains)
      return cmd_chains(o);
    if (*classes)
      return cmd_classes(o);
    if (*aut)
      return cmd_aut(o);
    if (*enumerate)
      return cmd_enumerate(o, which);
    if (*decide)
      return cmd_decide(o);
    if (*verify)
      return cmd_verify(o, suite);
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bound_exceeded;
  } catch (const StructureMismatch& e) {
    std::cerr << "structure mismatch: " << e.what() << '\n';
    return verification_failure;
  } catch (const NotClosed& e) {
    std::cerr << "not a group: " << e.what() << '\n';
    return verification_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
