#include "posetlie/json_io.hpp"

#include "posetlie/errors.hpp"

namespace posetlie {

namespace {

Json pair_json(StrictPair p)
{
  return Json::array({p.lo, p.hi});
}

Json labels(const Poset& poset, const std::vector<Element>& elements)
{
  Json out = Json::array();
  for (auto x : elements)
    out.push_back(poset.name(x));
  return out;
}

Element element_at(const Poset& poset, const Json& v)
{
  if (!v.is_number_unsigned() || v.get<std::size_t>() >= poset.size())
    throw ParseError(0, "expected an element index");
  return v.get<Element>();
}

StrictPair read_pair(const Poset& poset, const Json& v)
{
  if (!v.is_array() || v.size() != 2)
    throw ParseError(0, "expected a pair [x, y]");
  const StrictPair p{element_at(poset, v[0]), element_at(poset, v[1])};
  if (!poset.less(p.lo, p.hi))
    throw ParseError(0, "[" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "] is not in B");
  return p;
}

} // namespace

Json to_json(const Poset& poset, const EdgeBijection& theta)
{
  Json out = Json::array();
  const auto& pairs = poset.strict_pairs();
  for (std::size_t i = 0; i < theta.size(); ++i)
    out.push_back(Json::array({pair_json(pairs[i]), pair_json(pairs[theta(i)])}));
  return out;
}

EdgeBijection edge_bijection_from_json(const Poset& poset, const Json& json)
{
  if (!json.is_array() || json.size() != poset.pair_count())
    throw ParseError(0, "expected one entry per pair of B");
  EdgeBijection theta;
  theta.perm.assign(poset.pair_count(), 0);
  std::vector<bool> assigned(poset.pair_count(), false);
  for (const auto& entry : json) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError(0, "expected [[x,y],[u,v]]");
    const auto from = poset.pair_index(read_pair(poset, entry[0]));
    const auto to = poset.pair_index(read_pair(poset, entry[1]));
    if (assigned[from])
      throw ParseError(0, "pair listed twice");
    assigned[from] = true;
    theta.perm[from] = static_cast<std::uint32_t>(to);
  }
  if (!is_edge_bijection(poset, theta))
    throw ParseError(0, "not a bijection of B");
  return theta;
}

Json to_json(const IncidenceElement& f)
{
  Json pairs = Json::array();
  const auto& alg = f.algebra();
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    if (!f.coefficient(i).is_zero())
      pairs.push_back(Json::array({alg.basis()[i].first, alg.basis()[i].second, f.coefficient(i).to_string()}));
  return Json{{"pairs", pairs}};
}

IncidenceElement incidence_element_from_json(const AlgebraPtr& algebra, const Json& json)
{
  if (!json.is_object() || !json.contains("pairs") || !json["pairs"].is_array())
    throw ParseError(0, "expected {\"pairs\": [...]}");
  auto f = algebra->zero();
  for (const auto& entry : json["pairs"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[2].is_string())
      throw ParseError(0, "expected [x, y, \"num/den\"]");
    const auto x = element_at(algebra->poset(), entry[0]);
    const auto y = element_at(algebra->poset(), entry[1]);
    if (!algebra->poset().leq(x, y))
      throw ParseError(0, "coefficient outside x <= y");
    f.set(x, y, algebra->field().parse_scalar(entry[2].get<std::string>()));
  }
  return f;
}

Json to_json(const LinearMap& map)
{
  Json basis = Json::array();
  for (const auto& [x, y] : map.algebra().basis())
    basis.push_back(Json::array({x, y}));
  Json columns = Json::array();
  for (std::size_t j = 0; j < map.dimension(); ++j)
    columns.push_back(to_json(map.column(j)));
  return Json{{"basis", basis}, {"columns", columns}};
}

Json to_json(const Poset& poset, const PosetMap& map)
{
  Json images = Json::object();
  for (Element x = 0; x < poset.size(); ++x)
    images[poset.name(x)] = poset.name(map(x));
  return Json{{"kind", to_string(map.kind)}, {"map", images}};
}

Json class_report(const Poset& poset, const std::vector<ChainClass>& classes)
{
  Json out = Json::array();
  for (const auto& cls : classes) {
    Json chains = Json::array();
    for (auto k : cls.chains)
      chains.push_back(labels(poset, poset.chains()[k].elements));
    out.push_back(Json{{"chains", chains}, {"support", labels(poset, cls.support)}});
  }
  return Json{{"classes", out}};
}

Json structure_report(const Poset& poset, const FiniteGroupOnEdges& group,
                      const std::optional<DihedralWitness>& dihedral,
                      const std::optional<CrownParityReport>& parity)
{
  Json hist = Json::object();
  for (const auto& [order, count] : order_histogram(group))
    hist[std::to_string(order)] = count;
  Json gens = Json::array();
  for (const auto& g : group.generators())
    gens.push_back(to_json(poset, g));
  Json out{{"order", group.order()}, {"element_orders", hist}, {"generators", gens}};
  if (dihedral)
    out["dihedral"] = Json{{"r", to_json(poset, dihedral->r)}, {"s", to_json(poset, dihedral->s)}};
  if (parity)
    out["crown_parity"] =
      Json{{"order", parity->group_order}, {"odd_preserving", parity->subgroup_order}, {"index", parity->index}};
  return out;
}

Json to_json(const Poset& poset, const Verdict& verdict)
{
  Json out{{"all_proper", verdict.all_proper},
           {"am_order", verdict.am_order},
           {"p_order", verdict.p_order},
           {"class_count", verdict.class_count},
           {"single_class", verdict.single_class}};
  out["counterexample"] = verdict.counterexample ? to_json(poset, *verdict.counterexample) : Json(nullptr);
  return out;
}

} // namespace posetlie
