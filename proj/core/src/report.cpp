#include "artinacyl/report.hpp"

#include "artinacyl/error.hpp"
#include "json.hpp"

namespace artinacyl {

using nlohmann::json;

namespace {

json names(const DefiningGraph& g, VertexSet s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.name(v));
  return out;
}

json label_json(Label m) { return m == kInfinity ? json("inf") : json(m); }

json justifications(const std::vector<Justification>& list) {
  json out = json::array();
  for (const Justification& j : list) out.push_back({{"claim", j.claim}, {"citation", j.citation}});
  return out;
}

json classification(const ClassificationReport& r) {
  json doc{{"spherical", r.spherical},
           {"irreducible", r.irreducible},
           {"free_of_infinity", r.free_of_infinity},
           {"type_fc", r.type_fc},
           {"two_dimensional", r.two_dimensional}};
  if (r.finite_type_name) {
    json comps = json::array();
    for (const FiniteType& t : *r.finite_type_name) {
      comps.push_back({{"name", t.name}, {"rank", t.rank}, {"order", t.order}});
    }
    doc["finite_type_name"] = finite_type_label(*r.finite_type_name);
    doc["finite_type_components"] = comps;
    doc["coxeter_order"] = finite_order(*r.finite_type_name);
  } else {
    doc["finite_type_name"] = nullptr;
  }
  return doc;
}

json derived(const DefiningGraph& g) {
  const DerivedGraphs d = derived_graphs(g);
  json complement = json::array();
  for (auto [u, v] : d.complement.edges) complement.push_back({g.name(u), g.name(v)});
  json coxeter = json::array();
  for (auto [u, v, m] : d.coxeter.edges) coxeter.push_back({g.name(u), g.name(v), label_json(m)});
  return {{"complement_edges", complement}, {"coxeter_edges", coxeter}};
}

}  // namespace

std::string finite_type_label(const std::vector<FiniteType>& types) {
  std::string out;
  for (const FiniteType& t : types) out += (out.empty() ? "" : " x ") + t.name;
  return out;
}

std::string classification_to_json(const ClassificationReport& report) {
  return classification(report).dump(2);
}

std::string derived_to_json(const DefiningGraph& g) { return derived(g).dump(2); }

std::string analysis_to_json(const DefiningGraph& g) {
  json doc;
  doc["graph"] = json::parse(to_json(g));
  doc["derived"] = derived(g);
  const JoinDecomposition d = join_decompose(g);
  const ShapeFlags shape = shape_flags(g);
  json factors = json::array();
  for (VertexSet f : d.factors) factors.push_back(names(g, f));
  doc["join_decomposition"] = {{"clique_factor", names(g, d.clique_factor)},
                               {"factors", factors},
                               {"is_clique", shape.is_clique},
                               {"is_cone", shape.is_cone}};
  doc["classification"] = classification(classify(g));
  const Verdict verdict = decide_acyl(g);
  doc["verdict"] = {{"status", to_string(verdict.status)},
                    {"justifications", justifications(verdict.justification)}};
  try {
    const CenterReport c = center_report(g);
    json center{{"center_finite", c.center_finite},
                {"contained_in_clique_factor_center", c.contained_in_clique_factor_center},
                {"justifications", justifications(c.justification)}};
    center["trivial"] = c.trivial ? json(*c.trivial) : json(nullptr);
    center["directly_indecomposable"] =
        c.directly_indecomposable ? json(*c.directly_indecomposable) : json(nullptr);
    doc["center"] = center;
  } catch (const HypothesisError& e) {
    doc["center"] = {{"applicable", false}, {"reason", e.what()}};
  }
  return doc.dump(2);
}

}  // namespace artinacyl
