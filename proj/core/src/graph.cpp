#include "artinacyl/graph.hpp"

#include <algorithm>
#include <sstream>

#include "artinacyl/error.hpp"
#include "json.hpp"

namespace artinacyl {

using nlohmann::json;

DefiningGraph DefiningGraph::build(std::vector<std::string> names,
                                   const std::vector<Edge>& edges) {
  if (names.empty()) throw ParseError("vertices: empty vertex list");
  if (names.size() > kMaxVertices) {
    throw ParseError("vertices: at most " + std::to_string(kMaxVertices) +
                     " vertices are supported, got " + std::to_string(names.size()));
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw ParseError("vertices[" + std::to_string(i) + "]: empty name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) {
        throw ParseError("vertices[" + std::to_string(i) + "]: duplicate vertex \"" +
                         names[i] + "\"");
      }
    }
  }
  std::sort(names.begin(), names.end());

  DefiningGraph g;
  g.names_ = std::move(names);
  const std::size_t n = g.names_.size();
  g.labels_.assign(n * n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) g.labels_[i * n + i] = 1;

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    const std::string where = "edges[" + std::to_string(e) + "]: ";
    auto u = g.find(edge.u);
    auto v = g.find(edge.v);
    if (!u) throw ParseError(where + "unknown vertex \"" + edge.u + "\"");
    if (!v) throw ParseError(where + "unknown vertex \"" + edge.v + "\"");
    if (*u == *v) throw ParseError(where + "self-edge on \"" + edge.u + "\"");
    if (edge.label < 2 || edge.label == kInfinity) {
      throw ParseError(where + "label " + std::to_string(edge.label) + " is not an integer >= 2");
    }
    Label& slot = g.labels_[*u * n + *v];
    if (slot != kInfinity) {
      throw ParseError(where + "pair (" + edge.u + "," + edge.v + ") listed twice");
    }
    slot = edge.label;
    g.labels_[*v * n + *u] = edge.label;
  }
  return g;
}

std::optional<Vertex> DefiningGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

VertexSet DefiningGraph::neighbours(Vertex v) const {
  VertexSet out;
  for (Vertex u = 0; u < size(); ++u) {
    if (adjacent(u, v)) out.insert(u);
  }
  return out;
}

bool DefiningGraph::spans_clique(VertexSet s) const {
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u < v && !adjacent(u, v)) return false;
    }
  }
  return true;
}

DefiningGraph DefiningGraph::induced(VertexSet s) const {
  DefiningGraph sub;
  const std::vector<Vertex> members = s.members();
  const std::size_t m = members.size();
  for (Vertex v : members) sub.names_.push_back(names_[v]);
  sub.labels_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sub.labels_[i * m + j] = label(members[i], members[j]);
  }
  return sub;
}

std::vector<std::tuple<Vertex, Vertex, Label>> DefiningGraph::edges() const {
  std::vector<std::tuple<Vertex, Vertex, Label>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v, label(u, v));
    }
  }
  return out;
}

DefiningGraph parse_defining_graph(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("vertices: expected an array of strings");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const json& item = doc["vertices"][i];
    if (!item.is_string()) throw ParseError("vertices[" + std::to_string(i) + "]: expected a string");
    names.push_back(item.get<std::string>());
  }

  std::vector<DefiningGraph::Edge> edges;
  // Required even when empty: a forgotten key would silently make every pair infinite.
  if (!doc.contains("edges")) throw ParseError("edges: missing");
  {
    if (!doc["edges"].is_array()) throw ParseError("edges: expected an array");
    for (std::size_t e = 0; e < doc["edges"].size(); ++e) {
      const json& item = doc["edges"][e];
      const std::string where = "edges[" + std::to_string(e) + "]: ";
      if (!item.is_array() || item.size() != 3 || !item[0].is_string() || !item[1].is_string()) {
        throw ParseError(where + "expected [string, string, integer]");
      }
      const json& m = item[2];
      if (!m.is_number_integer()) throw ParseError(where + "non-integer label " + m.dump());
      const auto value = m.get<std::int64_t>();
      if (value < 2) throw ParseError(where + "label " + std::to_string(value) + " < 2");
      if (value >= static_cast<std::int64_t>(kInfinity)) {
        throw ParseError(where + "label " + std::to_string(value) + " too large");
      }
      edges.push_back({item[0].get<std::string>(), item[1].get<std::string>(),
                       static_cast<Label>(value)});
    }
  }
  return DefiningGraph::build(std::move(names), edges);
}

std::string to_json(const DefiningGraph& g) {
  json doc;
  doc["vertices"] = g.names();
  doc["edges"] = json::array();
  for (auto [u, v, m] : g.edges()) doc["edges"].push_back({g.name(u), g.name(v), m});
  return doc.dump();
}

DerivedGraphs derived_graphs(const DefiningGraph& g) {
  DerivedGraphs out;
  out.complement.vertices = g.names();
  out.coxeter.vertices = g.names();
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      const Label m = g.label(u, v);
      if (m == kInfinity) out.complement.edges.emplace_back(u, v);
      if (m >= 3) out.coxeter.edges.emplace_back(u, v, m);
    }
  }
  return out;
}

JoinDecomposition join_decompose(const DefiningGraph& g) {
  JoinDecomposition d;
  for (VertexSet comp : components(g.all(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); })) {
    if (comp.size() == 1) {
      d.clique_factor = d.clique_factor | comp;
    } else {
      d.factors.push_back(comp);
    }
  }
  return d;
}

ShapeFlags shape_flags(const DefiningGraph& g) {
  const JoinDecomposition d = join_decompose(g);
  return {d.factors.empty(), !d.clique_factor.empty()};
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string label_text(Label m) { return m == kInfinity ? "inf" : std::to_string(m); }

}  // namespace

std::string to_dot(const DefiningGraph& g, DotView view) {
  std::ostringstream os;
  const char* title = view == DotView::kDefining     ? "defining"
                      : view == DotView::kComplement ? "complement"
                                                     : "coxeter";
  os << "graph " << title << " {\n";
  for (const std::string& name : g.names()) os << "  " << quoted(name) << ";\n";
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      const Label m = g.label(u, v);
      bool emit = false;
      switch (view) {
        case DotView::kDefining: emit = m != kInfinity; break;
        case DotView::kComplement: emit = m == kInfinity; break;
        case DotView::kCoxeter: emit = m >= 3; break;
      }
      if (!emit) continue;
      os << "  " << quoted(g.name(u)) << " -- " << quoted(g.name(v));
      if (view != DotView::kComplement) os << " [label=" << quoted(label_text(m)) << "]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace artinacyl
