#include "artinacyl/shadow.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "artinacyl/error.hpp"
#include "json.hpp"

namespace artinacyl {

using nlohmann::json;

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Length of the longest element of W_U, or nullopt if W_U is infinite.
std::optional<std::size_t> longest_length(const DefiningGraph& g, VertexSet u) {
  if (u.empty()) return 0;
  const Ball ball = enumerate_ball(g.induced(u), OracleLimits{}.ball_cap);
  if (!ball.saturated) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) best = std::max(best, ball.length(i));
  return best;
}

}  // namespace

DeltaSets delta_sets(const DefiningGraph& g, const JoinDecomposition& d, std::size_t cap) {
  DeltaSets out;
  std::function<void(VertexSet, Vertex)> extend = [&](VertexSet clique, Vertex from) {
    out.all_cliques.push_back(clique);
    if (out.all_cliques.size() > cap) {
      throw ResourceError("more than " + std::to_string(cap) + " clique subsets");
    }
    for (Vertex v = from; v < g.size(); ++v) {
      if ((g.neighbours(v) & clique) == clique) extend(clique | VertexSet::single(v), v + 1);
    }
  };
  extend({}, 0);
  std::sort(out.all_cliques.begin(), out.all_cliques.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (VertexSet u : out.all_cliques) {
    if (d.clique_factor.subset_of(u)) out.reduced.push_back(u);
  }
  return out;
}

CoxWord minimal_coset_rep(const CoxeterGroup& group, const CoxWord& g, VertexSet u) {
  CoxWord w = group.normal_form(g);
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex s : u) {
      if (group.is_right_descent(w, s)) {
        w.push_back(s);
        w = group.normal_form(w);
        moved = true;
        break;
      }
    }
  }
  return w;
}

std::optional<std::size_t> ShadowComplex::find_vertex(const CoxWord& rep, VertexSet face) const {
  auto it = vertex_index.find({rep, face.bits()});
  if (it == vertex_index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ShadowComplex::find_edge(std::size_t lower, Vertex letter) const {
  auto it = edge_index.find({lower, letter});
  if (it == edge_index.end()) return std::nullopt;
  return it->second;
}

ShadowComplex build_shadow(const DefiningGraph& g, const JoinDecomposition& d, bool reduced,
                           const ShadowOptions& options) {
  if (options.cap == 0) throw HypothesisError("shadow cap must be at least 1");
  const DeltaSets delta = delta_sets(g, d);
  const std::vector<VertexSet>& faces = reduced ? delta.reduced : delta.all_cliques;
  const CoxeterGroup group(g);
  const Ball ball = enumerate_ball(g, options.cap);

  ShadowComplex c;
  c.reduced = reduced;
  std::size_t max_length = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) max_length = std::max(max_length, ball.length(i));
  const std::size_t radius = options.radius.value_or(max_length);
  c.whole = ball.saturated && radius >= max_length;
  c.ball_complete_radius = ball.saturated ? std::min(radius, max_length)
                                          : std::min(radius, ball.complete_length);

  auto vertex_of = [&](const CoxWord& rep, VertexSet face) {
    auto [it, inserted] = c.vertex_index.try_emplace({rep, face.bits()}, c.vertices.size());
    if (inserted) c.vertices.push_back({rep, face});
    return it->second;
  };
  const std::set<std::uint64_t> face_bits = [&] {
    std::set<std::uint64_t> s;
    for (VertexSet u : faces) s.insert(u.bits());
    return s;
  }();

  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (ball.length(i) > radius) continue;
    const CoxWord element = ball.word(i);
    for (VertexSet u : faces) vertex_of(minimal_coset_rep(group, element, u), u);
  }

  for (std::size_t x = 0; x < c.vertices.size(); ++x) {
    const CoxWord rep = c.vertices[x].rep;
    const VertexSet face = c.vertices[x].face;
    std::vector<Vertex> up;
    for (Vertex a = 0; a < g.size(); ++a) {
      if (!face.contains(a) && face_bits.count((face | VertexSet::single(a)).bits())) up.push_back(a);
    }
    // Every nonempty subset S of `up` with face + S in Delta.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << up.size()); ++mask) {
      VertexSet letters;
      for (std::size_t b = 0; b < up.size(); ++b) {
        if ((mask >> b) & 1U) letters.insert(up[b]);
      }
      if (!face_bits.count((face | letters).bits())) continue;
      const std::vector<Vertex> members = letters.members();
      ShadowCube cube{x, letters, {}};
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << members.size()); ++t) {
        VertexSet top = face;
        for (std::size_t b = 0; b < members.size(); ++b) {
          if ((t >> b) & 1U) top.insert(members[b]);
        }
        cube.corners.push_back(t == 0 ? x : vertex_of(minimal_coset_rep(group, rep, top), top));
      }
      if (members.size() == 1) {
        c.edge_index[{x, members.front()}] = c.edges.size();
        c.edges.push_back(c.cubes.size());
      }
      c.cubes.push_back(std::move(cube));
    }
  }

  // Hyperplane classes: opposite edges of each square.
  UnionFind uf(c.edges.size());
  for (const ShadowCube& q : c.cubes) {
    if (q.letters.size() != 2) continue;
    const std::vector<Vertex> ab = q.letters.members();
    // corners: 0 = lower, 1 = +a, 2 = +b, 3 = +ab.
    const auto e_a0 = c.find_edge(q.corners[0], ab[0]);
    const auto e_a1 = c.find_edge(q.corners[2], ab[0]);
    const auto e_b0 = c.find_edge(q.corners[0], ab[1]);
    const auto e_b1 = c.find_edge(q.corners[1], ab[1]);
    if (!e_a0 || !e_a1 || !e_b0 || !e_b1) throw InternalError("square with a missing edge");
    uf.unite(*e_a0, *e_a1);
    uf.unite(*e_b0, *e_b1);
  }
  std::map<std::size_t, std::size_t> class_of_root;
  c.edge_class.resize(c.edges.size());
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const std::size_t root = uf.find(e);
    auto [it, inserted] = class_of_root.try_emplace(root, c.class_type.size());
    const Vertex letter = c.cubes[c.edges[e]].letters.min();
    if (inserted) {
      c.class_type.push_back(letter);
    } else if (c.class_type[it->second] != letter) {
      throw InternalError("hyperplane class mixes edge types");
    }
    c.edge_class[e] = it->second;
  }

  std::map<std::uint64_t, std::optional<std::size_t>> longest;
  c.star_complete.resize(c.vertices.size());
  for (std::size_t x = 0; x < c.vertices.size(); ++x) {
    if (c.whole) {
      c.star_complete[x] = true;
      continue;
    }
    const VertexSet face = c.vertices[x].face;
    auto it = longest.find(face.bits());
    if (it == longest.end()) it = longest.emplace(face.bits(), longest_length(g, face)).first;
    c.star_complete[x] = it->second.has_value() &&
                         c.vertices[x].rep.size() + *it->second <= c.ball_complete_radius;
  }
  return c;
}

std::vector<std::vector<std::size_t>> link_corners(const ShadowComplex& c, std::size_t x) {
  std::vector<std::vector<std::size_t>> out;
  for (const ShadowCube& q : c.cubes) {
    const std::vector<Vertex> members = q.letters.members();
    for (std::size_t t = 0; t < q.corners.size(); ++t) {
      if (q.corners[t] != x) continue;
      std::vector<std::size_t> corner;
      for (std::size_t b = 0; b < members.size(); ++b) {
        // Up edge from x, or down edge from the corner below x.
        const std::size_t from = (t >> b) & 1U ? q.corners[t & ~(std::size_t{1} << b)] : x;
        const auto e = c.find_edge(from, members[b]);
        if (!e) throw InternalError("cube edge missing from the edge index");
        corner.push_back(*e);
      }
      std::sort(corner.begin(), corner.end());
      out.push_back(std::move(corner));
    }
  }
  return out;
}

namespace {

bool inside_some(const std::vector<std::size_t>& s, const std::vector<std::vector<std::size_t>>& corners) {
  return std::any_of(corners.begin(), corners.end(), [&](const std::vector<std::size_t>& c) {
    return std::includes(c.begin(), c.end(), s.begin(), s.end());
  });
}

// Maximal cliques of the link's 1-skeleton, each sorted.
std::vector<std::vector<std::size_t>> link_cliques(const std::vector<std::vector<std::size_t>>& corners) {
  std::set<std::size_t> verts;
  std::set<std::pair<std::size_t, std::size_t>> joined;
  for (const auto& c : corners) {
    for (std::size_t a : c) {
      verts.insert(a);
      for (std::size_t b : c) {
        if (a < b) joined.insert({a, b});
      }
    }
  }
  auto adjacent = [&](std::size_t a, std::size_t b) {
    return joined.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  std::vector<std::vector<std::size_t>> out;
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::vector<std::size_t> r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          std::sort(r.begin(), r.end());
          out.push_back(r);
          return;
        }
        while (!p.empty()) {
          const std::size_t v = p.back();
          std::vector<std::size_t> np;
          std::vector<std::size_t> nx;
          for (std::size_t u : p) {
            if (u != v && adjacent(u, v)) np.push_back(u);
          }
          for (std::size_t u : x) {
            if (adjacent(u, v)) nx.push_back(u);
          }
          std::vector<std::size_t> nr = r;
          nr.push_back(v);
          bk(nr, np, nx);
          p.pop_back();
          x.push_back(v);
        }
      };
  bk({}, {verts.begin(), verts.end()}, {});
  return out;
}

}  // namespace

LinkReport links_full_check(const ShadowComplex& c, const ShadowComplex& sub) {
  LinkReport report;
  // Edge key shared by both complexes: (lower coset, letter).
  auto edge_key = [](const ShadowComplex& k, std::size_t e) {
    const ShadowCube& q = k.cubes[k.edges[e]];
    const ShadowVertex& v = k.vertices[q.lower];
    return std::make_tuple(v.rep, v.face.bits(), q.letters.min());
  };
  for (std::size_t x = 0; x < c.vertices.size(); ++x) {
    if (!c.star_complete[x]) continue;
    ++report.eligible;
    const auto corners = link_corners(c, x);
    for (const auto& clique : link_cliques(corners)) {
      if (!inside_some(clique, corners)) {
        ++report.flag_failures;
        report.failures.push_back("link of vertex " + std::to_string(x) + " is not flag");
        break;
      }
    }
  }
  for (std::size_t y = 0; y < sub.vertices.size(); ++y) {
    const auto x = c.find_vertex(sub.vertices[y].rep, sub.vertices[y].face);
    if (!x || !c.star_complete[*x]) continue;
    const auto sub_corners_local = link_corners(sub, y);
    std::set<std::tuple<CoxWord, std::uint64_t, Vertex>> sub_vertices;
    std::vector<std::vector<std::tuple<CoxWord, std::uint64_t, Vertex>>> sub_corners;
    for (const auto& corner : sub_corners_local) {
      std::vector<std::tuple<CoxWord, std::uint64_t, Vertex>> keyed;
      for (std::size_t e : corner) {
        keyed.push_back(edge_key(sub, e));
        sub_vertices.insert(edge_key(sub, e));
      }
      std::sort(keyed.begin(), keyed.end());
      sub_corners.push_back(std::move(keyed));
    }
    for (const auto& corner : link_corners(c, *x)) {
      std::vector<std::tuple<CoxWord, std::uint64_t, Vertex>> face;
      for (std::size_t e : corner) {
        if (sub_vertices.count(edge_key(c, e))) face.push_back(edge_key(c, e));
      }
      if (face.size() < 2) continue;
      std::sort(face.begin(), face.end());
      const bool ok = std::any_of(sub_corners.begin(), sub_corners.end(), [&](const auto& s) {
        return std::includes(s.begin(), s.end(), face.begin(), face.end());
      });
      if (!ok) {
        ++report.full_failures;
        report.failures.push_back("link of sub-vertex " + std::to_string(y) + " is not full");
        break;
      }
    }
  }
  report.conclusive = report.eligible > 0;
  return report;
}

std::optional<std::size_t> components_without_class(const ShadowComplex& c, std::size_t cls) {
  if (!c.whole) return std::nullopt;
  UnionFind uf(c.vertices.size());
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (c.edge_class[e] == cls) continue;
    const ShadowCube& q = c.cubes[c.edges[e]];
    uf.unite(q.corners[0], q.corners[1]);
  }
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) roots.insert(uf.find(v));
  return roots.size();
}

std::size_t skeleton_components(const ShadowComplex& c) {
  UnionFind uf(c.vertices.size());
  for (std::size_t e : c.edges) uf.unite(c.cubes[e].corners[0], c.cubes[e].corners[1]);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) roots.insert(uf.find(v));
  return roots.size();
}

std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const ShadowComplex& c) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const ShadowCube& q : c.cubes) {
    if (q.letters.size() != 2) continue;
    const std::vector<Vertex> ab = q.letters.members();
    const std::size_t a = c.edge_class[*c.find_edge(q.corners[0], ab[0])];
    const std::size_t b = c.edge_class[*c.find_edge(q.corners[0], ab[1])];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return {out.begin(), out.end()};
}

SeparationReport separation_check(const ShadowComplex& c, std::size_t j1, std::size_t j2) {
  SeparationReport r;
  r.components_first = components_without_class(c, j1);
  r.components_second = components_without_class(c, j2);
  const auto pairs = crossing_pairs(c);
  auto crosses = [&](std::size_t a, std::size_t b) {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(std::min(a, b), std::max(a, b)));
  };
  r.cross = crosses(j1, j2);
  for (std::size_t k = 0; k < c.class_count(); ++k) {
    if (k != j1 && k != j2 && crosses(k, j1) && crosses(k, j2)) r.third_crosses_both = true;
  }
  r.conclusive = c.whole;
  return r;
}

HyperplaneReport hyperplane_report(const DefiningGraph& g, const ShadowComplex& c) {
  HyperplaneReport r;
  r.classes = c.class_count();
  r.conclusive = c.whole;
  if (c.whole) {
    for (std::size_t k = 0; k < c.class_count(); ++k) {
      if (components_without_class(c, k) != 2) ++r.separation_failures;
    }
  }
  for (auto [a, b] : crossing_pairs(c)) {
    const Vertex ta = c.class_type[a];
    const Vertex tb = c.class_type[b];
    if (ta == tb) ++r.same_type_crossings;
    if (ta != tb && !g.adjacent(ta, tb)) ++r.non_adjacent_crossings;
  }
  return r;
}

std::string shadow_to_json(const DefiningGraph& g, const ShadowComplex& c) {
  auto names = [&](VertexSet s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(g.name(v));
    return out;
  };
  json doc;
  doc["reduced"] = c.reduced;
  doc["whole"] = c.whole;
  doc["ball_complete_radius"] = c.ball_complete_radius;
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    doc["vertices"].push_back({{"id", v},
                               {"rep", format_word(g, c.vertices[v].rep)},
                               {"face", names(c.vertices[v].face)},
                               {"star_complete", static_cast<bool>(c.star_complete[v])}});
  }
  doc["cubes"] = json::array();
  for (const ShadowCube& q : c.cubes) doc["cubes"].push_back({{"min", q.lower}, {"letters", names(q.letters)}});
  doc["hyperplanes"] = json::array();
  std::vector<std::size_t> sizes(c.class_count(), 0);
  for (std::size_t cls : c.edge_class) ++sizes[cls];
  for (std::size_t k = 0; k < c.class_count(); ++k) {
    doc["hyperplanes"].push_back({{"id", k}, {"type", g.name(c.class_type[k])}, {"edges", sizes[k]}});
  }
  return doc.dump(2);
}

std::string shadow_to_dot(const DefiningGraph& g, const ShadowComplex& c) {
  std::ostringstream os;
  os << "graph shadow {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    std::string face;
    for (Vertex u : c.vertices[v].face) face += (face.empty() ? "" : ",") + g.name(u);
    const std::string rep = c.vertices[v].rep.empty() ? "1" : format_word(g, c.vertices[v].rep);
    os << "  v" << v << " [label=\"" << rep << " W{" << face << "}\"];\n";
  }
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const ShadowCube& q = c.cubes[c.edges[e]];
    os << "  v" << q.corners[0] << " -- v" << q.corners[1] << " [label=\"" << g.name(q.letters.min())
       << "\", colorscheme=set19, color=" << (c.edge_class[e] % 9) + 1 << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace artinacyl
