#include "artinacyl/wpd.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>

#include "artinacyl/error.hpp"
#include "json.hpp"

namespace artinacyl {

using nlohmann::json;

namespace {

constexpr std::size_t kGammaLetterCap = 10'000'000;

bool coxeter_connected(const DefiningGraph& g) {
  return components(g.all(), [&](Vertex u, Vertex v) { return g.coxeter_adjacent(u, v); })
             .size() == 1;
}

// Vertices of V_0 reachable from `source` along braided edges staying in V_0,
// together with every vertex outside V_0 braided to source or to them.
VertexSet braided_reach(const DefiningGraph& g, VertexSet source, VertexSet clique_factor) {
  VertexSet inside;
  VertexSet frontier = source;
  VertexSet outside;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) {
      for (Vertex v = 0; v < g.size(); ++v) {
        if (!g.braided(u, v)) continue;
        if (clique_factor.contains(v)) {
          if (!inside.contains(v)) next.insert(v);
        } else {
          outside.insert(v);
        }
      }
    }
    inside = inside | next;
    frontier = next;
  }
  return inside | outside;
}

CoxWord concat(std::initializer_list<const CoxWord*> parts) {
  CoxWord out;
  for (const CoxWord* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

bool QGraph::connected() const {
  if (nodes.empty()) return false;
  std::vector<bool> seen(nodes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      const std::size_t other = a == u ? b : b == u ? a : u;
      if (other != u && !seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

QGraph build_q(const DefiningGraph& g, const JoinDecomposition& d) {
  if (d.factors.empty()) {
    throw HypothesisError("defining graph is a clique: the non-clique hypothesis fails");
  }
  if (!coxeter_connected(g)) {
    throw HypothesisError("Coxeter graph is disconnected: the irreducibility hypothesis fails");
  }
  QGraph q;
  q.nodes = d.factors;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const VertexSet reach = braided_reach(g, q.nodes[i], d.clique_factor);
    for (std::size_t j = i + 1; j < q.nodes.size(); ++j) {
      if (!(reach & q.nodes[j]).empty()) q.edges.emplace_back(i, j);
    }
  }
  return q;
}

TreeTour spanning_tree_and_tour(const QGraph& q) {
  const std::size_t k = q.nodes.size();
  if (k == 0) throw HypothesisError("factor graph has no nodes");
  TreeTour t;
  std::vector<std::size_t> new_index(k, k);
  std::deque<std::size_t> queue{0};
  new_index[0] = 0;
  t.order.push_back(0);
  t.parent.push_back(0);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < k; ++v) {
      const bool edge = std::find(q.edges.begin(), q.edges.end(),
                                  std::make_pair(std::min(u, v), std::max(u, v))) != q.edges.end();
      if (!edge || new_index[v] != k) continue;
      new_index[v] = t.order.size();
      t.order.push_back(v);
      t.parent.push_back(new_index[u]);
      queue.push_back(v);
    }
  }
  if (t.order.size() != k) throw HypothesisError("factor graph is disconnected");

  // Children lists are already in increasing new index.
  std::vector<std::vector<std::size_t>> children(k);
  for (std::size_t j = 1; j < k; ++j) children[t.parent[j]].push_back(j);
  auto dfs = [&](auto& self, std::size_t u) -> void {
    t.tour.push_back(u);
    for (std::size_t c : children[u]) {
      self(self, c);
      t.tour.push_back(u);
    }
  };
  dfs(dfs, 0);
  if (t.tour.size() == 1) t.tour.push_back(0);
  return t;
}

std::vector<ConnectingPath> connecting_paths(const DefiningGraph& g,
                                             const std::vector<VertexSet>& factors,
                                             VertexSet clique_factor, const TreeTour& tree) {
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<ConnectingPath> out;
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const std::size_t i = tree.parent[j];
    // Distance to V_j through V_0.
    std::vector<std::size_t> dist(g.size(), kUnreached);
    std::deque<Vertex> queue;
    for (Vertex v : factors[j]) {
      dist[v] = 0;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : clique_factor) {
        if (dist[v] == kUnreached && g.braided(u, v)) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    auto step_distance = [&](Vertex u) {
      std::size_t best = kUnreached;
      for (Vertex x : clique_factor | factors[j]) {
        if (dist[x] != kUnreached && g.braided(u, x)) best = std::min(best, dist[x] + 1);
      }
      return best;
    };
    std::size_t best = kUnreached;
    Vertex start = 0;
    for (Vertex s : factors[i]) {
      const std::size_t len = step_distance(s);
      if (len < best) {
        best = len;
        start = s;
      }
    }
    if (best == kUnreached) {
      throw InternalError("no connecting path between tree-adjacent factors " +
                          std::to_string(i + 1) + " and " + std::to_string(j + 1));
    }
    CoxWord path{start};
    for (std::size_t remaining = best; remaining > 0; --remaining) {
      const Vertex u = path.back();
      for (Vertex x : clique_factor | factors[j]) {
        if (dist[x] == remaining - 1 && g.braided(u, x)) {
          path.push_back(x);
          break;
        }
      }
    }
    out.push_back({i, j, std::move(path)});
  }
  return out;
}

CoxWord minimal_closed_cover_walk(const DefiningGraph& g, VertexSet factor) {
  const std::vector<Vertex> members = factor.members();
  const std::size_t f = members.size();
  if (f < 2) throw InternalError("closed cover walk needs a factor with at least two vertices");
  if (f > 24 || (f << f) > kWalkStateCap) {
    throw ResourceError("closed-walk search on a factor of " + std::to_string(f) +
                        " vertices exceeds the state cap of " + std::to_string(kWalkStateCap));
  }
  const std::uint32_t full = (std::uint32_t{1} << f) - 1;
  auto comp = [&](std::size_t a, std::size_t b) {
    return a != b && !g.adjacent(members[a], members[b]);
  };
  auto id = [&](std::size_t v, std::uint32_t mask) { return (static_cast<std::size_t>(mask) * f) + v; };

  // Backward distances to the goal state (start, all visited).
  std::vector<std::int32_t> back(f << f, -1);
  std::deque<std::pair<std::size_t, std::uint32_t>> queue{{0, full}};
  back[id(0, full)] = 0;
  while (!queue.empty()) {
    const auto [v, mask] = queue.front();
    queue.pop_front();
    const std::int32_t dv = back[id(v, mask)];
    for (std::size_t u = 0; u < f; ++u) {
      if (!comp(u, v) || !((mask >> u) & 1U)) continue;
      const std::uint32_t without = mask & ~(std::uint32_t{1} << v);
      for (std::uint32_t pm : {mask, without}) {
        if (!(pm & 1U)) continue;
        auto& slot = back[id(u, pm)];
        if (slot == -1) {
          slot = dv + 1;
          queue.emplace_back(u, pm);
        }
      }
    }
  }
  const std::int32_t total = back[id(0, 1)];
  if (total <= 0) throw InternalError("factor complement is disconnected");

  CoxWord walk{members[0]};
  std::size_t v = 0;
  std::uint32_t mask = 1;
  for (std::int32_t remaining = total; remaining > 0; --remaining) {
    for (std::size_t u = 0; u < f; ++u) {
      if (!comp(v, u)) continue;
      const std::uint32_t next = mask | (std::uint32_t{1} << u);
      if (back[id(u, next)] == remaining - 1) {
        v = u;
        mask = next;
        walk.push_back(members[u]);
        break;
      }
    }
  }
  return walk;
}

WalkTable closed_cover_walks(const DefiningGraph& g, const std::vector<VertexSet>& factors,
                             const TreeTour& tree, const std::vector<ConnectingPath>& paths) {
  WalkTable t;
  std::vector<CoxWord> base;
  t.n = 1;
  for (VertexSet f : factors) {
    base.push_back(minimal_closed_cover_walk(g, f));
    const std::size_t ni = base.back().size() - 1;
    t.base_lengths.push_back(ni);
    if (t.n > kGammaLetterCap / ni) throw ResourceError("common walk length n overflows the letter cap");
    t.n *= ni;
  }
  const std::size_t n = t.n;
  auto repeated = [&](std::size_t i) {
    CoxWord w;
    const std::size_t ni = t.base_lengths[i];
    for (std::size_t x = 0; x < n; ++x) w.push_back(base[i][x % ni]);
    return w;
  };
  t.walks.resize(factors.size());
  t.walks[0] = repeated(0);
  t.walks[0].push_back(t.walks[0].front());
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const std::size_t i = tree.parent[j];
    const auto p = std::find_if(paths.begin(), paths.end(),
                                [&](const ConnectingPath& c) { return c.i == i && c.j == j; });
    if (p == paths.end()) throw InternalError("missing connecting path for a tree edge");
    const Vertex s = p->vertices.front();
    const Vertex tv = p->vertices.back();
    const CoxWord& wi = t.walks[i];
    const auto at = std::find(wi.begin(), wi.end() - 1, s);
    if (at == wi.end() - 1) throw InternalError("walk misses the connecting-path endpoint");
    const std::size_t l = static_cast<std::size_t>(at - wi.begin()) + 1;
    const CoxWord rep = repeated(j);
    std::size_t shift = 0;
    while (shift < n && rep[(l - 1 + shift) % n] != tv) ++shift;
    if (shift == n) throw InternalError("walk misses the connecting-path endpoint");
    CoxWord rotated;
    for (std::size_t x = 0; x < n; ++x) rotated.push_back(rep[(x + shift) % n]);
    rotated.push_back(rotated.front());
    t.walks[j] = std::move(rotated);
    t.align.push_back({i, j, l});
  }
  return t;
}

Strata strata(const DefiningGraph& g, const std::vector<VertexSet>& factors,
              VertexSet clique_factor, const WalkTable& walks) {
  Strata out;
  if (clique_factor.empty()) return out;
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  VertexSet star;
  for (VertexSet f : factors) star = star | f;

  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::deque<Vertex> queue;
  for (Vertex v : star) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v = 0; v < g.size(); ++v) {
      if (dist[v] == kUnreached && g.coxeter_adjacent(u, v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::vector<Vertex>> layer(1);
  for (Vertex w : clique_factor) {
    if (dist[w] == kUnreached) throw HypothesisError("Coxeter graph is disconnected");
    if (dist[w] >= layer.size()) layer.resize(dist[w] + 1);
    layer[dist[w]].push_back(w);
  }
  out.depth = layer.size() - 1;

  const std::size_t k = factors.size();
  const std::size_t n = walks.n;
  std::map<Vertex, std::size_t> rank;
  std::map<Vertex, StratumEntry> entry;

  // W(1): dictionary-least position with a label > 2.
  std::map<Vertex, std::pair<std::size_t, std::size_t>> first_position;
  for (Vertex w : layer[1]) {
    bool found = false;
    for (std::size_t i = 1; i <= k && !found; ++i) {
      for (std::size_t l = 1; l <= n && !found; ++l) {
        if (g.coxeter_adjacent(w, walks.walks[i - 1][l - 1])) {
          entry[w] = {w, 1, i, l, {}};
          found = true;
        }
      }
    }
    if (!found) throw InternalError("stratum-1 vertex without a braided walk neighbour");
  }
  // W(0), ordered by first occurrence.
  std::vector<StratumEntry> w0;
  for (Vertex w : layer[1]) {
    const StratumEntry& e = entry[w];
    const Vertex v = walks.walks[e.i - 1][e.l - 1];
    if (std::any_of(w0.begin(), w0.end(), [&](const StratumEntry& x) { return x.w == v; })) continue;
    for (std::size_t l = 1; l <= n; ++l) {
      if (walks.walks[e.i - 1][l - 1] == v) {
        w0.push_back({v, 0, e.i, l, {v}});
        break;
      }
    }
  }
  std::sort(w0.begin(), w0.end(), [](const StratumEntry& a, const StratumEntry& b) {
    return std::tie(a.i, a.l) < std::tie(b.i, b.l);
  });
  for (const StratumEntry& e : w0) {
    rank[e.w] = out.order.size();
    out.order.push_back(e);
  }
  std::vector<Vertex> previous;
  for (const StratumEntry& e : w0) previous.push_back(e.w);

  for (std::size_t h = 1; h <= out.depth; ++h) {
    std::vector<std::pair<std::size_t, Vertex>> keyed;
    std::map<Vertex, Vertex> drop;
    for (Vertex w : layer[h]) {
      std::size_t best = kUnreached;
      for (Vertex x : previous) {
        if (g.coxeter_adjacent(w, x) && rank[x] < best) {
          best = rank[x];
          drop[w] = x;
        }
      }
      if (best == kUnreached) throw InternalError("stratum vertex without a lower neighbour");
      keyed.emplace_back(best, w);
    }
    std::sort(keyed.begin(), keyed.end());
    previous.clear();
    for (auto [key, w] : keyed) {
      const StratumEntry& lower = out.order[rank[drop[w]]];
      StratumEntry e{w, h, lower.i, lower.l, {w}};
      if (h == 1) {
        e.i = entry[w].i;
        e.l = entry[w].l;
        if (walks.walks[e.i - 1][e.l - 1] != lower.w) {
          throw InternalError("drop map disagrees with the least braided walk position");
        }
      }
      e.chain.insert(e.chain.end(), lower.chain.begin(), lower.chain.end());
      rank[w] = out.order.size();
      out.order.push_back(std::move(e));
      previous.push_back(w);
    }
  }
  out.m = static_cast<std::size_t>(std::count_if(
      out.order.begin(), out.order.end(), [&](const StratumEntry& e) { return e.h < out.depth; }));
  return out;
}

CoxWord GammaPlan::prefix(std::size_t d) const {
  CoxWord out;
  for (std::size_t x = 0; x < d && x < blocks.size(); ++x) {
    out.insert(out.end(), blocks[x].begin(), blocks[x].end());
  }
  return out;
}

VertexSet GammaPlan::face(std::size_t l) const {
  VertexSet u = clique_factor;
  for (std::size_t i = 1; i <= k(); ++i) u.insert(v(i, l));
  return u;
}

CoxWord GammaPlan::tau(std::size_t i, std::size_t j) const {
  for (const ConnectingPath& p : paths) {
    if (p.i == i && p.j == j) return p.vertices;
    if (p.i == j && p.j == i) return {p.vertices.rbegin(), p.vertices.rend()};
  }
  return {};
}

std::size_t GammaPlan::alignment(std::size_t i, std::size_t j) const {
  for (const Alignment& a : walks.align) {
    if ((a.i == i && a.j == j) || (a.i == j && a.j == i)) return a.l;
  }
  return 0;
}

void assemble_gamma(GammaPlan& plan) {
  const std::size_t k = plan.k();
  const std::size_t n = plan.n();
  auto column_without = [&](std::size_t l, std::size_t skip_a, std::size_t skip_b) {
    CoxWord w;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i != skip_a && i != skip_b) w.push_back(plan.v(i, l));
    }
    return w;
  };
  plan.lambda.clear();
  for (std::size_t l = 1; l <= n; ++l) plan.lambda.push_back(column_without(l, 0, 0));

  plan.blocks.clear();
  for (std::size_t a = 0; a < plan.m(); ++a) {
    const StratumEntry& e = plan.strata.order[a];
    for (std::size_t l = 1; l <= n; ++l) {
      if (l != e.l) {
        plan.blocks.push_back(plan.lambda[l - 1]);
        continue;
      }
      const CoxWord head = column_without(l, e.i, 0);
      plan.blocks.push_back(concat({&head, &e.chain}));
    }
  }
  const std::size_t flat_blocks = plan.blocks.size();
  for (std::size_t a = 0; a + 1 < plan.tree.tour.size(); ++a) {
    const std::size_t i = plan.tree.tour[a];
    const std::size_t j = plan.tree.tour[a + 1];
    const std::size_t twist = i == j ? 0 : plan.alignment(i, j);
    for (std::size_t l = 1; l <= n; ++l) {
      if (l != twist) {
        plan.blocks.push_back(plan.lambda[l - 1]);
        continue;
      }
      const CoxWord t = plan.tau(i, j);
      const CoxWord rest = column_without(l, i + 1, j + 1);
      plan.blocks.push_back(concat({&t, &rest}));
    }
  }
  plan.gamma_flat.clear();
  plan.gamma_nat.clear();
  for (std::size_t x = 0; x < plan.blocks.size(); ++x) {
    CoxWord& target = x < flat_blocks ? plan.gamma_flat : plan.gamma_nat;
    target.insert(target.end(), plan.blocks[x].begin(), plan.blocks[x].end());
  }
  plan.gamma = concat({&plan.gamma_flat, &plan.gamma_nat});
}

GammaPlan build_gamma(const DefiningGraph& g) {
  const JoinDecomposition d = join_decompose(g);
  const QGraph q = build_q(g, d);
  GammaPlan plan;
  plan.tree = spanning_tree_and_tour(q);
  for (std::size_t idx : plan.tree.order) plan.factors.push_back(q.nodes[idx]);
  plan.clique_factor = d.clique_factor;
  std::vector<std::size_t> new_index(q.nodes.size());
  for (std::size_t x = 0; x < plan.tree.order.size(); ++x) new_index[plan.tree.order[x]] = x;
  for (auto [a, b] : q.edges) {
    plan.q_edges.emplace_back(std::min(new_index[a], new_index[b]),
                              std::max(new_index[a], new_index[b]));
  }
  std::sort(plan.q_edges.begin(), plan.q_edges.end());
  plan.paths = connecting_paths(g, plan.factors, plan.clique_factor, plan.tree);
  plan.walks = closed_cover_walks(g, plan.factors, plan.tree, plan.paths);
  plan.strata = strata(g, plan.factors, plan.clique_factor, plan.walks);
  plan.extrapolated = plan.k() == 1;
  const std::size_t letters = (plan.m() + plan.r()) * plan.n() * (plan.k() + g.size());
  if (letters > kGammaLetterCap) {
    throw ResourceError("gamma would exceed " + std::to_string(kGammaLetterCap) + " letters");
  }
  assemble_gamma(plan);
  return plan;
}

namespace {

json names_of(const DefiningGraph& g, const CoxWord& w) {
  json out = json::array();
  for (Vertex v : w) out.push_back(g.name(v));
  return out;
}

json names_of(const DefiningGraph& g, VertexSet s) { return names_of(g, s.members()); }

// Structural readers; every failure is a ParseError naming the JSON path.
struct Reader {
  const DefiningGraph& g;

  const json& field(const json& obj, const char* key, const std::string& where) const {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return obj.at(key);
  }
  std::size_t count(const json& v, const std::string& where) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw ParseError(where + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
  }
  std::size_t index(const json& v, std::size_t bound, const std::string& where) const {
    const std::size_t x = count(v, where);
    if (x < 1 || x > bound) throw ParseError(where + ": index " + std::to_string(x) + " out of range");
    return x - 1;
  }
  Vertex vertex(const json& v, const std::string& where) const {
    if (!v.is_string()) throw ParseError(where + ": expected a vertex name");
    auto found = g.find(v.get<std::string>());
    if (!found) throw ParseError(where + ": unknown vertex \"" + v.get<std::string>() + "\"");
    return *found;
  }
  CoxWord vertices(const json& v, const std::string& where) const {
    if (!v.is_array()) throw ParseError(where + ": expected an array of vertex names");
    CoxWord out;
    for (std::size_t x = 0; x < v.size(); ++x) {
      out.push_back(vertex(v[x], where + "[" + std::to_string(x) + "]"));
    }
    return out;
  }
  CoxWord word(const json& v, const std::string& where) const {
    if (!v.is_string()) throw ParseError(where + ": expected a word string");
    try {
      return parse_word(g, v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  const json& array(const json& v, const std::string& where) const {
    if (!v.is_array()) throw ParseError(where + ": expected an array");
    return v;
  }
};

}  // namespace

std::string plan_to_json(const DefiningGraph& g, const GammaPlan& plan) {
  json doc;
  doc["k"] = plan.k();
  doc["n"] = plan.n();
  doc["m"] = plan.m();
  doc["r"] = plan.r();
  doc["depth"] = plan.strata.depth;
  doc["extrapolated"] = plan.extrapolated;
  doc["factors"] = json::array();
  for (VertexSet f : plan.factors) doc["factors"].push_back(names_of(g, f));
  doc["clique_factor"] = names_of(g, plan.clique_factor);
  doc["q_edges"] = json::array();
  for (auto [a, b] : plan.q_edges) doc["q_edges"].push_back({a + 1, b + 1});

  json tree;
  tree["edges"] = json::array();
  tree["parent"] = json::array();
  for (std::size_t j = 0; j < plan.k(); ++j) {
    tree["parent"].push_back(plan.tree.parent[j] + 1);
    if (j > 0) tree["edges"].push_back({plan.tree.parent[j] + 1, j + 1});
  }
  doc["tree"] = tree;
  doc["tour"] = json::array();
  for (std::size_t i : plan.tree.tour) doc["tour"].push_back(i + 1);

  doc["paths"] = json::array();
  for (const ConnectingPath& p : plan.paths) {
    doc["paths"].push_back({{"i", p.i + 1},
                            {"j", p.j + 1},
                            {"vertices", names_of(g, p.vertices)},
                            {"tau", format_word(g, p.vertices)},
                            {"tau_reverse", format_word(g, plan.tau(p.j, p.i))}});
  }
  doc["walk_lengths"] = plan.walks.base_lengths;
  doc["walks"] = json::array();
  for (const CoxWord& w : plan.walks.walks) doc["walks"].push_back(names_of(g, w));
  doc["align"] = json::array();
  for (const Alignment& a : plan.walks.align) {
    doc["align"].push_back({{"i", a.i + 1}, {"j", a.j + 1}, {"l", a.l}});
  }

  json strata_doc;
  strata_doc["W0"] = json::array();
  strata_doc["W"] = json::array();
  for (std::size_t h = 0; h <= plan.strata.depth && !plan.strata.order.empty(); ++h) {
    json layer = json::array();
    for (const StratumEntry& e : plan.strata.order) {
      if (e.h == h) layer.push_back(g.name(e.w));
    }
    if (h == 0) {
      strata_doc["W0"] = layer;
    } else {
      strata_doc["W"].push_back(layer);
    }
  }
  strata_doc["order"] = json::array();
  for (const StratumEntry& e : plan.strata.order) {
    strata_doc["order"].push_back({{"w", g.name(e.w)},
                                   {"h", e.h},
                                   {"i", e.i},
                                   {"l", e.l},
                                   {"chain", names_of(g, e.chain)}});
  }
  doc["strata"] = strata_doc;

  doc["lambda"] = json::array();
  for (const CoxWord& w : plan.lambda) doc["lambda"].push_back(format_word(g, w));
  doc["blocks"] = json::array();
  for (const CoxWord& w : plan.blocks) doc["blocks"].push_back(format_word(g, w));
  doc["prefixes"] = json::array();
  CoxWord acc;
  doc["prefixes"].push_back("");
  for (const CoxWord& w : plan.blocks) {
    acc.insert(acc.end(), w.begin(), w.end());
    doc["prefixes"].push_back(format_word(g, acc));
  }
  doc["gamma_flat"] = format_word(g, plan.gamma_flat);
  doc["gamma_nat"] = format_word(g, plan.gamma_nat);
  doc["gamma"] = format_word(g, plan.gamma);
  doc["gamma_length"] = plan.gamma.size();
  return doc.dump(2);
}

GammaPlan plan_from_json(const DefiningGraph& g, std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("plan: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("plan: expected a JSON object");
  // Output of the gamma command wraps the plan as {"meta": ..., "result": plan}.
  if (doc.contains("meta") && doc.contains("result")) {
    json inner = doc["result"];
    doc = std::move(inner);
    if (!doc.is_object()) throw ParseError("plan.result: expected a JSON object");
  }
  const Reader rd{g};
  GammaPlan plan;

  const json& factors = rd.array(rd.field(doc, "factors", "plan"), "plan.factors");
  if (factors.empty()) throw ParseError("plan.factors: empty");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    plan.factors.push_back(VertexSet::of(rd.vertices(factors[i], "plan.factors[" + std::to_string(i) + "]")));
  }
  const std::size_t k = plan.factors.size();
  plan.clique_factor = VertexSet::of(rd.vertices(rd.field(doc, "clique_factor", "plan"), "plan.clique_factor"));

  const json& tree = rd.field(doc, "tree", "plan");
  const json& parent = rd.array(rd.field(tree, "parent", "plan.tree"), "plan.tree.parent");
  if (parent.size() != k) throw ParseError("plan.tree.parent: expected one entry per factor");
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t p = rd.index(parent[j], k, "plan.tree.parent[" + std::to_string(j) + "]");
    if (j > 0 && p >= j) throw ParseError("plan.tree.parent[" + std::to_string(j) + "]: parent must precede child");
    plan.tree.parent.push_back(p);
    plan.tree.order.push_back(j);
  }
  const json& tour = rd.array(rd.field(doc, "tour", "plan"), "plan.tour");
  if (tour.size() < 2) throw ParseError("plan.tour: needs at least two entries");
  for (std::size_t a = 0; a < tour.size(); ++a) {
    plan.tree.tour.push_back(rd.index(tour[a], k, "plan.tour[" + std::to_string(a) + "]"));
  }
  if (const auto it = doc.find("q_edges"); it != doc.end()) {
    for (std::size_t e = 0; e < rd.array(*it, "plan.q_edges").size(); ++e) {
      const json& pair = (*it)[e];
      const std::string where = "plan.q_edges[" + std::to_string(e) + "]";
      if (!pair.is_array() || pair.size() != 2) throw ParseError(where + ": expected [i, j]");
      plan.q_edges.emplace_back(rd.index(pair[0], k, where), rd.index(pair[1], k, where));
    }
  }

  const json& paths = rd.array(rd.field(doc, "paths", "plan"), "plan.paths");
  for (std::size_t x = 0; x < paths.size(); ++x) {
    const std::string where = "plan.paths[" + std::to_string(x) + "]";
    ConnectingPath p{rd.index(rd.field(paths[x], "i", where), k, where + ".i"),
                     rd.index(rd.field(paths[x], "j", where), k, where + ".j"),
                     rd.vertices(rd.field(paths[x], "vertices", where), where + ".vertices")};
    if (p.vertices.empty()) throw ParseError(where + ".vertices: empty path");
    plan.paths.push_back(std::move(p));
  }

  const json& walks = rd.array(rd.field(doc, "walks", "plan"), "plan.walks");
  if (walks.size() != k) throw ParseError("plan.walks: expected one walk per factor");
  for (std::size_t i = 0; i < k; ++i) {
    plan.walks.walks.push_back(rd.vertices(walks[i], "plan.walks[" + std::to_string(i) + "]"));
    if (plan.walks.walks.back().size() < 2 ||
        plan.walks.walks.back().size() != plan.walks.walks.front().size()) {
      throw ParseError("plan.walks[" + std::to_string(i) + "]: walks must share a length >= 2");
    }
  }
  plan.walks.n = plan.walks.walks.front().size() - 1;
  if (const auto it = doc.find("walk_lengths"); it != doc.end()) {
    for (std::size_t i = 0; i < rd.array(*it, "plan.walk_lengths").size(); ++i) {
      plan.walks.base_lengths.push_back(rd.count((*it)[i], "plan.walk_lengths[" + std::to_string(i) + "]"));
    }
  }
  const json& align = rd.array(rd.field(doc, "align", "plan"), "plan.align");
  for (std::size_t x = 0; x < align.size(); ++x) {
    const std::string where = "plan.align[" + std::to_string(x) + "]";
    plan.walks.align.push_back({rd.index(rd.field(align[x], "i", where), k, where + ".i"),
                                rd.index(rd.field(align[x], "j", where), k, where + ".j"),
                                rd.index(rd.field(align[x], "l", where), plan.walks.n, where + ".l") + 1});
  }

  const json& strata_doc = rd.field(doc, "strata", "plan");
  const json& order = rd.array(rd.field(strata_doc, "order", "plan.strata"), "plan.strata.order");
  for (std::size_t x = 0; x < order.size(); ++x) {
    const std::string where = "plan.strata.order[" + std::to_string(x) + "]";
    const json& e = order[x];
    plan.strata.order.push_back({rd.vertex(rd.field(e, "w", where), where + ".w"),
                                 rd.count(rd.field(e, "h", where), where + ".h"),
                                 rd.index(rd.field(e, "i", where), k, where + ".i") + 1,
                                 rd.index(rd.field(e, "l", where), plan.walks.n, where + ".l") + 1,
                                 rd.vertices(rd.field(e, "chain", where), where + ".chain")});
  }
  plan.strata.depth = rd.count(rd.field(doc, "depth", "plan"), "plan.depth");
  plan.strata.m = rd.count(rd.field(doc, "m", "plan"), "plan.m");
  if (plan.strata.m > plan.strata.order.size()) throw ParseError("plan.m: exceeds the ordered strata");
  if (const auto it = doc.find("extrapolated"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("plan.extrapolated: expected a boolean");
    plan.extrapolated = it->get<bool>();
  }

  const json& blocks = rd.array(rd.field(doc, "blocks", "plan"), "plan.blocks");
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    plan.blocks.push_back(rd.word(blocks[x], "plan.blocks[" + std::to_string(x) + "]"));
  }
  if (const auto it = doc.find("lambda"); it != doc.end()) {
    for (std::size_t x = 0; x < rd.array(*it, "plan.lambda").size(); ++x) {
      plan.lambda.push_back(rd.word((*it)[x], "plan.lambda[" + std::to_string(x) + "]"));
    }
  }
  plan.gamma_flat = rd.word(rd.field(doc, "gamma_flat", "plan"), "plan.gamma_flat");
  plan.gamma_nat = rd.word(rd.field(doc, "gamma_nat", "plan"), "plan.gamma_nat");
  plan.gamma = rd.word(rd.field(doc, "gamma", "plan"), "plan.gamma");
  return plan;
}

}  // namespace artinacyl
