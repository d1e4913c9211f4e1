#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artinacyl/coxeter.hpp"
#include "artinacyl/graph.hpp"

namespace artinacyl {

/// Factor graph: nodes are the factors V_1..V_k of the join decomposition (in
/// the decomposition's order), edges join factors linked by a path of
/// label > 2 edges whose interior lies in V_0.
struct QGraph {
  std::vector<VertexSet> nodes;
  /// Pairs (i, j), i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool connected() const;
};

/// Throws HypothesisError when g is a clique or its Coxeter graph is
/// disconnected.
QGraph build_q(const DefiningGraph& g, const JoinDecomposition& d);

/// All factor indices below are 0-based and refer to the reindexed factors.
struct TreeTour {
  /// order[new] = index of that factor in QGraph::nodes.
  std::vector<std::size_t> order;
  /// parent[new]; the root maps to itself. parent[j] < j for j > 0.
  std::vector<std::size_t> parent;
  /// Closed node sequence i_1..i_{r+1}, i_1 = i_{r+1} = 0.
  std::vector<std::size_t> tour;

  std::size_t r() const { return tour.size() - 1; }
};

/// BFS tree from node 0 (which holds the least vertex of V_*), reindexed in
/// discovery order, with a depth-first Euler tour visiting children in index
/// order. A single node yields the degenerate tour (0, 0).
TreeTour spanning_tree_and_tour(const QGraph& q);

/// p_{i,j} for a tree edge with i < j: vertices w_{i,j,0..d}, w_0 in V_i,
/// w_d in V_j, interior in V_0, consecutive labels finite and > 2.
struct ConnectingPath {
  std::size_t i;
  std::size_t j;
  CoxWord vertices;
};

/// Shortest connecting path per tree edge, shortlex-least among those.
std::vector<ConnectingPath> connecting_paths(const DefiningGraph& g,
                                             const std::vector<VertexSet>& factors,
                                             VertexSet clique_factor, const TreeTour& tree);

struct Alignment {
  /// parent index i < child index j.
  std::size_t i;
  std::size_t j;
  /// 1-based position l(i,j) = l(j,i).
  std::size_t l;
};

struct WalkTable {
  /// n_i: minimum length of a closed walk on (Gamma_i)^c through every vertex.
  std::vector<std::size_t> base_lengths;
  std::size_t n = 0;
  /// walks[i] = (v_{i,1}, ..., v_{i,n+1}) with v_{i,n+1} = v_{i,1}.
  std::vector<CoxWord> walks;
  std::vector<Alignment> align;
};

/// Upper bound on (vertex, visited-set) states of one closed-walk search.
inline constexpr std::size_t kWalkStateCap = 10'000'000;

/// Minimum closed covering walk on the complement of `factor`, starting at its
/// least vertex and lexicographically least among minimum walks. The result
/// has length n_i + 1 with equal endpoints. Throws ResourceError past
/// kWalkStateCap states.
CoxWord minimal_closed_cover_walk(const DefiningGraph& g, VertexSet factor);

WalkTable closed_cover_walks(const DefiningGraph& g, const std::vector<VertexSet>& factors,
                             const TreeTour& tree, const std::vector<ConnectingPath>& paths);

/// One member of W(0) or V_0 with its position data.
struct StratumEntry {
  Vertex w;
  /// Stratum index h: 0 for W(0), otherwise the Coxeter-graph distance to V_*.
  std::size_t h;
  /// 1-based (i(w), l(w)).
  std::size_t i;
  std::size_t l;
  /// (w(h), w(h-1), ..., w(0)); w(h) = w and w(0) = v_{i(w), l(w)}.
  CoxWord chain;
};

struct Strata {
  /// d: largest stratum index; 0 when V_0 is empty.
  std::size_t depth = 0;
  /// W(0) and V_0 in the total order; entries with h < depth come first and
  /// are w_1 < ... < w_m.
  std::vector<StratumEntry> order;
  /// m = |W(0) + ... + W(d-1)|.
  std::size_t m = 0;
};

Strata strata(const DefiningGraph& g, const std::vector<VertexSet>& factors,
              VertexSet clique_factor, const WalkTable& walks);

/// Everything the construction of gamma produces.
struct GammaPlan {
  std::vector<VertexSet> factors;
  VertexSet clique_factor;
  /// Q-graph edges in reindexed numbering, i < j.
  std::vector<std::pair<std::size_t, std::size_t>> q_edges;
  TreeTour tree;
  std::vector<ConnectingPath> paths;
  WalkTable walks;
  Strata strata;
  /// lambda[l-1] = v_{1,l} ... v_{k,l}.
  std::vector<CoxWord> lambda;
  /// blocks[d-1] is the d-th lambda block; gamma(d) is the concatenation of
  /// the first d blocks. Size (m + r) n.
  std::vector<CoxWord> blocks;
  CoxWord gamma_flat;
  CoxWord gamma_nat;
  CoxWord gamma;
  /// Set for a single factor, where the twist-free tour is used.
  bool extrapolated = false;

  std::size_t k() const { return factors.size(); }
  std::size_t n() const { return walks.n; }
  std::size_t m() const { return strata.m; }
  std::size_t r() const { return tree.r(); }
  /// v_{i,l}, 1-based.
  Vertex v(std::size_t i, std::size_t l) const { return walks.walks[i - 1][l - 1]; }
  /// gamma(d).
  CoxWord prefix(std::size_t d) const;
  /// U_l = V_0 + column l, as a vertex set.
  VertexSet face(std::size_t l) const;
  /// tau_{i,j} for a tree edge in either direction (0-based).
  CoxWord tau(std::size_t i, std::size_t j) const;
  /// l(i,j) for a tree edge in either direction (0-based); 0 if absent.
  std::size_t alignment(std::size_t i, std::size_t j) const;
};

/// Recomputes lambda, blocks and the three gamma words from the other fields.
void assemble_gamma(GammaPlan& plan);

/// Full pipeline. Throws HypothesisError when g is a clique or reducible.
GammaPlan build_gamma(const DefiningGraph& g);

/// Plan document with every intermediate; vertices appear by name and factor
/// and position indices are 1-based.
std::string plan_to_json(const DefiningGraph& g, const GammaPlan& plan);
/// Reads a document written by plan_to_json, bare or inside the CLI
/// {"meta", "result"} envelope. Only structure is validated
/// (ParseError); mathematical consistency is left to the certificate checks.
GammaPlan plan_from_json(const DefiningGraph& g, std::string_view document);

}  // namespace artinacyl
