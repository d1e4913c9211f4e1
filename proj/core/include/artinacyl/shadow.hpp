#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artinacyl/coxeter.hpp"
#include "artinacyl/graph.hpp"

namespace artinacyl {

struct DeltaSets {
  /// Vertex sets spanning cliques (including the empty set), by size then
  /// members.
  std::vector<VertexSet> all_cliques;
  /// Members of all_cliques containing V_0.
  std::vector<VertexSet> reduced;
};

/// Throws ResourceError beyond `cap` clique sets.
DeltaSets delta_sets(const DefiningGraph& g, const JoinDecomposition& d, std::size_t cap = 1U << 20);

/// Shortlex normal form of the minimal-length element of g W_U, by greedy
/// right descent inside U.
CoxWord minimal_coset_rep(const CoxeterGroup& group, const CoxWord& g, VertexSet u);

/// Coset vertex g W_U, g minimal in its coset.
struct ShadowVertex {
  CoxWord rep;
  VertexSet face;
};

/// Interval [g W_U, g W_{U + letters}] with g W_U = vertices[lower].
struct ShadowCube {
  std::size_t lower;
  VertexSet letters;
  /// corners[T] for T a subset of letters, indexed by bitmask over
  /// letters.members().
  std::vector<std::size_t> corners;
};

/// Finite piece of the coset cube complex of the Coxeter group: a "shadow"
/// of the Artin clique-cube complex, never a statement about it.
struct ShadowComplex {
  bool reduced = false;
  std::vector<ShadowVertex> vertices;
  /// Every cube of dimension >= 1; edges are the cubes with one letter.
  std::vector<ShadowCube> cubes;
  /// Indices into cubes of the one-letter cubes.
  std::vector<std::size_t> edges;
  /// Hyperplane class per entry of `edges`.
  std::vector<std::size_t> edge_class;
  /// Type letter per class.
  std::vector<Vertex> class_type;
  /// True when W is finite and the whole complex was built.
  bool whole = false;
  /// Every element of length <= ball_complete_radius was used.
  std::size_t ball_complete_radius = 0;
  /// Per vertex: every cube containing it is present.
  std::vector<bool> star_complete;

  std::optional<std::size_t> find_vertex(const CoxWord& rep, VertexSet face) const;
  std::optional<std::size_t> find_edge(std::size_t lower, Vertex letter) const;
  std::size_t class_count() const { return class_type.size(); }

  std::map<std::pair<CoxWord, std::uint64_t>, std::size_t> vertex_index;
  std::map<std::pair<std::size_t, Vertex>, std::size_t> edge_index;
};

struct ShadowOptions {
  /// Maximum number of group elements enumerated.
  std::size_t cap = 20'000;
  /// Only elements of length <= radius are used, if set.
  std::optional<std::size_t> radius;
};

/// Vertices are the cosets g W_U for g in the enumerated ball and U in the
/// chosen Delta; cubes are the intervals between them.
ShadowComplex build_shadow(const DefiningGraph& g, const JoinDecomposition& d, bool reduced,
                           const ShadowOptions& options = {});

/// Corners of cubes at vertex x, each a sorted list of edge positions (into
/// ShadowComplex::edges); together they generate the link of x.
std::vector<std::vector<std::size_t>> link_corners(const ShadowComplex& c, std::size_t x);

struct LinkReport {
  std::size_t eligible = 0;
  std::size_t flag_failures = 0;
  std::size_t full_failures = 0;
  /// False when no vertex had a complete star.
  bool conclusive = false;
  std::vector<std::string> failures;
};

/// Flagness of every star-complete link of c, and fullness of the links of
/// `sub` (matched to c by coset) inside those of c.
LinkReport links_full_check(const ShadowComplex& c, const ShadowComplex& sub);

struct SeparationReport {
  /// Components of the 1-skeleton with the class's edges removed; empty when
  /// the complex is not whole.
  std::optional<std::size_t> components_first;
  std::optional<std::size_t> components_second;
  /// Whether the two classes cross each other.
  bool cross = false;
  /// Whether some third class crosses both.
  bool third_crosses_both = false;
  bool conclusive = false;
};

/// Components after cutting along a hyperplane class (only when whole).
std::optional<std::size_t> components_without_class(const ShadowComplex& c, std::size_t cls);

/// Pairs (a, b), a < b, of classes sharing a square.
std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const ShadowComplex& c);

SeparationReport separation_check(const ShadowComplex& c, std::size_t j1, std::size_t j2);

/// Complex-wide hyperplane laws.
struct HyperplaneReport {
  std::size_t classes = 0;
  /// Classes whose complement does not have exactly two components.
  std::size_t separation_failures = 0;
  std::size_t same_type_crossings = 0;
  std::size_t non_adjacent_crossings = 0;
  bool conclusive = false;
};
HyperplaneReport hyperplane_report(const DefiningGraph& g, const ShadowComplex& c);

/// Components of the whole 1-skeleton.
std::size_t skeleton_components(const ShadowComplex& c);

std::string shadow_to_json(const DefiningGraph& g, const ShadowComplex& c);
std::string shadow_to_dot(const DefiningGraph& g, const ShadowComplex& c);

}  // namespace artinacyl
