#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace artinacyl {

/// Index of a generator in a DefiningGraph. Indices follow the lexicographic
/// order of vertex names, so comparing indices compares names.
using Vertex = std::uint32_t;

/// Edge label m(u,v). Absent pairs carry kInfinity.
using Label = std::uint32_t;
inline constexpr Label kInfinity = std::numeric_limits<Label>::max();

inline constexpr std::size_t kMaxVertices = 64;

/// Subset of the generators of one graph, stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t bits) : bits_(bits) {}
    Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(bits_)); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t bits_ = 0;
  };

  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet single(Vertex v) { return from_bits(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet first(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <typename Range>
  static VertexSet of(const Range& vertices) {
    VertexSet s;
    for (Vertex v : vertices) s.insert(v);
    return s;
  }

  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; undefined on the empty set.
  Vertex min() const { return static_cast<Vertex>(std::countr_zero(bits_)); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<Vertex> members() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  /// Orders sets by their sorted member lists (lexicographically-least member first).
  friend bool operator<(VertexSet a, VertexSet b) { return a.members() < b.members(); }

 private:
  std::uint64_t bits_ = 0;
};

/// Finite simple graph with labels m >= 2 on edges; non-adjacent pairs have
/// label infinity. Vertices are kept sorted by name.
class DefiningGraph {
 public:
  struct Edge {
    std::string u;
    std::string v;
    Label label;
  };

  /// Validates and builds a graph. Throws ParseError on duplicate or empty
  /// names, self-edges, unknown endpoints, labels < 2, repeated pairs, or an
  /// empty vertex list.
  static DefiningGraph build(std::vector<std::string> names, const std::vector<Edge>& edges);

  std::size_t size() const { return names_.size(); }
  VertexSet all() const { return VertexSet::first(size()); }
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;

  /// m(u,v); 1 on the diagonal, kInfinity for non-adjacent pairs.
  Label label(Vertex u, Vertex v) const { return labels_[u * size() + v]; }
  /// u,v joined by an edge of the graph (finite label).
  bool adjacent(Vertex u, Vertex v) const { return u != v && label(u, v) != kInfinity; }
  /// Edge of the Coxeter graph: label >= 3 or infinity.
  bool coxeter_adjacent(Vertex u, Vertex v) const { return u != v && label(u, v) >= 3; }
  /// Edge of the graph with finite label > 2.
  bool braided(Vertex u, Vertex v) const { return adjacent(u, v) && label(u, v) > 2; }

  /// Graph neighbours (finite label) of v.
  VertexSet neighbours(Vertex v) const;
  bool spans_clique(VertexSet s) const;

  /// Full subgraph spanned by s; vertex i of the result is the i-th member of s.
  DefiningGraph induced(VertexSet s) const;

  /// Edge list with finite labels, u < v, in index order.
  std::vector<std::tuple<Vertex, Vertex, Label>> edges() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Label> labels_;
};

struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

struct LabeledGraph {
  std::vector<std::string> vertices;
  /// Labels are >= 3 or kInfinity.
  std::vector<std::tuple<Vertex, Vertex, Label>> edges;
};

struct DerivedGraphs {
  SimpleGraph complement;
  LabeledGraph coxeter;
};

struct JoinDecomposition {
  /// V0: union of the singleton components of the complement graph.
  VertexSet clique_factor;
  /// V1..Vk: complement components with at least two vertices, ordered by
  /// least member.
  std::vector<VertexSet> factors;

  VertexSet star() const {
    VertexSet s;
    for (VertexSet f : factors) s = s | f;
    return s;
  }
  friend bool operator==(const JoinDecomposition&, const JoinDecomposition&) = default;
};

struct ShapeFlags {
  bool is_clique;
  bool is_cone;
};

/// Parses {"vertices":[...],"edges":[[u,v,m],...]}.
DefiningGraph parse_defining_graph(std::string_view document);
std::string to_json(const DefiningGraph& g);

DerivedGraphs derived_graphs(const DefiningGraph& g);
JoinDecomposition join_decompose(const DefiningGraph& g);
ShapeFlags shape_flags(const DefiningGraph& g);

/// Connected components of the subgraph on `within` whose edges satisfy
/// `edge(u, v)`. Components are ordered by least member.
template <typename EdgePredicate>
std::vector<VertexSet> components(VertexSet within, EdgePredicate edge) {
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (!remaining.empty()) {
    VertexSet comp = VertexSet::single(remaining.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex u : frontier) {
        for (Vertex v : remaining - comp) {
          if (edge(u, v)) next.insert(v);
        }
      }
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    remaining = remaining - comp;
  }
  return out;
}

enum class DotView { kDefining, kComplement, kCoxeter };
std::string to_dot(const DefiningGraph& g, DotView view);

}  // namespace artinacyl
