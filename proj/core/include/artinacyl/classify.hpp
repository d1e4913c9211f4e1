#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artinacyl/graph.hpp"

namespace artinacyl {

/// An irreducible finite Coxeter system, e.g. "A3", "D5", "H4", "I2(5)".
struct FiniteType {
  std::string name;
  /// Number of vertices of the component.
  std::size_t rank;
  /// |W| for the component; 0 if it does not fit in 64 bits.
  std::uint64_t order;

  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

/// Irreducible components of a finite W, ordered by least vertex, or nullopt
/// when W is infinite. Rank-2 components are reported as I2(m).
std::optional<std::vector<FiniteType>> finite_type_recognize(const DefiningGraph& g);

/// |W| for a finite type list (product of component orders), 0 on overflow.
std::uint64_t finite_order(const std::vector<FiniteType>& types);

struct ClassificationReport {
  bool spherical;
  bool irreducible;
  bool free_of_infinity;
  bool type_fc;
  bool two_dimensional;
  std::optional<std::vector<FiniteType>> finite_type_name;
};

ClassificationReport classify(const DefiningGraph& g);

/// Maximal cliques of the defining graph, each as a vertex set, sorted.
std::vector<VertexSet> maximal_cliques(const DefiningGraph& g);

struct Justification {
  std::string claim;
  std::string citation;
};

enum class AcylStatus { kAcylindricallyHyperbolic, kNotAcylindricallyHyperbolic, kUnknown };
std::string to_string(AcylStatus status);

struct Verdict {
  AcylStatus status;
  std::vector<Justification> justification;
};

Verdict decide_acyl(const DefiningGraph& g);

struct CenterReport {
  bool center_finite;
  bool contained_in_clique_factor_center;
  /// Present (true) only when the clique factor has at most three vertices.
  std::optional<bool> trivial;
  /// Present (true) under the same clique-factor size rule.
  std::optional<bool> directly_indecomposable;
  std::vector<Justification> justification;
};

/// Requires an irreducible, non-clique graph; throws HypothesisError naming
/// the failed hypothesis otherwise.
CenterReport center_report(const DefiningGraph& g);

}  // namespace artinacyl
