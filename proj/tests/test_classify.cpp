#include <doctest.h>

#include "artinacyl/classify.hpp"
#include "artinacyl/coxeter.hpp"
#include "artinacyl/error.hpp"
#include "artinacyl/report.hpp"
#include "oracle.hpp"

using namespace artinacyl;

namespace {

/// Path or tree diagram given as (u, v, label) Coxeter edges; other pairs 2.
DefiningGraph diagram(std::size_t n, std::vector<std::tuple<std::size_t, std::size_t, Label>> edges) {
  std::vector<Label> upper;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      Label l = 2;
      for (auto [a, b, m] : edges) {
        if ((a == u && b == v) || (a == v && b == u)) l = m;
      }
      upper.push_back(l);
    }
  }
  return oracle::from_labels(n, upper);
}

std::string label_of(const DefiningGraph& g) {
  const auto types = finite_type_recognize(g);
  return types ? finite_type_label(*types) : "infinite";
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("finite types and orders") {
    CHECK(label_of(diagram(3, {{0, 1, 3}, {1, 2, 3}})) == "A3");
    CHECK(label_of(diagram(3, {{0, 1, 3}, {1, 2, 4}})) == "B3");
    CHECK(label_of(diagram(3, {{0, 1, 5}, {1, 2, 3}})) == "H3");
    CHECK(label_of(diagram(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}})) == "D4");
    CHECK(label_of(diagram(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}})) == "F4");
    CHECK(label_of(diagram(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}})) == "H4");
    CHECK(label_of(diagram(3, {{0, 1, 5}})) == "I2(5) x A1");
    CHECK(label_of(diagram(6, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {2, 5, 3}})) == "E6");
    CHECK(finite_order(*finite_type_recognize(diagram(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}))) == 1152);
    CHECK(finite_order(*finite_type_recognize(diagram(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}}))) == 14400);
  }

  TEST_CASE("infinite types") {
    CHECK(label_of(diagram(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}})) == "infinite");
    CHECK(label_of(diagram(3, {{0, 1, 4}, {1, 2, 4}})) == "infinite");
    CHECK(label_of(diagram(3, {{0, 1, 3}, {1, 2, 6}})) == "infinite");
    CHECK(label_of(oracle::load("free2.json")) == "infinite");
    CHECK(label_of(diagram(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {1, 2, 3}})) == "infinite");
  }

  TEST_CASE("recognised orders match enumeration") {
    for (const auto& g : {diagram(3, {{0, 1, 3}, {1, 2, 4}}), diagram(3, {{0, 1, 5}, {1, 2, 3}}),
                          diagram(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}})}) {
      const Ball ball = enumerate_ball(g, 100000);
      REQUIRE(ball.saturated);
      CHECK(finite_order(*finite_type_recognize(g)) == ball.size());
    }
  }

  TEST_CASE("classification flags") {
    const ClassificationReport pentad = classify(oracle::load("pentad.json"));
    CHECK_FALSE(pentad.spherical);
    CHECK(pentad.irreducible);
    CHECK_FALSE(pentad.free_of_infinity);
    CHECK(pentad.type_fc);
    CHECK_FALSE(pentad.two_dimensional);  // {s, u, w}: 1/2 + 1/3 + 1/3 > 1

    const ClassificationReport a3 = classify(oracle::load("clique3.json"));
    CHECK(a3.spherical);
    CHECK(a3.free_of_infinity);
    CHECK_FALSE(a3.two_dimensional);  // 1/3 + 1/3 + 1/2 > 1

    const ClassificationReport affine = classify(oracle::load("affine_triangle.json"));
    CHECK_FALSE(affine.spherical);
    CHECK(affine.two_dimensional);
    CHECK_FALSE(affine.type_fc);
  }

  TEST_CASE("maximal cliques") {
    const DefiningGraph g = oracle::load("pentad.json");
    // {s,u,w}, {s,v,w}, {t,u,w}, {t,v,w}
    CHECK(maximal_cliques(g).size() == 4);
    for (VertexSet c : maximal_cliques(g)) CHECK(c.size() == 3);
  }

  TEST_CASE("verdicts") {
    CHECK(decide_acyl(oracle::load("free2.json")).status == AcylStatus::kAcylindricallyHyperbolic);
    CHECK(decide_acyl(oracle::load("square2.json")).status == AcylStatus::kNotAcylindricallyHyperbolic);
    CHECK(decide_acyl(oracle::load("dihedral3.json")).status == AcylStatus::kNotAcylindricallyHyperbolic);
    CHECK(decide_acyl(oracle::load("clique3.json")).status == AcylStatus::kNotAcylindricallyHyperbolic);
    CHECK(decide_acyl(oracle::load("affine_triangle.json")).status == AcylStatus::kUnknown);
    const Verdict pentad = decide_acyl(oracle::load("pentad.json"));
    CHECK(pentad.status == AcylStatus::kAcylindricallyHyperbolic);
    CHECK(pentad.justification.size() >= 2);
    for (const Justification& j : pentad.justification) CHECK_FALSE(j.citation.empty());
  }

  TEST_CASE("center report") {
    const CenterReport pentad = center_report(oracle::load("pentad.json"));
    CHECK(pentad.center_finite);
    CHECK(pentad.trivial == std::optional<bool>(true));
    CHECK(pentad.directly_indecomposable == std::optional<bool>(true));
    CHECK_THROWS_AS(center_report(oracle::load("square2.json")), HypothesisError);
    CHECK_THROWS_AS(center_report(oracle::load("clique3.json")), HypothesisError);
  }

  TEST_CASE("center report is silent for large clique factors") {
    // Four cone points over a non-edge, braided in a chain: |V0| = 4.
    const DefiningGraph g = oracle::from_labels(6, {kInfinity, 3, 2, 2, 2,  // a
                                                    3, 2, 2, 2,             // b
                                                    3, 2, 2,                // c
                                                    3, 2,                   // d
                                                    3});                    // e
    const CenterReport report = center_report(g);
    CHECK_FALSE(report.trivial.has_value());
    CHECK_FALSE(report.directly_indecomposable.has_value());
  }
}
