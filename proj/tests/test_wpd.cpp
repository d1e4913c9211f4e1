#include <doctest.h>

#include "artinacyl/coxeter.hpp"
#include "artinacyl/error.hpp"
#include "artinacyl/wpd.hpp"
#include "oracle.hpp"

using namespace artinacyl;

namespace {

std::string fmt(const DefiningGraph& g, const CoxWord& w) { return format_word(g, w); }

/// Invariants every plan must satisfy, checked directly against the graph.
void expect_well_formed(const DefiningGraph& g, const GammaPlan& p) {
  const std::size_t n = p.n();
  for (std::size_t i = 1; i <= p.k(); ++i) {
    const VertexSet factor = p.factors[i - 1];
    REQUIRE(p.walks.walks[i - 1].size() == n + 1);
    CHECK(p.v(i, n + 1) == p.v(i, 1));
    VertexSet covered;
    for (std::size_t l = 1; l <= n; ++l) {
      CHECK(factor.contains(p.v(i, l)));
      CHECK(g.label(p.v(i, l), p.v(i, l + 1)) == kInfinity);
      covered.insert(p.v(i, l));
    }
    CHECK(covered == factor);
    CHECK(n % p.walks.base_lengths[i - 1] == 0);
  }
  for (std::size_t l = 1; l <= n; ++l) {
    CHECK(g.spans_clique(p.face(l)));
    CHECK(p.face(l).size() == p.clique_factor.size() + p.k());
  }
  for (const Alignment& a : p.walks.align) {
    const CoxWord tau = p.tau(a.i, a.j);
    REQUIRE_FALSE(tau.empty());
    CHECK(p.v(a.i + 1, a.l) == tau.front());
    CHECK(p.v(a.j + 1, a.l) == tau.back());
  }
  CHECK(p.blocks.size() == (p.m() + p.r()) * n);
  CHECK(p.prefix(0).empty());
  CHECK(p.prefix(p.blocks.size()) == p.gamma);
  CHECK(p.prefix(p.m() * n) == p.gamma_flat);
  CoxWord joined = p.gamma_flat;
  joined.insert(joined.end(), p.gamma_nat.begin(), p.gamma_nat.end());
  CHECK(joined == p.gamma);
  CHECK(p.tree.tour.front() == 0);
  CHECK(p.tree.tour.back() == 0);
}

}  // namespace

TEST_SUITE("wpd") {
  TEST_CASE("pentad golden values") {
    const DefiningGraph g = oracle::load("pentad.json");
    const GammaPlan p = build_gamma(g);
    CHECK(p.k() == 2);
    CHECK(p.n() == 4);
    CHECK(p.m() == 1);
    CHECK(p.r() == 2);
    CHECK(p.strata.depth == 1);
    CHECK(fmt(g, p.gamma) == "ustvsutvswutvsutvuwstvsutv");
    CHECK(p.gamma.size() == 26);
    CHECK(fmt(g, p.gamma_flat) == "ustvsutv");
    CHECK(fmt(g, p.tau(0, 1)) == "swu");
    CHECK(fmt(g, p.tau(1, 0)) == "uws");
    CHECK(p.alignment(0, 1) == 1);
    const std::vector<std::string> blocks = {"us", "tv", "su", "tv", "swu", "tv",
                                             "su", "tv", "uws", "tv", "su", "tv"};
    REQUIRE(p.blocks.size() == blocks.size());
    for (std::size_t x = 0; x < blocks.size(); ++x) CHECK(fmt(g, p.blocks[x]) == blocks[x]);
    CHECK_FALSE(p.extrapolated);
    expect_well_formed(g, p);
  }

  TEST_CASE("corpus plans are well formed and deterministic") {
    for (const char* name : {"pentad.json", "square3.json", "cone1.json", "tower.json", "star3.json",
                             "triad.json", "nocone.json", "free2.json", "pentad_commuting.json"}) {
      CAPTURE(name);
      const DefiningGraph g = oracle::load(name);
      const GammaPlan p = build_gamma(g);
      expect_well_formed(g, p);
      CHECK(plan_to_json(g, build_gamma(g)) == plan_to_json(g, p));
    }
  }

  TEST_CASE("plan json round trip") {
    for (const char* name : {"pentad.json", "tower.json", "star3.json"}) {
      const DefiningGraph g = oracle::load(name);
      const std::string doc = plan_to_json(g, build_gamma(g));
      CHECK(plan_to_json(g, plan_from_json(g, doc)) == doc);
    }
  }

  TEST_CASE("plan parse errors name the field") {
    const DefiningGraph g = oracle::load("pentad.json");
    CHECK_THROWS_AS(plan_from_json(g, "[]"), ParseError);
    try {
      plan_from_json(g, R"({"factors": [["s", "zz"]]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("plan.factors[0]") != std::string::npos);
    }
  }

  TEST_CASE("hypotheses") {
    CHECK_THROWS_AS(build_gamma(oracle::load("clique3.json")), HypothesisError);
    CHECK_THROWS_AS(build_gamma(oracle::load("square2.json")), HypothesisError);
  }

  TEST_CASE("V0 empty: square with labels 3") {
    const DefiningGraph g = oracle::load("square3.json");
    const GammaPlan p = build_gamma(g);
    CHECK(p.clique_factor.empty());
    CHECK(p.m() == 0);
    CHECK(p.n() == 4);
    CHECK(p.paths.at(0).vertices.size() == 2);
  }

  TEST_CASE("single factor uses the degenerate tour") {
    const DefiningGraph g = oracle::load("cone1.json");
    const GammaPlan p = build_gamma(g);
    CHECK(p.k() == 1);
    CHECK(p.extrapolated);
    CHECK(p.r() == 1);
    CHECK(fmt(g, p.gamma) == "stst");
  }

  TEST_CASE("deeper strata") {
    const DefiningGraph g = oracle::load("tower.json");
    const GammaPlan p = build_gamma(g);
    CHECK(p.strata.depth == 2);
    CHECK(p.m() == 2);
    REQUIRE(p.strata.order.size() == 3);
    CHECK(fmt(g, p.strata.order.back().chain) == "w2 w1 s");
  }

  TEST_CASE("walk lengths") {
    const DefiningGraph g = oracle::load("triad.json");
    const GammaPlan p = build_gamma(g);
    CHECK(p.walks.base_lengths == std::vector<std::size_t>{2, 3});
    CHECK(p.n() == 6);
  }

  TEST_CASE("star-shaped tree") {
    const DefiningGraph g = oracle::load("star3.json");
    const GammaPlan p = build_gamma(g);
    CHECK(p.tree.tour == std::vector<std::size_t>{0, 1, 0, 2, 0});
    CHECK(p.r() == 4);
    CHECK(p.q_edges.size() == 3);
  }
}
