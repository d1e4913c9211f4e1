#include <doctest.h>

#include <random>
#include <set>

#include "artinacyl/coxeter.hpp"
#include "artinacyl/error.hpp"
#include "oracle.hpp"

using namespace artinacyl;

namespace {

CoxWord random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Vertex> letter(0, static_cast<Vertex>(rank - 1));
  CoxWord w(len(rng));
  for (Vertex& x : w) x = letter(rng);
  return w;
}

}  // namespace

TEST_SUITE("coxeter") {
  TEST_CASE("type A agrees with the symmetric group") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 5; ++n) {
      const DefiningGraph g = oracle::type_a(n);
      const CoxeterGroup group(g);
      for (int trial = 0; trial < 60; ++trial) {
        const CoxWord a = random_word(rng, n, 10);
        const CoxWord b = trial % 3 == 0 ? group.normal_form(a) : random_word(rng, n, 10);
        const bool same = oracle::permutation(n, a) == oracle::permutation(n, b);
        CHECK(cox_equal(g, a, b) == same);
        CHECK(group.equal(a, b) == same);
      }
    }
  }

  TEST_CASE("dihedral orders") {
    for (Label m = 2; m <= 9; ++m) {
      const DefiningGraph g = oracle::from_labels(2, {m});
      const Ball ball = enumerate_ball(g, 1000);
      CHECK(ball.saturated);
      CHECK(ball.size() == 2 * m);
      CHECK(ball.complete_length == m);
    }
  }

  TEST_CASE("ball shells are complete except possibly the last") {
    // Free product of three order-2 groups: shell sizes 1, 3, 6, 12, ...
    const DefiningGraph g = oracle::from_labels(3, {kInfinity, kInfinity, kInfinity});
    const Ball full = enumerate_ball(g, 10);
    CHECK_FALSE(full.saturated);
    CHECK(full.complete_length == 2);
    const Ball partial = enumerate_ball(g, 8);
    CHECK(partial.size() == 8);
    CHECK(partial.complete_length == 1);
    std::set<CoxWord> seen;
    for (const CoxWord& w : full.words()) seen.insert(w);
    CHECK(seen.size() == full.size());
  }

  TEST_CASE("normal form is shortlex least among reduced expressions") {
    const DefiningGraph g = oracle::from_labels(3, {3, 2, 5});  // H3
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const CoxWord w = random_word(rng, 3, 9);
      const CoxNormalForm nf = reduce(g, w);
      CHECK(nf.word == CoxeterGroup(g).normal_form(w));
      const auto exprs = reduced_expressions(g, w);
      REQUIRE_FALSE(exprs.empty());
      CHECK(exprs.front() == nf.word);
      for (const CoxWord& e : exprs) CHECK(e.size() == nf.word.size());
    }
  }

  TEST_CASE("Tits reduction agrees with the reflection representation on infinite groups") {
    const DefiningGraph g = oracle::from_labels(3, {3, 3, 3});  // affine A2
    const CoxeterGroup group(g);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const CoxWord w = random_word(rng, 3, 12);
      CHECK(reduce(g, w).word == group.normal_form(w));
    }
  }

  TEST_CASE("closure cap is enforced") {
    const DefiningGraph g = oracle::type_a(4);
    OracleLimits tiny;
    tiny.closure_cap = 2;
    CHECK_THROWS_AS(reduced_expressions(g, {0, 1, 0, 2, 1, 0}, tiny), ResourceError);
  }

  TEST_CASE("pentad twist element has a unique reduced expression") {
    const DefiningGraph g = oracle::load("pentad.json");
    const CoxWord swu = parse_word(g, "swu");
    CHECK(reduced_expressions(g, swu) == std::vector<CoxWord>{swu});
    CHECK(support(g, swu) == VertexSet::of(swu));
  }

  TEST_CASE("support of a cancelling word") {
    const DefiningGraph g = oracle::load("pentad.json");
    CHECK(support(g, parse_word(g, "swws")).empty());
    CHECK(support(g, parse_word(g, "stt")) == VertexSet::single(0));
  }

  TEST_CASE("products of parabolics") {
    const DefiningGraph g = oracle::type_a(3);
    const VertexSet u1 = VertexSet::of(std::vector<Vertex>{0});
    const VertexSet u2 = VertexSet::of(std::vector<Vertex>{2});
    CHECK(in_product_of_parabolics(g, {0, 2}, u1, u2));
    CHECK_FALSE(in_product_of_parabolics(g, {1}, u1, u2));
    const DefiningGraph free3 = oracle::from_labels(3, {kInfinity, kInfinity, kInfinity});
    OracleLimits small;
    small.ball_cap = 100;
    CHECK_THROWS_AS(in_product_of_parabolics(free3, {0}, VertexSet::first(2), u1, small),
                    HypothesisError);
  }

  TEST_CASE("word formatting round trip") {
    const DefiningGraph g = oracle::load("pentad.json");
    CHECK(format_word(g, parse_word(g, "swu")) == "swu");
    const DefiningGraph h = oracle::load("tower.json");
    const CoxWord w = parse_word(h, "w1 s w2");
    CHECK(w.size() == 3);
    CHECK(format_word(h, w) == "w1 s w2");
    CHECK_THROWS_AS(parse_word(g, "sx"), ParseError);
  }
}
