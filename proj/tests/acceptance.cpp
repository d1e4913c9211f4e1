// Acceptance harness: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "artinacyl/cert.hpp"
#include "artinacyl/classify.hpp"
#include "artinacyl/coxeter.hpp"
#include "artinacyl/graph.hpp"
#include "artinacyl/shadow.hpp"
#include "artinacyl/wpd.hpp"
#include "cli.hpp"
#include "corruptions.hpp"
#include "oracle.hpp"

using namespace artinacyl;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

// Pinned budgets in seconds.
struct Criterion {
  int number;
  std::string title;
  double budget;
  std::function<Outcome()> body;
};

/// Every labelling of the pairs of n vertices from `labels`.
void for_each_labelling(std::size_t n, const std::vector<Label>& labels,
                        const std::function<void(const std::vector<Label>&)>& visit) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::size_t> digit(pairs, 0);
  std::vector<Label> upper(pairs);
  for (;;) {
    for (std::size_t x = 0; x < pairs; ++x) upper[x] = labels[digit[x]];
    visit(upper);
    std::size_t x = 0;
    while (x < pairs && ++digit[x] == labels.size()) digit[x++] = 0;
    if (x == pairs) return;
  }
}

std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

/// Lexicographically least relabelling under vertex permutations.
std::vector<Label> canonical(std::size_t n, const std::vector<Label>& upper) {
  std::vector<std::size_t> perm(n);
  for (std::size_t v = 0; v < n; ++v) perm[v] = v;
  std::vector<Label> best = upper;
  do {
    std::vector<Label> image(upper.size());
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) image[pair_index(n, perm[u], perm[v])] = upper[pair_index(n, u, v)];
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected_by_finite_labels(std::size_t n, const std::vector<Label>& upper) {
  oracle::UnionFind uf(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (upper[pair_index(n, u, v)] != kInfinity) uf.unite(u, v);
    }
  }
  for (std::size_t v = 1; v < n; ++v) {
    if (uf.find(v) != uf.find(0)) return false;
  }
  return true;
}

std::string describe(std::size_t n, const std::vector<Label>& upper) {
  std::string out = std::to_string(n) + " vertices [";
  for (std::size_t x = 0; x < upper.size(); ++x) {
    out += (x ? "," : "") + (upper[x] == kInfinity ? std::string("inf") : std::to_string(upper[x]));
  }
  return out + "]";
}

Outcome criterion_join() {
  Outcome out;
  auto check = [&](std::size_t n, const std::vector<Label>& upper) {
    ++out.cases;
    const DefiningGraph g = oracle::from_labels(n, upper);
    const JoinDecomposition d = join_decompose(g);
    const oracle::PlainDecomposition o = oracle::complement_components(g);
    std::vector<std::size_t> v0(d.clique_factor.begin(), d.clique_factor.end());
    std::vector<std::vector<std::size_t>> factors;
    for (VertexSet f : d.factors) factors.emplace_back(f.begin(), f.end());
    out.expect(v0 == o.clique_factor && factors == o.factors, "oracle mismatch on " + describe(n, upper));
    // Reconstruction: parts are disjoint, cover V, and distinct parts are
    // completely joined by finite labels.
    std::vector<VertexSet> parts = d.factors;
    for (Vertex v : d.clique_factor) parts.push_back(VertexSet::single(v));
    VertexSet seen;
    bool disjoint = true;
    for (VertexSet p : parts) {
      disjoint = disjoint && (seen & p).empty();
      seen = seen | p;
    }
    bool joined = true;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        for (Vertex x : parts[a]) {
          for (Vertex y : parts[b]) joined = joined && g.adjacent(x, y);
        }
      }
    }
    out.expect(disjoint && seen == g.all() && joined, "reconstruction fails on " + describe(n, upper));
  };
  const std::vector<Label> labels = {2, 3, kInfinity};
  for (std::size_t n = 1; n <= 5; ++n) for_each_labelling(n, labels, [&](const auto& u) { check(n, u); });
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 6 + trial % 2;
    std::vector<Label> upper(n * (n - 1) / 2);
    for (Label& l : upper) l = labels[pick(rng)];
    check(n, upper);
  }
  out.detail = std::to_string(out.cases) + " graphs";
  return out;
}

Outcome criterion_finite_type() {
  Outcome out;
  const std::size_t cap = 1'200'000;
  const std::vector<Label> labels = {2, 3, 4, 5, 6, kInfinity};
  std::size_t finite = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<Label>> reps;
    for_each_labelling(n, labels, [&](const auto& upper) {
      if (connected_by_finite_labels(n, upper)) reps.insert(canonical(n, upper));
    });
    for (const auto& upper : reps) {
      ++out.cases;
      const DefiningGraph g = oracle::from_labels(n, upper);
      const auto types = finite_type_recognize(g);
      const Ball ball = enumerate_ball(g, cap);
      out.expect(types.has_value() == ball.saturated, "recognition vs saturation on " + describe(n, upper));
      if (types && ball.saturated) {
        ++finite;
        out.expect(finite_order(*types) == ball.size(), "order mismatch on " + describe(n, upper));
      }
    }
  }
  for (Label m = 2; m <= 6; ++m) {
    const Ball ball = enumerate_ball(oracle::from_labels(2, {m}), cap);
    out.expect(ball.saturated && ball.size() == 2 * m, "dihedral order for m=" + std::to_string(m));
  }
  const Ball free = enumerate_ball(oracle::from_labels(2, {kInfinity}), 1000);
  out.expect(!free.saturated, "infinite dihedral saturated");
  out.detail = std::to_string(out.cases) + " connected graphs up to relabelling, " + std::to_string(finite) +
               " finite; dihedral m=2..6 exact";
  return out;
}

/// Random reduced word for a permutation of {0..n} by repeatedly undoing a
/// randomly chosen descent.
CoxWord random_reduced_word(std::vector<int> p, std::mt19937_64& rng) {
  CoxWord reversed;
  for (;;) {
    std::vector<Vertex> descents;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) descents.push_back(static_cast<Vertex>(i));
    }
    if (descents.empty()) break;
    const Vertex s = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    std::swap(p[s], p[s + 1]);
    reversed.push_back(s);
  }
  // p * s_1 ... s_k = id, so p = s_k ... s_1 applied as right actions: the
  // word reading reversed from the end.
  return {reversed.rbegin(), reversed.rend()};
}

Outcome criterion_type_a() {
  Outcome out;
  std::mt19937_64 rng(977);
  std::size_t agree = 0;
  std::size_t equal_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const DefiningGraph g = oracle::type_a(n);
    std::uniform_int_distribution<std::size_t> len(0, 12);
    std::uniform_int_distribution<Vertex> letter(0, static_cast<Vertex>(n - 1));
    CoxWord a(len(rng));
    for (Vertex& x : a) x = letter(rng);
    CoxWord b;
    if (trial % 2 == 0) {
      b = random_reduced_word(oracle::permutation(n, a), rng);
    } else {
      b.resize(len(rng));
      for (Vertex& x : b) x = letter(rng);
    }
    const bool truth = oracle::permutation(n, a) == oracle::permutation(n, b);
    equal_pairs += truth;
    const bool ours = cox_equal(g, a, b);
    agree += ours == truth;
    out.expect(ours == truth, "cox_equal disagrees on A" + std::to_string(n));
  }
  out.cases = 1000;
  std::string orders;
  for (std::size_t n = 1; n <= 5; ++n) {
    const Ball ball = enumerate_ball(oracle::type_a(n), 10'000);
    out.expect(ball.saturated && ball.size() == oracle::factorial(n + 1), "|A" + std::to_string(n) + "|");
    orders += (n > 1 ? "," : "") + std::to_string(ball.size());
  }
  out.detail = std::to_string(agree) + "/1000 agree (" + std::to_string(equal_pairs) +
               " equal pairs); |W| = " + orders;
  return out;
}

Outcome criterion_gamma_corpus() {
  Outcome out;
  const std::vector<std::string> corpus = {"pentad.json", "square3.json", "cone1.json", "tower.json",
                                           "triad.json",  "nocone.json",  "free2.json", "pentad_commuting.json"};
  bool has_empty_v0 = false;
  for (const std::string& name : corpus) {
    const DefiningGraph g = oracle::load(name);
    if (g.size() > 6) continue;
    ++out.cases;
    const GammaPlan p = build_gamma(g);
    has_empty_v0 = has_empty_v0 || p.clique_factor.empty();
    const std::size_t n = p.n();
    bool walks_ok = true;
    for (std::size_t i = 1; i <= p.k(); ++i) {
      VertexSet covered;
      walks_ok = walks_ok && p.walks.walks[i - 1].size() == n + 1 && p.v(i, n + 1) == p.v(i, 1);
      for (std::size_t l = 1; l <= n && walks_ok; ++l) {
        walks_ok = g.label(p.v(i, l), p.v(i, l + 1)) == kInfinity && p.factors[i - 1].contains(p.v(i, l));
        covered.insert(p.v(i, l));
      }
      walks_ok = walks_ok && covered == p.factors[i - 1];
    }
    out.expect(walks_ok, name + ": complement-walk property");
    bool aligned = p.walks.align.size() + 1 == p.k();
    for (const Alignment& a : p.walks.align) {
      const CoxWord tau = p.tau(a.i, a.j);
      aligned = aligned && !tau.empty() && p.v(a.i + 1, a.l) == tau.front() && p.v(a.j + 1, a.l) == tau.back();
      for (std::size_t x = 1; x < a.l; ++x) aligned = aligned && p.v(a.i + 1, x) != tau.front();
    }
    out.expect(aligned, name + ": alignment");
    const Certificate c = hyperplane_schedule(p);
    VertexSet types;
    for (const HyperplaneSym& h : c.schedule) types.insert(h.type);
    out.expect(join_decompose(g).star().subset_of(types), name + ": type coverage");
    CoxWord joined = p.gamma_flat;
    joined.insert(joined.end(), p.gamma_nat.begin(), p.gamma_nat.end());
    out.expect(p.prefix(0).empty() && p.prefix(p.blocks.size()) == p.gamma && p.prefix(p.m() * n) == p.gamma_flat &&
                   joined == p.gamma && p.blocks.size() == (p.m() + p.r()) * n,
               name + ": prefix table endpoints");
    out.expect(plan_to_json(g, build_gamma(g)) == plan_to_json(g, p), name + ": determinism");
    if (name == "pentad.json") {
      out.expect(p.gamma.size() == 26 && p.n() == 4 && p.m() == 1 && p.r() == 2,
                 "pentad golden |gamma|=26, n=4, m=1, r=2");
      out.expect(format_word(g, p.gamma) == "ustvsutvswutvsutvuwstvsutv", "pentad golden gamma word");
    }
  }
  out.expect(has_empty_v0, "corpus lacks a V0 = {} example");
  out.detail = std::to_string(out.cases) + " corpus graphs; pentad |gamma| = 26, n = 4, m = 1, r = 2";
  return out;
}

Outcome criterion_twist() {
  Outcome out;
  const DefiningGraph g = oracle::load("pentad.json");
  const GammaPlan p = build_gamma(g);
  const CoxWord tau = p.tau(0, 1);
  out.expect(format_word(g, tau) == "swu", "tau_{1,2} = swu");
  out.expect(reduced_expressions(g, tau) == std::vector<CoxWord>{tau}, "reduced-expression closure is {swu}");
  const VertexSet u = p.face(p.alignment(0, 1));
  const Ball whole = enumerate_ball(g.induced(u), 1000);
  out.expect(whole.saturated && whole.size() == 24, "|W_U| = 24");
  // Exhaustive products, computed here from the parabolic elements.
  const CoxeterGroup group(g);
  const std::vector<Vertex> members = u.members();
  auto lift = [&](VertexSet part) {
    std::vector<CoxWord> out_words;
    for (const CoxWord& local : whole.words()) {
      CoxWord w;
      for (Vertex v : local) w.push_back(members[v]);
      if (VertexSet::of(w).subset_of(part)) out_words.push_back(w);
    }
    return out_words;
  };
  const auto left = lift(u - VertexSet::single(tau.front()));
  const auto right = lift(u - VertexSet::single(tau.back()));
  std::size_t products = 0;
  bool member = false;
  for (const CoxWord& a : left) {
    for (const CoxWord& b : right) {
      ++products;
      member = member || group.equal(group.multiply(a, b), tau);
    }
  }
  out.expect(products == 36, "36 products");
  out.expect(!member, "swu lies in the product");
  out.expect(in_product_of_parabolics(g, tau, u - VertexSet::single(tau.front()), u - VertexSet::single(tau.back())) ==
                 member,
             "library product check disagrees");
  out.expect(check_twist(g, p, 0, 1).status == CheckStatus::kPass, "twist(1,2) check");
  out.cases = products;
  out.detail = "closure {swu}; " + std::to_string(products) + " products, none equal; |W_U| = " +
               std::to_string(whole.size());
  return out;
}

Outcome criterion_shadow() {
  Outcome out;
  const std::vector<Label> labels = {2, 3, 4, 5, 6, kInfinity};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::vector<Label>> reps;
    for_each_labelling(n, labels, [&](const auto& upper) { reps.insert(canonical(n, upper)); });
    for (const auto& upper : reps) {
      const DefiningGraph g = oracle::from_labels(n, upper);
      const std::uint64_t order = oracle::small_order(g);
      if (order == 0) continue;
      ++out.cases;
      const std::string what = describe(n, upper);
      const JoinDecomposition d = join_decompose(g);
      ShadowOptions options;
      options.cap = 1'000'000;
      const ShadowComplex c = build_shadow(g, d, false, options);
      const ShadowComplex sub = build_shadow(g, d, true, options);
      std::uint64_t expected = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        expected += order / oracle::small_order(g.induced(VertexSet::from_bits(bits)));
      }
      out.expect(c.whole, what + ": not whole");
      out.expect(c.vertices.size() == expected, what + ": vertex count " + std::to_string(c.vertices.size()) +
                                                    " != " + std::to_string(expected));
      for (std::size_t cls = 0; cls < c.class_count(); ++cls) {
        out.expect(components_without_class(c, cls) == std::optional<std::size_t>(2),
                   what + ": class " + std::to_string(cls) + " does not separate into 2");
      }
      for (auto [a, b] : crossing_pairs(c)) {
        const Vertex ta = c.class_type[a];
        const Vertex tb = c.class_type[b];
        out.expect(ta != tb, what + ": same-type crossing");
        out.expect(g.adjacent(ta, tb), what + ": crossing types not adjacent");
      }
      const LinkReport links = links_full_check(c, sub);
      out.expect(links.eligible == c.vertices.size(), what + ": some star incomplete");
      out.expect(links.flag_failures == 0, what + ": link not flag");
      out.expect(links.full_failures == 0, what + ": reduced link not full");
    }
  }
  out.detail = std::to_string(out.cases) + " finite Coxeter groups on <= 3 generators";
  return out;
}

Outcome criterion_verdicts() {
  Outcome out;
  auto status = [](const char* name) { return decide_acyl(oracle::load(name)).status; };
  out.expect(status("free2.json") == AcylStatus::kAcylindricallyHyperbolic, "F2 -> AH");
  out.expect(status("square2.json") == AcylStatus::kNotAcylindricallyHyperbolic, "F2 x F2 -> NotAH");
  out.expect(status("dihedral3.json") == AcylStatus::kNotAcylindricallyHyperbolic, "{s,t} label 3 -> NotAH");
  out.expect(status("pentad.json") == AcylStatus::kAcylindricallyHyperbolic, "pentad -> AH");
  const CenterReport center = center_report(oracle::load("pentad.json"));
  out.expect(center.center_finite && center.trivial == std::optional<bool>(true), "pentad center finite and trivial");
  out.cases = 4;
  out.detail = "F2 AH, F2xF2 NotAH, dihedral NotAH, pentad AH with trivial center";
  return out;
}

Outcome criterion_negative() {
  Outcome out;
  const auto path = (std::filesystem::temp_directory_path() / "artinacyl_acceptance_plan.json").string();
  std::string names;
  for (const corruption::Case& k : corruption::all()) {
    ++out.cases;
    const DefiningGraph g = oracle::load(k.plan_graph);
    const DefiningGraph cert_graph = oracle::load(k.cert_graph);
    GammaPlan p = build_gamma(g);
    k.mutate(g, p);
    const Certificate c = certify(cert_graph, p);
    bool failed = false;
    for (const CheckResult& r : c.checks) failed = failed || (r.name == k.check && r.status == CheckStatus::kFail);
    out.expect(failed, k.check + " did not fail on its counterexample");
    std::ofstream(path) << plan_to_json(g, p);
    cli::RunConfig config;
    config.command = "certify";
    config.input_path = oracle::data_path(k.cert_graph);
    config.plan_path = path;
    const cli::RunResult r = cli::run(config);
    out.expect(r.exit_code == 5, k.check + ": CLI exit " + std::to_string(r.exit_code));
    names += (names.empty() ? "" : ",") + k.check;
  }
  std::filesystem::remove(path);
  out.detail = std::to_string(out.cases) + " checks fail and exit 5: " + names;
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "join decomposition vs complement components", 60, criterion_join},
      {2, "finite-type recognition vs enumeration", 300, criterion_finite_type},
      {3, "Coxeter solver vs permutation oracle", 60, criterion_type_a},
      {4, "gamma well-formedness corpus", 30, criterion_gamma_corpus},
      {5, "twist oracle on the pentad", 1, criterion_twist},
      {6, "shadow-complex laws", 120, criterion_shadow},
      {7, "verdict table", 1, criterion_verdicts},
      {8, "negative-test discipline", 60, criterion_negative},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget;
    const bool pass = out.ok && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s | %s | %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), out.detail.c_str(), seconds, c.budget);
    for (const std::string& f : out.failures) std::printf("    %s\n", f.c_str());
    if (!in_time) std::printf("    over time budget\n");
    std::fflush(stdout);
  }
  return failed;
}
