#include "artinacyl/cert.hpp"

#include <algorithm>
#include <sstream>

#include "artinacyl/classify.hpp"
#include "artinacyl/error.hpp"
#include "json.hpp"

namespace artinacyl {

using nlohmann::json;

namespace {

namespace cite {
constexpr const char* kWalk =
    "closed covering walks on factor complements: consecutive walk letters are not adjacent, so "
    "consecutive hyperplanes of one family do not cross";
constexpr const char* kCoverage =
    "interleaved separating sequence contains a hyperplane of every type in V_*";
constexpr const char* kBoundary =
    "separating sequence runs from a v_{1,n}-type to a v_{1,1}-type hyperplane";
constexpr const char* kPrefix = "prefix table: gamma(d+1) extends gamma(d) by one lambda block";
constexpr const char* kDecomposition = "join decomposition into V_0 and the factors V_1..V_k";
constexpr const char* kAlignment = "aligned walks: v_{i,l(i,j)} = s_{i,j}, v_{j,l(i,j)} = t_{i,j}, l(i,j) least";
constexpr const char* kPaths = "connecting paths: interior in V_0, consecutive labels finite and > 2";
constexpr const char* kFace = "U_l = V_0 + column l spans a clique containing V_0";
constexpr const char* kNesting = "each lambda block lies in W_{U_l}, so it fixes the coset of U_l";
constexpr const char* kMoves = "each lambda block involves every letter of its column";
constexpr const char* kTwist =
    "twisted blocks: unique reduced expression, no square between consecutive hyperplanes";
constexpr const char* kLetter = "single generators avoid complementary standard parabolics";
constexpr const char* kArtinDisjoint =
    "hyperplane disjointness in the Artin clique-cube complex (certified by citation)";
constexpr const char* kArtinIntersection =
    "intersections of conjugated standard parabolics in Artin groups (certified by citation)";
constexpr const char* kExtrapolated = "single-factor cone: twist-free tour outside the stated construction";
}  // namespace cite

CheckResult make(std::string name, const char* citation, const std::vector<std::string>& failures,
                 const std::string& pass_evidence) {
  CheckResult c{std::move(name), citation, failures.empty() ? CheckStatus::kPass : CheckStatus::kFail,
                pass_evidence};
  if (!failures.empty()) {
    std::string ev;
    const std::size_t shown = std::min<std::size_t>(failures.size(), 5);
    for (std::size_t x = 0; x < shown; ++x) ev += (x ? "; " : "") + failures[x];
    if (failures.size() > shown) ev += "; ... (" + std::to_string(failures.size()) + " total)";
    c.evidence = ev;
  }
  return c;
}

std::size_t column_of(std::size_t x, std::size_t n) { return ((x - 1) % n) + 1; }

std::string pair_text(std::size_t i, std::size_t l) {
  return "(" + std::to_string(i) + "," + std::to_string(l) + ")";
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotChecked: return "not-checked";
  }
  return "not-checked";
}

bool Certificate::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

Certificate hyperplane_schedule(const GammaPlan& plan) {
  Certificate cert;
  cert.extrapolated = plan.extrapolated;
  const std::size_t k = plan.k();
  const std::size_t n = plan.n();
  const std::size_t big_n = (plan.m() + plan.r()) * n;
  const auto last = static_cast<std::int64_t>(2 * big_n);

  auto entry = [&](std::size_t i, std::int64_t d) -> HyperplaneSym {
    if (d == 0) return {i, 0, plan.v(i, n), -1, big_n};
    if (d == last + 1) return {i, d, plan.v(i, 1), 1, 0};
    const auto x = static_cast<std::size_t>((d + 1) / 2);
    const std::size_t prefix = d % 2 == 1 ? x - 1 : x;
    return {i, d, plan.v(i, column_of(x, n)), 0, prefix};
  };

  cert.families.resize(k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::int64_t d = 0; d <= last + 1; ++d) cert.families[i - 1].push_back(entry(i, d));
  }

  const std::size_t flat = 2 * plan.m() * n;
  for (std::size_t d = 1; d <= flat; ++d) {
    cert.schedule.push_back(entry(plan.tree.tour.front() + 1, static_cast<std::int64_t>(d)));
  }
  for (std::size_t a = 0; a + 1 < plan.tree.tour.size(); ++a) {
    const std::size_t from = plan.tree.tour[a];
    const std::size_t to = plan.tree.tour[a + 1];
    const std::size_t twist = from == to ? n + 1 : plan.alignment(from, to);
    const std::size_t base = flat + 2 * a * n;
    for (std::size_t off = 1; off <= 2 * n; ++off) {
      const std::size_t family = off + 1 <= 2 * twist ? from : to;
      cert.schedule.push_back(entry(family + 1, static_cast<std::int64_t>(base + off)));
    }
  }

  cert.track.push_back({0, 0, plan.clique_factor});
  for (std::size_t x = 1; x <= big_n; ++x) {
    cert.track.push_back({2 * x - 1, x - 1, plan.face(column_of(x, n))});
    cert.track.push_back({2 * x, x, plan.clique_factor});
  }
  return cert;
}

Certificate check_schedule(Certificate cert, const GammaPlan& plan, const DefiningGraph& g) {
  const std::size_t k = plan.k();
  const std::size_t n = plan.n();
  const std::size_t big_n = (plan.m() + plan.r()) * n;

  {
    std::vector<std::string> bad;
    const JoinDecomposition d = join_decompose(g);
    if (d.clique_factor != plan.clique_factor) bad.push_back("clique factor differs from the graph's");
    std::vector<VertexSet> ours = plan.factors;
    std::vector<VertexSet> theirs = d.factors;
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    if (ours != theirs) bad.push_back("factor sets differ from the graph's join decomposition");
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t l = 1; l <= n + 1; ++l) {
        if (!plan.factors[i - 1].contains(plan.v(i, l))) {
          bad.push_back("v" + pair_text(i, l) + "=" + g.name(plan.v(i, l)) + " lies outside V_" +
                        std::to_string(i));
        }
      }
    }
    cert.checks.push_back(make("decomposition", cite::kDecomposition, bad,
                               std::to_string(k) + " factors, |V_0| = " +
                                   std::to_string(plan.clique_factor.size())));
  }

  {  // (a)
    std::vector<std::string> bad;
    for (const auto& family : cert.families) {
      for (std::size_t x = 0; x + 1 < family.size(); ++x) {
        const Vertex a = family[x].type;
        const Vertex b = family[x + 1].type;
        if (a != b && g.adjacent(a, b)) {
          bad.push_back("family " + std::to_string(family[x].family) + ", d=" +
                        std::to_string(family[x].d) + ": types " + g.name(a) + " and " + g.name(b) +
                        " are adjacent");
        }
      }
    }
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t l = 1; l <= n; ++l) {
        if (plan.v(i, l) == plan.v(i, l + 1) || g.adjacent(plan.v(i, l), plan.v(i, l + 1))) {
          bad.push_back("walk step " + pair_text(i, l) + ": " + g.name(plan.v(i, l)) + " -> " +
                        g.name(plan.v(i, l + 1)) + " is not a complement edge");
        }
      }
    }
    cert.checks.push_back(make("walk-complement", cite::kWalk, bad,
                               std::to_string(k) + " families, " +
                                   std::to_string(2 * big_n + 1) + " consecutive pairs each"));
  }

  {  // (b)
    std::vector<std::string> bad;
    VertexSet seen;
    for (const HyperplaneSym& h : cert.schedule) seen.insert(h.type);
    for (Vertex v : join_decompose(g).star()) {
      if (!seen.contains(v)) bad.push_back("no hyperplane of type " + g.name(v));
    }
    cert.checks.push_back(make("type-coverage", cite::kCoverage, bad,
                               "all " + std::to_string(seen.size()) + " types of V_* present in " +
                                   std::to_string(cert.schedule.size()) + " entries"));
  }

  {  // (c)
    std::vector<std::string> bad;
    const auto& first = cert.families.front();
    if (first.front().type != plan.v(1, n)) bad.push_back("J_{1,0} is not of type v_{1,n}");
    if (first.back().type != plan.v(1, 1)) bad.push_back("J_{1,2(m+r)n+1} is not of type v_{1,1}");
    if (first.front().type != first[first.size() - 2].type) {
      bad.push_back("J_{1,0} does not repeat the type of J_{1,2(m+r)n}");
    }
    if (first.back().type != first[1].type) bad.push_back("J_{1,2(m+r)n+1} does not repeat the type of J_{1,1}");
    if (plan.tree.tour.front() != 0 || plan.tree.tour.back() != 0) bad.push_back("tour does not start and end at V_1");
    if (!cert.schedule.empty() && (cert.schedule.front().family != 1 || cert.schedule.back().family != 1)) {
      bad.push_back("interleaved sequence does not start and end in family 1");
    }
    for (std::size_t i = 1; i <= k; ++i) {
      if (plan.v(i, n + 1) != plan.v(i, 1)) bad.push_back("walk " + std::to_string(i) + " is not closed");
    }
    cert.checks.push_back(make("boundary-types", cite::kBoundary, bad,
                               "J_{1,0}: " + g.name(plan.v(1, n)) + ", J_{1,2(m+r)n+1}: " +
                                   g.name(plan.v(1, 1))));
  }

  {  // (d)
    std::vector<std::string> bad;
    GammaPlan fresh = plan;
    assemble_gamma(fresh);
    if (plan.blocks.size() != big_n) {
      bad.push_back("block count " + std::to_string(plan.blocks.size()) + " != (m+r)n = " +
                    std::to_string(big_n));
    }
    for (std::size_t x = 0; x < std::min(plan.blocks.size(), fresh.blocks.size()); ++x) {
      if (plan.blocks[x] != fresh.blocks[x]) {
        bad.push_back("gamma(" + std::to_string(x + 1) + ") extends gamma(" + std::to_string(x) +
                      ") by " + format_word(g, plan.blocks[x]) + ", expected " +
                      format_word(g, fresh.blocks[x]));
      }
    }
    CoxWord joined = plan.gamma_flat;
    joined.insert(joined.end(), plan.gamma_nat.begin(), plan.gamma_nat.end());
    if (joined != plan.gamma) bad.push_back("gamma != gamma_flat gamma_nat");
    if (plan.gamma_flat != fresh.gamma_flat) bad.push_back("gamma_flat differs from its lambda blocks");
    if (plan.gamma_nat != fresh.gamma_nat) bad.push_back("gamma_nat differs from its lambda blocks");
    if (plan.prefix(big_n) != plan.gamma) bad.push_back("gamma((m+r)n) != gamma");
    if (plan.prefix(plan.m() * n) != plan.gamma_flat) bad.push_back("gamma(mn) != gamma_flat");
    cert.checks.push_back(make("prefix-increments", cite::kPrefix, bad,
                               std::to_string(big_n) + " blocks, |gamma| = " +
                                   std::to_string(plan.gamma.size())));
  }

  {
    std::vector<std::string> bad;
    for (std::size_t j = 1; j < k; ++j) {
      const std::size_t i = plan.tree.parent[j];
      const CoxWord tau = plan.tau(i, j);
      const std::size_t l = plan.alignment(i, j);
      const std::string edge = pair_text(i + 1, j + 1);
      if (tau.empty() || l == 0) {
        bad.push_back("tree edge " + edge + " lacks a path or alignment");
        continue;
      }
      if (plan.v(i + 1, l) != tau.front()) bad.push_back("v_{i,l(i,j)} != s_{i,j} on " + edge);
      if (plan.v(j + 1, l) != tau.back()) bad.push_back("v_{j,l(i,j)} != t_{i,j} on " + edge);
      for (std::size_t x = 1; x < l; ++x) {
        if (plan.v(i + 1, x) == tau.front()) {
          bad.push_back("l(i,j) is not the least position of s_{i,j} on " + edge);
          break;
        }
      }
    }
    cert.checks.push_back(make("alignment", cite::kAlignment, bad,
                               std::to_string(k - 1) + " tree edges aligned"));
  }

  {
    std::vector<std::string> bad;
    for (const ConnectingPath& p : plan.paths) {
      const std::string edge = pair_text(p.i + 1, p.j + 1);
      if (!plan.factors[p.i].contains(p.vertices.front()) || !plan.factors[p.j].contains(p.vertices.back())) {
        bad.push_back("path " + edge + " has endpoints outside V_i, V_j");
      }
      for (std::size_t x = 1; x + 1 < p.vertices.size(); ++x) {
        if (!plan.clique_factor.contains(p.vertices[x])) {
          bad.push_back("path " + edge + " has interior letter " + g.name(p.vertices[x]) + " outside V_0");
        }
      }
      for (std::size_t x = 0; x + 1 < p.vertices.size(); ++x) {
        if (!g.braided(p.vertices[x], p.vertices[x + 1])) {
          bad.push_back("path " + edge + " step " + g.name(p.vertices[x]) + "-" +
                        g.name(p.vertices[x + 1]) + " has label not in (2, inf)");
        }
      }
    }
    cert.checks.push_back(make("connecting-paths", cite::kPaths, bad,
                               std::to_string(plan.paths.size()) + " paths"));
  }

  {
    std::vector<std::string> bad;
    for (std::size_t l = 1; l <= n; ++l) {
      const VertexSet u = plan.face(l);
      if (u.size() != plan.clique_factor.size() + k) bad.push_back("U_" + std::to_string(l) + " repeats a letter");
      if (!g.spans_clique(u)) bad.push_back("U_" + std::to_string(l) + " does not span a clique");
    }
    cert.checks.push_back(make("face-clique", cite::kFace, bad, std::to_string(n) + " faces"));
  }

  {
    std::vector<std::string> nest_bad;
    std::vector<std::string> move_bad;
    const CoxeterGroup group(g);
    for (std::size_t x = 1; x <= std::min(big_n, plan.blocks.size()); ++x) {
      const std::size_t l = column_of(x, n);
      const VertexSet sup = VertexSet::of(group.normal_form(plan.blocks[x - 1]));
      if (!sup.subset_of(plan.face(l))) {
        nest_bad.push_back("block " + std::to_string(x) + " = " + format_word(g, plan.blocks[x - 1]) +
                           " leaves W_{U_" + std::to_string(l) + "}");
      }
      for (std::size_t i = 1; i <= k; ++i) {
        if (!sup.contains(plan.v(i, l))) {
          move_bad.push_back("block " + std::to_string(x) + " misses v" + pair_text(i, l));
        }
      }
    }
    cert.checks.push_back(make("shadow-nesting", cite::kNesting, nest_bad,
                               "support of every block inside its face"));
    cert.checks.push_back(make("face-moves", cite::kMoves, move_bad,
                               "every block's support contains its column"));
  }
  return cert;
}

CheckResult check_twist(const DefiningGraph& g, const GammaPlan& plan, std::size_t i, std::size_t j,
                        const OracleLimits& limits) {
  const std::string name = "twist" + pair_text(i + 1, j + 1);
  const CoxWord tau = plan.tau(i, j);
  const std::size_t l = plan.alignment(i, j);
  if (tau.empty() || l == 0) {
    return {name, cite::kTwist, CheckStatus::kFail, "no connecting path or alignment for this edge"};
  }
  std::vector<std::string> bad;
  const std::vector<CoxWord> expressions = reduced_expressions(g, tau, limits);
  if (expressions.size() != 1 || expressions.front() != tau) {
    std::string listed;
    for (std::size_t x = 0; x < std::min<std::size_t>(expressions.size(), 4); ++x) {
      listed += (x ? ", " : "") + format_word(g, expressions[x]);
    }
    bad.push_back("reduced expressions of " + format_word(g, tau) + ": {" + listed +
                  (expressions.size() > 4 ? ", ..." : "") + "}");
  }
  if (VertexSet::of(tau).size() != tau.size()) bad.push_back("letters of tau repeat");
  for (std::size_t x = 0; x + 1 < tau.size(); ++x) {
    if (!g.braided(tau[x], tau[x + 1])) {
      bad.push_back("label(" + g.name(tau[x]) + "," + g.name(tau[x + 1]) + ") is not in (2, inf)");
    }
  }
  std::string evidence = "unique reduced expression " + format_word(g, tau);

  const VertexSet u = plan.face(l);
  const Vertex s = tau.front();
  const Vertex t = tau.back();
  const auto types = finite_type_recognize(g.induced(u));
  CheckStatus product_status = CheckStatus::kNotChecked;
  if (types) {
    const VertexSet u1 = u - VertexSet::single(s);
    const VertexSet u2 = u - VertexSet::single(t);
    const auto o1 = finite_type_recognize(g.induced(u1));
    const auto o2 = finite_type_recognize(g.induced(u2));
    const std::uint64_t products = finite_order(*o1) * finite_order(*o2);
    if (in_product_of_parabolics(g, tau, u1, u2, limits)) {
      bad.push_back(format_word(g, tau) + " lies in W_{U-" + g.name(s) + "} W_{U-" + g.name(t) + "}");
    } else {
      evidence += "; not in W_{U-" + g.name(s) + "} W_{U-" + g.name(t) + "} (" +
                  std::to_string(products) + " products, |W_U| = " +
                  std::to_string(finite_order(*types)) + ")";
    }
    product_status = CheckStatus::kPass;
  } else {
    evidence += "; product membership not-checked: W_U is infinite";
  }
  if (!bad.empty()) return make(name, cite::kTwist, bad, evidence);
  return {name, cite::kTwist, product_status == CheckStatus::kPass ? CheckStatus::kPass : CheckStatus::kNotChecked,
          evidence};
}

CheckResult check_letter_nonmembership(const DefiningGraph& g, const GammaPlan& plan, std::size_t i,
                                       std::size_t l) {
  const std::string name = "letter-nonmembership" + pair_text(i, l);
  const Vertex v = plan.v(i, l);
  std::vector<Vertex> rest = plan.clique_factor.members();
  for (std::size_t x = 1; x <= plan.k(); ++x) rest.push_back(plan.v(x, l));
  const auto it = std::find(rest.begin(), rest.end(), v);
  if (it == rest.end()) return {name, cite::kLetter, CheckStatus::kFail, g.name(v) + " is not in U_l"};
  rest.erase(it);
  const VertexSet remaining = VertexSet::of(rest);
  const VertexSet sup = support(g, {v});
  if (sup.subset_of(remaining)) {
    return {name, cite::kLetter, CheckStatus::kFail,
            g.name(v) + " lies in W_{U_" + std::to_string(l) + " - " + g.name(v) + "}"};
  }
  return {name, cite::kLetter, CheckStatus::kPass, "support(" + g.name(v) + ") = {" + g.name(v) + "}"};
}

Certificate certify(const DefiningGraph& g, const GammaPlan& plan, const OracleLimits& limits) {
  Certificate cert = check_schedule(hyperplane_schedule(plan), plan, g);
  for (std::size_t j = 1; j < plan.k(); ++j) {
    const std::size_t i = plan.tree.parent[j];
    cert.checks.push_back(check_twist(g, plan, i, j, limits));
    cert.checks.push_back(check_twist(g, plan, j, i, limits));
  }
  {
    std::vector<std::string> bad;
    std::size_t count = 0;
    for (std::size_t i = 1; i <= plan.k(); ++i) {
      for (std::size_t l = 1; l <= plan.n(); ++l, ++count) {
        const CheckResult c = check_letter_nonmembership(g, plan, i, l);
        if (c.status == CheckStatus::kFail) bad.push_back(pair_text(i, l) + ": " + c.evidence);
      }
    }
    cert.checks.push_back(make("letter-nonmembership", cite::kLetter, bad,
                               std::to_string(count) + " letters checked by support"));
  }
  cert.checks.push_back({"artin-hyperplane-disjointness", cite::kArtinDisjoint, CheckStatus::kNotChecked,
                         "Artin-level statement; only its Coxeter-shadow analogues are checked above"});
  cert.checks.push_back({"artin-parabolic-intersection", cite::kArtinIntersection,
                         CheckStatus::kNotChecked,
                         "no finite oracle for the Artin group; the Coxeter analogue is a different statement"});
  if (plan.extrapolated) {
    cert.checks.push_back({"extrapolated-branch", cite::kExtrapolated, CheckStatus::kNotChecked,
                           "single factor: gamma_nat is lambda_1...lambda_n with no twist"});
  }
  return cert;
}

std::string certificate_to_json(const DefiningGraph& g, const GammaPlan& plan, const Certificate& cert) {
  auto sym = [&](const HyperplaneSym& h) {
    return json{{"family", h.family},
                {"d", h.d},
                {"type", g.name(h.type)},
                {"gamma_power", h.gamma_power},
                {"prefix", format_word(g, plan.prefix(h.prefix))},
                {"prefix_index", h.prefix}};
  };
  auto names = [&](VertexSet s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(g.name(v));
    return out;
  };
  json doc;
  doc["overall"] = cert.passed() ? "pass" : "fail";
  doc["extrapolated"] = cert.extrapolated;
  doc["gamma"] = format_word(g, plan.gamma);
  doc["schedule_length"] = cert.schedule.size();
  doc["schedule"] = json::array();
  for (const HyperplaneSym& h : cert.schedule) doc["schedule"].push_back(sym(h));
  doc["families"] = json::array();
  for (const auto& family : cert.families) {
    json seq = json::array();
    for (const HyperplaneSym& h : family) seq.push_back(sym(h));
    doc["families"].push_back({{"family", family.front().family}, {"sequence", seq}});
  }
  doc["cube_track"] = json::array();
  for (const TrackVertex& w : cert.track) {
    json item{{"d", w.d},
              {"w", {{"prefix", format_word(g, plan.prefix(w.prefix))}, {"face", names(w.face)}}}};
    if (w.d > 0) item["cube"] = {{"from", w.d - 1}, {"to", w.d}};
    doc["cube_track"].push_back(item);
  }
  doc["checks"] = json::array();
  for (const CheckResult& c : cert.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"citation", c.citation},
                             {"status", to_string(c.status)},
                             {"evidence", c.evidence}});
  }
  return doc.dump(2);
}

}  // namespace artinacyl
