#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "artinacyl/cert.hpp"
#include "artinacyl/classify.hpp"
#include "artinacyl/error.hpp"
#include "artinacyl/graph.hpp"
#include "artinacyl/report.hpp"
#include "artinacyl/shadow.hpp"
#include "artinacyl/wpd.hpp"
#include "json.hpp"

namespace artinacyl::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error(ErrorKind::kUsage, message) {}
};

class CheckFailed : public Error {
 public:
  explicit CheckFailed(const std::string& message) : Error(ErrorKind::kCheckFailed, message) {}
};

std::string read_file(const std::string& path, ErrorKind missing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(missing, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string wrap(const std::string& input, const json& result) {
  json doc;
  doc["meta"] = {{"tool", kToolName}, {"version", kVersion}, {"input_fnv1a64", fnv1a64(input)}};
  doc["result"] = result;
  return doc.dump(2) + "\n";
}

OracleLimits limits_for(const RunConfig& config) {
  OracleLimits limits = limits_from_environment();
  if (config.cap) limits.closure_cap = *config.cap;
  return limits;
}

json shadow_checks(const DefiningGraph& g, const ShadowComplex& full, const ShadowComplex& reduced) {
  const HyperplaneReport h = hyperplane_report(g, full);
  const LinkReport links = links_full_check(full, reduced);
  json doc;
  doc["label"] = "shadow: statements about the Coxeter coset complex, not the Artin complex";
  doc["hyperplanes"] = {{"classes", h.classes},
                        {"separation_failures", h.conclusive ? json(h.separation_failures) : json("inconclusive")},
                        {"same_type_crossings", h.same_type_crossings},
                        {"non_adjacent_crossings", h.non_adjacent_crossings}};
  doc["links"] = {{"eligible_vertices", links.eligible},
                  {"flag_failures", links.flag_failures},
                  {"full_failures", links.full_failures},
                  {"conclusive", links.conclusive},
                  {"failures", links.failures}};
  doc["reduced_components"] = skeleton_components(reduced);
  doc["whole"] = full.whole;
  doc["ball_complete_radius"] = full.ball_complete_radius;
  const bool failed = (h.conclusive && h.separation_failures > 0) || h.same_type_crossings > 0 ||
                      h.non_adjacent_crossings > 0 || links.flag_failures > 0 || links.full_failures > 0 ||
                      skeleton_components(reduced) != 1;
  doc["status"] = failed ? "fail" : "pass";
  return doc;
}

std::string execute(const RunConfig& config, bool& check_failed) {
  static const char* const kCommands[] = {"analyze", "classify", "gamma", "certify", "shadow", "export"};
  if (std::find(std::begin(kCommands), std::end(kCommands), config.command) == std::end(kCommands)) {
    throw UsageError("unknown command \"" + config.command + "\"");
  }
  if (config.format != "json" && config.format != "dot") {
    throw UsageError("--format must be json or dot");
  }
  if (config.cap && *config.cap == 0) throw UsageError("--cap must be positive");
  if (config.input_path.empty()) throw UsageError("an input file is required");

  const std::string input = read_file(config.input_path, ErrorKind::kUsage);
  const DefiningGraph g = parse_defining_graph(input);
  const OracleLimits limits = limits_for(config);

  if (config.command == "analyze") return wrap(input, json::parse(analysis_to_json(g)));
  if (config.command == "classify") return wrap(input, json::parse(classification_to_json(classify(g))));
  if (config.command == "gamma") return wrap(input, json::parse(plan_to_json(g, build_gamma(g))));
  if (config.command == "certify") {
    const GammaPlan plan = config.plan_path
                               ? plan_from_json(g, read_file(*config.plan_path, ErrorKind::kUsage))
                               : build_gamma(g);
    const Certificate cert = certify(g, plan, limits);
    check_failed = !cert.passed();
    return wrap(input, json::parse(certificate_to_json(g, plan, cert)));
  }
  if (config.command == "shadow") {
    const JoinDecomposition d = join_decompose(g);
    ShadowOptions options;
    if (config.cap) {
      options.cap = *config.cap;
    } else if (std::getenv("ARTINACYL_CAP")) {
      options.cap = std::min<std::size_t>(limits.closure_cap, options.cap);
    }
    options.radius = config.radius;
    const ShadowComplex full = build_shadow(g, d, false, options);
    const ShadowComplex reduced = build_shadow(g, d, true, options);
    const ShadowComplex& shown = config.reduced ? reduced : full;
    if (config.format == "dot") return shadow_to_dot(g, shown);
    const json checks = shadow_checks(g, full, reduced);
    check_failed = checks["status"] == "fail";
    return wrap(input, {{"complex", json::parse(shadow_to_json(g, shown))}, {"checks", checks}});
  }
  // export
  DotView view = DotView::kDefining;
  if (config.which == "complement") {
    view = DotView::kComplement;
  } else if (config.which == "coxeter") {
    view = DotView::kCoxeter;
  } else if (config.which != "defining") {
    throw UsageError("--which must be defining, complement or coxeter");
  }
  if (config.format == "json") {
    return wrap(input, {{"graph", json::parse(to_json(g))}, {"derived", json::parse(derived_to_json(g))}});
  }
  return to_dot(g, view);
}

}  // namespace

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    bool check_failed = false;
    result.output = execute(config, check_failed);
    if (config.output_path) {
      std::ofstream out(*config.output_path, std::ios::binary);
      if (!out) throw UsageError("cannot write " + *config.output_path);
      out << result.output;
    }
    if (check_failed) throw CheckFailed(config.command + ": at least one check failed");
  } catch (const Error& e) {
    result.exit_code = e.exit_code();
    result.error = "ERR:" + std::to_string(e.exit_code()) + ": " + e.what();
  } catch (const std::exception& e) {
    result.exit_code = static_cast<int>(ErrorKind::kInternal);
    result.error = "ERR:" + std::to_string(result.exit_code) + ": " + e.what();
  }
  for (char& c : result.error) {
    if (c == '\n') c = ' ';
  }
  return result;
}

}  // namespace artinacyl::cli
