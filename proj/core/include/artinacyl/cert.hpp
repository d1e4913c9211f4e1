#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artinacyl/coxeter.hpp"
#include "artinacyl/graph.hpp"
#include "artinacyl/wpd.hpp"

namespace artinacyl {

enum class CheckStatus { kPass, kFail, kNotChecked };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  std::string citation;
  CheckStatus status;
  std::string evidence;
};

/// J_{i,d} = gamma^power gamma(prefix) H_{i,l}, of type v_{i,l}.
struct HyperplaneSym {
  /// 1-based factor family i.
  std::size_t family;
  std::int64_t d;
  Vertex type;
  std::int64_t gamma_power;
  /// Index into the prefix table gamma(0..(m+r)n).
  std::size_t prefix;

  friend bool operator==(const HyperplaneSym&, const HyperplaneSym&) = default;
};

/// w_d = gamma(prefix) A_face; the cube K_d spans w_{d-1} and w_d.
struct TrackVertex {
  std::size_t d;
  std::size_t prefix;
  VertexSet face;
};

struct Certificate {
  /// Interleaved sequence J_{i_1,1}, ..., J_{i_{r+1},2(m+r)n}.
  std::vector<HyperplaneSym> schedule;
  /// families[i-1] = J_{i,0}, ..., J_{i,2(m+r)n+1}.
  std::vector<std::vector<HyperplaneSym>> families;
  /// w_0, ..., w_{2(m+r)n}.
  std::vector<TrackVertex> track;
  std::vector<CheckResult> checks;
  bool extrapolated = false;

  /// No check failed.
  bool passed() const;
};

/// Symbolic schedule, families and cube track for a plan.
Certificate hyperplane_schedule(const GammaPlan& plan);

/// Appends the schedule checks: walk complement steps, type coverage of V_*,
/// boundary types, prefix increments, plus the structural checks of the plan
/// (decomposition, alignment, connecting paths, faces, shadow nesting).
Certificate check_schedule(Certificate cert, const GammaPlan& plan, const DefiningGraph& g);

/// Twist conditions for tau_{i,j} (0-based tree edge, either direction) in
/// the Coxeter quotient: unique reduced expression with distinct letters and
/// consecutive labels > 2, and tau not in W_{U-s} W_{U-t} when W_U is finite.
CheckResult check_twist(const DefiningGraph& g, const GammaPlan& plan, std::size_t i,
                        std::size_t j, const OracleLimits& limits = {});

/// v_{i,l} is not in W_{U_l - v_{i,l}} (1-based i, l). U_l is taken as the
/// multiset V_0 + column l, so a letter listed twice is still present after
/// one removal and the check fails.
CheckResult check_letter_nonmembership(const DefiningGraph& g, const GammaPlan& plan,
                                       std::size_t i, std::size_t l);

/// Schedule plus every check in citation order, including the Artin-level
/// claims marked not-checked.
Certificate certify(const DefiningGraph& g, const GammaPlan& plan, const OracleLimits& limits = {});

std::string certificate_to_json(const DefiningGraph& g, const GammaPlan& plan,
                                const Certificate& cert);

}  // namespace artinacyl
