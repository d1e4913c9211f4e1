#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artinacyl/graph.hpp"

namespace artinacyl {

/// A word in the generators; letters are vertex indices of the ambient graph.
using CoxWord = std::vector<Vertex>;

/// Shortlex-least reduced word of an element of the Coxeter group W.
struct CoxNormalForm {
  CoxWord word;

  friend bool operator==(const CoxNormalForm&, const CoxNormalForm&) = default;
  friend auto operator<=>(const CoxNormalForm&, const CoxNormalForm&) = default;
};

/// Shortlex order: shorter first, then lexicographic on vertex indices.
bool shortlex_less(const CoxWord& a, const CoxWord& b);

struct OracleLimits {
  /// Maximum number of words held in one braid-move closure.
  std::size_t closure_cap = 1'000'000;
  /// Maximum number of elements enumerated for a finite parabolic subgroup.
  std::size_t ball_cap = 1'200'000;
};

/// Defaults, with closure_cap overridden by the ARTINACYL_CAP environment
/// variable when it holds a positive integer.
OracleLimits limits_from_environment();

/// Tits' solution of the word problem: exhaust braid moves, cancel any
/// adjacent equal pair that appears and restart; once the braid closure holds
/// no cancellable word the input is reduced and the shortlex-least member of
/// the closure is returned. Throws ResourceError when a closure exceeds
/// limits.closure_cap.
CoxNormalForm reduce(const DefiningGraph& g, const CoxWord& w, const OracleLimits& limits = {});

bool cox_equal(const DefiningGraph& g, const CoxWord& a, const CoxWord& b,
               const OracleLimits& limits = {});

/// All reduced expressions of the element represented by w, in shortlex order.
std::vector<CoxWord> reduced_expressions(const DefiningGraph& g, const CoxWord& w,
                                         const OracleLimits& limits = {});

/// Generators occurring in any (equivalently every) reduced expression of w.
/// The element lies in W_U iff support(w) is a subset of U.
VertexSet support(const DefiningGraph& g, const CoxWord& w);

/// The Coxeter group of a defining graph, realised through its contragredient
/// reflection representation. An element x is tracked by the vector
/// y_t = height(x^{-1} alpha_t); t is a left descent of x iff y_t < 0, and the
/// sign is decided robustly because root coefficients are 0 or at least 1 in
/// absolute value.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const DefiningGraph& g);

  std::size_t rank() const { return rank_; }

  /// Shortlex normal form, computed by stripping the least left descent.
  CoxWord normal_form(const CoxWord& w) const;
  std::size_t length(const CoxWord& w) const { return normal_form(w).size(); }
  CoxWord multiply(const CoxWord& a, const CoxWord& b) const;
  CoxWord inverse(const CoxWord& w) const;
  bool is_left_descent(const CoxWord& w, Vertex s) const;
  bool is_right_descent(const CoxWord& w, Vertex s) const;
  bool equal(const CoxWord& a, const CoxWord& b) const { return normal_form(a) == normal_form(b); }

  /// Replace y (the vector of x) by the vector of s*x.
  void left_multiply(std::vector<double>& y, Vertex s) const;
  void left_multiply(double* y, Vertex s) const;
  std::vector<double> identity_vector() const { return std::vector<double>(rank_, 1.0); }
  std::vector<double> vector_of(const CoxWord& w) const;

 private:
  std::size_t rank_;
  /// coefficient_[s * rank + t] = 2 cos(pi / m(s,t)), 2 for m = infinity.
  std::vector<double> coefficient_;
};

/// Breadth-first enumeration of W by shortlex normal forms. Elements are kept
/// as a prefix tree: the word of element i is letter(i) followed by the word of
/// parent(i).
class Ball {
 public:
  std::size_t size() const { return letter_.size(); }
  CoxWord word(std::size_t i) const;
  std::vector<CoxWord> words() const;
  std::size_t length(std::size_t i) const { return length_[i]; }

  /// True iff the whole group was enumerated.
  bool saturated = false;
  /// Every element of length <= complete_length is present.
  std::size_t complete_length = 0;

 private:
  friend Ball enumerate_ball(const DefiningGraph& g, std::size_t cap);
  static constexpr std::uint32_t kRoot = UINT32_MAX;
  std::vector<std::uint32_t> parent_;
  std::vector<Vertex> letter_;
  std::vector<std::uint32_t> length_;
};

/// Enumerates W in order of length, stopping after `cap` elements. The last
/// length shell may be partial (its shortlex-least elements are kept).
Ball enumerate_ball(const DefiningGraph& g, std::size_t cap);

/// Decides whether x lies in W_{U1} W_{U2} by enumerating all products.
/// Throws HypothesisError if either parabolic is infinite (fails to saturate
/// within limits.ball_cap).
bool in_product_of_parabolics(const DefiningGraph& g, const CoxWord& x, VertexSet u1,
                              VertexSet u2, const OracleLimits& limits = {});

/// Letters joined without separators when every name is one character,
/// otherwise space-separated.
std::string format_word(const DefiningGraph& g, const CoxWord& w);
/// Inverse of format_word.
CoxWord parse_word(const DefiningGraph& g, std::string_view text);

}  // namespace artinacyl
