#include "artinacyl/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numbers>
#include <optional>
#include <unordered_set>

#include "artinacyl/error.hpp"

namespace artinacyl {

bool shortlex_less(const CoxWord& a, const CoxWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

OracleLimits limits_from_environment() {
  OracleLimits limits;
  if (const char* raw = std::getenv("ARTINACYL_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) limits.closure_cap = value;
  }
  return limits;
}

namespace {

// One byte per letter; graphs are limited to kMaxVertices letters.
using Packed = std::string;

Packed pack(const DefiningGraph& g, const CoxWord& w) {
  Packed p;
  p.reserve(w.size());
  for (Vertex v : w) {
    if (v >= g.size()) throw ParseError("word letter " + std::to_string(v) + " is not a vertex");
    p.push_back(static_cast<char>(v));
  }
  return p;
}

CoxWord unpack(const Packed& p) {
  CoxWord w;
  w.reserve(p.size());
  for (char c : p) w.push_back(static_cast<unsigned char>(c));
  return w;
}

// Cancels adjacent equal letters until none remain (s s = 1).
Packed cancel_adjacent(const Packed& w) {
  Packed out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == c) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::optional<std::size_t> adjacent_pair(const Packed& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return i;
  }
  return std::nullopt;
}

// Calls f on every word obtained from w by one braid move.
template <typename F>
void for_each_braid_move(const DefiningGraph& g, const Packed& w, F&& f) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const char a = w[i];
    const char b = w[i + 1];
    if (a == b) continue;
    const Label m = g.label(static_cast<unsigned char>(a), static_cast<unsigned char>(b));
    if (m == kInfinity || i + m > w.size()) continue;
    bool alternating = true;
    for (std::size_t k = 2; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 ? b : a);
    if (!alternating) continue;
    Packed moved = w;
    for (std::size_t k = 0; k < m; ++k) moved[i + k] = k % 2 ? a : b;
    f(std::move(moved));
  }
}

struct Closure {
  std::optional<Packed> cancellable;
  std::vector<Packed> words;
};

Closure braid_closure(const DefiningGraph& g, const Packed& start, std::size_t cap,
                      bool stop_on_cancellable) {
  Closure out;
  std::unordered_set<Packed> seen{start};
  std::deque<Packed> queue{start};
  while (!queue.empty()) {
    Packed w = std::move(queue.front());
    queue.pop_front();
    bool stop = false;
    for_each_braid_move(g, w, [&](Packed moved) {
      if (stop || seen.contains(moved)) return;
      if (seen.size() >= cap) {
        throw ResourceError("braid-move closure exceeded cap of " + std::to_string(cap) + " words");
      }
      if (stop_on_cancellable && adjacent_pair(moved)) {
        out.cancellable = moved;
        stop = true;
        return;
      }
      seen.insert(moved);
      queue.push_back(std::move(moved));
    });
    if (stop) return out;
    out.words.push_back(std::move(w));
  }
  return out;
}

Packed reduce_packed(const DefiningGraph& g, const Packed& w, const OracleLimits& limits) {
  Packed current = cancel_adjacent(w);
  for (;;) {
    Closure c = braid_closure(g, current, limits.closure_cap, true);
    if (c.cancellable) {
      Packed next = *c.cancellable;
      const std::size_t i = *adjacent_pair(next);
      next.erase(i, 2);
      current = cancel_adjacent(next);
      continue;
    }
    return *std::min_element(c.words.begin(), c.words.end());
  }
}

constexpr double kMinMagnitude = 0.5;
constexpr double kMaxMagnitude = 4503599627370496.0;  // 2^52

}  // namespace

CoxNormalForm reduce(const DefiningGraph& g, const CoxWord& w, const OracleLimits& limits) {
  return {unpack(reduce_packed(g, pack(g, w), limits))};
}

bool cox_equal(const DefiningGraph& g, const CoxWord& a, const CoxWord& b,
               const OracleLimits& limits) {
  return reduce(g, a, limits) == reduce(g, b, limits);
}

std::vector<CoxWord> reduced_expressions(const DefiningGraph& g, const CoxWord& w,
                                         const OracleLimits& limits) {
  const Packed reduced = reduce_packed(g, pack(g, w), limits);
  Closure c = braid_closure(g, reduced, limits.closure_cap, false);
  std::sort(c.words.begin(), c.words.end());
  std::vector<CoxWord> out;
  out.reserve(c.words.size());
  for (const Packed& p : c.words) out.push_back(unpack(p));
  return out;
}

VertexSet support(const DefiningGraph& g, const CoxWord& w) {
  return VertexSet::of(CoxeterGroup(g).normal_form(w));
}

CoxeterGroup::CoxeterGroup(const DefiningGraph& g) : rank_(g.size()), coefficient_(rank_ * rank_) {
  for (Vertex s = 0; s < rank_; ++s) {
    for (Vertex t = 0; t < rank_; ++t) {
      if (s == t) continue;
      const Label m = g.label(s, t);
      coefficient_[s * rank_ + t] =
          m == kInfinity ? 2.0 : 2.0 * std::cos(std::numbers::pi / static_cast<double>(m));
    }
  }
}

void CoxeterGroup::left_multiply(std::vector<double>& y, Vertex s) const { left_multiply(y.data(), s); }

void CoxeterGroup::left_multiply(double* y, Vertex s) const {
  const double ys = y[s];
  const double* c = &coefficient_[s * rank_];
  for (std::size_t t = 0; t < rank_; ++t) {
    if (t == s) continue;
    y[t] += c[t] * ys;
    const double magnitude = std::fabs(y[t]);
    if (magnitude > kMaxMagnitude) {
      throw ResourceError("reflection representation exceeded exact double range");
    }
    if (magnitude < kMinMagnitude) {
      throw InternalError("root height collapsed below 1; sign test unreliable");
    }
  }
  y[s] = -ys;
}

std::vector<double> CoxeterGroup::vector_of(const CoxWord& w) const {
  std::vector<double> y = identity_vector();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it >= rank_) throw ParseError("word letter " + std::to_string(*it) + " is not a vertex");
    left_multiply(y, *it);
  }
  return y;
}

CoxWord CoxeterGroup::normal_form(const CoxWord& w) const {
  std::vector<double> y = vector_of(w);
  CoxWord out;
  for (;;) {
    Vertex t = 0;
    while (t < rank_ && y[t] > 0) ++t;
    if (t == rank_) return out;
    out.push_back(t);
    left_multiply(y, t);
  }
}

CoxWord CoxeterGroup::multiply(const CoxWord& a, const CoxWord& b) const {
  CoxWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(w);
}

CoxWord CoxeterGroup::inverse(const CoxWord& w) const {
  return normal_form(CoxWord(w.rbegin(), w.rend()));
}

bool CoxeterGroup::is_left_descent(const CoxWord& w, Vertex s) const { return vector_of(w)[s] < 0; }

bool CoxeterGroup::is_right_descent(const CoxWord& w, Vertex s) const {
  return vector_of(CoxWord(w.rbegin(), w.rend()))[s] < 0;
}

CoxWord Ball::word(std::size_t i) const {
  CoxWord w;
  for (std::uint32_t at = static_cast<std::uint32_t>(i); parent_[at] != kRoot; at = parent_[at]) {
    w.push_back(letter_[at]);
  }
  return w;
}

std::vector<CoxWord> Ball::words() const {
  std::vector<CoxWord> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(word(i));
  return out;
}

Ball enumerate_ball(const DefiningGraph& g, std::size_t cap) {
  if (cap == 0) throw ParseError("enumerate_ball: cap must be at least 1");
  const CoxeterGroup group(g);
  const std::size_t n = group.rank();

  Ball ball;
  ball.parent_.push_back(Ball::kRoot);
  ball.letter_.push_back(0);
  ball.length_.push_back(0);

  std::vector<double> layer = group.identity_vector();
  std::size_t layer_begin = 0;
  std::size_t length = 0;
  std::vector<double> next;
  const std::size_t reserve = std::min<std::size_t>(cap, 1U << 16);
  ball.parent_.reserve(reserve);
  ball.letter_.reserve(reserve);
  ball.length_.reserve(reserve);

  for (;;) {
    const std::size_t layer_end = ball.size();
    next.clear();
    // Child s*x has normal form s.NF(x) exactly when s is an ascent of x and
    // no smaller generator is a left descent of s*x. Iterating s outermost
    // keeps each shell in shortlex order.
    for (Vertex s = 0; s < n; ++s) {
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        const double* parent = &layer[(i - layer_begin) * n];
        if (parent[s] < 0) continue;
        const std::size_t at = next.size();
        next.insert(next.end(), parent, parent + n);
        double* y = next.data() + at;
        group.left_multiply(y, s);
        bool least = true;
        for (Vertex t = 0; t < s && least; ++t) least = y[t] > 0;
        if (!least) {
          next.resize(at);
          continue;
        }
        if (ball.size() >= cap) {
          ball.saturated = false;
          ball.complete_length = length;
          return ball;
        }
        ball.parent_.push_back(static_cast<std::uint32_t>(i));
        ball.letter_.push_back(s);
        ball.length_.push_back(static_cast<std::uint32_t>(length + 1));
      }
    }
    if (next.empty()) {
      ball.saturated = true;
      ball.complete_length = length;
      return ball;
    }
    layer.swap(next);
    layer_begin = layer_end;
    ++length;
  }
}

bool in_product_of_parabolics(const DefiningGraph& g, const CoxWord& x, VertexSet u1,
                              VertexSet u2, const OracleLimits& limits) {
  auto elements = [&](VertexSet u) {
    const Ball ball = enumerate_ball(g.induced(u), limits.ball_cap);
    if (!ball.saturated) {
      throw HypothesisError("parabolic subgroup on " + std::to_string(u.size()) +
                            " generators is infinite (no saturation within " +
                            std::to_string(limits.ball_cap) + " elements)");
    }
    const std::vector<Vertex> members = u.members();
    std::vector<CoxWord> out;
    for (const CoxWord& local : ball.words()) {
      CoxWord w;
      for (Vertex v : local) w.push_back(members[v]);
      out.push_back(std::move(w));
    }
    return out;
  };
  const std::vector<CoxWord> left = elements(u1);
  const std::vector<CoxWord> right = elements(u2);
  const CoxeterGroup group(g);
  const CoxWord target = group.normal_form(x);
  for (const CoxWord& a : left) {
    for (const CoxWord& b : right) {
      if (group.multiply(a, b) == target) return true;
    }
  }
  return false;
}

std::string format_word(const DefiningGraph& g, const CoxWord& w) {
  const bool compact = std::all_of(g.names().begin(), g.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += g.name(w[i]);
  }
  return out;
}

CoxWord parse_word(const DefiningGraph& g, std::string_view text) {
  CoxWord w;
  const bool compact = std::all_of(g.names().begin(), g.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  const bool spaced = !compact || std::any_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  auto push = [&](std::string_view token) {
    auto v = g.find(token);
    if (!v) throw ParseError("word: unknown letter \"" + std::string(token) + "\"");
    w.push_back(*v);
  };
  if (spaced) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) push(text.substr(i, j - i));
      i = j;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) push(text.substr(i, 1));
  }
  return w;
}

}  // namespace artinacyl
