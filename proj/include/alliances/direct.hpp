#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alliances/error.hpp"
#include "alliances/graph.hpp"
#include "alliances/vertex_set.hpp"

namespace alliances {

// Ground-truth checks for the set parameters the alliance specs are meant
// to capture. Everything here works from the original quantified
// definitions and exact integer arithmetic; nothing routes through the
// alliance framework, so the two paths stay independently testable.

enum class SignedVariant {
  closed,     // sum over N[v] >= k at every vertex
  total,      // sum over N(v) >= k at every vertex
  minus,      // values -1/0/+1, sum over N[v] >= 1 at every vertex
  efficient,  // values +-1, sum over N[v] == 1 at every vertex
};

struct SignedFunction {
  std::vector<int> values;  // one of -1, 0, +1 per vertex

  static SignedFunction from_set(int n, const VertexSet& positives) {
    if (positives.universe() != n) fail(Err::vertex_out_of_range, "set universe mismatch");
    SignedFunction f;
    f.values.assign(static_cast<size_t>(n), -1);
    positives.for_each([&](int v) { f.values[static_cast<size_t>(v)] = 1; });
    return f;
  }

  // Textual form "+1,-1,0,...". "1" is accepted for "+1".
  static SignedFunction parse(std::string_view text) {
    SignedFunction f;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string_view item =
          comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (item == "+1" || item == "1")
        f.values.push_back(1);
      else if (item == "-1")
        f.values.push_back(-1);
      else if (item == "0")
        f.values.push_back(0);
      else
        fail(Err::parse_error, "bad signed value '" + std::string(item) + "'");
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return f;
  }

  std::string to_string() const {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) out += ',';
      out += values[i] > 0 ? "+1" : values[i] < 0 ? "-1" : "0";
    }
    return out;
  }

  int at(int v) const { return values[static_cast<size_t>(v)]; }
};

struct SignedPartition {
  VertexSet positives;
  VertexSet neutrals;
  VertexSet negatives;
};

inline SignedPartition partition_of(const Graph& g, const SignedFunction& f) {
  if (static_cast<int>(f.values.size()) != g.n())
    fail(Err::bad_params, "function length does not match graph");
  SignedPartition p{VertexSet(g.n()), VertexSet(g.n()), VertexSet(g.n())};
  for (int v = 0; v < g.n(); ++v) {
    int x = f.at(v);
    if (x > 0)
      p.positives.insert(v);
    else if (x == 0)
      p.neutrals.insert(v);
    else
      p.negatives.insert(v);
  }
  return p;
}

inline bool check_signed(const Graph& g, const SignedFunction& f, long long k,
                         SignedVariant variant) {
  if (static_cast<int>(f.values.size()) != g.n())
    fail(Err::bad_params, "function length does not match graph");
  for (int v = 0; v < g.n(); ++v) {
    int x = f.at(v);
    if (x < -1 || x > 1) fail(Err::bad_params, "signed values must be -1, 0 or +1");
    if (x == 0 && variant != SignedVariant::minus)
      fail(Err::zero_value_outside_minus_mode, "vertex " + std::to_string(v));
  }
  for (int v = 0; v < g.n(); ++v) {
    long long sum = 0;
    for (int u : g.neighbors(v)) sum += f.at(u);
    switch (variant) {
      case SignedVariant::closed:
        if (sum + f.at(v) < k) return false;
        break;
      case SignedVariant::total:
        if (sum < k) return false;
        break;
      case SignedVariant::minus:
        if (sum + f.at(v) < 1) return false;
        break;
      case SignedVariant::efficient:
        if (sum + f.at(v) != 1) return false;
        break;
    }
  }
  return true;
}

enum class MonopolyScope {
  partial,  // quantify over vertices outside the set
  full,     // quantify over every vertex
};

// |N[v] ∩ X| >= |N[v]| / 2, compared exactly as 2|N[v] ∩ X| >= |N[v]|.
// radius > 1 evaluates the same condition in the corresponding power graph.
inline bool check_monopoly(const Graph& g, const VertexSet& x, MonopolyScope scope,
                           int radius = 1) {
  if (radius < 1) fail(Err::bad_params, "radius must be >= 1");
  if (x.universe() != g.n()) fail(Err::vertex_out_of_range, "set universe mismatch");
  Graph powered;
  const Graph* hp = &g;
  if (radius > 1) {
    powered = graph_power(g, radius);
    hp = &powered;
  }
  for (int v = 0; v < hp->n(); ++v) {
    bool in = x.contains(v);
    if (scope == MonopolyScope::partial && in) continue;
    int closed_in = hp->adjacency(v).intersection_count(x) + (in ? 1 : 0);
    int closed_size = hp->degree(v) + 1;
    if (2 * closed_in < closed_size) return false;
  }
  return true;
}

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den) {
    if (den == 0) fail(Err::bad_params, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rational{num, den};
  }

  // "a/b" or a bare integer.
  static Rational parse(std::string_view text) {
    size_t slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return of(std::stoll(std::string(text)), 1);
      return of(std::stoll(std::string(text.substr(0, slash))),
                std::stoll(std::string(text.substr(slash + 1))));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Err::parse_error, "bad rational '" + std::string(text) + "'");
    }
  }

  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

enum class AlphaMode {
  dominating,   // outside vertices see at least alpha of their neighborhood
  independent,  // members see at most alpha of their neighborhood
};

// Fractional neighborhood condition, compared cross-multiplied so no
// floating point is involved. `strict` switches >= / <= to > / <;
// `total` extends the quantifier to every vertex.
inline bool check_alpha(const Graph& g, const VertexSet& x, Rational alpha, AlphaMode mode,
                        bool strict = false, bool total = false) {
  if (x.universe() != g.n()) fail(Err::vertex_out_of_range, "set universe mismatch");
  if (alpha.den <= 0 || alpha.num <= 0 || alpha.num > alpha.den)
    fail(Err::bad_params, "alpha must satisfy 0 < alpha <= 1");
  for (int v = 0; v < g.n(); ++v) {
    bool in = x.contains(v);
    if (!total) {
      if (mode == AlphaMode::dominating && in) continue;
      if (mode == AlphaMode::independent && !in) continue;
    }
    long long lhs = static_cast<long long>(g.adjacency(v).intersection_count(x)) * alpha.den;
    long long rhs = alpha.num * g.degree(v);
    bool ok = mode == AlphaMode::dominating ? (strict ? lhs > rhs : lhs >= rhs)
                                            : (strict ? lhs < rhs : lhs <= rhs);
    if (!ok) return false;
  }
  return true;
}

enum class ThresholdSetMode {
  positive_influence,  // every vertex has at least ceil(deg/2) neighbors in the set
  robust,              // every vertex has fewer than ceil(deg/2) neighbors in the set
};

inline bool check_threshold_set(const Graph& g, const VertexSet& x, ThresholdSetMode mode) {
  if (x.universe() != g.n()) fail(Err::vertex_out_of_range, "set universe mismatch");
  for (int v = 0; v < g.n(); ++v) {
    int in = g.adjacency(v).intersection_count(x);
    int need = (g.degree(v) + 1) / 2;  // ceil(deg/2)
    bool ok = mode == ThresholdSetMode::positive_influence ? in >= need : in < need;
    if (!ok) return false;
  }
  return true;
}

// One synchronous majority round: activates every vertex with at least half
// (strictly more than half when `strict`) of its neighbors active. Already
// active vertices stay active. With the non-strict rule an isolated vertex
// activates unconditionally, since 0 >= 0.
inline VertexSet maj_step(const Graph& g, const VertexSet& p, bool strict = false) {
  if (p.universe() != g.n()) fail(Err::vertex_out_of_range, "set universe mismatch");
  VertexSet next = p;
  for (int v = 0; v < g.n(); ++v) {
    if (p.contains(v)) continue;
    long long in2 = 2ll * g.adjacency(v).intersection_count(p);
    if (strict ? in2 > g.degree(v) : in2 >= g.degree(v)) next.insert(v);
  }
  return next;
}

// Per-vertex activation thresholds. Valid thresholds satisfy
// 1 <= t(v) <= deg(v); vertices of degree 0 never activate by neighbors
// and carry threshold 0 by convention.
struct ThresholdMap {
  std::vector<int> t;

  static ThresholdMap majority(const Graph& g) {
    ThresholdMap m;
    m.t.resize(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) m.t[static_cast<size_t>(v)] = (g.degree(v) + 1) / 2;
    return m;
  }

  // "v:t" pairs, comma separated; unspecified vertices default to majority.
  static ThresholdMap parse(const Graph& g, std::string_view text) {
    ThresholdMap m = majority(g);
    size_t pos = 0;
    if (text.empty()) {
      m.validate(g);
      return m;
    }
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string item(comma == std::string_view::npos ? text.substr(pos)
                                                       : text.substr(pos, comma - pos));
      size_t colon = item.find(':');
      if (colon == std::string::npos) fail(Err::parse_error, "expected v:t in '" + item + "'");
      int v = 0, tv = 0;
      try {
        v = std::stoi(item.substr(0, colon));
        tv = std::stoi(item.substr(colon + 1));
      } catch (const std::exception&) {
        fail(Err::parse_error, "bad threshold entry '" + item + "'");
      }
      g.require_vertex(v);
      m.t[static_cast<size_t>(v)] = tv;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    m.validate(g);
    return m;
  }

  void validate(const Graph& g) const {
    if (static_cast<int>(t.size()) != g.n())
      fail(Err::bad_threshold, "threshold map length does not match graph");
    for (int v = 0; v < g.n(); ++v) {
      int tv = t[static_cast<size_t>(v)];
      if (g.degree(v) == 0) {
        if (tv != 0) fail(Err::bad_threshold, "vertex " + std::to_string(v) + " has degree 0");
      } else if (tv < 1 || tv > g.degree(v)) {
        fail(Err::bad_threshold, "vertex " + std::to_string(v) + " needs 1 <= t <= degree");
      }
    }
  }
};

struct PropagationResult {
  VertexSet final_set;
  int rounds_used = 0;  // rounds that strictly grew the active set
};

// Synchronous spread from the seeds. Without thresholds each round is a
// majority step; with thresholds a vertex activates once it has t(v) active
// neighbors. `rounds` empty means run to the fixpoint, which is reached
// within n rounds because the active set only grows.
inline PropagationResult propagate(const Graph& g, const VertexSet& seeds,
                                   std::optional<int> rounds = {},
                                   const std::optional<ThresholdMap>& thresholds = {},
                                   bool strict_majority = false) {
  if (seeds.universe() != g.n()) fail(Err::vertex_out_of_range, "set universe mismatch");
  if (rounds && *rounds < 0) fail(Err::bad_params, "rounds must be non-negative");
  if (thresholds) thresholds->validate(g);

  PropagationResult res{seeds, 0};
  int limit = rounds ? *rounds : g.n();
  for (int round = 0; round < limit; ++round) {
    VertexSet next = res.final_set;
    if (thresholds) {
      for (int v = 0; v < g.n(); ++v) {
        if (next.contains(v) || g.degree(v) == 0) continue;
        if (g.adjacency(v).intersection_count(res.final_set) >=
            thresholds->t[static_cast<size_t>(v)])
          next.insert(v);
      }
    } else {
      next = maj_step(g, res.final_set, strict_majority);
    }
    if (next == res.final_set) break;
    res.final_set = next;
    ++res.rounds_used;
  }
  return res;
}

inline bool is_dmaj_set(const Graph& g, const VertexSet& p, int d) {
  if (d < 0) fail(Err::bad_params, "round bound must be non-negative");
  return propagate(g, p, d).final_set.count() == g.n();
}

}  // namespace alliances
