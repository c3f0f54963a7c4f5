#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alliances/error.hpp"
#include "alliances/graph.hpp"

namespace alliances {

inline Graph path(int n) {
  if (n < 1) fail(Err::bad_params, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) fail(Err::bad_params, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
  if (n < 1) fail(Err::bad_params, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) fail(Err::bad_params, "complete bipartite needs both sides >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e);
}

// Star with center 0 and k leaves.
inline Graph star(int k) {
  if (k < 1) fail(Err::bad_params, "star needs k >= 1 leaves");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= k; ++v) e.emplace_back(0, v);
  return Graph::from_edges(k + 1, e);
}

// 64-bit LCG used for reproducible random graphs:
//   x_{i+1} = 6364136223846793005 * x_i + 1442695040888963407  (mod 2^64)
// seeded with x_0 = seed. Draws take the top 31 bits. The constants are
// fixed so that a (n, p, seed) triple names the same graph everywhere.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
};

// G(n, p) with exact rational p = num/den. Pair (u,v), u < v, scanned in
// lexicographic order; each consumes one draw whether or not it becomes
// an edge, so edge decisions are independent of each other.
inline Graph random_gnp(int n, long long p_num, long long p_den, std::uint64_t seed) {
  if (n < 0) fail(Err::bad_params, "n must be non-negative");
  if (p_den <= 0 || p_num < 0 || p_num > p_den)
    fail(Err::bad_params, "probability must satisfy 0 <= num/den <= 1");
  Lcg rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<long long>(rng.next() % static_cast<std::uint64_t>(p_den)) < p_num)
        e.emplace_back(u, v);
    }
  return Graph::from_edges(n, e);
}

// String-keyed construction for the CLI and the harness.
//   path {n} | cycle {n} | complete {n} | complete-bipartite {a,b}
//   star {k} | random-gnp {n, p_num, p_den} + seed
inline Graph generate(std::string_view family, const std::vector<long long>& params,
                      std::optional<std::uint64_t> seed = {}) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      fail(Err::bad_params, std::string(family) + " takes " + std::to_string(k) + " parameter(s)");
  };
  auto as_int = [&](size_t i) {
    if (params[i] < -(1ll << 30) || params[i] > (1ll << 30))
      fail(Err::bad_params, "parameter out of range");
    return static_cast<int>(params[i]);
  };
  if (family == "path") {
    want(1);
    return path(as_int(0));
  }
  if (family == "cycle") {
    want(1);
    return cycle(as_int(0));
  }
  if (family == "complete") {
    want(1);
    return complete(as_int(0));
  }
  if (family == "complete-bipartite") {
    want(2);
    return complete_bipartite(as_int(0), as_int(1));
  }
  if (family == "star") {
    want(1);
    return star(as_int(0));
  }
  if (family == "random-gnp") {
    want(3);
    if (!seed) fail(Err::bad_params, "random-gnp needs a seed");
    return random_gnp(as_int(0), params[1], params[2], *seed);
  }
  fail(Err::unknown_family, std::string(family));
}

}  // namespace alliances
