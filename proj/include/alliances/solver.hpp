#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alliances/alliance.hpp"
#include "alliances/error.hpp"
#include "alliances/graph.hpp"
#include "alliances/vertex_set.hpp"

namespace alliances {

// Hard caps: enumeration cost doubles per vertex, so anything past these
// is a caller mistake, not a tuning problem.
inline constexpr int kMaxExhaustive = 24;
inline constexpr int kMaxEnumerateAll = 20;

struct SolveResult {
  bool feasible = false;
  std::optional<int> size;
  std::optional<VertexSet> witness;
  std::uint64_t subsets_examined = 0;
  std::chrono::duration<double> elapsed{0};
};

enum class Objective { minimize, maximize };

using SetPredicate = std::function<bool(const VertexSet&)>;

namespace detail {

// Visits all k-subsets of {0..n-1} in lexicographic order of their sorted
// element lists. Returns false if the visitor asked to stop.
template <class F>
bool for_each_combination(int n, int k, F&& visit) {
  std::vector<int> c(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
  while (true) {
    if (!visit(c)) return false;
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  }
}

inline void fill_from_indices(VertexSet& s, const std::vector<int>& idx) {
  s.clear();
  for (int v : idx) s.insert(v);
}

}  // namespace detail

// Exhaustive size-lexicographic search. The first satisfying set found is
// the optimum and, within its size, the lexicographically least witness,
// so identical inputs always return the identical witness.
inline SolveResult solve_extremal(const Graph& g, const SetPredicate& pred, Objective obj) {
  if (g.n() > kMaxExhaustive)
    fail(Err::graph_too_large_for_exhaustive,
         "n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(kMaxExhaustive));
  auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  VertexSet s(g.n());
  auto try_size = [&](int k) {
    bool found = !detail::for_each_combination(g.n(), k, [&](const std::vector<int>& idx) {
      detail::fill_from_indices(s, idx);
      ++res.subsets_examined;
      return !pred(s);  // stop on first hit
    });
    if (found) {
      res.feasible = true;
      res.size = k;
      res.witness = s;
    }
    return found;
  };
  if (obj == Objective::minimize) {
    for (int k = 0; k <= g.n(); ++k)
      if (try_size(k)) break;
  } else {
    for (int k = g.n(); k >= 0; --k)
      if (try_size(k)) break;
  }
  if (res.witness && !pred(*res.witness))
    fail(Err::bad_params, "predicate is not stable on re-evaluation");
  res.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

// All satisfying subsets in size-lexicographic order.
inline std::vector<VertexSet> enumerate_satisfying(const Graph& g, const SetPredicate& pred) {
  if (g.n() > kMaxEnumerateAll)
    fail(Err::graph_too_large_for_exhaustive,
         "n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(kMaxEnumerateAll));
  std::vector<VertexSet> out;
  VertexSet s(g.n());
  for (int k = 0; k <= g.n(); ++k) {
    detail::for_each_combination(g.n(), k, [&](const std::vector<int>& idx) {
      detail::fill_from_indices(s, idx);
      if (pred(s)) out.push_back(s);
      return true;
    });
  }
  return out;
}

// Branch and bound for minimum global alliances. Branches on vertices by
// decreasing degree; the only safe pruning signals are incumbent size and a
// covering bound for domination, because the membership conditions are not
// monotone under adding or removing vertices. Those conditions are checked
// at the leaves only. The reported witness is canonicalized to the
// lexicographically least optimum, matching solve_extremal.
inline SolveResult bb_min_alliance(const Graph& g, const AllianceSpec& spec) {
  if (!spec.global)
    fail(Err::non_global_spec_unsupported, "branch and bound prunes via domination");
  auto t0 = std::chrono::steady_clock::now();
  const int n = g.n();

  // Vertices the final set must dominate, per the neutrals reading.
  bool dominate_all = !spec.neutrals || spec.neutrals_mode != NeutralsDomination::reduced_only;
  std::vector<int> order(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  SolveResult res;
  int best = n + 1;
  VertexSet chosen(n), excluded(n), dominated(n);
  if (spec.neutrals) {
    // Neutral vertices can never be members.
    spec.neutrals->for_each([&](int v) { excluded.insert(v); });
  }

  auto must_dominate = [&](int v) {
    if (!dominate_all && spec.neutrals && spec.neutrals->contains(v)) return false;
    return true;
  };

  std::function<void(int, int)> recurse = [&](int depth, int size) {
    if (size >= best) return;
    if (depth == n) {
      ++res.subsets_examined;
      if (check_alliance(g, chosen, spec)) best = size;
      return;
    }
    // Covering bound: every still-undominated target needs a member of its
    // closed neighborhood, and one new member covers at most max_cover of
    // them. Infeasible once a target's closed neighborhood is all excluded.
    int undominated = 0;
    int max_cover = 0;
    for (int v = 0; v < n; ++v) {
      if (!must_dominate(v)) continue;
      if (chosen.contains(v) || dominated.contains(v)) continue;
      bool coverable = !excluded.contains(v);
      for (int u : g.neighbors(v)) {
        if (coverable) break;
        coverable = !excluded.contains(u);
      }
      if (!coverable) return;
      ++undominated;
    }
    if (undominated > 0) {
      for (int w = 0; w < n; ++w) {
        if (excluded.contains(w) || chosen.contains(w)) continue;
        int cover = 0;
        if (must_dominate(w) && !dominated.contains(w)) ++cover;
        for (int u : g.neighbors(w)) {
          if (must_dominate(u) && !chosen.contains(u) && !dominated.contains(u)) ++cover;
        }
        if (cover > max_cover) max_cover = cover;
      }
      if (max_cover == 0) return;
      int lb = (undominated + max_cover - 1) / max_cover;
      if (size + lb >= best) return;
    }

    int v = order[static_cast<size_t>(depth)];
    if (!excluded.contains(v)) {
      chosen.insert(v);
      std::vector<int> newly;
      if (!dominated.contains(v)) {
        dominated.insert(v);
        newly.push_back(v);
      }
      for (int u : g.neighbors(v)) {
        if (!dominated.contains(u)) {
          dominated.insert(u);
          newly.push_back(u);
        }
      }
      recurse(depth + 1, size + 1);
      for (int u : newly) dominated.erase(u);
      chosen.erase(v);
    }
    bool was_excluded = excluded.contains(v);
    excluded.insert(v);
    recurse(depth + 1, size);
    if (!was_excluded) excluded.erase(v);
  };
  recurse(0, 0);

  if (best <= n) {
    res.feasible = true;
    res.size = best;
    VertexSet s(n);
    detail::for_each_combination(n, best, [&](const std::vector<int>& idx) {
      detail::fill_from_indices(s, idx);
      ++res.subsets_examined;
      if (check_alliance(g, s, spec)) {
        res.witness = s;
        return false;
      }
      return true;
    });
  }
  if (res.witness && !check_alliance(g, *res.witness, spec))
    fail(Err::bad_params, "witness failed re-check");
  res.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

}  // namespace alliances
