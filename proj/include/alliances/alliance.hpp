#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alliances/error.hpp"
#include "alliances/graph.hpp"
#include "alliances/int_set.hpp"
#include "alliances/vertex_set.hpp"

namespace alliances {

// With neutrals present, the membership conditions are always evaluated in
// the graph with the neutral vertices deleted. What "dominating" means is
// genuinely ambiguous there, so all three readings are available; the
// default demands domination both in the reduced graph and the full one.
enum class NeutralsDomination {
  reduced_and_graph,  // default: dominate G - N and G
  graph_only,         // dominate G; conditions still in G - N
  reduced_only,       // literally a global alliance of G - N
};

struct AllianceSpec {
  IntSet inside = IntSet::all();    // required of delta_in - delta_out for members
  IntSet outside = IntSet::all();   // required of delta_in - delta_out on N(S) \ S
  bool global = false;              // additionally require domination
  std::optional<VertexSet> neutrals;
  NeutralsDomination neutrals_mode = NeutralsDomination::reduced_and_graph;
  bool require_nonempty = false;    // some named parameters exclude the empty set

  friend bool operator==(const AllianceSpec&, const AllianceSpec&) = default;
};

namespace detail {

// delta_in - delta_out for v, with neutral neighbors removed from both sides.
inline long long split_difference(const Graph& g, const VertexSet& s, const VertexSet* neutrals,
                                  int v) {
  int in = g.adjacency(v).intersection_count(s);
  int out = g.degree(v) - in;
  if (neutrals) out -= g.adjacency(v).intersection_count(*neutrals);
  return static_cast<long long>(in) - out;
}

}  // namespace detail

// Decides membership of s in the family the spec describes. The empty set
// satisfies the two membership conditions vacuously; a global spec then
// fails it on any non-empty graph because nothing is dominated.
// The outside condition quantifies over N(S) \ S exactly, never over the
// rest of the complement.
inline bool check_alliance(const Graph& g, const VertexSet& s, const AllianceSpec& spec) {
  if (s.universe() != g.n())
    fail(Err::vertex_out_of_range, "set universe does not match graph");
  const VertexSet* neutrals = nullptr;
  if (spec.neutrals) {
    if (spec.neutrals->universe() != g.n())
      fail(Err::vertex_out_of_range, "neutrals universe does not match graph");
    if (spec.neutrals->intersects(s))
      fail(Err::neutrals_overlap_set, "neutral vertices cannot be members");
    neutrals = &*spec.neutrals;
  }

  if (spec.require_nonempty && s.empty()) return false;

  for (int v = 0; v < g.n(); ++v) {
    if (s.contains(v)) {
      if (!spec.inside.contains(detail::split_difference(g, s, neutrals, v))) return false;
    } else {
      if (neutrals && neutrals->contains(v)) continue;
      if (!s.intersects(g.adjacency(v))) continue;  // not on the boundary
      if (!spec.outside.contains(detail::split_difference(g, s, neutrals, v))) return false;
    }
  }

  if (spec.global) {
    bool need_reduced = !neutrals || spec.neutrals_mode != NeutralsDomination::graph_only;
    bool need_graph = !neutrals || spec.neutrals_mode != NeutralsDomination::reduced_only;
    for (int v = 0; v < g.n(); ++v) {
      if (s.contains(v)) continue;
      bool neutral = neutrals && neutrals->contains(v);
      bool covered = s.intersects(g.adjacency(v));
      if (!covered) {
        if (!neutral && need_reduced) return false;
        if (need_graph) return false;
      }
    }
  }
  return true;
}

// Degree-membership pair: members need their in-set degree in sigma, every
// non-member needs its in-set degree in rho. Note the second quantifier runs
// over the whole complement, unlike an alliance's outside condition.
struct SigmaRho {
  std::vector<int> sigma;
  std::vector<int> rho;
};

inline bool check_sigma_rho(const Graph& g, const VertexSet& s, const SigmaRho& sr) {
  if (s.universe() != g.n())
    fail(Err::vertex_out_of_range, "set universe does not match graph");
  auto member = [](const std::vector<int>& xs, int v) {
    for (int x : xs)
      if (x == v) return true;
    return false;
  };
  for (int v = 0; v < g.n(); ++v) {
    int in = g.adjacency(v).intersection_count(s);
    if (!member(s.contains(v) ? sr.sigma : sr.rho, in)) return false;
  }
  return true;
}

// On an r-regular graph an in-set degree of d corresponds to a split
// difference of 2d - r, which is what makes the two formalisms line up.
inline std::pair<IntSet, IntSet> sigma_rho_translate(const SigmaRho& sr, int regular_degree) {
  if (regular_degree < 0) fail(Err::bad_params, "degree must be non-negative");
  auto translate = [&](const std::vector<int>& xs, const char* which) {
    std::vector<long long> out;
    out.reserve(xs.size());
    for (int x : xs) {
      if (x < 0 || x > regular_degree)
        fail(Err::sigma_rho_out_of_range,
             std::string(which) + " member " + std::to_string(x) + " outside 0.." +
                 std::to_string(regular_degree));
      out.push_back(2ll * x - regular_degree);
    }
    return IntSet::finite(std::move(out));
  };
  return {translate(sr.sigma, "sigma"), translate(sr.rho, "rho")};
}

}  // namespace alliances
