#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alliances/alliance.hpp"
#include "alliances/error.hpp"

namespace alliances {

enum class CatalogStatus {
  verified,       // machine-checked against the defining condition on small graphs
  paper_erratum,  // kept for reference; known to disagree with the defining condition
};

// A named parameter from the literature expressed as an alliance spec.
// `note` states the defining condition the spec was derived from.
// Entries with `needs_min_degree_one` only coincide with their defining
// condition on graphs without isolated vertices.
struct CatalogEntry {
  std::string name;
  AllianceSpec spec;
  bool apply_to_complement = false;  // spec constrains the complement of the queried set
  bool needs_min_degree_one = false;
  CatalogStatus status = CatalogStatus::verified;
  std::string note;
};

inline std::vector<std::string> catalog_names() {
  return {
      "defensive",        "offensive",
      "powerful",         "boundary-defensive",
      "boundary-offensive", "boundary-powerful",
      "signed-dominating", "signed-total-dominating",
      "minus-dominating", "signed-efficient",
      "partial-monopoly", "monopoly",
      "monopoly-paper",   "half-dominating",
      "half-independent-complement", "positive-influence",
      "robust-majority",  "maj1",
  };
}

// Entries taking a parameter use exactly one integer: a slack r for the
// classic families, a bound k (k >= 1) for the signed ones.
inline CatalogEntry catalog_entry(std::string_view name, std::optional<long long> param = {}) {
  auto named = [&](std::string_view n) { return name == n; };
  auto need_param = [&](const char* what) {
    if (!param) fail(Err::bad_params, std::string(name) + " needs parameter " + what);
    return *param;
  };
  auto no_param = [&] {
    if (param) fail(Err::bad_params, std::string(name) + " takes no parameter");
  };

  CatalogEntry e;
  e.name = std::string(name);

  if (named("defensive")) {
    long long r = need_param("r");
    e.spec = {IntSet::at_least(r), IntSet::all(), true};
    e.note = "dominating set whose members each have split difference >= " + std::to_string(r);
    return e;
  }
  if (named("offensive")) {
    long long r = need_param("r");
    e.spec = {IntSet::all(), IntSet::at_least(r), true, {}, NeutralsDomination::reduced_and_graph,
              true};
    e.note = "non-empty dominating set whose boundary has split difference >= " +
             std::to_string(r);
    return e;
  }
  if (named("powerful")) {
    long long r = need_param("r");
    e.spec = {IntSet::at_least(r), IntSet::at_least(r + 2), true, {},
              NeutralsDomination::reduced_and_graph, true};
    e.note = "simultaneously defensive at " + std::to_string(r) + " and offensive at " +
             std::to_string(r + 2);
    return e;
  }
  if (named("boundary-defensive")) {
    long long r = need_param("r");
    e.spec = {IntSet::finite({r}), IntSet::all(), false};
    e.note = "members sit exactly at split difference " + std::to_string(r);
    return e;
  }
  if (named("boundary-offensive")) {
    long long r = need_param("r");
    e.spec = {IntSet::all(), IntSet::finite({r}), false};
    e.note = "boundary sits exactly at split difference " + std::to_string(r);
    return e;
  }
  if (named("boundary-powerful")) {
    long long r = need_param("r");
    e.spec = {IntSet::finite({r}), IntSet::finite({r + 2}), false};
    e.note = "members exactly at " + std::to_string(r) + ", boundary exactly at " +
             std::to_string(r + 2);
    return e;
  }
  if (named("signed-dominating")) {
    long long k = need_param("k");
    if (k < 1) fail(Err::bad_params, "signed-dominating needs k >= 1");
    e.spec = {IntSet::at_least(k - 1), IntSet::at_least(k + 1), true};
    e.note = "positives of a +-1 labelling whose closed neighborhood sums are all >= " +
             std::to_string(k);
    return e;
  }
  if (named("signed-total-dominating")) {
    long long k = need_param("k");
    if (k < 1) fail(Err::bad_params, "signed-total-dominating needs k >= 1");
    e.spec = {IntSet::at_least(k), IntSet::at_least(k), true};
    e.note = "positives of a +-1 labelling whose open neighborhood sums are all >= " +
             std::to_string(k);
    return e;
  }
  if (named("minus-dominating")) {
    no_param();
    e.spec = {IntSet::at_least(0), IntSet::at_least(2), true};
    e.note = "positives of a -1/0/+1 labelling with closed sums >= 1; "
             "check with the zero class supplied as neutrals";
    return e;
  }
  if (named("signed-efficient")) {
    no_param();
    e.spec = {IntSet::finite({0ll}), IntSet::finite({2ll}), true};
    e.note = "positives of a +-1 labelling with every closed neighborhood sum exactly 1";
    return e;
  }
  if (named("partial-monopoly")) {
    no_param();
    e.spec = {IntSet::all(), IntSet::at_least(1), true};
    e.note = "every outside vertex sees at least half of its closed neighborhood in the set";
    return e;
  }
  if (named("monopoly")) {
    no_param();
    e.spec = {IntSet::at_least(-1), IntSet::at_least(1), true};
    e.note = "every vertex sees at least half of its closed neighborhood in the set";
    return e;
  }
  if (named("monopoly-paper")) {
    no_param();
    e.spec = {IntSet::at_least(-2), IntSet::at_least(1), true};
    e.status = CatalogStatus::paper_erratum;
    e.note = "historical member bound one lower than the defining condition supports; "
             "accepts sets the half-of-closed-neighborhood test rejects";
    return e;
  }
  if (named("half-dominating")) {
    no_param();
    e.spec = {IntSet::all(), IntSet::at_least(0), true};
    e.needs_min_degree_one = true;
    e.note = "every outside vertex sees at least half of its neighbors in the set";
    return e;
  }
  if (named("half-independent-complement")) {
    no_param();
    e.spec = {IntSet::all(), IntSet::at_least(0), true};
    e.apply_to_complement = true;
    e.needs_min_degree_one = true;
    e.note = "queried set is half-independent exactly when its complement passes this spec";
    return e;
  }
  if (named("positive-influence")) {
    no_param();
    e.spec = {IntSet::at_least(0), IntSet::at_least(0), true};
    e.needs_min_degree_one = true;
    e.note = "every vertex sees at least half (rounded up) of its neighbors in the set";
    return e;
  }
  if (named("robust-majority")) {
    no_param();
    e.spec = {IntSet::at_most(-1), IntSet::at_most(-1), false};
    e.needs_min_degree_one = true;
    e.note = "no vertex reaches the majority threshold of its neighborhood";
    return e;
  }
  if (named("maj1")) {
    no_param();
    e.spec = {IntSet::all(), IntSet::at_least(0), true};
    e.needs_min_degree_one = true;
    e.note = "one synchronous majority round starting from the set activates every vertex";
    return e;
  }
  fail(Err::unknown_parameter, std::string(name));
}

inline AllianceSpec catalog_spec(std::string_view name, std::optional<long long> param = {}) {
  return catalog_entry(name, param).spec;
}

// Entry-aware check; routes complement-style entries through the complement.
inline bool check_catalog(const Graph& g, const VertexSet& s, const CatalogEntry& entry) {
  if (entry.apply_to_complement) {
    if (s.universe() != g.n())
      fail(Err::vertex_out_of_range, "set universe does not match graph");
    return check_alliance(g, s.complement(), entry.spec);
  }
  return check_alliance(g, s, entry.spec);
}

}  // namespace alliances
