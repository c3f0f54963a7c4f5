#pragma once

#include <json.hpp>

#include "alliances/direct.hpp"
#include "alliances/harness.hpp"
#include "alliances/solver.hpp"
#include "alliances/vertex_set.hpp"

namespace alliances {

// All serialization goes through ordered_json with fixed field order, so
// identical inputs produce byte-identical output.
using json = nlohmann::ordered_json;

inline json check_to_json(bool result) { return json{{"result", result}}; }

inline json solve_to_json(const SolveResult& r, bool with_stats = false) {
  json j;
  j["feasible"] = r.feasible;
  if (r.feasible) {
    j["size"] = *r.size;
    j["witness"] = r.witness->to_vector();
  }
  if (with_stats) j["subsets_examined"] = r.subsets_examined;
  return j;
}

inline json propagation_to_json(const PropagationResult& r) {
  json j;
  j["final"] = r.final_set.to_vector();
  j["rounds_used"] = r.rounds_used;
  return j;
}

inline json report_to_json(const PropositionReport& r) {
  json j;
  j["proposition_id"] = r.proposition_id;
  j["family"] = r.family;
  j["n_max"] = r.n_max;
  j["graphs_checked"] = r.graphs_checked;
  j["sets_checked"] = r.sets_checked;
  j["agreements"] = r.agreements;
  j["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) {
    json e;
    e["graph_edgelist"] = c.graph_edgelist;
    e["set"] = c.set;
    e["direct"] = c.direct;
    e["framework"] = c.framework;
    // Extra instance parameters (e.g. which r), present only when needed
    // to replay the counterexample.
    if (!c.context.empty()) e["context"] = c.context;
    j["counterexamples"].push_back(std::move(e));
  }
  return j;
}

inline json reports_to_json(const std::vector<PropositionReport>& reports) {
  json j = json::array();
  for (const auto& r : reports) j.push_back(report_to_json(r));
  return j;
}

inline json gallai_to_json(const GallaiScan& s) {
  json j;
  j["family"] = s.family;
  j["n_max"] = s.n_max;
  j["graphs_checked"] = s.graphs_checked;
  j["holds"] = s.holds;
  j["violations"] = json::array();
  for (const auto& v : s.violations) {
    json e;
    e["graph_edgelist"] = v.graph_edgelist;
    e["min_half_dominating"] = v.min_half_dominating;
    e["max_half_independent"] = v.max_half_independent;
    j["violations"].push_back(std::move(e));
  }
  return j;
}

}  // namespace alliances
