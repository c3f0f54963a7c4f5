#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>

#include "alliances/harness.hpp"
#include "alliances/json_io.hpp"

using namespace alliances;

namespace {

Err kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return Err::bad_params;
}

bool report_invariant(const PropositionReport& r) {
  return r.agreements + r.counterexamples.size() == r.sets_checked;
}

const Counterexample* find_case(const PropositionReport& r, const std::string& edgelist,
                                const std::vector<int>& set) {
  for (const auto& c : r.counterexamples)
    if (c.graph_edgelist == edgelist && c.set == set) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("family enumeration counts") {
  std::uint64_t count = 0;
  for_each_family_graph("labeled", 4, [&](const Graph&) { ++count; });
  CHECK(count == 1 + 2 + 8 + 64);  // 2^C(n,2) graphs per n

  count = 0;
  for_each_family_graph("labeled-mindeg1", 3, [&](const Graph& g) {
    ++count;
    CHECK(g.min_degree() >= 1);
  });
  CHECK(count == 1 + 4);  // K2; the four graphs on 3 vertices with >= 2 edges

  count = 0;
  for_each_family_graph("cycles", 6, [&](const Graph&) { ++count; });
  CHECK(count == 4);

  CHECK(kind_of([] { for_each_family_graph("labeled", 8, [](const Graph&) {}); }) ==
        Err::bad_params);
  CHECK(kind_of([] { for_each_family_graph("trees", 5, [](const Graph&) {}); }) ==
        Err::bad_params);
}

TEST_CASE("clean propositions have no counterexamples on small labeled graphs") {
  for (const char* id : {"signed-dom-1", "signed-dom-2", "efficient", "partial-monopoly"}) {
    PropositionReport r = verify_characterization(id, "labeled", 4);
    INFO(id);
    CHECK(report_invariant(r));
    CHECK(r.counterexamples.empty());
    CHECK(r.graphs_checked == 75);
  }
}

TEST_CASE("min-degree-one propositions are clean on their family") {
  for (const char* id : {"half-dom", "half-ind", "positive-influence", "maj1", "robust",
                         "monopoly", "signed-total-1", "minus"}) {
    PropositionReport r = verify_characterization(id, "labeled-mindeg1", 4);
    INFO(id);
    CHECK(report_invariant(r));
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("paper monopoly bound admits the C4 antipodal pair") {
  PropositionReport r = verify_characterization("monopoly-paper", "cycles", 6);
  CHECK(report_invariant(r));
  const Counterexample* c = find_case(r, "4 4\n0 1\n0 3\n1 2\n2 3\n", {0, 2});
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->direct);
  CHECK(c->framework);

  // Replaying the recorded instance reproduces both verdicts.
  Graph g = parse_edge_list(c->graph_edgelist);
  VertexSet s = VertexSet::from_indices(g.n(), c->set);
  CHECK(check_monopoly(g, s, MonopolyScope::full) == c->direct);
  CHECK(check_catalog(g, s, catalog_entry("monopoly-paper")) == c->framework);
}

TEST_CASE("complement duality fails when the complement is empty") {
  PropositionReport r = verify_characterization("remark", "completes", 3);
  CHECK(report_invariant(r));
  const Counterexample* c = find_case(r, "3 3\n0 1\n0 2\n1 2\n", {0, 1, 2});
  REQUIRE(c != nullptr);
  CHECK(c->direct);
  CHECK_FALSE(c->framework);
  CHECK(c->context == "r=2");
}

TEST_CASE("regular graph translation needs the whole-complement correction") {
  PropositionReport corrected = verify_characterization("sigma-rho", "cycles", 6);
  CHECK(report_invariant(corrected));
  CHECK(corrected.counterexamples.empty());
  CHECK(corrected.graphs_checked == 4);

  PropositionReport boundary = verify_characterization("sigma-rho-boundary", "cycles", 4);
  CHECK(report_invariant(boundary));
  const Counterexample* c = find_case(boundary, "4 4\n0 1\n0 3\n1 2\n2 3\n", {0});
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->direct);
  CHECK(c->framework);
  CHECK(c->context == "sigma={0} rho={1} r=2");
}

TEST_CASE("corrected translation also holds on three-regular graphs") {
  PropositionReport r = verify_characterization("sigma-rho", "completes", 4);
  CHECK(r.graphs_checked == 2);  // K3 (degree 2) and K4 (degree 3)
  CHECK(r.counterexamples.empty());
}

TEST_CASE("unknown proposition ids are rejected") {
  CHECK(kind_of([] { verify_characterization("no-such-prop", "labeled", 3); }) ==
        Err::unknown_proposition);
}

TEST_CASE("gallai identity on pinned instances") {
  GallaiResult r = gallai_check(cycle(5));
  CHECK(r.min_half_dominating == 2);
  CHECK(r.max_half_independent == 3);
  CHECK(r.holds);
  CHECK_FALSE(r.isolated_vertices);

  r = gallai_check(path(4));
  CHECK(r.min_half_dominating == 2);
  CHECK(r.max_half_independent == 2);
  CHECK(r.holds);

  r = gallai_check(complete(1));
  CHECK(r.min_half_dominating == 1);
  CHECK(r.max_half_independent == 1);
  CHECK_FALSE(r.holds);
  CHECK(r.isolated_vertices);
}

TEST_CASE("gallai scan aggregates and respects families") {
  GallaiScan scan = gallai_scan("labeled-mindeg1", 5);
  CHECK(scan.violations.empty());
  CHECK(scan.holds == scan.graphs_checked);
  CHECK(scan.graphs_checked > 0);

  GallaiScan named = gallai_scan("cycles", 8);
  CHECK(named.graphs_checked == 6);
  CHECK(named.violations.empty());
}

TEST_CASE("errata scan covers every proposition twice") {
  auto reports = errata_scan(3);
  CHECK(reports.size() == proposition_ids().size() * 2);
  for (const auto& r : reports) CHECK(report_invariant(r));

  // Spot checks from the small-scan expectations.
  for (const auto& r : reports) {
    if (r.family != "labeled-mindeg1") continue;
    if (r.proposition_id == "signed-dom-1" || r.proposition_id == "partial-monopoly" ||
        r.proposition_id == "half-dom" || r.proposition_id == "positive-influence" ||
        r.proposition_id == "robust" || r.proposition_id == "maj1") {
      INFO(r.proposition_id);
      CHECK(r.counterexamples.empty());
    }
  }
  std::string text = render_text_summary(reports);
  CHECK(text.find("signed-dom-1") != std::string::npos);
}

TEST_CASE("report json carries the documented fields") {
  PropositionReport r = verify_characterization("monopoly-paper", "cycles", 4);
  json j = report_to_json(r);
  CHECK(j["proposition_id"] == "monopoly-paper");
  CHECK(j["family"] == "cycles");
  CHECK(j["n_max"] == 4);
  CHECK(j["graphs_checked"] == 2);
  CHECK(j["agreements"].get<std::uint64_t>() + j["counterexamples"].size() ==
        j["sets_checked"].get<std::uint64_t>());
  REQUIRE(!j["counterexamples"].empty());
  const auto& c = j["counterexamples"][0];
  CHECK(c.contains("graph_edgelist"));
  CHECK(c.contains("set"));
  CHECK(c.contains("direct"));
  CHECK(c.contains("framework"));

  GallaiScan scan = gallai_scan("paths", 5);
  json gj = gallai_to_json(scan);
  CHECK(gj["graphs_checked"] == 5);
  CHECK(gj["violations"].is_array());
}
