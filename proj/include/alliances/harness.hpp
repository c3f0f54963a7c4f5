#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "alliances/alliance.hpp"
#include "alliances/catalog.hpp"
#include "alliances/direct.hpp"
#include "alliances/edge_list.hpp"
#include "alliances/error.hpp"
#include "alliances/families.hpp"
#include "alliances/graph.hpp"
#include "alliances/solver.hpp"
#include "alliances/vertex_set.hpp"

namespace alliances {

// Cross-checks each alliance-spec translation against the quantified
// definition it is supposed to capture, exhaustively over small graph
// families. Disagreements are collected, never patched over: the direct
// definition is ground truth and a non-empty counterexample list is a
// result, not a failure of the scan.

struct Counterexample {
  std::string graph_edgelist;
  std::vector<int> set;
  bool direct = false;     // verdict of the defining condition
  bool framework = false;  // verdict of the spec translation
  std::string context;     // instance parameters, e.g. "r=2"
};

struct PropositionReport {
  std::string proposition_id;
  std::string family;
  int n_max = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t sets_checked = 0;
  std::uint64_t agreements = 0;
  std::vector<Counterexample> counterexamples;
};

inline std::vector<std::string> proposition_ids() {
  return {
      "signed-dom-1",  "signed-dom-2",  "signed-dom-3",
      "signed-total-1", "signed-total-2", "signed-total-3",
      "efficient",     "minus",         "minus-reduced",
      "partial-monopoly", "monopoly",   "monopoly-paper",
      "half-dom",      "half-ind",      "positive-influence",
      "maj1",          "robust",        "remark",
      "sigma-rho",     "sigma-rho-boundary",
  };
}

inline std::vector<std::string> family_names() {
  return {"labeled", "labeled-mindeg1", "cycles", "paths", "completes", "stars"};
}

inline constexpr int kMaxLabeledScan = 7;
inline constexpr int kMaxNamedScan = 10;
inline constexpr int kMaxErrataScan = 6;

namespace detail {

inline int worker_count() {
  if (const char* s = std::getenv("ALLIANCES_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Edge bit i of a labeled graph on n vertices is pair i in the
// lexicographic list (0,1),(0,2),...,(1,2),...
inline Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline bool mask_has_isolated(int n, std::uint64_t mask) {
  std::uint32_t seen = 0;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) seen |= (1u << u) | (1u << v);
  return seen != (n >= 32 ? ~0u : (1u << n) - 1);
}

}  // namespace detail

// Streams every graph of the family. Labeled families enumerate all edge
// subsets per vertex count, so they are capped at n_max <= 7; the named
// families go up to n_max <= 10.
inline void for_each_family_graph(std::string_view family, int n_max,
                                  const std::function<void(const Graph&)>& fn) {
  if (n_max < 1) fail(Err::bad_params, "n_max must be >= 1");
  if (family == "labeled" || family == "labeled-mindeg1") {
    if (n_max > kMaxLabeledScan)
      fail(Err::bad_params, "labeled families are capped at n_max <= " +
                                std::to_string(kMaxLabeledScan));
    bool mindeg1 = family == "labeled-mindeg1";
    for (int n = 1; n <= n_max; ++n) {
      int pairs = n * (n - 1) / 2;
      for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        if (mindeg1 && detail::mask_has_isolated(n, mask)) continue;
        fn(detail::labeled_graph(n, mask));
      }
    }
    return;
  }
  if (n_max > kMaxNamedScan)
    fail(Err::bad_params,
         "named families are capped at n_max <= " + std::to_string(kMaxNamedScan));
  if (family == "cycles") {
    for (int n = 3; n <= n_max; ++n) fn(cycle(n));
  } else if (family == "paths") {
    for (int n = 1; n <= n_max; ++n) fn(path(n));
  } else if (family == "completes") {
    for (int n = 1; n <= n_max; ++n) fn(complete(n));
  } else if (family == "stars") {
    for (int k = 1; k + 1 <= n_max; ++k) fn(star(k));
  } else {
    fail(Err::bad_params, "unknown family '" + std::string(family) + "'");
  }
}

namespace detail {

struct Recorder {
  PropositionReport* rep;
  const Graph* g;

  void compare(const VertexSet& s, bool direct, bool framework, std::string context = {}) {
    ++rep->sets_checked;
    if (direct == framework) {
      ++rep->agreements;
      return;
    }
    rep->counterexamples.push_back(
        {serialize_edge_list(*g), s.to_vector(), direct, framework, std::move(context)});
  }
};

// Enumerates subsets of `pool` by reusing one scratch set.
template <class F>
void for_each_subset_of(const std::vector<int>& pool, VertexSet& scratch, F&& fn) {
  std::uint64_t total = 1ull << pool.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    scratch.clear();
    for (size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1) scratch.insert(pool[i]);
    fn(scratch);
  }
}

inline std::string set_braces(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

}  // namespace detail

// Runs one proposition over one family. Each comparison pits the defining
// condition ("direct") against the alliance-spec translation ("framework")
// on the same instance.
inline PropositionReport verify_characterization(std::string_view prop_id,
                                                 std::string_view family, int n_max) {
  PropositionReport rep;
  rep.proposition_id = std::string(prop_id);
  rep.family = std::string(family);
  rep.n_max = n_max;

  auto ids = proposition_ids();
  if (std::find(ids.begin(), ids.end(), rep.proposition_id) == ids.end())
    fail(Err::unknown_proposition, rep.proposition_id);

  // Simple spec-vs-direct propositions share this driver.
  auto scan_sets = [&](const std::function<bool(const Graph&, const VertexSet&)>& direct,
                       const std::function<bool(const Graph&, const VertexSet&)>& framework) {
    for_each_family_graph(family, n_max, [&](const Graph& g) {
      ++rep.graphs_checked;
      detail::Recorder rec{&rep, &g};
      VertexSet s(g.n());
      for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask) {
        s.assign_low_bits(mask);
        rec.compare(s, direct(g, s), framework(g, s));
      }
    });
    return rep;
  };

  auto catalog_framework = [](CatalogEntry entry) {
    return [entry = std::move(entry)](const Graph& g, const VertexSet& s) {
      return check_catalog(g, s, entry);
    };
  };

  const std::string id = rep.proposition_id;

  if (id.rfind("signed-dom-", 0) == 0 || id.rfind("signed-total-", 0) == 0) {
    bool total = id.rfind("signed-total-", 0) == 0;
    long long k = std::stoll(id.substr(id.find_last_of('-') + 1));
    auto entry = catalog_entry(total ? "signed-total-dominating" : "signed-dominating", k);
    return scan_sets(
        [k, total](const Graph& g, const VertexSet& s) {
          return check_signed(g, SignedFunction::from_set(g.n(), s), k,
                              total ? SignedVariant::total : SignedVariant::closed);
        },
        catalog_framework(entry));
  }
  if (id == "efficient") {
    return scan_sets(
        [](const Graph& g, const VertexSet& s) {
          return check_signed(g, SignedFunction::from_set(g.n(), s), 0, SignedVariant::efficient);
        },
        catalog_framework(catalog_entry("signed-efficient")));
  }
  if (id == "minus" || id == "minus-reduced") {
    // Both sides are existential: the defining condition over the placement
    // of zeros, the spec side over the choice of neutral set.
    auto mode = id == "minus" ? NeutralsDomination::reduced_and_graph
                              : NeutralsDomination::reduced_only;
    AllianceSpec base = catalog_spec("minus-dominating");
    base.neutrals_mode = mode;
    for_each_family_graph(family, n_max, [&](const Graph& g) {
      ++rep.graphs_checked;
      detail::Recorder rec{&rep, &g};
      VertexSet s(g.n());
      VertexSet scratch(g.n());
      for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask) {
        s.assign_low_bits(mask);
        std::vector<int> rest = s.complement().to_vector();

        bool direct = false;
        SignedFunction f = SignedFunction::from_set(g.n(), s);
        std::uint64_t choices = 1ull << rest.size();
        for (std::uint64_t zmask = 0; zmask < choices && !direct; ++zmask) {
          for (size_t i = 0; i < rest.size(); ++i)
            f.values[static_cast<size_t>(rest[i])] = ((zmask >> i) & 1) ? 0 : -1;
          direct = check_signed(g, f, 0, SignedVariant::minus);
        }

        bool framework = false;
        detail::for_each_subset_of(rest, scratch, [&](const VertexSet& neutrals) {
          if (framework) return;
          AllianceSpec spec = base;
          spec.neutrals = neutrals;
          framework = check_alliance(g, s, spec);
        });

        rec.compare(s, direct, framework);
      }
    });
    return rep;
  }
  if (id == "partial-monopoly" || id == "monopoly" || id == "monopoly-paper") {
    MonopolyScope scope = id == "partial-monopoly" ? MonopolyScope::partial : MonopolyScope::full;
    return scan_sets(
        [scope](const Graph& g, const VertexSet& s) {
          return check_monopoly(g, s, scope);
        },
        catalog_framework(catalog_entry(id)));
  }
  if (id == "half-dom") {
    return scan_sets(
        [](const Graph& g, const VertexSet& s) {
          return check_alpha(g, s, Rational::of(1, 2), AlphaMode::dominating);
        },
        catalog_framework(catalog_entry("half-dominating")));
  }
  if (id == "half-ind") {
    return scan_sets(
        [](const Graph& g, const VertexSet& s) {
          return check_alpha(g, s, Rational::of(1, 2), AlphaMode::independent);
        },
        catalog_framework(catalog_entry("half-independent-complement")));
  }
  if (id == "positive-influence") {
    return scan_sets(
        [](const Graph& g, const VertexSet& s) {
          return check_threshold_set(g, s, ThresholdSetMode::positive_influence);
        },
        catalog_framework(catalog_entry("positive-influence")));
  }
  if (id == "maj1") {
    return scan_sets(
        [](const Graph& g, const VertexSet& s) {
          return maj_step(g, s).count() == g.n();
        },
        catalog_framework(catalog_entry("maj1")));
  }
  if (id == "robust") {
    return scan_sets(
        [](const Graph& g, const VertexSet& s) {
          return check_threshold_set(g, s, ThresholdSetMode::robust);
        },
        catalog_framework(catalog_entry("robust-majority")));
  }
  if (id == "remark") {
    // Claimed duality: S pinned at split difference r and dominating, vs
    // its complement pinned at -r and dominating.
    for_each_family_graph(family, n_max, [&](const Graph& g) {
      ++rep.graphs_checked;
      detail::Recorder rec{&rep, &g};
      VertexSet s(g.n());
      for (long long r = -n_max; r <= n_max; ++r) {
        AllianceSpec left{IntSet::finite({r}), IntSet::all(), true};
        AllianceSpec right{IntSet::all(), IntSet::finite({-r}), true};
        for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask) {
          s.assign_low_bits(mask);
          bool direct = check_alliance(g, s, left);
          bool framework = check_alliance(g, s.complement(), right);
          rec.compare(s, direct, framework, "r=" + std::to_string(r));
        }
      }
    });
    return rep;
  }
  if (id == "sigma-rho" || id == "sigma-rho-boundary") {
    // Only regular graphs of degree 2 or 3 are in scope. The plain variant
    // accounts for vertices with no member neighbor, whose in-set degree 0
    // must lie in rho even though they are not on the boundary; the
    // "-boundary" variant drops that term and documents where the purely
    // boundary-quantified translation breaks.
    bool boundary_only = id == "sigma-rho-boundary";
    for_each_family_graph(family, n_max, [&](const Graph& g) {
      int r = 0;
      if (!g.is_regular(&r) || (r != 2 && r != 3)) return;
      ++rep.graphs_checked;
      detail::Recorder rec{&rep, &g};
      VertexSet s(g.n());
      int vals = r + 1;
      for (std::uint64_t smask = 0; smask < (1ull << vals); ++smask) {
        for (std::uint64_t rmask = 0; rmask < (1ull << vals); ++rmask) {
          SigmaRho sr;
          for (int x = 0; x < vals; ++x) {
            if ((smask >> x) & 1) sr.sigma.push_back(x);
            if ((rmask >> x) & 1) sr.rho.push_back(x);
          }
          auto [din, dout] = sigma_rho_translate(sr, r);
          AllianceSpec spec{din, dout, false};
          std::string context = "sigma=" + detail::set_braces(sr.sigma) +
                                " rho=" + detail::set_braces(sr.rho) + " r=" + std::to_string(r);
          for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask) {
            s.assign_low_bits(mask);
            bool direct = check_sigma_rho(g, s, sr);
            bool framework = check_alliance(g, s, spec);
            if (!boundary_only && framework)
              framework = dout.contains(-r) || is_dominating(g, s);
            rec.compare(s, direct, framework, context);
          }
        }
      }
    });
    return rep;
  }
  fail(Err::unknown_proposition, id);
}

struct GallaiResult {
  int min_half_dominating = 0;
  int max_half_independent = 0;
  bool holds = false;
  bool isolated_vertices = false;  // outside the identity's applicability; still computed
};

// Smallest half-dominating set (over non-empty candidates; on graphs
// without isolated vertices the empty set never qualifies anyway) plus
// largest half-independent set, checked against n.
inline GallaiResult gallai_check(const Graph& g) {
  const int n = g.n();
  if (n > kMaxEnumerateAll)
    fail(Err::graph_too_large_for_exhaustive, "n=" + std::to_string(n));
  GallaiResult res;
  res.isolated_vertices = n > 0 && g.min_degree() == 0;
  int best_min = n;  // the full set is always half-dominating
  int best_max = 0;  // the empty set is always half-independent
  Rational half = Rational::of(1, 2);
  VertexSet x(n);
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    x.assign_low_bits(mask);
    int size = x.count();
    if (size < best_min && check_alpha(g, x, half, AlphaMode::dominating)) best_min = size;
    if (size > best_max && check_alpha(g, x, half, AlphaMode::independent)) best_max = size;
  }
  res.min_half_dominating = n == 0 ? 0 : best_min;
  res.max_half_independent = best_max;
  res.holds = res.min_half_dominating + res.max_half_independent == n;
  return res;
}

struct GallaiViolation {
  std::string graph_edgelist;
  int min_half_dominating = 0;
  int max_half_independent = 0;
};

struct GallaiScan {
  std::string family;
  int n_max = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t holds = 0;
  std::vector<GallaiViolation> violations;
};

// Family-wide sweep of the identity. Labeled families are chunked across
// workers (ALLIANCES_THREADS, default: available parallelism); partial
// results merge in chunk order, so the report does not depend on scheduling.
inline GallaiScan gallai_scan(std::string_view family, int n_max) {
  GallaiScan scan;
  scan.family = std::string(family);
  scan.n_max = n_max;

  if (family == "labeled" || family == "labeled-mindeg1") {
    if (n_max < 1 || n_max > kMaxLabeledScan)
      fail(Err::bad_params,
           "labeled families are capped at n_max <= " + std::to_string(kMaxLabeledScan));
    bool mindeg1 = family == "labeled-mindeg1";
    struct Partial {
      std::uint64_t checked = 0;
      std::uint64_t holds = 0;
      std::vector<GallaiViolation> violations;
    };
    for (int n = 1; n <= n_max; ++n) {
      int pairs = n * (n - 1) / 2;
      std::uint64_t total = 1ull << pairs;
      int workers = std::min<std::uint64_t>(detail::worker_count(), total);
      std::uint64_t chunk_count = std::min<std::uint64_t>(total, 64u * workers);
      std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;
      std::vector<Partial> partials(chunk_count);
      std::atomic<std::uint64_t> next{0};
      auto work = [&] {
        while (true) {
          std::uint64_t c = next.fetch_add(1);
          if (c >= chunk_count) return;
          Partial& p = partials[c];
          std::uint64_t lo = c * chunk_size;
          std::uint64_t hi = std::min(total, lo + chunk_size);
          for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (mindeg1 && detail::mask_has_isolated(n, mask)) continue;
            Graph g = detail::labeled_graph(n, mask);
            GallaiResult r = gallai_check(g);
            ++p.checked;
            if (r.holds)
              ++p.holds;
            else
              p.violations.push_back(
                  {serialize_edge_list(g), r.min_half_dominating, r.max_half_independent});
          }
        }
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < workers; ++t) pool.emplace_back(work);
      work();
      for (auto& t : pool) t.join();
      for (auto& p : partials) {
        scan.graphs_checked += p.checked;
        scan.holds += p.holds;
        for (auto& v : p.violations) scan.violations.push_back(std::move(v));
      }
    }
    return scan;
  }

  for_each_family_graph(family, n_max, [&](const Graph& g) {
    GallaiResult r = gallai_check(g);
    ++scan.graphs_checked;
    if (r.holds)
      ++scan.holds;
    else
      scan.violations.push_back(
          {serialize_edge_list(g), r.min_half_dominating, r.max_half_independent});
  });
  return scan;
}

// Full sweep: every proposition over both labeled families.
inline std::vector<PropositionReport> errata_scan(int n_max) {
  if (n_max < 1 || n_max > kMaxErrataScan)
    fail(Err::bad_params, "errata scan is capped at n_max <= " + std::to_string(kMaxErrataScan));
  std::vector<PropositionReport> reports;
  for (const auto& id : proposition_ids())
    for (const char* family : {"labeled", "labeled-mindeg1"})
      reports.push_back(verify_characterization(id, family, n_max));
  return reports;
}

inline std::string render_text_summary(const std::vector<PropositionReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.proposition_id + " [" + r.family + ", n<=" + std::to_string(r.n_max) +
           "]: graphs=" + std::to_string(r.graphs_checked) +
           " checks=" + std::to_string(r.sets_checked) +
           " agreements=" + std::to_string(r.agreements) +
           " counterexamples=" + std::to_string(r.counterexamples.size()) + "\n";
    if (!r.counterexamples.empty()) {
      const auto& c = r.counterexamples.front();
      std::string graph = c.graph_edgelist;
      for (auto& ch : graph)
        if (ch == '\n') ch = ' ';
      out += "  first: graph [" + graph + "] set " + detail::set_braces(c.set) +
             " direct=" + (c.direct ? "true" : "false") +
             " framework=" + (c.framework ? "true" : "false");
      if (!c.context.empty()) out += " (" + c.context + ")";
      out += "\n";
    }
  }
  return out;
}

}  // namespace alliances
