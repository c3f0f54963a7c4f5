// Command-line front end: check sets, solve extremal problems, run
// propagation, drive the verification harness, and generate graphs.
// Exit codes: 0 success, 1 infeasible instance, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alliances/alliances.hpp"

namespace {

using namespace alliances;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
  std::string file;
  std::string family;
  std::string params;
  std::optional<std::uint64_t> seed;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--graph", file, "edge-list file (\"n m\" header then one \"u v\" per line)");
    cmd->add_option("--family", family, "generate the graph instead: " + family_list());
    cmd->add_option("--params", params, "comma-separated family parameters");
    cmd->add_option("--seed", seed, "seed for random-gnp");
  }

  static std::string family_list() {
    return "path|cycle|complete|complete-bipartite|star|random-gnp";
  }

  Graph load() const {
    if (file.empty() == family.empty())
      fail(Err::bad_params, "provide exactly one of --graph and --family");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) fail(Err::parse_error, "cannot open '" + file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_edge_list(buf.str());
    }
    return generate(family, parse_params(params), seed);
  }

  static std::vector<long long> parse_params(const std::string& text) {
    std::vector<long long> out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string item =
          comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
      try {
        size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        fail(Err::parse_error, "bad parameter '" + item + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  }
};

// Spec selection shared by check and solve: a catalog name (optionally with
// a parameter) or a raw D/O pair in the condition-set grammar.
struct SpecSource {
  std::string name;
  std::string param;  // "r=0" or bare "0"
  std::string d_text;
  std::string o_text;
  bool global = false;
  bool nonempty = false;
  std::string neutrals;
  std::string neutrals_mode = "both";

  void add_options(CLI::App* cmd) {
    cmd->add_option("--name", name, "catalog entry name");
    cmd->add_option("--param", param, "catalog parameter, e.g. r=0 or k=2");
    cmd->add_option("--D", d_text, "in-set condition: all | >=k | <=k | {a,b,...}");
    cmd->add_option("--O", o_text, "boundary condition, same grammar");
    cmd->add_flag("--global", global, "require the set to be dominating");
    cmd->add_flag("--nonempty", nonempty, "reject the empty set");
    cmd->add_option("--neutrals", neutrals, "neutral vertices, comma separated");
    cmd->add_option("--neutrals-mode", neutrals_mode, "both|graph|reduced (default both)")
        ->check(CLI::IsMember({"both", "graph", "reduced"}));
  }

  CatalogEntry resolve(const Graph& g) const {
    bool have_name = !name.empty();
    bool have_raw = !d_text.empty() || !o_text.empty();
    if (have_name == have_raw)
      fail(Err::bad_params, "provide exactly one of --name and --D/--O");

    CatalogEntry entry;
    if (have_name) {
      std::optional<long long> p;
      if (!param.empty()) {
        std::string v = param;
        if (size_t eq = v.find('='); eq != std::string::npos) v = v.substr(eq + 1);
        try {
          p = std::stoll(v);
        } catch (const std::exception&) {
          fail(Err::parse_error, "bad --param '" + param + "'");
        }
      }
      entry = catalog_entry(name, p);
    } else {
      entry.name = "raw";
      entry.spec.inside = d_text.empty() ? IntSet::all() : IntSet::parse(d_text);
      entry.spec.outside = o_text.empty() ? IntSet::all() : IntSet::parse(o_text);
      entry.spec.global = global;
      entry.spec.require_nonempty = nonempty;
    }
    if (!neutrals.empty()) {
      entry.spec.neutrals = parse_vertex_csv(g.n(), neutrals);
      if (neutrals_mode == "graph")
        entry.spec.neutrals_mode = NeutralsDomination::graph_only;
      else if (neutrals_mode == "reduced")
        entry.spec.neutrals_mode = NeutralsDomination::reduced_only;
    }
    return entry;
  }
};

void emit(const std::string& line) { std::cout << line << "\n"; }

int run_check(const GraphSource& gs, const SpecSource& ss, const std::string& set_csv,
              const std::string& format) {
  Graph g = gs.load();
  CatalogEntry entry = ss.resolve(g);
  VertexSet s = parse_vertex_csv(g.n(), set_csv);
  bool result = check_catalog(g, s, entry);
  if (format == "json")
    emit(check_to_json(result).dump());
  else
    emit(result ? "true" : "false");
  return kExitOk;
}

int run_solve(const GraphSource& gs, const SpecSource& ss, const std::string& objective,
              const std::string& algorithm, const std::string& format, bool stats) {
  Graph g = gs.load();
  CatalogEntry entry = ss.resolve(g);
  Objective obj = objective == "max" ? Objective::maximize : Objective::minimize;

  std::string algo = algorithm;
  if (algo == "auto") {
    bool bb_ok = obj == Objective::minimize && entry.spec.global && !entry.apply_to_complement;
    algo = bb_ok ? "branch-bound" : "exhaustive";
  }

  SolveResult r;
  if (algo == "branch-bound") {
    if (entry.apply_to_complement)
      fail(Err::bad_params, "branch-bound cannot solve complement-routed entries");
    if (obj != Objective::minimize)
      fail(Err::bad_params, "branch-bound only minimizes");
    r = bb_min_alliance(g, entry.spec);
  } else {
    r = solve_extremal(
        g, [&](const VertexSet& s) { return check_catalog(g, s, entry); }, obj);
  }

  if (format == "json") {
    emit(solve_to_json(r, stats).dump());
  } else if (r.feasible) {
    emit("feasible size=" + std::to_string(*r.size) + " witness=" + to_csv(*r.witness));
  } else {
    emit("infeasible");
  }
  return r.feasible ? kExitOk : kExitInfeasible;
}

int run_propagate(const GraphSource& gs, const std::string& seeds_csv,
                  std::optional<int> rounds, const std::string& thresholds, bool strict,
                  const std::string& format) {
  Graph g = gs.load();
  VertexSet seeds = parse_vertex_csv(g.n(), seeds_csv);
  std::optional<ThresholdMap> tm;
  if (!thresholds.empty()) tm = ThresholdMap::parse(g, thresholds);
  PropagationResult r = propagate(g, seeds, rounds, tm, strict);
  if (format == "json")
    emit(propagation_to_json(r).dump());
  else
    emit("final=" + to_csv(r.final_set) + " rounds_used=" + std::to_string(r.rounds_used));
  return kExitOk;
}

int run_verify(const std::string& prop, const std::string& family, int nmax,
               const std::string& format) {
  if (prop.empty()) {
    auto reports = errata_scan(nmax);
    if (format == "json")
      emit(reports_to_json(reports).dump());
    else
      std::cout << render_text_summary(reports);
    return kExitOk;
  }
  if (prop == "gallai") {
    GallaiScan scan = gallai_scan(family, nmax);
    if (format == "json") {
      emit(gallai_to_json(scan).dump());
    } else {
      emit("gallai [" + scan.family + ", n<=" + std::to_string(scan.n_max) +
           "]: graphs=" + std::to_string(scan.graphs_checked) +
           " holds=" + std::to_string(scan.holds) +
           " violations=" + std::to_string(scan.violations.size()));
    }
    return kExitOk;
  }
  PropositionReport rep = verify_characterization(prop, family, nmax);
  if (format == "json")
    emit(report_to_json(rep).dump());
  else
    std::cout << render_text_summary({rep});
  return kExitOk;
}

int run_generate(const GraphSource& gs, const std::string& out) {
  if (gs.family.empty()) fail(Err::bad_params, "generate needs --family");
  Graph g = generate(gs.family, GraphSource::parse_params(gs.params), gs.seed);
  std::string text = serialize_edge_list(g);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) fail(Err::parse_error, "cannot open '" + out + "'");
    f << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alliance checking, solving, propagation, and verification"};
  app.require_subcommand(1);

  GraphSource check_gs, solve_gs, prop_gs, gen_gs;
  SpecSource check_ss, solve_ss;
  std::string check_set, check_format = "text";
  std::string solve_objective = "min", solve_algorithm = "auto", solve_format = "text";
  bool solve_stats = false;
  std::string prop_seeds, prop_thresholds, prop_format = "text";
  std::optional<int> prop_rounds;
  bool prop_strict = false;
  std::string verify_prop, verify_family = "labeled", verify_format = "text";
  int verify_nmax = 0;
  std::string gen_out;

  CLI::App* check_cmd = app.add_subcommand("check", "evaluate a set against a spec");
  check_gs.add_options(check_cmd);
  check_ss.add_options(check_cmd);
  check_cmd->add_option("--set", check_set, "vertices, comma separated (empty = empty set)");
  check_cmd->add_option("--format", check_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* solve_cmd = app.add_subcommand("solve", "find an extremal satisfying set");
  solve_gs.add_options(solve_cmd);
  solve_ss.add_options(solve_cmd);
  solve_cmd->add_option("--objective", solve_objective, "min|max (default min)")
      ->check(CLI::IsMember({"min", "max"}));
  solve_cmd->add_option("--algorithm", solve_algorithm, "auto|exhaustive|branch-bound")
      ->check(CLI::IsMember({"auto", "exhaustive", "branch-bound"}));
  solve_cmd->add_option("--format", solve_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_flag("--stats", solve_stats, "include subsets_examined in JSON output");

  CLI::App* prop_cmd = app.add_subcommand("propagate", "run threshold/majority propagation");
  prop_gs.add_options(prop_cmd);
  prop_cmd->add_option("--seeds", prop_seeds, "seed vertices, comma separated");
  prop_cmd->add_option("--rounds", prop_rounds, "round budget (default: run to fixpoint)");
  prop_cmd->add_option("--thresholds", prop_thresholds,
                       "v:t pairs, comma separated (default: majority)");
  prop_cmd->add_flag("--strict", prop_strict, "strict majority rule");
  prop_cmd->add_option("--format", prop_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check definitions vs specs");
  verify_cmd->add_option("--prop", verify_prop,
                         "proposition id, or 'gallai' (default: full errata scan)");
  verify_cmd->add_option("--family", verify_family,
                         "labeled|labeled-mindeg1|cycles|paths|completes|stars");
  verify_cmd->add_option("--nmax", verify_nmax, "largest graph order to scan")->required();
  verify_cmd->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* gen_cmd = app.add_subcommand("generate", "emit a graph as an edge list");
  gen_gs.add_options(gen_cmd);
  gen_cmd->add_option("--out", gen_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check_cmd) return run_check(check_gs, check_ss, check_set, check_format);
    if (*solve_cmd)
      return run_solve(solve_gs, solve_ss, solve_objective, solve_algorithm, solve_format,
                       solve_stats);
    if (*prop_cmd)
      return run_propagate(prop_gs, prop_seeds, prop_rounds, prop_thresholds, prop_strict,
                           prop_format);
    if (*verify_cmd) return run_verify(verify_prop, verify_family, verify_nmax, verify_format);
    if (*gen_cmd) return run_generate(gen_gs, gen_out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
