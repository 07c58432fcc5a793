// Command-line front end: slide graphs, theta seeds, lemma sweeps, searches,
// line-graph and planar seeds.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "islide/error.hpp"
#include "islide/generators.hpp"
#include "islide/graph_ops.hpp"
#include "islide/independence.hpp"
#include "islide/io.hpp"
#include "islide/isomorphism.hpp"
#include "islide/json.hpp"
#include "islide/planar.hpp"
#include "islide/reconfig.hpp"
#include "islide/search.hpp"
#include "islide/seeds.hpp"

using namespace islide;

namespace {

enum Exit { kPass = 0, kVerdict = 1, kUsage = 2, kResource = 3 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse:
    case ErrorKind::InvalidRotation: return kUsage;
    case ErrorKind::Capacity:
    case ErrorKind::SetCountCap: return kResource;
    default: return kVerdict;
  }
}

struct InputFlags {
  std::string path;
  std::string g6;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("--input", path, "graph file (edge list or graph6)");
    auto* inline_g6 = cmd->add_option("--g6", g6, "graph6 string");
    file->excludes(inline_g6);
    inline_g6->excludes(file);
  }

  Graph load() const {
    if (!g6.empty()) return from_graph6(g6);
    if (path.empty()) throw Error(ErrorKind::InvalidArgument, "give --input FILE or --g6 STRING");
    return parse_graph_text(read_file(path));
  }
};

Json graph_block(const Graph& g) {
  Json j = graph_to_json(g);
  if (g.order() <= 62) j["graph6"] = to_graph6(g);
  return j;
}

void print_text_slide(const SlideGraph& sg, const IndependenceReport& rep, bool alpha) {
  std::cout << "i = " << rep.i << "\nalpha = " << rep.alpha << "\ni-sets = " << rep.i_sets.size()
            << "\nalpha-sets = " << rep.alpha_sets.size() << "\n"
            << (alpha ? "alpha-graph" : "i-graph") << ": " << sg.order() << " nodes, " << sg.size()
            << " edges\n";
  for (int x = 0; x < sg.order(); ++x) {
    std::cout << "  " << x << ": {";
    bool first = true;
    for (int v : sg.nodes[x]) {
      std::cout << (first ? "" : ",") << v;
      first = false;
    }
    std::cout << "}\n";
  }
  for (const auto& e : sg.edges) {
    std::cout << "  " << e.a << " -- " << e.b << " (" << e.from << "->" << e.to << ")\n";
  }
}

int run_compute(const InputFlags& in, bool alpha, const std::string& format, std::size_t cap) {
  const Graph g = in.load();
  const auto rep = independence_report(g, cap);
  const auto sg = build_slide_graph(g, alpha ? rep.alpha_sets : rep.i_sets);
  if (format == "json") {
    Json out = {{"stats",
                 {{"n", g.order()},
                  {"i", rep.i},
                  {"alpha", rep.alpha},
                  {"i_set_count", rep.i_sets.size()},
                  {"alpha_set_count", rep.alpha_sets.size()},
                  {"well_covered", rep.well_covered()},
                  {"family", alpha ? "alpha" : "i"},
                  {"nodes", sg.order()},
                  {"edges", sg.size()}}},
                {"slide_graph", slide_graph_to_json(sg)}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << to_dot(sg);
  } else if (format == "graph6") {
    std::cout << to_graph6(sg.skeleton()) << "\n";
  } else {
    print_text_slide(sg, rep, alpha);
  }
  return kPass;
}

struct SeedFlags {
  std::vector<int> spec;
  bool verify = false;
  bool general = false;
  bool cross_check = false;
  std::string format = "json";
};

int run_seed(const SeedFlags& f) {
  if (f.spec.size() != 3) throw Error(ErrorKind::InvalidArgument, "seed needs three integers j k l");
  const ThetaSpec spec{f.spec[0], f.spec[1], f.spec[2]};
  const auto res = build_theta_seed_complement(spec, {.force_general = f.general});
  if (res.verdict == Verdict::InvalidSpec) {
    std::cerr << "invalid spec " << to_string(spec) << ": " << res.message << "\n";
    return kUsage;
  }
  if (res.verdict == Verdict::NotRealizable) {
    std::cout << "exception " << res.message << "\n";
    return kVerdict;
  }
  const Graph& gbar = *res.gbar;
  const auto& trace = *res.trace;
  const Graph g = complement(gbar);

  std::vector<VerificationReport> reports;
  if (f.verify) {
    reports = verify_theta_seed(spec, {.force_general = f.general, .cross_check = f.cross_check});
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

  if (f.format == "json") {
    Json out = {{"spec", {spec.j, spec.k, spec.l}},
                {"verdict", std::string(to_string(res.verdict))},
                {"complement_seed", graph_block(gbar)},
                {"seed", graph_block(g)},
                {"trace", trace_to_json(trace)}};
    if (f.verify) {
      Json v = Json::array();
      for (const auto& r : reports) v.push_back(verification_to_json(r));
      out["verification"] = v;
      out["passed"] = ok;
    }
    std::cout << out.dump(2) << "\n";
  } else if (f.format == "dot") {
    std::cout << to_dot(gbar, trace.names, "complement_seed");
  } else if (f.format == "graph6") {
    std::cout << to_graph6(gbar) << "\n" << to_graph6(g) << "\n";
  } else {
    std::cout << to_string(spec) << ": " << to_string(trace.id) << ", complement seed on " << gbar.order()
              << " vertices, " << gbar.size() << " edges\n";
    for (const auto& r : reports) {
      std::cout << to_string(r.id) << ": " << (r.passed ? "pass" : "FAIL") << " (i = " << r.i
                << ", " << r.i_set_count << " i-sets)\n";
      for (const auto& c : r.clauses) {
        std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
    }
  }
  return ok ? kPass : kVerdict;
}

struct LemmaFlags {
  int wheel_max = 10;
  int fan_max = 10;
  int line_max = 6;
};

bool report_line(const std::string& name, bool ok) {
  std::cout << (ok ? "pass " : "FAIL ") << name << "\n";
  return ok;
}

int run_lemmas(const LemmaFlags& f) {
  if (f.wheel_max > 63 || f.fan_max > 63 || f.line_max > kMaxSearchOrder) {
    throw Error(ErrorKind::Capacity, "lemma bounds exceed capacity");
  }
  bool ok = true;
  for (int k = 4; k <= f.wheel_max; ++k) {
    const Graph g = complement(wheel_graph(k));
    const auto ig = i_graph(g);
    const auto ag = alpha_graph(g);
    const Graph c = cycle_graph(k);
    ok &= report_line("wheel k=" + std::to_string(k) + ": i-graph and alpha-graph ~ C_" + std::to_string(k),
                      is_isomorphic(ig.skeleton(), c) && is_isomorphic(ag.skeleton(), c));
  }
  for (int k = 2; k <= f.fan_max; ++k) {
    const Graph g = complement(fan_graph(k));
    const Graph p = path_graph(k - 1);
    ok &= report_line("fan k=" + std::to_string(k) + ": i-graph and alpha-graph ~ P_" + std::to_string(k - 1),
                      is_isomorphic(i_graph(g).skeleton(), p) && is_isomorphic(alpha_graph(g).skeleton(), p));
  }
  for (int n = 2; n <= f.line_max; ++n) {
    std::size_t checked = 0;
    std::size_t failed = 0;
    enumerate_labeled_graphs(n, true, [&](const Graph& root) {
      if (has_triangle(root)) return;
      ++checked;
      if (!is_isomorphic(i_graph(complement(root)).skeleton(), line_graph(root))) ++failed;
    });
    ok &= report_line("line n=" + std::to_string(n) + ": " + std::to_string(checked) +
                          " connected triangle-free roots, " + std::to_string(failed) + " failures",
                      failed == 0);
  }
  return ok ? kPass : kVerdict;
}

struct SearchFlags {
  std::vector<std::string> target;
  int max_n = 7;
  bool connected = false;
  bool expect_none = false;
  bool all = false;
  int threads = 0;
  bool quiet = false;
};

Graph search_target(const std::vector<std::string>& t) {
  if (t.size() == 2 && t[0] == "g6") return from_graph6(t[1]);
  if (t.size() == 2 && t[0] == "file") return parse_graph_text(read_file(t[1]));
  if (t.size() == 2 && t[0] == "named") return make_named_graph(parse_named_graph(t[1]), 0);
  if (t.size() == 4 && t[0] == "theta") {
    ThetaSpec s{std::stoi(t[1]), std::stoi(t[2]), std::stoi(t[3])};
    return theta(s);
  }
  throw Error(ErrorKind::InvalidArgument,
              "--target takes 'g6 STR', 'file PATH', 'named KIND' or 'theta J K L'");
}

int run_search(const SearchFlags& f) {
  if (f.max_n < 1 || f.max_n > kMaxSearchOrder) {
    throw Error(ErrorKind::InvalidArgument, "--max-n must lie in 1..8");
  }
  Graph target = search_target(f.target);
  SearchOptions opts;
  opts.max_n = f.max_n;
  opts.connected_only = f.connected;
  opts.all_witnesses = f.all;
  opts.threads = f.threads;
  if (!f.quiet) opts.progress = [](const std::string& line) { std::cerr << line << "\n"; };
  auto rep = f.expect_none ? confirm_non_realizable(target, opts) : find_seed(target, opts);
  std::cout << search_report_to_json(rep).dump(2) << "\n";
  if (f.expect_none) return rep.witnesses.empty() ? kPass : kVerdict;
  return kPass;
}

int run_lineseed(const InputFlags& in) {
  const Graph h = in.load();
  Graph seed(1);
  try {
    seed = seed_from_line_graph(h);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ContainsDiamond) {
      std::cout << "diamond-found: " << e.what() << "\n";
      return kVerdict;
    }
    throw;
  }
  const auto rep = independence_report(seed);
  const auto ig = build_slide_graph(seed, rep.i_sets);
  const bool iso = ig.order() <= kMaxVertices && is_isomorphic(ig.skeleton(), h);
  Json out = {{"input", graph_block(h)},
              {"seed", graph_block(seed)},
              {"i", rep.i},
              {"alpha", rep.alpha},
              {"well_covered", rep.well_covered()},
              {"i_set_count", rep.i_sets.size()},
              {"i_graph_isomorphic", iso}};
  std::cout << out.dump(2) << "\n";
  return iso ? kPass : kVerdict;
}

int run_dualseed(const InputFlags& in, const std::string& rotation_path) {
  const Graph g = in.load();
  const auto rot = parse_rotation(read_file(rotation_path), g);
  const auto ps = planar_seed(g, rot);
  const auto rep = independence_report(ps.seed);
  const auto ig = build_slide_graph(ps.seed, rep.i_sets);
  const bool contains = ig.order() <= kMaxVertices && contains_induced(ig.skeleton(), g);
  const bool equal = ig.order() == g.order() && contains && is_isomorphic(ig.skeleton(), g);
  bool labels = true;
  for (const auto& [name, s] : ps.trace.expected_labels) labels &= ig.index_of(s) >= 0;
  Json out = {{"input", graph_block(g)},
              {"dual", graph_block(ps.dual.dual)},
              {"seed", graph_block(ps.seed)},
              {"trace", trace_to_json(ps.trace)},
              {"i", rep.i},
              {"alpha", rep.alpha},
              {"i_set_count", rep.i_sets.size()},
              {"contains_input_induced", contains},
              {"i_graph_isomorphic", equal},
              {"vertex_labels_present", labels}};
  std::cout << out.dump(2) << "\n";
  const bool ok = rep.i == 3 && rep.alpha == 3 && contains && labels;
  return ok ? kPass : kVerdict;
}

int run_table(int max_total, int search_n, int threads) {
  SearchOptions opts;
  opts.threads = threads;
  opts.progress = [](const std::string& line) { std::cerr << line << "\n"; };
  const auto table = verify_table(max_total, search_n, opts);
  std::cout << table_to_json(table).dump(2) << "\n";
  return table.passed ? kPass : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slide reconfiguration graphs of independent dominating sets"};
  app.require_subcommand(1);

  InputFlags compute_in;
  bool compute_alpha = false;
  std::string compute_format = "json";
  auto* compute = app.add_subcommand("compute", "i-graph (or alpha-graph) of a graph");
  compute_in.attach(compute);
  compute->add_flag("--alpha", compute_alpha, "use maximum independent sets");
  std::size_t compute_cap = kDefaultSetCap;
  compute->add_option("--cap", compute_cap, "abort past this many maximal independent sets");
  compute->add_option("--format", compute_format)->check(CLI::IsMember({"json", "dot", "graph6", "text"}));

  SeedFlags seed_flags;
  auto* seed = app.add_subcommand("seed", "complement seed for theta(j,k,l)");
  seed->add_option("spec", seed_flags.spec, "j k l")->expected(3)->required();
  seed->add_flag("--verify", seed_flags.verify, "verify the i-graph");
  seed->add_flag("--general", seed_flags.general, "use the most general applicable construction");
  seed->add_flag("--cross-check", seed_flags.cross_check, "verify every applicable construction");
  seed->add_option("--format", seed_flags.format)->check(CLI::IsMember({"json", "dot", "graph6", "text"}));

  LemmaFlags lemma_flags;
  auto* lemmas = app.add_subcommand("lemmas", "wheel, fan and line-graph sweeps");
  lemmas->add_option("--wheel-max", lemma_flags.wheel_max);
  lemmas->add_option("--fan-max", lemma_flags.fan_max);
  lemmas->add_option("--line-max", lemma_flags.line_max);

  SearchFlags search_flags;
  auto* search = app.add_subcommand("search", "bounded exhaustive seed search");
  search->add_option("--target", search_flags.target, "g6 STR | file PATH | named KIND | theta J K L")
      ->expected(2, 4)
      ->required();
  search->add_option("--max-n", search_flags.max_n);
  search->add_flag("--connected", search_flags.connected, "connected seeds only");
  search->add_flag("--expect-none", search_flags.expect_none, "exit 1 if any seed is found");
  search->add_flag("--all", search_flags.all, "collect every witness up to --max-n");
  search->add_option("--threads", search_flags.threads, "0 = all cores");
  search->add_flag("--quiet", search_flags.quiet, "no progress lines");

  InputFlags line_in;
  auto* lineseed = app.add_subcommand("lineseed", "seed for a diamond-free line graph");
  line_in.attach(lineseed);

  InputFlags dual_in;
  std::string rotation_path;
  auto* dualseed = app.add_subcommand("dualseed", "seed for a cubic bipartite plane graph");
  dual_in.attach(dualseed);
  dualseed->add_option("--rotation", rotation_path, "rotation file")->required();

  int table_max = 12;
  int table_search = 7;
  int table_threads = 0;
  auto* table = app.add_subcommand("table", "verify every theta graph up to a vertex bound");
  table->add_option("--max-total", table_max);
  table->add_option("--search-max-n", table_search, "0 skips the exception searches");
  table->add_option("--threads", table_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*compute) return run_compute(compute_in, compute_alpha, compute_format, compute_cap);
    if (*seed) return run_seed(seed_flags);
    if (*lemmas) return run_lemmas(lemma_flags);
    if (*search) return run_search(search_flags);
    if (*lineseed) return run_lineseed(line_in);
    if (*dualseed) return run_dualseed(dual_in, rotation_path);
    if (*table) return run_table(table_max, table_search, table_threads);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
