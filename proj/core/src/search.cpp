#include "islide/search.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <thread>

#include "islide/error.hpp"
#include "islide/independence.hpp"
#include "islide/isomorphism.hpp"
#include "islide/reconfig.hpp"

namespace islide {

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > kMaxSearchOrder) {
    throw Error(ErrorKind::InvalidArgument, "search order must lie in 1..8, got " + std::to_string(n));
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if ((mask >> t) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t mask_of(const Graph& g) {
  if (g.order() > kMaxSearchOrder) throw Error(ErrorKind::InvalidArgument, "mask form needs n <= 8");
  std::uint64_t mask = 0;
  int t = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << t;
    }
  }
  return mask;
}

void enumerate_labeled_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (connected_only && !g.is_connected()) continue;
    visit(g);
  }
}

namespace {

struct Target {
  Graph graph;
  std::vector<int> degrees;
  Graph canonical;
};

struct ShardResult {
  std::uint64_t examined = 0;
  std::vector<std::vector<std::uint64_t>> hits;  // per target, increasing mask
};

void scan_shard(int n, std::uint64_t lo, std::uint64_t hi, const std::vector<Target>& targets,
                const std::vector<char>& active, const SearchOptions& opts, ShardResult& out) {
  out.hits.assign(targets.size(), {});
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    ++out.examined;
    const Graph g = graph_from_mask(n, mask);
    if (opts.connected_only && !g.is_connected()) continue;
    if (opts.use_filters) {
      const auto summary = i_set_summary(g);
      bool any = false;
      for (std::size_t t = 0; t < targets.size(); ++t) {
        any = any || (active[t] && static_cast<std::size_t>(targets[t].graph.order()) == summary.count);
      }
      if (!any) continue;
    }
    const auto sets = minimum_maximal_independent_sets(g);
    if (sets.size() > static_cast<std::size_t>(kMaxVertices)) continue;
    const auto sg = build_slide_graph(g, sets);
    const auto degrees = sg.degree_sequence();
    std::optional<Graph> canonical;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!active[t] || out.hits[t].size() >= opts.witness_cap) continue;
      const auto& target = targets[t];
      if (opts.use_filters && degrees != target.degrees) continue;
      if (!canonical) canonical = canonical_form(sg.skeleton()).graph;
      if (*canonical == target.canonical) out.hits[t].push_back(mask);
    }
  }
}

int thread_count(const SearchOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<SearchReport> search_many(const std::vector<Graph>& targets_in, const SearchOptions& opts) {
  if (opts.max_n < 1 || opts.max_n > kMaxSearchOrder) {
    throw Error(ErrorKind::InvalidArgument, "max_n must lie in 1..8, got " + std::to_string(opts.max_n));
  }
  std::vector<Target> targets;
  for (const auto& t : targets_in) {
    if (t.order() > 30) throw Error(ErrorKind::InvalidArgument, "search targets are limited to 30 vertices");
    targets.push_back({t, t.degree_sequence(), canonical_form(t).graph});
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<SearchReport> reports(targets.size());
  std::vector<char> active(targets.size(), 1);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    reports[t].target = targets[t].graph;
    reports[t].max_n = opts.max_n;
    reports[t].connected_only = opts.connected_only;
  }

  const int threads = thread_count(opts);
  for (int n = 1; n <= opts.max_n; ++n) {
    if (std::none_of(active.begin(), active.end(), [](char a) { return a != 0; })) break;
    const std::uint64_t total = labeled_graph_count(n);
    const int shards = static_cast<int>(std::min<std::uint64_t>(threads, total));
    std::vector<ShardResult> results(shards);
    std::vector<std::thread> pool;
    for (int s = 0; s < shards; ++s) {
      std::uint64_t lo = total * s / shards;
      std::uint64_t hi = total * (s + 1) / shards;
      if (shards == 1) {
        scan_shard(n, lo, hi, targets, active, opts, results[s]);
      } else {
        pool.emplace_back(scan_shard, n, lo, hi, std::cref(targets), std::cref(active), std::cref(opts),
                          std::ref(results[s]));
      }
    }
    for (auto& th : pool) th.join();

    std::uint64_t examined = 0;
    for (const auto& r : results) examined += r.examined;
    std::size_t found_this_order = 0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!active[t]) continue;
      auto& rep = reports[t];
      rep.graphs_examined += examined;
      for (const auto& r : results) {
        for (auto mask : r.hits[t]) {
          if (rep.witnesses.size() >= opts.witness_cap) {
            rep.witnesses_truncated = true;
            break;
          }
          rep.witnesses.push_back(graph_from_mask(n, mask));
          ++found_this_order;
        }
      }
      if (!rep.witnesses.empty() && !opts.all_witnesses) {
        rep.witnesses.resize(1);
        active[t] = 0;
      }
    }
    if (opts.progress) {
      opts.progress("n=" + std::to_string(n) + ": " + std::to_string(examined) + " graphs scanned, " +
                    std::to_string(found_this_order) + " witnesses");
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& rep : reports) rep.elapsed = elapsed;
  return reports;
}

SearchReport find_seed(const Graph& target, const SearchOptions& opts) {
  auto rep = std::move(search_many({target}, opts).front());
  rep.note = rep.witnesses.empty()
                 ? "no seed on at most " + std::to_string(opts.max_n) + " vertices"
                 : "seed found on " + std::to_string(rep.witnesses.front().order()) + " vertices";
  return rep;
}

SearchReport confirm_non_realizable(const Graph& target, const SearchOptions& opts) {
  auto rep = find_seed(target, opts);
  rep.note = rep.witnesses.empty()
                 ? "no seed among labeled graphs on at most " + std::to_string(opts.max_n) +
                       " vertices; bounded corroboration, not a proof"
                 : "FATAL: seed found for a target expected to have none";
  return rep;
}

TableReport verify_table(int max_total, int search_max_n, const SearchOptions& search_opts) {
  if (max_total < 3 || max_total > 26) {
    throw Error(ErrorKind::InvalidArgument, "max_total must lie in 3..26");
  }
  TableReport table;
  table.max_total = max_total;
  table.search_max_n = search_max_n;

  std::vector<Graph> exception_targets;
  std::vector<std::size_t> exception_rows;
  for (const auto& spec : theta_specs_up_to(max_total)) {
    TableEntry e;
    e.spec = spec;
    auto seed = build_theta_seed_complement(spec);
    e.verdict = seed.verdict;
    if (seed.verdict == Verdict::NotRealizable) {
      e.construction = seed.message;
      e.passed = true;
      e.detail = "not realizable";
      if (search_max_n > 0 && spec.vertex_count() <= kMaxSearchOrder) {
        exception_targets.push_back(theta(spec));
        exception_rows.push_back(table.entries.size());
      }
    } else {
      auto reports = verify_theta_seed(spec, {.force_general = false, .cross_check = true});
      e.construction = std::string(to_string(reports.front().id));
      e.passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
      for (const auto& r : reports) {
        if (const auto* f = r.failure()) {
          e.detail += std::string(to_string(r.id)) + ": " + f->name + " (" + f->detail + ") ";
        }
      }
      if (e.passed) {
        e.detail = "verified";
        for (std::size_t i = 1; i < reports.size(); ++i) e.detail += ", also " + std::string(to_string(reports[i].id));
      }
    }
    table.entries.push_back(std::move(e));
  }

  if (!exception_targets.empty()) {
    SearchOptions opts = search_opts;
    opts.max_n = search_max_n;
    opts.all_witnesses = false;
    auto reports = search_many(exception_targets, opts);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      auto& e = table.entries[exception_rows[i]];
      if (reports[i].witnesses.empty()) {
        e.detail = "not realizable; no seed on <= " + std::to_string(search_max_n) + " vertices";
      } else {
        e.passed = false;
        e.detail = "FATAL: search found a seed";
      }
    }
  }
  table.passed = std::all_of(table.entries.begin(), table.entries.end(), [](const auto& e) { return e.passed; });
  return table;
}

}  // namespace islide
