#include "islide/json.hpp"

#include "islide/error.hpp"
#include "islide/io.hpp"

namespace islide {

namespace {

template <class F>
auto parse_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  return parse_guard([&] {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
      int u = e.at(0).get<int>();
      int v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) {
        throw Error(ErrorKind::Parse, "bad edge in JSON graph");
      }
      g.add_edge(u, v);
    }
    return g;
  });
}

Json vertex_set_to_json(VertexSet s) { return Json(s.to_vector()); }

VertexSet vertex_set_from_json(const Json& j) {
  return parse_guard([&] {
    VertexSet s;
    for (const auto& x : j) {
      int v = x.get<int>();
      if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::Parse, "vertex out of range");
      s.insert(v);
    }
    return s;
  });
}

Json independence_to_json(const IndependenceReport& r) {
  Json i_sets = Json::array();
  for (auto s : r.i_sets) i_sets.push_back(vertex_set_to_json(s));
  Json alpha_sets = Json::array();
  for (auto s : r.alpha_sets) alpha_sets.push_back(vertex_set_to_json(s));
  return Json{{"i", r.i},
              {"alpha", r.alpha},
              {"well_covered", r.well_covered()},
              {"total_mis_count", r.total_mis_count},
              {"i_sets", i_sets},
              {"alpha_sets", alpha_sets}};
}

Json slide_graph_to_json(const SlideGraph& sg) {
  Json nodes = Json::array();
  for (auto s : sg.nodes) nodes.push_back(vertex_set_to_json(s));
  Json edges = Json::array();
  for (const auto& e : sg.edges) {
    edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"from", e.from}, {"to", e.to}});
  }
  return Json{{"base", graph_to_json(sg.base)}, {"nodes", nodes}, {"edges", edges}};
}

SlideGraph slide_graph_from_json(const Json& j) {
  return parse_guard([&] {
    Graph base = graph_from_json(j.at("base"));
    std::vector<VertexSet> family;
    for (const auto& s : j.at("nodes")) family.push_back(vertex_set_from_json(s));
    SlideGraph sg = build_slide_graph(base, family);
    std::vector<SlideMove> stored;
    for (const auto& e : j.at("edges")) {
      stored.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("from").get<int>(),
                        e.at("to").get<int>()});
    }
    if (stored != sg.edges) throw Error(ErrorKind::Parse, "stored slide edges disagree with the sets");
    return sg;
  });
}

Json trace_to_json(const ConstructionTrace& t) {
  Json names = Json::object();
  for (std::size_t v = 0; v < t.names.size(); ++v) names[t.names[v]] = v;
  Json labels = Json::object();
  for (const auto& [name, s] : t.expected_labels) labels[name] = vertex_set_to_json(s);
  return Json{{"construction_id", std::string(to_string(t.id))},
              {"params", t.params},
              {"names", names},
              {"expected_labels", labels},
              {"expected_order", t.expected_order},
              {"expected_i", t.expected_i},
              {"alpha_equal", t.alpha_equal}};
}

ConstructionTrace trace_from_json(const Json& j) {
  return parse_guard([&] {
    ConstructionTrace t;
    t.id = parse_construction_id(j.at("construction_id").get<std::string>());
    t.params = j.at("params").get<std::vector<int>>();
    const auto& names = j.at("names");
    t.names.assign(names.size(), {});
    for (const auto& [name, idx] : names.items()) {
      int v = idx.get<int>();
      if (v < 0 || v >= static_cast<int>(t.names.size()) || !t.names[v].empty()) {
        throw Error(ErrorKind::Parse, "vertex names are not a bijection");
      }
      t.names[v] = name;
    }
    for (const auto& [name, s] : j.at("expected_labels").items()) {
      t.expected_labels.emplace_back(name, vertex_set_from_json(s));
    }
    t.expected_order = j.at("expected_order").get<int>();
    t.expected_i = j.value("expected_i", 3);
    t.alpha_equal = j.at("alpha_equal").get<bool>();
    return t;
  });
}

Json verification_to_json(const VerificationReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back(Json{{"clause", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"spec", {r.spec.j, r.spec.k, r.spec.l}},
              {"construction_id", std::string(to_string(r.id))},
              {"passed", r.passed},
              {"i", r.i},
              {"alpha", r.alpha},
              {"i_set_count", r.i_set_count},
              {"alpha_set_count", r.alpha_set_count},
              {"clauses", clauses}};
}

Json search_report_to_json(const SearchReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json entry = graph_to_json(w);
    entry["graph6"] = to_graph6(w);
    witnesses.push_back(entry);
  }
  Json target = graph_to_json(r.target);
  if (r.target.order() <= 62) target["graph6"] = to_graph6(r.target);
  return Json{{"target", target},
              {"max_n", r.max_n},
              {"connected_only", r.connected_only},
              {"graphs_examined", r.graphs_examined},
              {"witness_count", r.witnesses.size()},
              {"witnesses", witnesses},
              {"witnesses_truncated", r.witnesses_truncated},
              {"elapsed", r.elapsed},
              {"note", r.note}};
}

SearchReport search_report_from_json(const Json& j) {
  return parse_guard([&] {
    SearchReport r;
    r.target = graph_from_json(j.at("target"));
    r.max_n = j.at("max_n").get<int>();
    r.connected_only = j.at("connected_only").get<bool>();
    r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(graph_from_json(w));
    r.witnesses_truncated = j.value("witnesses_truncated", false);
    r.elapsed = j.at("elapsed").get<double>();
    r.note = j.value("note", std::string{});
    return r;
  });
}

Json table_to_json(const TableReport& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    entries.push_back(Json{{"spec", {e.spec.j, e.spec.k, e.spec.l}},
                           {"verdict", std::string(to_string(e.verdict))},
                           {"construction", e.construction},
                           {"passed", e.passed},
                           {"detail", e.detail}});
  }
  return Json{{"max_total", t.max_total},
              {"search_max_n", t.search_max_n},
              {"passed", t.passed},
              {"entries", entries}};
}

}  // namespace islide
