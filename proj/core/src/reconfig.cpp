#include "islide/reconfig.hpp"

#include <algorithm>
#include <sstream>

#include "islide/error.hpp"

namespace islide {

namespace {

std::string set_string(VertexSet s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace

Graph SlideGraph::skeleton() const {
  if (order() > kMaxVertices) {
    throw Error(ErrorKind::Capacity,
                "slide graph has " + std::to_string(order()) + " nodes; skeleton holds at most 64");
  }
  Graph out(std::max(order(), 1));
  for (const auto& e : edges) out.add_edge(e.a, e.b);
  return out;
}

std::vector<int> SlideGraph::degree_sequence() const {
  std::vector<int> d;
  d.reserve(adjacency.size());
  for (const auto& nb : adjacency) d.push_back(static_cast<int>(nb.size()));
  std::sort(d.rbegin(), d.rend());
  return d;
}

int SlideGraph::index_of(VertexSet s) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
  return it != nodes.end() && *it == s ? static_cast<int>(it - nodes.begin()) : -1;
}

SlideGraph build_slide_graph(const Graph& g, std::vector<VertexSet> family) {
  if (family.empty()) throw Error(ErrorKind::InvalidArgument, "empty set family");
  const int size = family.front().size();
  for (auto s : family) {
    if (s.size() != size) throw Error(ErrorKind::InvalidArgument, "sets of mixed cardinality");
    if (!s.is_subset_of(g.vertices())) {
      throw Error(ErrorKind::InvalidArgument, "set " + set_string(s) + " leaves the vertex range");
    }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  SlideGraph sg{g, std::move(family), {}, {}};
  const auto& nodes = sg.nodes;
  sg.adjacency.resize(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if ((nodes[a] & nodes[b]).size() != size - 1) continue;
      const int from = (nodes[a] - nodes[b]).first();
      const int to = (nodes[b] - nodes[a]).first();
      if (!g.has_edge(from, to)) continue;
      sg.edges.push_back({static_cast<int>(a), static_cast<int>(b), from, to});
      sg.adjacency[a].push_back(static_cast<int>(b));
      sg.adjacency[b].push_back(static_cast<int>(a));
    }
  }
  for (auto& nb : sg.adjacency) std::sort(nb.begin(), nb.end());
  return sg;
}

SlideGraph i_graph(const Graph& g, std::size_t cap) {
  return build_slide_graph(g, minimum_maximal_independent_sets(g, cap));
}

SlideGraph alpha_graph(const Graph& g, std::size_t cap) {
  return build_slide_graph(g, independence_report(g, cap).alpha_sets);
}

std::vector<std::vector<int>> node_distances(const SlideGraph& sg) {
  const int m = sg.order();
  std::vector<std::vector<int>> dist(m, std::vector<int>(m, -1));
  std::vector<int> queue;
  for (int s = 0; s < m; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (int y : sg.adjacency[x]) {
        if (d[y] < 0) {
          d[y] = d[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

std::vector<InvariantViolation> check_slide_invariants(const SlideGraph& sg) {
  std::vector<InvariantViolation> out;
  const auto& nodes = sg.nodes;
  const int m = sg.order();

  for (const auto& e : sg.edges) {
    bool ok = e.a < e.b && nodes[e.b] == ((nodes[e.a] - VertexSet::single(e.from)) | VertexSet::single(e.to)) &&
              nodes[e.a].contains(e.from) && !nodes[e.a].contains(e.to) && sg.base.has_edge(e.from, e.to);
    if (!ok) {
      out.push_back({"move-validity", set_string(nodes[e.a]) + " -> " + set_string(nodes[e.b])});
    }
  }

  auto dist = node_distances(sg);
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      const int d = dist[x][y];
      if (d < 0) continue;
      const int diff = (nodes[x] - nodes[y]).size();
      if (d < diff) {
        out.push_back({"distance-bound", set_string(nodes[x]) + " and " + set_string(nodes[y]) +
                                             " at distance " + std::to_string(d)});
      }
      if (d == 2 && diff != 2) {
        out.push_back({"distance-two", set_string(nodes[x]) + " and " + set_string(nodes[y])});
      }
    }
  }

  for (int y = 0; y < m; ++y) {
    const auto& nb = sg.adjacency[y];
    for (std::size_t p = 0; p < nb.size(); ++p) {
      const int x = nb[p];
      const int y1 = (nodes[y] - nodes[x]).first();  // token that arrived from X
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        const int z = nb[q];
        const int y2 = (nodes[y] - nodes[z]).first();  // token that leaves towards Z
        const bool adjacent = std::binary_search(sg.adjacency[x].begin(), sg.adjacency[x].end(), z);
        if (adjacent != (y1 == y2)) {
          out.push_back({"triangle-rule", set_string(nodes[x]) + ", " + set_string(nodes[y]) +
                                              ", " + set_string(nodes[z])});
        }
      }
    }
  }

  // Independent neighbours of a node each move a different token.
  const int set_size = nodes.empty() ? 0 : nodes.front().size();
  for (int c = 0; c < m; ++c) {
    const auto& nb = sg.adjacency[c];
    if (nb.empty() || nb.size() > static_cast<std::size_t>(kMaxVertices)) continue;
    Graph local(static_cast<int>(nb.size()));
    for (std::size_t p = 0; p < nb.size(); ++p) {
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        if (std::binary_search(sg.adjacency[nb[p]].begin(), sg.adjacency[nb[p]].end(), nb[q])) {
          local.add_edge(static_cast<int>(p), static_cast<int>(q));
        }
      }
    }
    const int star = independence_report(local).alpha;
    if (star > set_size) {
      out.push_back({"star-bound", set_string(nodes[c]) + " centres an induced K_{1," +
                                       std::to_string(star) + "}"});
    }
  }
  return out;
}

std::string to_dot(const SlideGraph& sg, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int x = 0; x < sg.order(); ++x) {
    std::string label = "{";
    for (int v : sg.nodes[x]) label += (label.size() > 1 ? ",v" : "v") + std::to_string(v);
    out << "  " << x << " [label=\"" << label << "}\"];\n";
  }
  for (const auto& e : sg.edges) {
    out << "  " << e.a << " -- " << e.b << " [label=\"v" << e.from << "->v" << e.to << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace islide
