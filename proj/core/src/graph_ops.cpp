#include "islide/graph_ops.hpp"

#include <algorithm>
#include <string>

#include "islide/error.hpp"
#include "islide/generators.hpp"

namespace islide {

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) {
    throw Error(ErrorKind::InvalidArgument, "line graph of an edgeless graph");
  }
  if (edges.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(ErrorKind::Capacity,
                "line graph would need " + std::to_string(edges.size()) + " vertices");
  }
  Graph out(static_cast<int>(edges.size()));
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      auto [p, q] = edges[a];
      auto [r, s] = edges[b];
      if (p == r || p == s || q == r || q == s) {
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return out;
}

namespace {

// Orders h's vertices so that each one (after the first of its component)
// has an already placed neighbour; adjacency checks then prune early.
std::vector<int> connected_order(const Graph& h) {
  std::vector<int> order;
  VertexSet placed;
  while (placed != h.vertices()) {
    // Highest-degree unplaced vertex starts each component.
    int start = -1;
    for (int v : h.vertices() - placed) {
      if (start < 0 || h.degree(v) > h.degree(start)) start = v;
    }
    order.push_back(start);
    placed.insert(start);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (int w : h.neighbors(order[i]) - placed) {
        order.push_back(w);
        placed.insert(w);
      }
    }
  }
  return order;
}

struct InducedSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;
  std::vector<int> image;  // image[h-vertex] = g-vertex
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    // Required g-neighbourhood among already placed vertices.
    VertexSet must;
    VertexSet mapped;
    for (std::size_t i = 0; i < depth; ++i) {
      const int u = order[i];
      mapped.insert(image[u]);
      if (h.has_edge(u, v)) must.insert(image[u]);
    }
    for (int c : g.vertices() - used) {
      if (g.degree(c) < h.degree(v)) continue;
      if ((g.neighbors(c) & mapped) != must) continue;
      image[v] = c;
      used.insert(c);
      if (extend(depth + 1)) return true;
      used.erase(c);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
  InducedSearch search{g, h, connected_order(h), std::vector<int>(h.order(), -1), {}};
  if (!search.extend(0)) return std::nullopt;
  return search.image;
}

bool contains_induced(const Graph& g, const Graph& h) {
  return find_induced(g, h).has_value();
}

bool is_diamond_free(const Graph& g) { return !contains_induced(g, diamond_graph()); }
bool is_claw_free(const Graph& g) { return !contains_induced(g, star_graph(3)); }

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (!(g.neighbors(u) & g.neighbors(v)).empty()) return true;
  }
  return false;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    for (int d = 1; !frontier.empty(); ++d) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - seen;
      seen |= next;
      for (int v : frontier) dist[s][v] = d;
    }
  }
  return dist;
}

}  // namespace islide
