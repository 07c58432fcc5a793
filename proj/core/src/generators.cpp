#include "islide/generators.hpp"

#include "islide/error.hpp"

namespace islide {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void require_capacity(int n) {
  if (n > kMaxVertices) {
    throw Error(ErrorKind::Capacity, "graph would need " + std::to_string(n) + " vertices");
  }
}

}  // namespace

std::string ThetaSpec::invalid_reason() const {
  if (j < 1 || k < 1 || l < 1) return "path lengths must be positive";
  if (!(j <= k && k <= l)) return "path lengths must satisfy j <= k <= l";
  if (j == 1 && k == 1) return "two paths of length 1 would form a multi-edge";
  return {};
}

std::string to_string(const ThetaSpec& spec) {
  return "theta(" + std::to_string(spec.j) + "," + std::to_string(spec.k) + "," +
         std::to_string(spec.l) + ")";
}

NamedGraph parse_named_graph(std::string_view name) {
  if (name == "path") return NamedGraph::Path;
  if (name == "cycle") return NamedGraph::Cycle;
  if (name == "complete") return NamedGraph::Complete;
  if (name == "star") return NamedGraph::Star;
  if (name == "wheel") return NamedGraph::Wheel;
  if (name == "fan") return NamedGraph::Fan;
  if (name == "diamond") return NamedGraph::Diamond;
  if (name == "kappa") return NamedGraph::Kappa;
  if (name == "house") return NamedGraph::House;
  if (name == "paw") return NamedGraph::Paw;
  if (name == "obstruction_T" || name == "obstruction_t") return NamedGraph::ObstructionT;
  throw Error(ErrorKind::InvalidArgument, "unknown graph kind: " + std::string(name));
}

Graph make_named_graph(NamedGraph kind, int size) {
  switch (kind) {
    case NamedGraph::Path: return path_graph(size);
    case NamedGraph::Cycle: return cycle_graph(size);
    case NamedGraph::Complete: return complete_graph(size);
    case NamedGraph::Star: return star_graph(size);
    case NamedGraph::Wheel: return wheel_graph(size);
    case NamedGraph::Fan: return fan_graph(size);
    case NamedGraph::Diamond: return diamond_graph();
    case NamedGraph::Kappa: return kappa_graph();
    case NamedGraph::House: return house_graph();
    case NamedGraph::Paw: return paw_graph();
    case NamedGraph::ObstructionT: return obstruction_t_graph();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown graph kind");
}

Graph path_graph(int n) {
  require(n >= 1, "path needs at least one vertex");
  require_capacity(n);
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  require_capacity(n);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  require_capacity(leaves + 1);
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph wheel_graph(int rim) {
  require(rim >= 3, "wheel needs at least three rim vertices");
  require_capacity(rim + 1);
  Graph g(rim + 1);
  for (int v = 0; v < rim; ++v) {
    g.add_edge(v, (v + 1) % rim);
    g.add_edge(v, rim);
  }
  return g;
}

Graph fan_graph(int path_len) {
  require(path_len >= 1, "fan needs at least one path vertex");
  require_capacity(path_len + 1);
  Graph g(path_len + 1);
  for (int v = 0; v < path_len; ++v) {
    if (v + 1 < path_len) g.add_edge(v, v + 1);
    g.add_edge(v, path_len);
  }
  return g;
}

Graph diamond_graph() { return theta({1, 2, 2}); }
Graph kappa_graph() { return theta({2, 2, 3}); }
Graph house_graph() { return theta({1, 2, 3}); }

Graph paw_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

Graph obstruction_t_graph() {
  enum { X, Y, A1, A2, B1, B2, D1, D2, D3 };
  return Graph(9, {{X, A1}, {A1, A2}, {A2, Y},
                   {X, B1}, {B1, B2}, {B2, Y},
                   {X, D1}, {D1, D2}, {D2, D3}, {D3, Y},
                   {A1, B2}});
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1, "both sides need a vertex");
  require_capacity(a + b);
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph cube_graph() {
  Graph g(8);
  for (int v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

Graph hexagonal_prism_graph() {
  Graph g(12);
  for (int i = 0; i < 6; ++i) {
    g.add_edge(i, (i + 1) % 6);
    g.add_edge(6 + i, 6 + (i + 1) % 6);
    g.add_edge(i, 6 + i);
  }
  return g;
}

Graph theta(const ThetaSpec& spec) {
  if (auto reason = spec.invalid_reason(); !reason.empty()) {
    throw Error(ErrorKind::InvalidArgument, to_string(spec) + ": " + reason);
  }
  require_capacity(spec.vertex_count());
  Graph g(spec.vertex_count());
  int next = 2;
  for (int len : {spec.j, spec.k, spec.l}) {
    int prev = 0;
    for (int step = 1; step < len; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

}  // namespace islide
