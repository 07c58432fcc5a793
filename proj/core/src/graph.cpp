#include "islide/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "islide/error.hpp"

namespace islide {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::SetCountCap: return "set-count-cap";
    case ErrorKind::InvalidRotation: return "invalid-rotation";
    case ErrorKind::NonSimpleDual: return "non-simple-dual";
    case ErrorKind::NotPlanar: return "not-planar";
    case ErrorKind::NotCubic: return "not-cubic";
    case ErrorKind::NotConnected: return "not-connected";
    case ErrorKind::NotBipartite: return "not-bipartite";
    case ErrorKind::NotALineGraph: return "not-a-line-graph";
    case ErrorKind::ContainsDiamond: return "contains-diamond";
    case ErrorKind::NotATriangle: return "not-a-triangle";
    case ErrorKind::Verification: return "verification";
  }
  return "unknown";
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorKind::Capacity,
                "graph order " + std::to_string(n) + " outside 1..64");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range: " +
                                                std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) {
    throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
  }
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::add_vertex() {
  if (n_ == kMaxVertices) {
    throw Error(ErrorKind::Capacity, "graph already has 64 vertices");
  }
  rows_[n_] = 0;
  return n_++;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = rows_[u] & ~((std::uint64_t{2} << u) - 1);
    for (int v : VertexSet{higher}) out.emplace_back(u, v);
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s) {
    if (rows_[v] & s.bits()) return false;
  }
  return true;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if ((s - VertexSet::single(v)).bits() & ~rows_[v]) return false;
  }
  return true;
}

bool Graph::dominates(VertexSet s) const {
  VertexSet covered = s;
  for (int v : s) covered |= neighbors(v);
  return covered == vertices();
}

bool Graph::is_connected() const {
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == vertices();
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> index(n_, -1);
  int k = 0;
  for (int v : s) index[v] = k++;
  Graph out(k);
  for (int u : s) {
    for (int v : neighbors(u) & s) {
      if (u < v) out.add_edge(index[u], index[v]);
    }
  }
  return out;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  return std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int m = b.order();
  Graph out(a.order() * m);
  for (int x = 0; x < a.order(); ++x) {
    for (auto [y1, y2] : b.edges()) out.add_edge(x * m + y1, x * m + y2);
  }
  for (auto [x1, x2] : a.edges()) {
    for (int y = 0; y < m; ++y) out.add_edge(x1 * m + y, x2 * m + y);
  }
  return out;
}

}  // namespace islide
