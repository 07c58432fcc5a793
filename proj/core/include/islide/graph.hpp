#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace islide {

inline constexpr int kMaxVertices = 64;

/// Subset of the vertices of one graph, stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  /// The set holding exactly the listed vertices.
  static constexpr VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  /// The set {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  /// Lowest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet{bits_ ^ o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  /// Members in increasing order.
  std::vector<int> to_vector() const;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on 1..64 vertices with bitset adjacency rows.
///
/// Rows are kept symmetric and loop-free by every mutator; bits at or above
/// `order()` are always clear.
class Graph {
 public:
  /// Edgeless graph on `n` vertices. Throws Error(Capacity) outside 1..64.
  explicit Graph(int n = 1);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const;  // edge count

  VertexSet neighbors(int v) const { return VertexSet{rows_[v]}; }
  VertexSet closed_neighbors(int v) const { return VertexSet{rows_[v] | (std::uint64_t{1} << v)}; }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Adds uv; throws on loops or out-of-range endpoints. Idempotent.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  bool is_independent(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  /// Every vertex lies in `s` or has a neighbour in it.
  bool dominates(VertexSet s) const;
  bool is_connected() const;

  Graph induced(VertexSet s) const;
  /// Image under a relabeling: vertex v becomes perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  bool operator==(const Graph& o) const;

 private:
  int n_;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Cartesian product; vertex (x, y) has index x * b.order() + y.
Graph cartesian_product(const Graph& a, const Graph& b);

}  // namespace islide
