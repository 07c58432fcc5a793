#include "islide/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace islide {

namespace {

using Cells = std::vector<std::uint64_t>;

// Splits cells by neighbour counts into other cells until the partition is
// equitable. Every decision depends only on the partition structure, so the
// result commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::uint64_t splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        VertexSet cell{cells[c]};
        if (cell.size() < 2) continue;
        int lo = 64;
        int hi = -1;
        std::array<int, 64> count{};
        for (int v : cell) {
          count[v] = std::popcount(g.row(v) & splitter);
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) continue;
        Cells parts;
        for (int value = lo; value <= hi; ++value) {
          std::uint64_t part = 0;
          for (int v : cell) {
            if (count[v] == value) part |= std::uint64_t{1} << v;
          }
          if (part != 0) parts.push_back(part);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Cells cells{g_.vertices().bits()};
    std::vector<int> prefix;
    explore(cells, prefix);
    Graph out(n_);
    for (int u = 0; u < n_; ++u) {
      for (int v : VertexSet{best_rows_[u]}) {
        if (u < v) out.add_edge(u, v);
      }
    }
    return {out, best_labeling_};
  }

 private:
  void explore(Cells cells, std::vector<int>& prefix) {
    refine(g_, cells);
    if (cells.size() == static_cast<std::size_t>(n_)) {
      leaf(cells);
      return;
    }
    // First smallest non-singleton cell.
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int sz = std::popcount(cells[c]);
      if (sz > 1 && (target == cells.size() || sz < std::popcount(cells[target]))) target = c;
    }
    std::vector<int> tried;
    for (int v : VertexSet{cells[target]}) {
      if (equivalent_to_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      Cells child = cells;
      child[target] &= ~(std::uint64_t{1} << v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), std::uint64_t{1} << v);
      prefix.push_back(v);
      explore(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // v is skipped when an automorphism fixing the prefix pointwise maps an
  // already explored sibling onto it.
  bool equivalent_to_tried(int v, const std::vector<int>& tried,
                           const std::vector<int>& prefix) {
    if (tried.empty() || automorphisms_.empty()) return false;
    UnionFind orbits(n_);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) orbits.unite(x, gamma[x]);
    }
    return std::any_of(tried.begin(), tried.end(),
                       [&](int t) { return orbits.find(t) == orbits.find(v); });
  }

  void leaf(const Cells& cells) {
    std::vector<int> labeling(n_);
    for (int pos = 0; pos < n_; ++pos) labeling[std::countr_zero(cells[pos])] = pos;
    std::vector<std::uint64_t> rows(n_, 0);
    for (int v = 0; v < n_; ++v) {
      std::uint64_t r = 0;
      for (int w : g_.neighbors(v)) r |= std::uint64_t{1} << labeling[w];
      rows[labeling[v]] = r;
    }
    if (best_rows_.empty()) {
      first_rows_ = rows;
      first_labeling_ = labeling;
      best_rows_ = std::move(rows);
      best_labeling_ = std::move(labeling);
      return;
    }
    if (rows == first_rows_) record_automorphism(first_labeling_, labeling);
    if (rows == best_rows_) {
      record_automorphism(best_labeling_, labeling);
    } else if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_labeling_ = std::move(labeling);
    }
  }

  // Both labelings produce the same graph, so inverse(a) . b is an automorphism.
  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> inverse_a(n_);
    for (int v = 0; v < n_; ++v) inverse_a[a[v]] = v;
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inverse_a[b[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_rows_, first_rows_;
  std::vector<int> best_labeling_, first_labeling_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return CanonSearch(g).run(); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g).graph == canonical_form(h).graph;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  auto cg = canonical_form(g);
  auto ch = canonical_form(h);
  if (!(cg.graph == ch.graph)) return std::nullopt;
  std::vector<int> inverse_h(h.order());
  for (int v = 0; v < h.order(); ++v) inverse_h[ch.labeling[v]] = v;
  std::vector<int> f(g.order());
  for (int v = 0; v < g.order(); ++v) f[v] = inverse_h[cg.labeling[v]];
  return f;
}

}  // namespace islide
