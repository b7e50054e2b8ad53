#ifndef GLSKIT_GRAPH_HPP
#define GLSKIT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace gls {

using Vertex = std::uint32_t;

/// Set of vertex indices, kept strictly increasing and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs)
      : VertexSet(std::vector<Vertex>(vs)) {}
  /// Canonicalizes: sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> vs);
  /// Adopts a vector that is already strictly increasing (checked).
  static VertexSet from_sorted(std::vector<Vertex> vs);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Vertex operator[](std::size_t i) const { return values_[i]; }
  bool contains(Vertex v) const;

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }
  const std::vector<Vertex>& values() const noexcept { return values_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s);

 private:
  std::vector<Vertex> values_;
};

/// Relabeling attached to an induced subgraph: position i holds the original
/// index of new vertex i, in strictly increasing order (order-preserving).
struct SubgraphMap {
  std::vector<Vertex> kept;

  Vertex old_of(Vertex new_v) const { return kept.at(new_v); }
  /// New index of an original vertex, or nullopt if it was dropped.
  std::optional<Vertex> new_of(Vertex old_v) const;
};

/// Immutable simple undirected graph on vertex set [0, n). Adjacency is CSR
/// with each neighbor list sorted ascending: O(deg) iteration, binary-search
/// membership. All operations are pure reads and safe to call concurrently.
class Graph {
 public:
  Graph() = default;  // zero vertices

  /// Builds a graph from an edge list. Duplicate edges (in either direction)
  /// are deduplicated silently. Self-loops and out-of-range endpoints throw
  /// std::invalid_argument.
  static Graph from_edge_list(std::size_t n,
                              const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::size_t degree(Vertex v) const;
  /// Maximum degree over all vertices; 0 when the graph has no vertices.
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Neighbors of v, sorted ascending. Throws on out-of-range v.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  /// {v} together with all neighbors of v, in canonical order.
  VertexSet closed_neighborhood(Vertex v) const;

  /// Graph induced on s, plus the order-preserving relabeling.
  std::pair<Graph, SubgraphMap> induced_subgraph(const VertexSet& s) const;

  /// Induced subgraph on V minus the closed neighborhood of v.
  std::pair<Graph, SubgraphMap> remove_closed_neighborhood(Vertex v) const;

  /// Whether the subgraph induced on s is connected. Throws on empty s.
  bool is_connected_induced(const VertexSet& s) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_ = {0};  // n_ + 1 entries
  std::vector<Vertex> adjacency_;
  std::size_t max_degree_ = 0;
};

}  // namespace gls

#endif  // GLSKIT_GRAPH_HPP
