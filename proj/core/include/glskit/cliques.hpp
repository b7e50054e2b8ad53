#ifndef GLSKIT_CLIQUES_HPP
#define GLSKIT_CLIQUES_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "glskit/count.hpp"
#include "glskit/graph.hpp"

namespace gls {

namespace detail {

// out = {w in tail : w adjacent-listed in adj}, both inputs sorted ascending.
inline Vertex* intersect_into(std::span<const Vertex> tail,
                              std::span<const Vertex> adj, Vertex* out) {
  auto a = tail.begin();
  auto b = adj.begin();
  Vertex* o = out;
  while (a != tail.end() && b != adj.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      *o++ = *a;
      ++a;
      ++b;
    }
  }
  return o;
}

inline std::size_t intersect_count(std::span<const Vertex> tail,
                                   std::span<const Vertex> adj) {
  auto a = tail.begin();
  auto b = adj.begin();
  std::size_t count = 0;
  while (a != tail.end() && b != adj.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

// Strict upper part of a sorted neighbor list: entries > v.
inline std::span<const Vertex> upper_neighbors(std::span<const Vertex> nb,
                                               Vertex v) {
  auto it = std::upper_bound(nb.begin(), nb.end(), v);
  return nb.subspan(static_cast<std::size_t>(it - nb.begin()));
}

// Ordered extension: candidates are common neighbors of the current clique,
// all larger than its last vertex, so each clique is reached exactly once and
// in lexicographic order. The arena holds one candidate slice per level.
template <class Visitor>
void extend_cliques(const Graph& g, int t, std::vector<Vertex>& clique,
                    int depth, std::span<const Vertex> candidates,
                    std::vector<Vertex>& arena, std::size_t width,
                    Visitor& visit) {
  if (depth == t - 1) {
    for (Vertex u : candidates) {
      clique[static_cast<std::size_t>(depth)] = u;
      visit(std::span<const Vertex>(clique.data(), static_cast<std::size_t>(t)));
    }
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Vertex u = candidates[i];
    Vertex* slot = arena.data() + static_cast<std::size_t>(depth - 1) * width;
    Vertex* end = intersect_into(candidates.subspan(i + 1), g.neighbors(u), slot);
    auto next = std::span<const Vertex>(slot, static_cast<std::size_t>(end - slot));
    if (static_cast<int>(next.size()) < t - depth - 1) continue;
    clique[static_cast<std::size_t>(depth)] = u;
    extend_cliques(g, t, clique, depth + 1, next, arena, width, visit);
  }
}

inline void check_clique_size(int t) {
  if (t < 1) throw std::invalid_argument("clique size t must be >= 1");
}

}  // namespace detail

/// Visits every t-clique exactly once, in lexicographic order of its sorted
/// vertex tuple. The span passed to the visitor is sorted ascending and valid
/// only for the duration of the call; no per-clique allocation happens here.
template <class Visitor>
void for_each_clique(const Graph& g, int t, Visitor&& visit) {
  detail::check_clique_size(t);
  const std::size_t n = g.vertex_count();
  if (t == 1) {
    for (Vertex v = 0; v < n; ++v) {
      visit(std::span<const Vertex>(&v, 1));
    }
    return;
  }
  const std::size_t width = g.max_degree();
  std::vector<Vertex> arena(static_cast<std::size_t>(t > 2 ? t - 2 : 0) * width);
  std::vector<Vertex> clique(static_cast<std::size_t>(t));
  for (Vertex v = 0; v < n; ++v) {
    auto cand = detail::upper_neighbors(g.neighbors(v), v);
    if (static_cast<int>(cand.size()) < t - 1) continue;
    clique[0] = v;
    detail::extend_cliques(g, t, clique, 1, cand, arena, width, visit);
  }
}

/// All t-cliques, materialized in emission order.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int t);

/// Number of t-cliques. Counts without materializing or visiting cliques at
/// the last level, so the hot path is pure sorted-set intersection.
CliqueCount count_cliques(const Graph& g, int t);

/// Number of t-cliques with at least one vertex in the closed neighborhood of
/// v, computed as total minus the count in the graph induced away from it.
CliqueCount count_cliques_meeting(const Graph& g, Vertex v, int t);

/// The same quantity for every vertex at once, via one enumeration pass that
/// charges each clique to every vertex of the union of its members' closed
/// neighborhoods.
std::vector<std::int64_t> meeting_counts(const Graph& g, int t);

/// Whether some clique_size-subset of s is mutually adjacent in g.
bool contains_s_clique(const Graph& g, const VertexSet& s, int clique_size);

}  // namespace gls

#endif  // GLSKIT_CLIQUES_HPP
