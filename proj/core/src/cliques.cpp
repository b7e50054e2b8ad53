#include "glskit/cliques.hpp"

#include <span>

namespace gls {

namespace {

// Counting twin of extend_cliques: the last two levels collapse into size
// lookups and intersection counts, so nothing is written per clique.
std::int64_t count_extend(const Graph& g, int t, int depth,
                          std::span<const Vertex> candidates,
                          std::vector<Vertex>& arena, std::size_t width) {
  if (depth == t - 1) {
    return static_cast<std::int64_t>(candidates.size());
  }
  std::int64_t total = 0;
  if (depth == t - 2) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Vertex u = candidates[i];
      std::size_t c =
          detail::intersect_count(candidates.subspan(i + 1), g.neighbors(u));
      total = checked_add(total, static_cast<std::int64_t>(c));
    }
    return total;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Vertex u = candidates[i];
    Vertex* slot = arena.data() + static_cast<std::size_t>(depth - 1) * width;
    Vertex* end = detail::intersect_into(candidates.subspan(i + 1),
                                         g.neighbors(u), slot);
    auto next = std::span<const Vertex>(slot, static_cast<std::size_t>(end - slot));
    if (static_cast<int>(next.size()) < t - depth - 1) continue;
    total = checked_add(total, count_extend(g, t, depth + 1, next, arena, width));
  }
  return total;
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int t) {
  std::vector<VertexSet> out;
  for_each_clique(g, t, [&](std::span<const Vertex> c) {
    out.push_back(VertexSet::from_sorted(std::vector<Vertex>(c.begin(), c.end())));
  });
  return out;
}

CliqueCount count_cliques(const Graph& g, int t) {
  detail::check_clique_size(t);
  const std::size_t n = g.vertex_count();
  if (t == 1) return CliqueCount(static_cast<std::int64_t>(n));

  const std::size_t width = g.max_degree();
  std::vector<Vertex> arena(static_cast<std::size_t>(t > 3 ? t - 3 : 0) * width);
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto cand = detail::upper_neighbors(g.neighbors(v), v);
    if (static_cast<int>(cand.size()) < t - 1) continue;
    total = checked_add(total, count_extend(g, t, 1, cand, arena, width));
  }
  return CliqueCount(total);
}

CliqueCount count_cliques_meeting(const Graph& g, Vertex v, int t) {
  detail::check_clique_size(t);
  VertexSet dropped = g.closed_neighborhood(v);  // validates v
  std::vector<Vertex> rest;
  rest.reserve(g.vertex_count() - dropped.size());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!dropped.contains(u)) rest.push_back(u);
  }
  auto [outside, map] = g.induced_subgraph(VertexSet::from_sorted(std::move(rest)));
  return count_cliques(g, t) - count_cliques(outside, t);
}

std::vector<std::int64_t> meeting_counts(const Graph& g, int t) {
  detail::check_clique_size(t);
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> counts(n, 0);
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t epoch = 0;
  for_each_clique(g, t, [&](std::span<const Vertex> clique) {
    ++epoch;
    for (Vertex x : clique) {
      if (stamp[x] != epoch) {
        stamp[x] = epoch;
        ++counts[x];
      }
      for (Vertex w : g.neighbors(x)) {
        if (stamp[w] != epoch) {
          stamp[w] = epoch;
          ++counts[w];
        }
      }
    }
  });
  return counts;
}

bool contains_s_clique(const Graph& g, const VertexSet& s, int clique_size) {
  if (clique_size < 1) {
    throw std::invalid_argument("contains_s_clique: clique size must be >= 1");
  }
  for (Vertex v : s) {
    (void)g.degree(v);  // validates membership
  }
  if (static_cast<std::size_t>(clique_size) > s.size()) return false;

  // Depth-first choice of increasing members, each adjacent to all chosen.
  std::vector<Vertex> chosen;
  chosen.reserve(static_cast<std::size_t>(clique_size));
  auto search = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == static_cast<std::size_t>(clique_size)) return true;
    for (std::size_t i = start; i < s.size(); ++i) {
      Vertex v = s[i];
      bool ok = true;
      for (Vertex c : chosen) {
        if (!g.adjacent(c, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace gls
