#include "glskit/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gls {

VertexSet::VertexSet(std::vector<Vertex> vs) : values_(std::move(vs)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> vs) {
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i - 1] >= vs[i]) {
      throw std::invalid_argument("VertexSet::from_sorted: not strictly increasing");
    }
  }
  VertexSet s;
  s.values_ = std::move(vs);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

std::optional<Vertex> SubgraphMap::new_of(Vertex old_v) const {
  auto it = std::lower_bound(kept.begin(), kept.end(), old_v);
  if (it == kept.end() || *it != old_v) return std::nullopt;
  return static_cast<Vertex>(it - kept.begin());
}

Graph Graph::from_edge_list(std::size_t n,
                            const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> lists(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint " +
                                  std::to_string(u >= n ? u : v) +
                                  " out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    lists[u].push_back(v);
    lists[v].push_back(u);
  }

  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = lists[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
    g.offsets_[v + 1] = total;
    g.max_degree_ = std::max(g.max_degree_, nb.size());
  }
  g.adjacency_.reserve(total);
  for (auto& nb : lists) {
    g.adjacency_.insert(g.adjacency_.end(), nb.begin(), nb.end());
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n_));
  }
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  auto nb = neighbors(v);
  std::vector<Vertex> out;
  out.reserve(nb.size() + 1);
  auto it = nb.begin();
  while (it != nb.end() && *it < v) out.push_back(*it++);
  out.push_back(v);
  out.insert(out.end(), it, nb.end());
  return VertexSet::from_sorted(std::move(out));
}

std::pair<Graph, SubgraphMap> Graph::induced_subgraph(const VertexSet& s) const {
  for (Vertex v : s) check_vertex(v);
  SubgraphMap map{std::vector<Vertex>(s.begin(), s.end())};

  std::vector<std::pair<Vertex, Vertex>> kept_edges;
  for (std::size_t i = 0; i < map.kept.size(); ++i) {
    Vertex old_v = map.kept[i];
    for (Vertex w : neighbors(old_v)) {
      if (w <= old_v) continue;  // each edge once
      if (auto j = map.new_of(w)) {
        kept_edges.emplace_back(static_cast<Vertex>(i), *j);
      }
    }
  }
  return {from_edge_list(map.kept.size(), kept_edges), std::move(map)};
}

std::pair<Graph, SubgraphMap> Graph::remove_closed_neighborhood(Vertex v) const {
  VertexSet dropped = closed_neighborhood(v);
  std::vector<Vertex> rest;
  rest.reserve(n_ - dropped.size());
  for (Vertex u = 0; u < n_; ++u) {
    if (!dropped.contains(u)) rest.push_back(u);
  }
  return induced_subgraph(VertexSet::from_sorted(std::move(rest)));
}

bool Graph::is_connected_induced(const VertexSet& s) const {
  if (s.empty()) {
    throw std::invalid_argument("is_connected_induced: empty vertex set");
  }
  for (Vertex v : s) check_vertex(v);

  std::vector<Vertex> stack = {s[0]};
  std::vector<bool> seen(s.size(), false);
  seen[0] = true;
  std::size_t reached = 1;
  auto index_in_s = [&](Vertex v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - s.begin());
  };
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (auto i = index_in_s(w); i && !seen[*i]) {
        seen[*i] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex w : neighbors(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

}  // namespace gls
