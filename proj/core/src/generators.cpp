#include "glskit/generators.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "glskit/count.hpp"

namespace gls {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void append_clique(EdgeList& edges, Vertex first, std::int64_t size) {
  for (std::int64_t i = 0; i < size; ++i) {
    for (std::int64_t j = i + 1; j < size; ++j) {
      edges.emplace_back(first + static_cast<Vertex>(i),
                         first + static_cast<Vertex>(j));
    }
  }
}

std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

// Digits after the underscore in names like "cycle_12".
std::int64_t parse_suffix(const std::string& name, std::size_t prefix_len) {
  std::string digits = name.substr(prefix_len);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad size suffix in graph name '" + name + "'");
  }
  std::int64_t k = 0;
  try {
    k = std::stoll(digits);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size suffix in graph name '" + name + "'");
  }
  if (k < 1) {
    throw std::invalid_argument("graph size suffix must be positive in '" +
                                name + "'");
  }
  return k;
}

}  // namespace

Graph extremizer(std::int64_t a, std::int64_t delta, std::int64_t b) {
  if (a < 0 || delta < 0) {
    throw std::invalid_argument("extremizer needs a >= 0 and delta >= 0");
  }
  if (b < 0 || b > delta) {
    throw std::invalid_argument("extremizer needs 0 <= b <= delta, got b=" +
                                std::to_string(b));
  }
  std::int64_t n =
      checked_add(checked_mul(a, checked_add(delta, 1)), b);

  EdgeList edges;
  Vertex next = 0;
  for (std::int64_t i = 0; i < a; ++i) {
    append_clique(edges, next, delta + 1);
    next += static_cast<Vertex>(delta + 1);
  }
  append_clique(edges, next, b);
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph random_bounded(std::int64_t n, std::int64_t delta,
                     std::int64_t edge_attempts, std::uint64_t seed) {
  if (n < 0 || delta < 0 || edge_attempts < 0) {
    throw std::invalid_argument("random_bounded parameters must be nonnegative");
  }
  if (n < 2 || delta == 0) {
    return Graph::from_edge_list(static_cast<std::size_t>(n), {});
  }

  std::mt19937_64 gen(seed);
  const auto size = static_cast<std::uint64_t>(n);
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
  std::unordered_set<std::uint64_t> present;
  EdgeList edges;
  for (std::int64_t i = 0; i < edge_attempts; ++i) {
    auto u = static_cast<Vertex>(gen() % size);
    auto v = static_cast<Vertex>(gen() % size);
    if (u == v) continue;
    if (deg[u] >= delta || deg[v] >= delta) continue;
    std::uint64_t key = u < v
                            ? (static_cast<std::uint64_t>(u) << 32) | v
                            : (static_cast<std::uint64_t>(v) << 32) | u;
    if (!present.insert(key).second) continue;
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::int64_t labeled_graph_count(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("labeled_graph_count needs n >= 0");
  }
  std::int64_t bits = pair_count(n);
  if (bits > 62) {
    throw std::overflow_error("labeled graph count does not fit 64 bits for n=" +
                              std::to_string(n));
  }
  return std::int64_t{1} << bits;
}

Graph labeled_graph_from_mask(std::int64_t n, std::uint64_t mask) {
  if (n < 0) {
    throw std::invalid_argument("labeled_graph_from_mask needs n >= 0");
  }
  std::int64_t bits = pair_count(n);
  if (bits > 63) {
    throw std::invalid_argument("mask form supports at most 11 vertices");
  }
  if (bits < 64 && (mask >> bits) != 0) {
    throw std::invalid_argument("mask has bits beyond the vertex-pair range");
  }

  EdgeList edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u + 1 < static_cast<Vertex>(n); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v, ++bit) {
      if (mask & (std::uint64_t{1} << bit)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

void for_each_labeled_graph(std::int64_t n,
                            const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > kExhaustiveVertexLimit) {
    throw std::invalid_argument(
        "exhaustive enumeration is limited to n <= " +
        std::to_string(kExhaustiveVertexLimit) + ", got " + std::to_string(n));
  }
  const auto total = static_cast<std::uint64_t>(labeled_graph_count(n));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    fn(labeled_graph_from_mask(n, mask));
  }
}

Graph named_graph(const std::string& name) {
  if (name.rfind("complete_", 0) == 0) {
    std::int64_t k = parse_suffix(name, 9);
    EdgeList edges;
    append_clique(edges, 0, k);
    return Graph::from_edge_list(static_cast<std::size_t>(k), edges);
  }
  if (name.rfind("cycle_", 0) == 0) {
    std::int64_t k = parse_suffix(name, 6);
    if (k < 3) {
      throw std::invalid_argument("a cycle needs at least 3 vertices");
    }
    EdgeList edges;
    for (std::int64_t i = 0; i < k; ++i) {
      edges.emplace_back(static_cast<Vertex>(i),
                         static_cast<Vertex>((i + 1) % k));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(k), edges);
  }
  if (name.rfind("path_", 0) == 0) {
    std::int64_t k = parse_suffix(name, 5);
    EdgeList edges;
    for (std::int64_t i = 0; i + 1 < k; ++i) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(k), edges);
  }
  if (name.rfind("star_", 0) == 0) {
    std::int64_t k = parse_suffix(name, 5);
    EdgeList edges;
    for (std::int64_t i = 1; i < k; ++i) {
      edges.emplace_back(0, static_cast<Vertex>(i));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(k), edges);
  }
  if (name == "petersen") {
    // Kneser graph K(5,2): vertices are the 2-subsets of {0..4} in
    // lexicographic order, adjacent when disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
    }
    EdgeList edges;
    for (std::size_t p = 0; p < subsets.size(); ++p) {
      for (std::size_t q = p + 1; q < subsets.size(); ++q) {
        auto [a, b] = subsets[p];
        auto [c, d] = subsets[q];
        if (a != c && a != d && b != c && b != d) {
          edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(q));
        }
      }
    }
    return Graph::from_edge_list(10, edges);
  }
  if (name == "paw") {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  }
  if (name == "diamond") {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  }
  throw std::invalid_argument("unknown graph name '" + name + "'");
}

void GeneratorSpec::validate() const {
  switch (kind) {
    case Kind::extremizer:
      if (a < 0 || delta < 0 || b < 0 || b > delta) {
        throw std::invalid_argument(
            "extremizer needs a >= 0, delta >= 0, 0 <= b <= delta");
      }
      return;
    case Kind::random_bounded:
      if (n < 0 || delta < 0 || edge_attempts < 0) {
        throw std::invalid_argument(
            "random_bounded parameters must be nonnegative");
      }
      return;
    case Kind::exhaustive:
      if (n < 0 || n > kExhaustiveVertexLimit) {
        throw std::invalid_argument("exhaustive enumeration is limited to n <= " +
                                    std::to_string(kExhaustiveVertexLimit));
      }
      return;
    case Kind::named:
      if (name.empty()) {
        throw std::invalid_argument("named generator needs a name");
      }
      return;
  }
  throw std::invalid_argument("unknown generator kind");
}

Graph GeneratorSpec::build() const {
  validate();
  switch (kind) {
    case Kind::extremizer:
      return extremizer(a, delta, b);
    case Kind::random_bounded:
      return random_bounded(n, delta, edge_attempts, seed);
    case Kind::exhaustive:
      throw std::invalid_argument(
          "the exhaustive kind yields a stream; use for_each_labeled_graph");
    case Kind::named:
      return named_graph(name);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace gls
