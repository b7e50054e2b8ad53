#ifndef GLSKIT_GENERATORS_HPP
#define GLSKIT_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "glskit/graph.hpp"

namespace gls {

// Exhaustive enumeration runs over all 2^C(n,2) labeled graphs; n = 7 is
// already 2^21 graphs.
inline constexpr std::int64_t kExhaustiveVertexLimit = 7;

/// a disjoint copies of K_{delta+1} followed by one K_b. This family attains
/// the clique-count bound with equality. Requires 0 <= b <= delta.
Graph extremizer(std::int64_t a, std::int64_t delta, std::int64_t b);

/// Random graph with max degree <= delta: starting from the empty graph on n
/// vertices, draws edge_attempts vertex pairs from a seeded generator and
/// inserts each as an edge unless it is a self-loop, already present, or
/// would push an endpoint past delta. Deterministic in (n, delta,
/// edge_attempts, seed).
Graph random_bounded(std::int64_t n, std::int64_t delta,
                     std::int64_t edge_attempts, std::uint64_t seed);

/// 2^C(n,2): how many labeled simple graphs exist on n vertices.
std::int64_t labeled_graph_count(std::int64_t n);

/// Graph whose edges are the set bits of mask over vertex pairs in
/// lexicographic order: bit 0 is (0,1), bit 1 is (0,2), ..., bit n-2 is
/// (0,n-1), bit n-1 is (1,2), and so on.
Graph labeled_graph_from_mask(std::int64_t n, std::uint64_t mask);

/// Calls fn once for every labeled simple graph on n vertices, in mask order.
/// Refuses n above kExhaustiveVertexLimit.
void for_each_labeled_graph(std::int64_t n,
                            const std::function<void(const Graph&)>& fn);

/// Fixture lookup. Accepted names: complete_k, cycle_k (k >= 3), path_k,
/// star_k (vertex 0 is the center), with the suffix k giving the vertex
/// count, plus petersen, paw (triangle 0,1,2 with pendant 3 on vertex 0), and
/// diamond (K_4 minus the edge 0-3). Unknown names throw.
Graph named_graph(const std::string& name);

/// Parameter bundle for the generator kinds, mostly a convenience for command
/// lines and config plumbing.
struct GeneratorSpec {
  enum class Kind { extremizer, random_bounded, exhaustive, named };

  Kind kind = Kind::named;
  std::int64_t a = 0;
  std::int64_t delta = 0;
  std::int64_t b = 0;
  std::int64_t n = 0;
  std::int64_t edge_attempts = 0;
  std::uint64_t seed = 0;
  std::string name;

  /// Throws std::invalid_argument when the parameters for the active kind are
  /// out of range.
  void validate() const;

  /// Builds the single graph these parameters describe. The exhaustive kind
  /// yields a stream, not one graph; go through for_each_labeled_graph
  /// instead (this throws for it).
  Graph build() const;
};

}  // namespace gls

#endif  // GLSKIT_GENERATORS_HPP
