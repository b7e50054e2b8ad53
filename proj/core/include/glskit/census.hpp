#ifndef GLSKIT_CENSUS_HPP
#define GLSKIT_CENSUS_HPP

#include <string>
#include <vector>

#include "glskit/count.hpp"
#include "glskit/graph.hpp"

namespace gls {

// Exhaustive enumeration over vertex subsets is kept interactive by refusing
// larger inputs; count-based operations cover bigger graphs.
inline constexpr std::size_t kCensusVertexLimit = 12;

/// Cardinalities of the tuple families behind the double-counting argument.
///
/// phi counts tuples (u, x_1, ..., x_t) where the x's form a t-clique and u is
/// adjacent to at least one x_i. A tuple is good when all t+1 coordinates are
/// distinct, bad when u coincides with one of the x's. omega_good counts
/// tuples (w, y_1, ..., y_t), all distinct, where w is adjacent to every y_i
/// and the y's contain a (t-1)-clique.
struct TupleCensus {
  CliqueCount phi_total;
  CliqueCount phi_good;
  CliqueCount phi_bad;
  CliqueCount omega_good;
};

/// Exact census for small graphs. Anchored at the cliques rather than looping
/// over all n^(t+1) raw tuples: each t-clique contributes t! orderings, bad
/// tuples add a factor t for the repeated coordinate, good tuples one count
/// per outside vertex seeing the clique, and omega_good scans each vertex's
/// neighborhood for t-subsets containing a (t-1)-clique.
TupleCensus census(const Graph& g, int t);

struct IdentityCheck {
  std::string name;
  std::string relation;  // "==" or "<="
  CliqueCount lhs;
  CliqueCount rhs;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// The five numeric facts the counting argument rests on:
///   phi_total_identity          |phi| == t! * sum_v |T_v|
///   phi_bad_upper               |phi_bad| <= t! * sum_v C(deg v, t-1)
///   omega_good_upper            |omega_good| <= t! * sum_v C(deg v, t)
///   phi_good_le_omega_good      |phi_good| <= |omega_good|
///   meeting_sum_le_binomial_sum sum_v |T_v| <= sum_v C(deg v + 1, t)
IdentityReport check_identities(const Graph& g, int t);

/// How a (t+1)-vertex induced subgraph can look when it carries a t-clique.
/// A subgraph on t+1 vertices has 0, 1, 2, or t+1 t-cliques; connected ones
/// with at least one clique fall into the three applicable cases.
enum class SubgraphCase {
  not_applicable,   // disconnected or no t-clique
  small_k,          // one t-clique, outside vertex attached to k in [1, t-2]
  k_eq_t_minus_1,   // exactly two t-cliques (outside vertex attaches to t-1)
  complete,         // the subgraph is K_{t+1}
};

std::string to_string(SubgraphCase c);

struct SubgraphClassification {
  VertexSet subset;
  SubgraphCase label = SubgraphCase::not_applicable;
  // Neighbors of the non-clique vertex inside the t-clique; meaningful for
  // small_k (the k of the label) and k_eq_t_minus_1 (always t-1), zero
  // otherwise.
  std::int64_t attach_count = 0;
  CliqueCount phi_good_local;   // good phi tuples whose coordinate set is s
  CliqueCount omega_good_local; // omega_good tuples whose coordinate set is s
};

/// Classifies the subgraph induced on s (|s| must be t+1) and enumerates the
/// tuples living exactly on s. The enumerated counts are checked against the
/// per-case formulas; a mismatch throws std::logic_error.
SubgraphClassification classify_subset(const Graph& g, const VertexSet& s,
                                       int t);

struct SubgraphSumReport {
  CliqueCount phi_good_sum;
  CliqueCount omega_good_sum;
  CliqueCount census_phi_good;
  CliqueCount census_omega_good;
  bool pass = false;
};

/// Sums the local contributions over every (t+1)-subset of V and compares
/// with the global census: every good tuple lives on exactly one subset, so
/// the sums must match.
SubgraphSumReport sum_over_subgraphs_check(const Graph& g, int t);

}  // namespace gls

#endif  // GLSKIT_CENSUS_HPP
