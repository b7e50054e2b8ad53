#include "glskit/census.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "glskit/bound.hpp"
#include "glskit/cliques.hpp"

namespace gls {

namespace {

void check_census_input(const Graph& g, int t) {
  if (t < 3) {
    throw std::invalid_argument("census operations require t >= 3");
  }
  if (g.vertex_count() > kCensusVertexLimit) {
    throw std::invalid_argument(
        "census operations are exhaustive and refuse graphs with more than " +
        std::to_string(kCensusVertexLimit) + " vertices (got " +
        std::to_string(g.vertex_count()) + ")");
  }
}

// x * t!, skipping the factorial when x is zero so absurdly large t cannot
// overflow a product that would be zero anyway.
CliqueCount times_factorial(CliqueCount x, int t) {
  if (x == CliqueCount(0)) return CliqueCount(0);
  CliqueCount f(1);
  for (int i = 2; i <= t; ++i) f = f * CliqueCount(i);
  return x * f;
}

// Visits every k-subset of pool in lexicographic order.
template <class Fn>
void combinations_from(std::span<const Vertex> pool, std::size_t k,
                       std::size_t start, std::vector<Vertex>& chosen,
                       Fn& fn) {
  if (chosen.size() == k) {
    fn(std::span<const Vertex>(chosen));
    return;
  }
  std::size_t needed = k - chosen.size();
  for (std::size_t i = start; i + needed <= pool.size(); ++i) {
    chosen.push_back(pool[i]);
    combinations_from(pool, k, i + 1, chosen, fn);
    chosen.pop_back();
  }
}

template <class Fn>
void for_each_combination(std::span<const Vertex> pool, std::size_t k,
                          Fn&& fn) {
  std::vector<Vertex> chosen;
  chosen.reserve(k);
  combinations_from(pool, k, 0, chosen, fn);
}

}  // namespace

TupleCensus census(const Graph& g, int t) {
  check_census_input(g, t);
  const std::size_t n = g.vertex_count();
  TupleCensus out;
  if (static_cast<std::size_t>(t) > n) return out;

  // Bad tuples: u coincides with one of the t clique coordinates, and is then
  // adjacent to any other one, so every ordering of every clique contributes
  // exactly t of them.
  CliqueCount k_t = count_cliques(g, t);
  out.phi_bad = times_factorial(k_t * CliqueCount(t), t);

  // Good tuples: one per (clique, outside vertex adjacent to a member) pair,
  // times the t! orderings. The adjacent vertices are the union of the
  // members' neighborhoods; the members themselves sit in that union (each is
  // adjacent to the others), so subtracting t leaves the outside ones.
  std::int64_t good_pairs = 0;
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t epoch = 0;
  for_each_clique(g, t, [&](std::span<const Vertex> clique) {
    ++epoch;
    std::int64_t seen = 0;
    for (Vertex x : clique) {
      for (Vertex nb : g.neighbors(x)) {
        if (stamp[nb] != epoch) {
          stamp[nb] = epoch;
          ++seen;
        }
      }
    }
    good_pairs += seen - t;
  });
  out.phi_good = times_factorial(CliqueCount(good_pairs), t);
  out.phi_total = out.phi_good + out.phi_bad;

  // omega_good, anchored at the first coordinate: the t remaining coordinates
  // are a t-subset of N(w) (w itself is never its own neighbor), ordered t!
  // ways, valid when the subset holds a (t-1)-clique.
  std::int64_t omega_sets = 0;
  for (Vertex w = 0; w < n; ++w) {
    for_each_combination(
        g.neighbors(w), static_cast<std::size_t>(t),
        [&](std::span<const Vertex> subset) {
          VertexSet s = VertexSet::from_sorted(
              std::vector<Vertex>(subset.begin(), subset.end()));
          if (contains_s_clique(g, s, t - 1)) ++omega_sets;
        });
  }
  out.omega_good = times_factorial(CliqueCount(omega_sets), t);
  return out;
}

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

IdentityReport check_identities(const Graph& g, int t) {
  TupleCensus c = census(g, t);
  const std::size_t n = g.vertex_count();

  CliqueCount meeting_sum;
  for (std::int64_t m : meeting_counts(g, t)) meeting_sum += CliqueCount(m);

  CliqueCount deg_choose_tm1;
  CliqueCount deg_choose_t;
  CliqueCount degp1_choose_t;
  for (Vertex v = 0; v < n; ++v) {
    auto d = static_cast<std::int64_t>(g.degree(v));
    deg_choose_tm1 += binomial(d, t - 1);
    deg_choose_t += binomial(d, t);
    degp1_choose_t += binomial(d + 1, t);
  }

  IdentityReport report;
  auto equal = [&](std::string name, CliqueCount lhs, CliqueCount rhs) {
    report.checks.push_back(
        {std::move(name), "==", lhs, rhs, lhs == rhs});
  };
  auto at_most = [&](std::string name, CliqueCount lhs, CliqueCount rhs) {
    report.checks.push_back(
        {std::move(name), "<=", lhs, rhs, lhs <= rhs});
  };

  equal("phi_total_identity", c.phi_total, times_factorial(meeting_sum, t));
  at_most("phi_bad_upper", c.phi_bad, times_factorial(deg_choose_tm1, t));
  at_most("omega_good_upper", c.omega_good, times_factorial(deg_choose_t, t));
  at_most("phi_good_le_omega_good", c.phi_good, c.omega_good);
  at_most("meeting_sum_le_binomial_sum", meeting_sum, degp1_choose_t);
  return report;
}

std::string to_string(SubgraphCase c) {
  switch (c) {
    case SubgraphCase::not_applicable: return "NOT_APPLICABLE";
    case SubgraphCase::small_k: return "SMALL_K";
    case SubgraphCase::k_eq_t_minus_1: return "K_EQ_T_MINUS_1";
    case SubgraphCase::complete: return "COMPLETE";
  }
  return "UNKNOWN";
}

SubgraphClassification classify_subset(const Graph& g, const VertexSet& s,
                                       int t) {
  if (t < 3) {
    throw std::invalid_argument("classify_subset requires t >= 3");
  }
  if (s.size() != static_cast<std::size_t>(t) + 1) {
    throw std::invalid_argument("classify_subset needs a subset of size t+1 (got " +
                                std::to_string(s.size()) + ")");
  }

  auto [h, map] = g.induced_subgraph(s);
  const auto size = static_cast<Vertex>(h.vertex_count());

  SubgraphClassification out;
  out.subset = s;

  // Enumerate the tuples whose coordinate set is exactly s. Good phi tuples:
  // a t-clique plus the one leftover vertex, which must see a member.
  std::vector<VertexSet> cliques = enumerate_cliques(h, t);
  std::int64_t phi_pairs = 0;
  for (const VertexSet& c : cliques) {
    Vertex outside = 0;
    for (Vertex v = 0; v < size; ++v) {
      if (!c.contains(v)) {
        outside = v;
        break;
      }
    }
    bool sees = false;
    for (Vertex x : c) {
      if (h.adjacent(outside, x)) {
        sees = true;
        break;
      }
    }
    if (sees) ++phi_pairs;
  }
  out.phi_good_local = times_factorial(CliqueCount(phi_pairs), t);

  // omega_good tuples on s: the first coordinate must be adjacent to all the
  // others, which must hold a (t-1)-clique.
  std::int64_t omega_anchors = 0;
  for (Vertex w = 0; w < size; ++w) {
    if (h.degree(w) != static_cast<std::size_t>(t)) continue;
    std::vector<Vertex> others;
    others.reserve(static_cast<std::size_t>(t));
    for (Vertex v = 0; v < size; ++v) {
      if (v != w) others.push_back(v);
    }
    if (contains_s_clique(h, VertexSet::from_sorted(std::move(others)), t - 1)) {
      ++omega_anchors;
    }
  }
  out.omega_good_local = times_factorial(CliqueCount(omega_anchors), t);

  const auto clique_count = static_cast<std::int64_t>(cliques.size());
  std::vector<Vertex> all(size);
  for (Vertex v = 0; v < size; ++v) all[v] = v;
  const bool connected = h.is_connected_induced(VertexSet::from_sorted(all));

  if (clique_count == 0 || !connected) {
    out.label = SubgraphCase::not_applicable;
    if (out.phi_good_local != CliqueCount(0) ||
        out.omega_good_local != CliqueCount(0)) {
      throw std::logic_error(
          "inapplicable subset carries tuples; a tuple's subgraph is always "
          "connected with a t-clique");
    }
    return out;
  }

  CliqueCount expected_phi;
  CliqueCount expected_omega;
  if (clique_count == t + 1) {
    out.label = SubgraphCase::complete;
    expected_phi = times_factorial(CliqueCount(t + 1), t);
    expected_omega = expected_phi;
  } else if (clique_count == 2) {
    out.label = SubgraphCase::k_eq_t_minus_1;
    out.attach_count = t - 1;
    expected_phi = times_factorial(CliqueCount(2), t);
    expected_omega = times_factorial(CliqueCount(t - 1), t);
  } else if (clique_count == 1) {
    const VertexSet& c = cliques.front();
    Vertex outside = 0;
    for (Vertex v = 0; v < size; ++v) {
      if (!c.contains(v)) {
        outside = v;
        break;
      }
    }
    std::int64_t k = 0;
    for (Vertex x : c) {
      if (h.adjacent(outside, x)) ++k;
    }
    if (k < 1 || k > t - 2) {
      throw std::logic_error(
          "connected subset with a unique t-clique must attach its outside "
          "vertex to between 1 and t-2 members, got " + std::to_string(k));
    }
    out.label = SubgraphCase::small_k;
    out.attach_count = k;
    expected_phi = times_factorial(CliqueCount(1), t);
    expected_omega = times_factorial(CliqueCount(k), t);
  } else {
    throw std::logic_error(
        "a (t+1)-vertex subgraph must hold 0, 1, 2, or t+1 t-cliques, got " +
        std::to_string(clique_count));
  }

  if (out.phi_good_local != expected_phi ||
      out.omega_good_local != expected_omega) {
    throw std::logic_error(
        "enumerated local contributions disagree with the case formula for " +
        to_string(out.label));
  }
  return out;
}

SubgraphSumReport sum_over_subgraphs_check(const Graph& g, int t) {
  check_census_input(g, t);
  const std::size_t n = g.vertex_count();

  SubgraphSumReport report;
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  for_each_combination(
      std::span<const Vertex>(all), static_cast<std::size_t>(t) + 1,
      [&](std::span<const Vertex> subset) {
        VertexSet s = VertexSet::from_sorted(
            std::vector<Vertex>(subset.begin(), subset.end()));
        SubgraphClassification c = classify_subset(g, s, t);
        if (c.label == SubgraphCase::not_applicable) return;
        report.phi_good_sum += c.phi_good_local;
        report.omega_good_sum += c.omega_good_local;
      });

  TupleCensus global = census(g, t);
  report.census_phi_good = global.phi_good;
  report.census_omega_good = global.omega_good;
  report.pass = report.phi_good_sum == global.phi_good &&
                report.omega_good_sum == global.omega_good;
  return report;
}

}  // namespace gls
