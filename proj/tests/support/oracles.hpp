#ifndef GLSKIT_TESTS_ORACLES_HPP
#define GLSKIT_TESTS_ORACLES_HPP

// Independent reference implementations for the test suite. Everything here
// favors the most literal possible computation (subset loops, raw tuple
// odometers, permutations) over speed, and avoids the library's enumeration
// kernels so a bug cannot cancel itself out.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "glskit/graph.hpp"

namespace glstest {

inline std::vector<std::vector<bool>> adjacency_matrix(const gls::Graph& g) {
  std::vector<std::vector<bool>> m(g.vertex_count(),
                                   std::vector<bool>(g.vertex_count(), false));
  for (auto [u, v] : g.edges()) {
    m[u][v] = true;
    m[v][u] = true;
  }
  return m;
}

// Calls fn with every k-subset of [0, n), as a sorted vector.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<gls::Vertex> chosen;
  chosen.reserve(k);
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == k) {
      fn(chosen);
      return;
    }
    std::size_t needed = k - chosen.size();
    for (std::size_t i = start; i + needed <= n; ++i) {
      chosen.push_back(static_cast<gls::Vertex>(i));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

inline bool all_pairs_adjacent(const std::vector<std::vector<bool>>& m,
                               const std::vector<gls::Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!m[vs[i]][vs[j]]) return false;
    }
  }
  return true;
}

inline std::int64_t naive_count_cliques(const gls::Graph& g, int t) {
  if (t < 1) return 0;
  auto m = adjacency_matrix(g);
  std::int64_t count = 0;
  for_each_subset(g.vertex_count(), static_cast<std::size_t>(t),
                  [&](const std::vector<gls::Vertex>& vs) {
                    if (all_pairs_adjacent(m, vs)) ++count;
                  });
  return count;
}

// t-cliques having at least one vertex in the closed neighborhood of v.
inline std::int64_t naive_count_meeting(const gls::Graph& g, gls::Vertex v,
                                        int t) {
  auto m = adjacency_matrix(g);
  std::vector<bool> close(g.vertex_count(), false);
  close[v] = true;
  for (gls::Vertex u = 0; u < g.vertex_count(); ++u) {
    if (m[v][u]) close[u] = true;
  }
  std::int64_t count = 0;
  for_each_subset(g.vertex_count(), static_cast<std::size_t>(t),
                  [&](const std::vector<gls::Vertex>& vs) {
                    if (!all_pairs_adjacent(m, vs)) return;
                    for (gls::Vertex u : vs) {
                      if (close[u]) {
                        ++count;
                        return;
                      }
                    }
                  });
  return count;
}

struct RawCensus {
  std::int64_t phi_total = 0;
  std::int64_t phi_good = 0;
  std::int64_t phi_bad = 0;
  std::int64_t omega_good = 0;
};

// The definitional census: a full odometer over all n^(t+1) tuples.
inline RawCensus raw_tuple_census(const gls::Graph& g, int t) {
  auto m = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  RawCensus out;
  if (n == 0) return out;

  std::vector<std::size_t> tuple(static_cast<std::size_t>(t) + 1, 0);
  while (true) {
    // Coordinates 1..t are the x's (or y's); coordinate 0 is u (or w).
    bool x_clique = true;
    for (std::size_t i = 1; x_clique && i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (tuple[i] == tuple[j] || !m[tuple[i]][tuple[j]]) {
          x_clique = false;
          break;
        }
      }
    }
    if (x_clique) {
      std::size_t u = tuple[0];
      bool meets = false;
      bool repeats = false;
      for (std::size_t i = 1; i < tuple.size(); ++i) {
        if (m[u][tuple[i]]) meets = true;
        if (u == tuple[i]) repeats = true;
      }
      if (meets) {
        ++out.phi_total;
        if (repeats) {
          ++out.phi_bad;
        } else {
          ++out.phi_good;
        }
      }
    }

    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == n) {
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == tuple.size()) break;
  }

  // Second odometer pass for omega_good: its y's need not form a t-clique,
  // only contain a (t-1)-clique, so the phi filter above is too narrow.
  std::fill(tuple.begin(), tuple.end(), 0);
  while (true) {
    bool distinct = true;
    for (std::size_t i = 0; distinct && i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (tuple[i] == tuple[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) {
      std::size_t w = tuple[0];
      bool dominates = true;
      for (std::size_t i = 1; i < tuple.size(); ++i) {
        if (!m[w][tuple[i]]) {
          dominates = false;
          break;
        }
      }
      if (dominates) {
        // Some (t-1)-subset of the y's must be mutually adjacent.
        std::vector<gls::Vertex> ys;
        for (std::size_t i = 1; i < tuple.size(); ++i) {
          ys.push_back(static_cast<gls::Vertex>(tuple[i]));
        }
        bool holds_clique = false;
        for (std::size_t skip = 0; skip < ys.size() && !holds_clique; ++skip) {
          std::vector<gls::Vertex> rest;
          for (std::size_t i = 0; i < ys.size(); ++i) {
            if (i != skip) rest.push_back(ys[i]);
          }
          holds_clique = all_pairs_adjacent(m, rest);
        }
        if (holds_clique) ++out.omega_good;
      }
    }

    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == n) {
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == tuple.size()) break;
  }
  return out;
}

struct RawLocal {
  std::int64_t phi_good = 0;
  std::int64_t omega_good = 0;
};

// Tuples whose coordinate set is exactly s: every tuple with t+1 distinct
// coordinates from s is a permutation of s.
inline RawLocal raw_local_contributions(const gls::Graph& g,
                                        const gls::VertexSet& s, int t) {
  if (s.size() != static_cast<std::size_t>(t) + 1) {
    throw std::invalid_argument("local contributions need |s| == t + 1");
  }
  auto m = adjacency_matrix(g);
  std::vector<gls::Vertex> perm(s.begin(), s.end());
  std::sort(perm.begin(), perm.end());
  RawLocal out;
  do {
    gls::Vertex head = perm[0];
    std::vector<gls::Vertex> rest(perm.begin() + 1, perm.end());

    bool x_clique = all_pairs_adjacent(m, rest);
    if (x_clique) {
      for (gls::Vertex x : rest) {
        if (m[head][x]) {
          ++out.phi_good;
          break;
        }
      }
    }

    bool dominates = true;
    for (gls::Vertex y : rest) {
      if (!m[head][y]) {
        dominates = false;
        break;
      }
    }
    if (dominates) {
      bool holds_clique = false;
      for (std::size_t skip = 0; skip < rest.size() && !holds_clique; ++skip) {
        std::vector<gls::Vertex> sub;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (i != skip) sub.push_back(rest[i]);
        }
        holds_clique = all_pairs_adjacent(m, sub);
      }
      if (holds_clique) ++out.omega_good;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Exact binomial through 128-bit intermediates; nullopt when the value does
// not fit a signed 64-bit integer.
inline std::optional<std::int64_t> big_binomial(std::int64_t m,
                                                std::int64_t k) {
  if (m < 0 || k < 0) return std::nullopt;
  if (k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 r = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 100;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(m - k + i);
    if (r > limit) return std::nullopt;  // far beyond any checked-64 answer
    r /= static_cast<unsigned __int128>(i);
  }
  if (r > static_cast<unsigned __int128>(INT64_MAX)) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

// Edge bitmask over vertex pairs in lexicographic order, for graphs small
// enough that all C(n,2) pairs fit one word.
inline std::uint64_t edge_mask_of(const gls::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> bit_of(n, std::vector<std::size_t>(n));
  std::size_t bit = 0;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) bit_of[u][v] = bit++;
  }
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) {
    mask |= std::uint64_t{1} << bit_of[std::min(u, v)][std::max(u, v)];
  }
  return mask;
}

// Clique counting straight off edge bitmasks: each t-subset of vertices has a
// fixed set of required pair bits, precomputed once and tested per graph with
// one AND. Completely separate from the library's ordered extension.
class MaskCliqueOracle {
 public:
  MaskCliqueOracle(std::size_t n, std::size_t t) {
    std::vector<std::vector<std::size_t>> bit_of(n, std::vector<std::size_t>(n));
    std::size_t bit = 0;
    for (std::size_t u = 0; u + 1 < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) bit_of[u][v] = bit++;
    }
    for_each_subset(n, t, [&](const std::vector<gls::Vertex>& vs) {
      std::uint64_t need = 0;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          need |= std::uint64_t{1} << bit_of[vs[i]][vs[j]];
        }
      }
      required_.push_back(need);
    });
  }

  std::int64_t count(std::uint64_t edge_mask) const {
    std::int64_t c = 0;
    for (std::uint64_t need : required_) {
      if ((edge_mask & need) == need) ++c;
    }
    return c;
  }

 private:
  std::vector<std::uint64_t> required_;
};

}  // namespace glstest

#endif  // GLSKIT_TESTS_ORACLES_HPP
