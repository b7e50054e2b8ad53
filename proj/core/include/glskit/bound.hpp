#ifndef GLSKIT_BOUND_HPP
#define GLSKIT_BOUND_HPP

#include <cstdint>
#include <utility>

#include "glskit/count.hpp"

namespace gls {

/// C(m, k) with the convention C(m, k) = 0 for m < k. Evaluated by the
/// multiplicative formula (multiply by m-k+i, then divide exactly by i) under
/// checked arithmetic, so an intermediate product outside the signed 64-bit
/// range throws std::overflow_error even when the end value would fit.
CliqueCount binomial(std::int64_t m, std::int64_t k);

/// Unique (a, b) with n = a * (delta + 1) + b and 0 <= b <= delta.
std::pair<std::int64_t, std::int64_t> decompose_n(std::int64_t n,
                                                  std::int64_t delta);

/// Parameter tuple of the degree-bounded clique bound.
struct BoundParams {
  std::int64_t n = 0;
  std::int64_t delta = 0;
  std::int64_t t = 3;
  std::int64_t a = 0;
  std::int64_t b = 0;

  static BoundParams make(std::int64_t n, std::int64_t delta, std::int64_t t);
  /// Throws std::invalid_argument unless n = a(delta+1)+b, 0 <= b <= delta,
  /// and t >= 3.
  void validate() const;

  friend bool operator==(const BoundParams&, const BoundParams&) = default;
};

/// The Gan–Loh–Sudakov bound a*C(delta+1, t) + C(b, t): the maximum number of
/// t-cliques over n-vertex graphs of maximum degree at most delta. Requires
/// t >= 3.
CliqueCount gls_bound(std::int64_t n, std::int64_t delta, std::int64_t t);

/// The convexity inequality consumed by one induction step that deletes a
/// closed neighborhood of size deg_v + 1:
///   b >= deg_v+1:  C(deg_v+1, t) + C(b-deg_v-1, t)     <= C(b, t)
///   otherwise:     C(deg_v+1, t) + C(b+delta-deg_v, t) <= C(delta+1, t) + C(b, t)
/// True for every valid input; exercised exhaustively by the test grids.
bool convexity_step_check(std::int64_t deg_v, std::int64_t delta,
                          std::int64_t b, std::int64_t t);

}  // namespace gls

#endif  // GLSKIT_BOUND_HPP
