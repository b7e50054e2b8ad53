#include "glskit/bound.hpp"

#include <stdexcept>
#include <string>

namespace gls {

CliqueCount binomial(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0) {
    throw std::invalid_argument("binomial: arguments must be nonnegative");
  }
  if (k > m) return CliqueCount(0);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = checked_mul(result, m - k + i);
    result /= i;  // exact: result is C(m-k+i, i) after this step
  }
  return CliqueCount(result);
}

std::pair<std::int64_t, std::int64_t> decompose_n(std::int64_t n,
                                                  std::int64_t delta) {
  if (n < 0 || delta < 0) {
    throw std::invalid_argument("decompose_n: arguments must be nonnegative");
  }
  return {n / (delta + 1), n % (delta + 1)};
}

BoundParams BoundParams::make(std::int64_t n, std::int64_t delta,
                              std::int64_t t) {
  auto [a, b] = decompose_n(n, delta);
  BoundParams p{n, delta, t, a, b};
  p.validate();
  return p;
}

void BoundParams::validate() const {
  if (n < 0 || delta < 0 || a < 0) {
    throw std::invalid_argument("BoundParams: negative field");
  }
  if (t < 3) {
    throw std::invalid_argument("BoundParams: t must be >= 3, got " +
                                std::to_string(t));
  }
  if (b < 0 || b > delta) {
    throw std::invalid_argument("BoundParams: b=" + std::to_string(b) +
                                " outside [0, " + std::to_string(delta) + "]");
  }
  if (checked_add(checked_mul(a, delta + 1), b) != n) {
    throw std::invalid_argument("BoundParams: n != a*(delta+1) + b");
  }
}

CliqueCount gls_bound(std::int64_t n, std::int64_t delta, std::int64_t t) {
  if (t < 3) {
    throw std::invalid_argument("gls_bound: t must be >= 3, got " +
                                std::to_string(t));
  }
  auto [a, b] = decompose_n(n, delta);
  return CliqueCount(a) * binomial(delta + 1, t) + binomial(b, t);
}

bool convexity_step_check(std::int64_t deg_v, std::int64_t delta,
                          std::int64_t b, std::int64_t t) {
  if (deg_v < 0 || deg_v > delta || b < 0 || b > delta || t < 3) {
    throw std::invalid_argument("convexity_step_check: invalid arguments");
  }
  if (b >= deg_v + 1) {
    return binomial(deg_v + 1, t) + binomial(b - deg_v - 1, t) <= binomial(b, t);
  }
  return binomial(deg_v + 1, t) + binomial(b + delta - deg_v, t) <=
         binomial(delta + 1, t) + binomial(b, t);
}

}  // namespace gls
