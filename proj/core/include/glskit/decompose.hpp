#ifndef GLSKIT_DECOMPOSE_HPP
#define GLSKIT_DECOMPOSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glskit/bound.hpp"
#include "glskit/count.hpp"
#include "glskit/graph.hpp"

namespace gls {

/// One induction step: a witness vertex whose closed neighborhood was deleted
/// from the residual graph. All vertex indices refer to the ORIGINAL graph, so
/// a certificate is checkable against the input alone.
struct CertificateStep {
  Vertex vertex = 0;
  std::int64_t degree_at_step = 0;  // degree in the residual graph
  CliqueCount t_count;              // cliques meeting its closed neighborhood
  VertexSet removed;                // the deleted closed neighborhood
};

/// Replayable record of a full decomposition run. Valid certificates satisfy:
/// the removed sets partition V, every step has t_count <= C(degree+1, t),
/// sum of t_count >= k_t, and sum of C(degree+1, t) <= bound.
struct Certificate {
  BoundParams params;
  CliqueCount k_t;
  CliqueCount bound;
  std::vector<CertificateStep> steps;
};

/// A vertex v with count_cliques_meeting(g, v, t) <= C(deg(v)+1, t). One
/// always exists; failure to find one signals an implementation bug and
/// throws std::logic_error. Among qualifying vertices the pick minimizes the
/// slack C(deg(v)+1, t) - |T_v|, then prefers larger degree, then smaller
/// index.
Vertex find_witness(const Graph& g, int t);

/// Runs the full removal induction and records it. delta defaults to the
/// graph's maximum degree; an explicit delta below it is rejected.
Certificate decompose(const Graph& g, int t,
                      std::optional<std::int64_t> delta = std::nullopt);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Replays an untrusted certificate against g, recomputing every quantity
/// from scratch. Reports pass/fail for: replay fidelity, the per-step
/// inequality, the partition of V, clique capture (k_t <= sum of t_count),
/// and the bound telescope (sum of C(degree+1, t) <= gls_bound).
/// Malformed input (bad params, out-of-range vertices, delta below the
/// graph's maximum degree) throws std::invalid_argument.
VerificationReport verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace gls

#endif  // GLSKIT_DECOMPOSE_HPP
