#include "glskit/decompose.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "glskit/cliques.hpp"

namespace gls {

namespace {

struct WitnessPick {
  Vertex vertex = 0;
  std::int64_t degree = 0;
  std::int64_t t_count = 0;
};

// C(deg+1, t) with overflow treated as saturation: a cap beyond the 64-bit
// range cannot be exceeded by any representable count.
std::int64_t saturated_cap(std::int64_t deg, std::int64_t t) {
  try {
    return binomial(deg + 1, t).value();
  } catch (const std::overflow_error&) {
    return std::numeric_limits<std::int64_t>::max();
  }
}

WitnessPick select_witness(const Graph& g, int t) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> meeting = meeting_counts(g, t);

  bool found = false;
  WitnessPick best;
  std::int64_t best_slack = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto deg = static_cast<std::int64_t>(g.degree(v));
    std::int64_t cap = saturated_cap(deg, t);
    if (meeting[v] > cap) continue;
    std::int64_t slack = cap - meeting[v];
    if (!found || slack < best_slack ||
        (slack == best_slack && deg > best.degree)) {
      found = true;
      best = WitnessPick{v, deg, meeting[v]};
      best_slack = slack;
    }
  }
  if (!found) {
    throw std::logic_error(
        "no witness vertex satisfies |T_v| <= C(deg(v)+1, t); "
        "this contradicts the neighborhood-removal inequality");
  }
  return best;
}

VertexSet map_to_original(const VertexSet& local,
                          const std::vector<Vertex>& original_of) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(original_of[v]);
  // original_of is strictly increasing, so order is preserved
  return VertexSet::from_sorted(std::move(out));
}

}  // namespace

Vertex find_witness(const Graph& g, int t) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("find_witness: graph has no vertices");
  }
  if (t < 3) {
    throw std::invalid_argument("find_witness: t must be >= 3");
  }
  return select_witness(g, t).vertex;
}

Certificate decompose(const Graph& g, int t,
                      std::optional<std::int64_t> delta_opt) {
  if (t < 3) {
    throw std::invalid_argument("decompose: t must be >= 3");
  }
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto max_deg = static_cast<std::int64_t>(g.max_degree());
  const std::int64_t delta = delta_opt.value_or(max_deg);
  if (delta < max_deg) {
    throw std::invalid_argument("decompose: delta=" + std::to_string(delta) +
                                " is below the maximum degree " +
                                std::to_string(max_deg));
  }

  Certificate cert;
  cert.params = BoundParams::make(n, delta, t);
  cert.k_t = count_cliques(g, t);
  cert.bound = gls_bound(n, delta, t);

  Graph residual = g;
  std::vector<Vertex> original_of(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) original_of[v] = v;

  while (residual.vertex_count() > 0) {
    WitnessPick pick = select_witness(residual, t);
    VertexSet neighborhood = residual.closed_neighborhood(pick.vertex);

    CertificateStep step;
    step.vertex = original_of[pick.vertex];
    step.degree_at_step = pick.degree;
    step.t_count = CliqueCount(pick.t_count);
    step.removed = map_to_original(neighborhood, original_of);
    cert.steps.push_back(std::move(step));

    auto [next, map] = residual.remove_closed_neighborhood(pick.vertex);
    std::vector<Vertex> next_original(map.kept.size());
    for (std::size_t i = 0; i < map.kept.size(); ++i) {
      next_original[i] = original_of[map.kept[i]];
    }
    residual = std::move(next);
    original_of = std::move(next_original);
  }
  return cert;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify_certificate(const Graph& g, const Certificate& cert) {
  cert.params.validate();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  if (cert.params.n != n) {
    throw std::invalid_argument("certificate is for n=" +
                                std::to_string(cert.params.n) +
                                " but the graph has " + std::to_string(n) +
                                " vertices");
  }
  const auto max_deg = static_cast<std::int64_t>(g.max_degree());
  if (cert.params.delta < max_deg) {
    throw std::invalid_argument(
        "certificate delta=" + std::to_string(cert.params.delta) +
        " is below the graph's maximum degree " + std::to_string(max_deg));
  }
  for (const CertificateStep& step : cert.steps) {
    if (step.vertex >= g.vertex_count()) {
      throw std::invalid_argument("malformed certificate: step vertex out of range");
    }
    for (Vertex v : step.removed) {
      if (v >= g.vertex_count()) {
        throw std::invalid_argument("malformed certificate: removed vertex out of range");
      }
    }
    if (step.degree_at_step < 0) {
      throw std::invalid_argument("malformed certificate: negative degree");
    }
  }

  const int t = static_cast<int>(cert.params.t);
  VerificationReport report;
  std::ostringstream detail;

  // (i) replay: rerun the removal sequence, recomputing each recorded value.
  bool replay_ok = true;
  {
    Graph residual = g;
    std::vector<Vertex> original_of(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) original_of[v] = v;

    for (std::size_t i = 0; i < cert.steps.size() && replay_ok; ++i) {
      const CertificateStep& step = cert.steps[i];
      auto pos = std::lower_bound(original_of.begin(), original_of.end(),
                                  step.vertex);
      if (pos == original_of.end() || *pos != step.vertex) {
        replay_ok = false;
        detail << "step " << i << ": vertex " << step.vertex
               << " is not in the residual graph";
        break;
      }
      auto local = static_cast<Vertex>(pos - original_of.begin());
      auto deg = static_cast<std::int64_t>(residual.degree(local));
      if (deg != step.degree_at_step) {
        replay_ok = false;
        detail << "step " << i << ": recorded degree " << step.degree_at_step
               << " but recomputed " << deg;
        break;
      }
      CliqueCount meeting = count_cliques_meeting(residual, local, t);
      if (meeting != step.t_count) {
        replay_ok = false;
        detail << "step " << i << ": recorded t_count " << step.t_count
               << " but recomputed " << meeting;
        break;
      }
      VertexSet neighborhood = residual.closed_neighborhood(local);
      std::vector<Vertex> as_original;
      as_original.reserve(neighborhood.size());
      for (Vertex v : neighborhood) as_original.push_back(original_of[v]);
      if (VertexSet::from_sorted(std::move(as_original)) != step.removed) {
        replay_ok = false;
        detail << "step " << i << ": removed set does not match the closed "
               << "neighborhood";
        break;
      }

      auto [next, map] = residual.remove_closed_neighborhood(local);
      std::vector<Vertex> next_original(map.kept.size());
      for (std::size_t j = 0; j < map.kept.size(); ++j) {
        next_original[j] = original_of[map.kept[j]];
      }
      residual = std::move(next);
      original_of = std::move(next_original);
    }

    CliqueCount recomputed_k_t = count_cliques(g, t);
    if (replay_ok && recomputed_k_t != cert.k_t) {
      replay_ok = false;
      detail << "recorded k_t " << cert.k_t << " but recomputed "
             << recomputed_k_t;
    }
    CliqueCount true_bound =
        gls_bound(cert.params.n, cert.params.delta, cert.params.t);
    if (replay_ok && true_bound != cert.bound) {
      replay_ok = false;
      detail << "recorded bound " << cert.bound << " but recomputed "
             << true_bound;
    }
    report.checks.push_back({"replay", replay_ok, detail.str()});
  }

  // (ii) per-step inequality |T_v| <= C(degree+1, t) on the recorded values
  // (equal to the recomputed ones whenever replay passes).
  {
    bool ok = true;
    std::string msg;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      const CertificateStep& step = cert.steps[i];
      CliqueCount cap = binomial(step.degree_at_step + 1, cert.params.t);
      if (step.t_count > cap) {
        ok = false;
        std::ostringstream d;
        d << "step " << i << ": t_count " << step.t_count << " > C(deg+1, t) = "
          << cap;
        msg = d.str();
        break;
      }
    }
    report.checks.push_back({"step_inequality", ok, msg});
  }

  // (iii) the removed sets partition V, each of size degree+1.
  {
    bool ok = true;
    std::string msg;
    std::vector<bool> covered(g.vertex_count(), false);
    std::size_t covered_count = 0;
    for (std::size_t i = 0; i < cert.steps.size() && ok; ++i) {
      const CertificateStep& step = cert.steps[i];
      if (static_cast<std::int64_t>(step.removed.size()) !=
          step.degree_at_step + 1) {
        ok = false;
        msg = "step " + std::to_string(i) + ": |removed| != degree + 1";
        break;
      }
      for (Vertex v : step.removed) {
        if (covered[v]) {
          ok = false;
          msg = "vertex " + std::to_string(v) + " removed twice";
          break;
        }
        covered[v] = true;
        ++covered_count;
      }
    }
    if (ok && covered_count != g.vertex_count()) {
      ok = false;
      msg = "removed sets cover " + std::to_string(covered_count) + " of " +
            std::to_string(g.vertex_count()) + " vertices";
    }
    report.checks.push_back({"partition", ok, msg});
  }

  // (iv) every clique is captured: k_t(G) <= sum of recorded t_count.
  {
    CliqueCount k_t = count_cliques(g, t);
    CliqueCount captured;
    for (const CertificateStep& step : cert.steps) captured += step.t_count;
    std::ostringstream d;
    d << "k_t = " << k_t << ", captured sum = " << captured;
    report.checks.push_back({"clique_capture", k_t <= captured, d.str()});
  }

  // (v) the summed caps stay within the bound:
  // sum of C(degree+1, t) <= gls_bound(n, delta, t).
  {
    CliqueCount caps;
    for (const CertificateStep& step : cert.steps) {
      caps += binomial(step.degree_at_step + 1, cert.params.t);
    }
    CliqueCount bound = gls_bound(cert.params.n, cert.params.delta, cert.params.t);
    std::ostringstream d;
    d << "cap sum = " << caps << ", bound = " << bound;
    report.checks.push_back({"bound_sum", caps <= bound, d.str()});
  }

  return report;
}

}  // namespace gls
