// gls: count cliques in bounded-degree graphs, evaluate the extremal bound,
// produce and verify decomposition certificates, and stress the counting
// identities behind the bound.
//
// Exit codes: 0 all checks passed / output produced, 1 a verification check
// failed, 2 usage, parse, or parameter error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glskit/bound.hpp"
#include "glskit/census.hpp"
#include "glskit/certificate_io.hpp"
#include "glskit/cliques.hpp"
#include "glskit/decompose.hpp"
#include "glskit/generators.hpp"
#include "glskit/graph_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int run_count(const std::string& graph_path, std::int64_t t) {
  gls::Graph g = gls::load_graph_file(graph_path);
  std::cout << gls::count_cliques(g, static_cast<int>(t)) << "\n";
  return kExitPass;
}

int run_bound(std::int64_t n, std::int64_t delta, std::int64_t t) {
  auto [a, b] = gls::decompose_n(n, delta);
  gls::CliqueCount bound = gls::gls_bound(n, delta, t);
  std::cout << "a=" << a << " b=" << b << " bound=" << bound << "\n";
  return kExitPass;
}

int run_check(const std::string& graph_path, std::int64_t t,
              std::optional<std::int64_t> delta_opt) {
  gls::Graph g = gls::load_graph_file(graph_path);
  const auto max_deg = static_cast<std::int64_t>(g.max_degree());
  const std::int64_t delta = delta_opt.value_or(max_deg);
  if (delta < max_deg) {
    throw std::invalid_argument("delta=" + std::to_string(delta) +
                                " is below the maximum degree " +
                                std::to_string(max_deg));
  }
  gls::CliqueCount k_t = gls::count_cliques(g, static_cast<int>(t));
  gls::CliqueCount bound =
      gls::gls_bound(static_cast<std::int64_t>(g.vertex_count()), delta, t);
  bool pass = k_t <= bound;
  std::cout << "k_t=" << k_t << " bound=" << bound
            << (pass ? " PASS" : " FAIL") << "\n";
  if (!pass) {
    std::cout << gls::graph_to_string(g);
    return kExitCheckFailed;
  }
  return kExitPass;
}

int run_decompose(const std::string& graph_path, std::int64_t t,
                  std::optional<std::int64_t> delta_opt,
                  const std::string& out_path) {
  gls::Graph g = gls::load_graph_file(graph_path);
  gls::Certificate cert = gls::decompose(g, static_cast<int>(t), delta_opt);
  std::string text = gls::certificate_to_string(cert);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    gls::save_certificate_file(out_path, cert);
  }
  return kExitPass;
}

int run_verify_cert(const std::string& graph_path,
                    const std::string& cert_path) {
  gls::Graph g = gls::load_graph_file(graph_path);
  gls::Certificate cert = gls::load_certificate_file(cert_path);
  gls::VerificationReport report = gls::verify_certificate(g, cert);
  for (const gls::CheckResult& check : report.checks) {
    std::cout << check.name << ": " << (check.pass ? "PASS" : "FAIL");
    if (!check.pass && !check.detail.empty()) {
      std::cout << " (" << check.detail << ")";
    }
    std::cout << "\n";
  }
  bool pass = report.all_pass();
  std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) {
    std::cout << gls::graph_to_string(g);
    return kExitCheckFailed;
  }
  return kExitPass;
}

int run_lemma2(const std::string& graph_path, std::int64_t t) {
  gls::Graph g = gls::load_graph_file(graph_path);
  gls::IdentityReport identities =
      gls::check_identities(g, static_cast<int>(t));
  bool pass = true;
  for (const gls::IdentityCheck& check : identities.checks) {
    std::cout << check.name << ": " << check.lhs << " " << check.relation
              << " " << check.rhs << (check.pass ? " PASS" : " FAIL") << "\n";
    pass = pass && check.pass;
  }
  gls::SubgraphSumReport sums =
      gls::sum_over_subgraphs_check(g, static_cast<int>(t));
  bool phi_ok = sums.phi_good_sum == sums.census_phi_good;
  bool omega_ok = sums.omega_good_sum == sums.census_omega_good;
  std::cout << "subgraph_sum_phi_good: " << sums.phi_good_sum << " == "
            << sums.census_phi_good << (phi_ok ? " PASS" : " FAIL") << "\n";
  std::cout << "subgraph_sum_omega_good: " << sums.omega_good_sum << " == "
            << sums.census_omega_good << (omega_ok ? " PASS" : " FAIL")
            << "\n";
  pass = pass && phi_ok && omega_ok;
  if (!pass) {
    std::cout << gls::graph_to_string(g);
    return kExitCheckFailed;
  }
  return kExitPass;
}

int run_gen(const gls::GeneratorSpec& spec, const std::string& out_path) {
  gls::Graph g = spec.build();
  if (out_path.empty()) {
    std::cout << gls::graph_to_string(g);
  } else {
    gls::save_graph_file(out_path, g);
  }
  return kExitPass;
}

struct FuzzFailure {
  std::string what;
  gls::Graph graph;
};

int run_fuzz(std::int64_t count, std::int64_t n_max, std::int64_t delta_max,
             std::vector<std::int64_t> ts, std::uint64_t seed) {
  if (count < 0 || n_max < 0 || delta_max < 0) {
    throw std::invalid_argument("fuzz parameters must be nonnegative");
  }
  if (ts.empty()) ts = {3, 4};

  std::mt19937_64 rng(seed);
  std::int64_t failures = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::int64_t>(rng() % (n_max + 1));
    const auto gen_delta = static_cast<std::int64_t>(rng() % (delta_max + 1));
    const auto attempts = static_cast<std::int64_t>(
        rng() % static_cast<std::uint64_t>(2 * n * (gen_delta + 1) + 1));
    const std::uint64_t graph_seed = rng();
    gls::Graph g = gls::random_bounded(n, gen_delta, attempts, graph_seed);

    // Alternate between the generator's cap and the graph's own max degree,
    // so both parameterizations of the bound get exercised.
    std::optional<std::int64_t> delta;
    if (i % 2 == 0) delta = gen_delta;
    const std::int64_t effective =
        delta.value_or(static_cast<std::int64_t>(g.max_degree()));

    std::vector<std::string> wrong;
    for (std::int64_t t : ts) {
      gls::CliqueCount k_t = gls::count_cliques(g, static_cast<int>(t));
      gls::CliqueCount bound = gls::gls_bound(n, effective, t);
      if (!(k_t <= bound)) {
        wrong.push_back("t=" + std::to_string(t) + ": k_t " +
                        std::to_string(k_t.value()) + " exceeds bound " +
                        std::to_string(bound.value()));
      }
      gls::Certificate cert = gls::decompose(g, static_cast<int>(t), delta);
      gls::Certificate reloaded =
          gls::certificate_from_string(gls::certificate_to_string(cert));
      gls::VerificationReport report = gls::verify_certificate(g, reloaded);
      for (const gls::CheckResult& check : report.checks) {
        if (!check.pass) {
          wrong.push_back("t=" + std::to_string(t) + ": certificate check " +
                          check.name + " failed (" + check.detail + ")");
        }
      }
      if (n <= 9) {
        gls::IdentityReport identities =
            gls::check_identities(g, static_cast<int>(t));
        for (const gls::IdentityCheck& check : identities.checks) {
          if (!check.pass) {
            wrong.push_back("t=" + std::to_string(t) + ": identity " +
                            check.name + " failed");
          }
        }
        gls::SubgraphSumReport sums =
            gls::sum_over_subgraphs_check(g, static_cast<int>(t));
        if (!sums.pass) {
          wrong.push_back("t=" + std::to_string(t) +
                          ": per-subset contributions do not sum to the census");
        }
      }
    }
    if (!wrong.empty()) {
      ++failures;
      std::cerr << "failure on graph " << i << " (seed " << graph_seed
                << "):\n";
      for (const std::string& w : wrong) std::cerr << "  " << w << "\n";
      std::cout << gls::graph_to_string(g);
    }
  }
  std::cout << count << " graphs, " << failures << " failures\n";
  return failures == 0 ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique counts and extremal bound checking for bounded-degree graphs"};
  app.require_subcommand(1);
  int exit_code = kExitPass;

  // count
  std::string count_graph;
  std::int64_t count_t = 3;
  auto* count_cmd = app.add_subcommand("count", "print the number of t-cliques");
  count_cmd->add_option("graph", count_graph, "graph file")->required();
  count_cmd->add_option("--t", count_t, "clique size (>= 1)")->required();
  count_cmd->callback([&]() { exit_code = run_count(count_graph, count_t); });

  // bound
  std::int64_t bound_n = 0;
  std::int64_t bound_delta = 0;
  std::int64_t bound_t = 3;
  auto* bound_cmd =
      app.add_subcommand("bound", "print a, b, and the clique-count bound");
  bound_cmd->add_option("--n", bound_n, "number of vertices")->required();
  bound_cmd->add_option("--delta", bound_delta, "maximum degree")->required();
  bound_cmd->add_option("--t", bound_t, "clique size (>= 3)")->required();
  bound_cmd->callback(
      [&]() { exit_code = run_bound(bound_n, bound_delta, bound_t); });

  // check
  std::string check_graph;
  std::int64_t check_t = 3;
  std::int64_t check_delta = 0;
  auto* check_cmd = app.add_subcommand(
      "check", "verify the t-clique count against the bound");
  check_cmd->add_option("graph", check_graph, "graph file")->required();
  check_cmd->add_option("--t", check_t, "clique size (>= 3)")->required();
  auto* check_delta_opt = check_cmd->add_option(
      "--delta", check_delta, "degree cap (default: the graph's max degree)");
  check_cmd->callback([&]() {
    std::optional<std::int64_t> delta;
    if (*check_delta_opt) delta = check_delta;
    exit_code = run_check(check_graph, check_t, delta);
  });

  // decompose
  std::string dec_graph;
  std::int64_t dec_t = 3;
  std::int64_t dec_delta = 0;
  std::string dec_out;
  auto* dec_cmd = app.add_subcommand(
      "decompose", "emit a witness-removal certificate for the bound");
  dec_cmd->add_option("graph", dec_graph, "graph file")->required();
  dec_cmd->add_option("--t", dec_t, "clique size (>= 3)")->required();
  auto* dec_delta_opt = dec_cmd->add_option(
      "--delta", dec_delta, "degree cap (default: the graph's max degree)");
  dec_cmd->add_option("--out", dec_out, "write the certificate here");
  dec_cmd->callback([&]() {
    std::optional<std::int64_t> delta;
    if (*dec_delta_opt) delta = dec_delta;
    exit_code = run_decompose(dec_graph, dec_t, delta, dec_out);
  });

  // verify-cert
  std::string ver_graph;
  std::string ver_cert;
  auto* ver_cmd = app.add_subcommand(
      "verify-cert", "replay and check a certificate against a graph");
  ver_cmd->add_option("graph", ver_graph, "graph file")->required();
  ver_cmd->add_option("certificate", ver_cert, "certificate file")->required();
  ver_cmd->callback([&]() { exit_code = run_verify_cert(ver_graph, ver_cert); });

  // lemma2
  std::string lem_graph;
  std::int64_t lem_t = 3;
  auto* lem_cmd = app.add_subcommand(
      "lemma2", "check the counting identities on a small graph");
  lem_cmd->add_option("graph", lem_graph, "graph file")->required();
  lem_cmd->add_option("--t", lem_t, "clique size (>= 3)")->required();
  lem_cmd->callback([&]() { exit_code = run_lemma2(lem_graph, lem_t); });

  // gen
  gls::GeneratorSpec spec;
  std::string gen_out;
  bool gen_extremizer = false;
  bool gen_random = false;
  auto* gen_cmd =
      app.add_subcommand("gen", "write a graph in the text format");
  auto* gen_name_opt =
      gen_cmd->add_option("--name", spec.name,
                          "fixture name (complete_k, cycle_k, path_k, star_k, "
                          "petersen, paw, diamond)");
  auto* gen_ext_flag = gen_cmd->add_flag(
      "--extremizer", gen_extremizer,
      "a copies of K_{delta+1} plus one K_b (needs --a, --delta, --b)");
  auto* gen_rand_flag = gen_cmd->add_flag(
      "--random", gen_random,
      "random graph with max degree <= delta (needs --n, --delta, "
      "--attempts, --seed)");
  gen_cmd->add_option("--a", spec.a, "number of full cliques");
  gen_cmd->add_option("--b", spec.b, "size of the remainder clique");
  gen_cmd->add_option("--n", spec.n, "number of vertices");
  gen_cmd->add_option("--delta", spec.delta, "degree cap");
  gen_cmd->add_option("--attempts", spec.edge_attempts,
                      "random edge insertion attempts");
  gen_cmd->add_option("--seed", spec.seed, "random seed");
  gen_cmd->add_option("--out", gen_out, "write the graph here");
  gen_cmd->callback([&]() {
    int kinds = (*gen_name_opt ? 1 : 0) + (*gen_ext_flag ? 1 : 0) +
                (*gen_rand_flag ? 1 : 0);
    if (kinds != 1) {
      throw CLI::ValidationError(
          "gen", "pick exactly one of --name, --extremizer, --random");
    }
    if (*gen_name_opt) {
      spec.kind = gls::GeneratorSpec::Kind::named;
    } else if (gen_extremizer) {
      spec.kind = gls::GeneratorSpec::Kind::extremizer;
    } else {
      spec.kind = gls::GeneratorSpec::Kind::random_bounded;
    }
    exit_code = run_gen(spec, gen_out);
  });

  // fuzz
  std::int64_t fuzz_count = 200;
  std::int64_t fuzz_n = 48;
  std::int64_t fuzz_delta = 8;
  std::vector<std::int64_t> fuzz_ts;
  std::uint64_t fuzz_seed = 0;
  auto* fuzz_cmd = app.add_subcommand(
      "fuzz", "sweep random graphs through every check");
  fuzz_cmd->add_option("--count", fuzz_count, "number of graphs");
  fuzz_cmd->add_option("--n", fuzz_n, "largest vertex count");
  fuzz_cmd->add_option("--delta", fuzz_delta, "largest degree cap");
  fuzz_cmd->add_option("--t", fuzz_ts, "clique sizes (default 3 4)");
  fuzz_cmd->add_option("--seed", fuzz_seed, "master seed");
  fuzz_cmd->callback([&]() {
    exit_code = run_fuzz(fuzz_count, fuzz_n, fuzz_delta, fuzz_ts, fuzz_seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
