// grassmann-lab: command-line driver for building Grassmann graphs, checking
// their maximal-clique structure and running the coreness tests.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "grassmann/cliques.hpp"
#include "grassmann/coreness.hpp"
#include "grassmann/error.hpp"
#include "grassmann/fixture.hpp"
#include "grassmann/graph.hpp"
#include "grassmann/qbinomial.hpp"
#include "grassmann/report.hpp"

namespace {

using grassmann::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBound = 2;
constexpr int kExitInvalid = 3;

struct RunConfig {
  std::uint64_t q = 2;
  int n = 4;
  int m = 2;
  std::string format = "json";
  std::string fixture_path;
  std::optional<std::uint64_t> at_q;
  std::optional<std::uint64_t> q_max;
  grassmann::Limits limits;
};

grassmann::FieldPtr field_for(std::uint64_t q, const grassmann::Limits& limits) {
  const auto pp = grassmann::prime_power(q);
  if (!pp) grassmann::throw_invalid("q is not a prime power: " + std::to_string(q));
  return grassmann::make_field_ptr(grassmann::make_field(pp->first, pp->second, limits.max_field_order));
}

// "key: value" lines for the text format of report commands.
void flatten(const Json& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array() && !node.empty() && (node.front().is_object() || node.front().is_array())) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

void emit(const Json& doc, const std::string& format) {
  if (format == "text") {
    flatten(doc, "", std::cout);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

int cmd_build(const RunConfig& cfg) {
  const auto g = grassmann::build_graph(field_for(cfg.q, cfg.limits), cfg.n, cfg.m, cfg.limits);
  if (cfg.format == "dot") {
    std::cout << grassmann::graph_to_dot(g);
  } else if (cfg.format == "text") {
    std::cout << grassmann::graph_to_text(g);
  } else {
    std::cout << grassmann::graph_to_json(g).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto g = grassmann::build_graph(field_for(cfg.q, cfg.limits), cfg.n, cfg.m, cfg.limits);
  const auto census = grassmann::all_maximal_cliques_bruteforce(g, cfg.limits);
  const auto lemmas = grassmann::verify_clique_lemmas(g, cfg.limits);
  bool pass = census.chow_holds() && lemmas.all_pass();

  Json lemma_doc = grassmann::lemmas_to_json(lemmas);
  if (g.n() == 2 * g.m()) {
    const auto dual = grassmann::dual_map_check(g, cfg.limits);
    pass = pass && dual.all_pass();
    lemma_doc["duality"] = grassmann::dual_to_json(dual);
  } else {
    lemma_doc["duality"] = Json{{"skipped", "requires n = 2m"}};
  }
  Json doc{{"params", grassmann::params_to_json(g.field()->spec(), g.n(), g.m())},
           {"cliques", grassmann::census_to_json(g, census)},
           {"lemmas", lemma_doc},
           {"pass", pass}};
  emit(doc, cfg.format);
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_coreness(const RunConfig& cfg) {
  const auto field = field_for(cfg.q, cfg.limits);
  std::optional<grassmann::Fixture> fixture;
  if (!cfg.fixture_path.empty()) fixture = grassmann::load_fixture(cfg.fixture_path);
  const auto report = grassmann::core_test(cfg.n, cfg.m, cfg.q, cfg.limits, fixture ? &*fixture : nullptr);
  Json doc{{"params", grassmann::params_to_json(field->spec(), cfg.n, cfg.m)},
           {"coreness", grassmann::coreness_to_json(report)}};
  emit(doc, cfg.format);
  if (report.fixture && !report.fixture->all_pass()) return kExitCheckFailed;
  return kExitOk;
}

int cmd_qbinom(const RunConfig& cfg) {
  Json body = grassmann::qbinom_to_json(cfg.n, cfg.m, cfg.at_q);
  if (cfg.q_max) body["scan"] = grassmann::scan_to_json(grassmann::scan_core_threshold(cfg.n, cfg.m, *cfg.q_max));
  Json doc{{"params", Json{{"n", cfg.n}, {"m", cfg.m}}}, {"qbinom", body}};
  emit(doc, cfg.format);
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg) {
  const auto scan = grassmann::scan_core_threshold(cfg.n, cfg.m, cfg.q_max.value_or(64));
  Json doc{{"params", Json{{"n", cfg.n}, {"m", cfg.m}}},
           {"qbinom", Json{{"scan", grassmann::scan_to_json(scan)}}}};
  emit(doc, cfg.format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmann graph toolkit: construction, clique structure and coreness"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_qnm = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "field order (prime power)")->required();
    sub->add_option("--n", cfg.n, "ambient dimension")->required();
    sub->add_option("--m", cfg.m, "subspace dimension")->required();
  };
  auto add_format = [&](CLI::App* sub, bool dot) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(dot ? CLI::IsMember({"json", "text", "dot"}) : CLI::IsMember({"json", "text"}));
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", cfg.limits.max_vertices, "vertex bound for graph building")
        ->check(CLI::PositiveNumber);
    sub->add_option("--brute-bound", cfg.limits.brute_force_vertices, "vertex bound for exhaustive searches")
        ->check(CLI::PositiveNumber);
  };

  auto* build = app.add_subcommand("build", "build J_q(n,m) and dump it");
  add_qnm(build);
  add_format(build, true);
  add_bounds(build);

  auto* verify = app.add_subcommand("verify", "check maximal cliques, intersection lemmas and duality");
  add_qnm(verify);
  add_format(verify, false);
  add_bounds(verify);

  auto* coreness = app.add_subcommand("coreness", "decide whether J_q(n,m) is a core");
  add_qnm(coreness);
  add_format(coreness, false);
  add_bounds(coreness);
  coreness->add_option("--fixture", cfg.fixture_path, "colour-class fixture file")->check(CLI::ExistingFile);

  auto* qbinom = app.add_subcommand("qbinom", "cyclotomic factorization of [n choose m]_q and h(q)");
  qbinom->add_option("--n", cfg.n)->required();
  qbinom->add_option("--m", cfg.m)->required();
  qbinom->add_option("--at", cfg.at_q, "evaluate at this prime power");
  qbinom->add_option("--q-max", cfg.q_max, "also scan h(q) over prime powers up to this bound");
  add_format(qbinom, false);

  auto* scan = app.add_subcommand("scan", "integrality of h(q) over prime powers q <= q-max");
  scan->add_option("--n", cfg.n)->required();
  scan->add_option("--m", cfg.m)->required();
  scan->add_option("--q-max", cfg.q_max, "largest q to test (default 64)");
  add_format(scan, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*coreness) return cmd_coreness(cfg);
    if (*qbinom) return cmd_qbinom(cfg);
    if (*scan) return cmd_scan(cfg);
  } catch (const grassmann::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case grassmann::ErrorKind::kResourceBound:
        return kExitBound;
      case grassmann::ErrorKind::kInvalidInput:
        return kExitInvalid;
      case grassmann::ErrorKind::kInternal:
        return kExitCheckFailed;
    }
  }
  return kExitInvalid;
}
