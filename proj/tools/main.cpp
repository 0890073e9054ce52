// rectmatch: experiments on maximum same-color rectangle matchings of
// random bichromatic point sets.
//
// Subcommands: gen, solve, chain, counterexample, concentration.
// Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 chain
// validation failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rectmatch/chain.hpp"
#include "rectmatch/concentration.hpp"
#include "rectmatch/counterexample.hpp"
#include "rectmatch/geometry.hpp"
#include "rectmatch/io.hpp"
#include "rectmatch/solvers.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace rectmatch;

void emit(const json& report, const std::string& output) {
  const std::string text = report.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << text;
  }
}

json report_header(std::uint64_t seed, const json& config) {
  return {{"seed", seed}, {"version", kVersion}, {"config", config}};
}

struct CommonOpts {
  int n = 0;
  int t = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  std::string model = "uniform";
  std::string solver = "exact";
  long limits_nodes = 50'000'000;
  std::string input;
  std::string output;
  std::string check;
  int workers = 1;
  int n0 = 1;
  long chain_n = 100;
  int perturbations = 3;
  std::vector<int> ns;
};

Model parse_model(const std::string& s) {
  if (s == "uniform") return Model::UniformSquare;
  if (s == "grid-x") return Model::GridX;
  throw CLI::ValidationError("--model must be uniform or grid-x");
}

int cmd_gen(const CommonOpts& opt) {
  const Instance inst = generate_instance(opt.n, opt.seed, parse_model(opt.model));
  std::ostringstream csv;
  write_instance_csv(inst, csv);
  if (opt.output.empty() || opt.output == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << csv.str();
    std::cout << opt.output << " seed=" << opt.seed << "\n";
  }
  return 0;
}

int cmd_solve(const CommonOpts& opt) {
  Instance inst = read_instance_file(opt.input);
  SolveLimits limits;
  limits.max_nodes = opt.limits_nodes;
  SolveResult result;
  if (opt.solver == "exact") {
    result = solve_exact(inst, limits);
  } else if (opt.solver == "bruteforce") {
    result.matching = solve_bruteforce(inst);
  } else if (opt.solver == "greedy") {
    result.matching = solve_greedy_sweep(inst).matching;
  } else {
    throw CLI::ValidationError("--solver must be exact, bruteforce, or greedy");
  }
  json report = matching_to_json(inst, result);
  report["solver"] = opt.solver;
  report["version"] = kVersion;
  report["config"] = {{"input", opt.input},
                      {"solver", opt.solver},
                      {"limits_nodes", opt.limits_nodes}};
  emit(report, opt.output);
  return result.optimal ? 0 : 2;
}

int cmd_chain(const CommonOpts& opt) {
  const ChainSpec spec = load_chain_file(opt.input);
  const auto validation = validate_chain(spec);
  if (!validation.ok()) {
    std::cerr << "chain validation failed: stochastic=" << validation.stochastic
              << " irreducible=" << validation.irreducible
              << " aperiodic=" << validation.aperiodic << "\n";
    return 3;
  }
  const Lemma1Report bounds = lemma1_bounds(spec, opt.epsilon, opt.chain_n);
  json report = report_header(opt.seed, {{"input", opt.input},
                                         {"epsilon", opt.epsilon},
                                         {"n", opt.chain_n}});
  report["lemma1"] = lemma1_to_json(bounds);
  report["stationary"] = [&] {
    const auto s = stationary(spec);
    json arr = json::array();
    for (int i = 0; i < s.size(); ++i) arr.push_back(s(i));
    return arr;
  }();
  report["validation"] = {{"stochastic", validation.stochastic},
                          {"irreducible", validation.irreducible},
                          {"aperiodic", validation.aperiodic}};
  emit(report, opt.output);
  return 0;
}

int cmd_counterexample(const CommonOpts& opt) {
  const auto r = markov_gap_report(opt.t, opt.trials, opt.seed);
  json report = report_header(
      opt.seed, {{"t", opt.t}, {"trials", opt.trials}});
  report.update(counterexample_to_json(r));
  emit(report, opt.output);
  return 0;
}

int cmd_concentration(const CommonOpts& opt, const std::string& csv_path) {
  SolveLimits limits;
  limits.max_nodes = opt.limits_nodes;
  // The worker count is an execution detail, not part of the experiment
  // config: reports must be byte-identical at any worker count.
  json config = {{"check", opt.check}, {"n", opt.n},
                 {"trials", opt.trials}, {"epsilon", opt.epsilon}};
  json report = report_header(opt.seed, config);
  if (opt.check == "bounded-diff") {
    const auto r = bounded_difference_check(opt.n, opt.trials, opt.perturbations,
                                            opt.seed, limits, opt.workers);
    report["bounded_diff"] = bounded_diff_to_json(r);
  } else if (opt.check == "tail") {
    const auto r =
        tail_vs_bound(opt.n, opt.epsilon, opt.trials, opt.seed, limits, opt.workers);
    report["tail"] = tail_to_json(r);
  } else if (opt.check == "fekete") {
    const auto r = fekete_report(opt.ns, opt.trials, opt.seed, limits, opt.workers);
    report["fekete"] = fekete_to_json(r);
    if (!csv_path.empty()) {
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open csv file: " + csv_path);
      out << fekete_to_csv(r);
    }
  } else if (opt.check == "borel") {
    report["borel"] = {{"epsilon", opt.epsilon},
                       {"n0", opt.n0},
                       {"partial_sum_bound", borel_cantelli_tail(opt.epsilon, opt.n0)}};
  } else {
    throw CLI::ValidationError("--check must be bounded-diff, tail, fekete, or borel");
  }
  emit(report, opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum same-color rectangle matching laboratory"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string csv_path;

  auto* gen = app.add_subcommand("gen", "generate a random instance CSV");
  gen->add_option("--n", opt.n, "number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", opt.seed, "master seed")->required();
  gen->add_option("--model", opt.model, "uniform | grid-x");
  gen->add_option("--output", opt.output, "output path (default stdout)");

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("--input", opt.input, "instance CSV")->required();
  solve->add_option("--solver", opt.solver, "exact | bruteforce | greedy");
  solve->add_option("--limits-nodes", opt.limits_nodes, "search node budget");
  solve->add_option("--output", opt.output, "matching JSON path");

  auto* chain = app.add_subcommand("chain", "analyze a chain spec file");
  chain->add_option("--input", opt.input, "chain-spec JSON")->required();
  chain->add_option("--epsilon", opt.epsilon, "slack for the expectation bounds");
  chain->add_option("--n", opt.chain_n, "horizon for the expected sum");
  chain->add_option("--output", opt.output, "report JSON path");

  auto* ce = app.add_subcommand("counterexample", "verify the non-Markov gap");
  ce->add_option("--t", opt.t, "time index (>= 3)")->required()->check(CLI::Range(3, 1000000));
  ce->add_option("--trials", opt.trials, "Monte Carlo trials")->required();
  ce->add_option("--seed", opt.seed, "master seed")->required();
  ce->add_option("--workers", opt.workers, "worker threads");
  ce->add_option("--output", opt.output, "report JSON path");

  auto* conc = app.add_subcommand("concentration", "concentration experiments");
  conc->add_option("--check", opt.check, "bounded-diff | tail | fekete | borel")->required();
  conc->add_option("--n", opt.n, "instance size");
  conc->add_option("--trials", opt.trials, "Monte Carlo trials");
  conc->add_option("--seed", opt.seed, "master seed");
  conc->add_option("--epsilon", opt.epsilon, "deviation threshold");
  conc->add_option("--n0", opt.n0, "partial-sum start index (borel)");
  conc->add_option("--ns", opt.ns, "instance sizes (fekete)")->delimiter(',');
  conc->add_option("--perturbations", opt.perturbations, "perturbations per trial");
  conc->add_option("--limits-nodes", opt.limits_nodes, "search node budget");
  conc->add_option("--workers", opt.workers, "worker threads");
  conc->add_option("--output", opt.output, "report JSON path");
  conc->add_option("--csv", csv_path, "CSV table path (fekete)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(opt);
    if (solve->parsed()) return cmd_solve(opt);
    if (chain->parsed()) return cmd_chain(opt);
    if (ce->parsed()) return cmd_counterexample(opt);
    if (conc->parsed()) return cmd_concentration(opt, csv_path);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const MalformedMatrix& e) {
    std::cerr << "chain validation failure: " << e.what() << "\n";
    return 3;
  } catch (const NotIrreducible& e) {
    std::cerr << "chain validation failure: " << e.what() << "\n";
    return 3;
  } catch (const NoConvergence& e) {
    std::cerr << "chain validation failure: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
