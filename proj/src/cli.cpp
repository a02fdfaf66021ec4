// Copyright 2026 The ftcons Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ftcons/cli.hpp"

#include <cstdint>
#include <string>

#include "CLI11.hpp"

#include "ftcons/analysis.hpp"
#include "ftcons/constructor.hpp"
#include "ftcons/errors.hpp"
#include "ftcons/io.hpp"
#include "ftcons/simulate.hpp"

namespace ftcons::cli {
namespace {

using io::Json;

Graph load_graph(const std::string& path) {
  return io::graph_from_json(io::read_json_file(path), path);
}

MatrixSequence load_sequence(const std::string& path) {
  return io::sequence_from_json(io::read_json_file(path), path);
}

RationalVector load_vector(const std::string& path) {
  return io::vector_from_json(io::read_json_file(path), path);
}

void require_order(const std::string& what, Eigen::Index got, int expected) {
  if (got != expected) {
    throw FormatError(what + " has order " + std::to_string(got) +
                      " but the graph has " + std::to_string(expected) +
                      " nodes");
  }
}

struct Options {
  std::string graph;
  std::string seq;
  std::string init;
  std::string weights;
  std::string out;
  std::string goal = "average";
  std::string mode = "exact";
  double tolerance = 1e-9;
  int cycle_node_limit = kDefaultCycleNodeLimit;
  int cycle_length = 4;
  int trials = 1000;
  int max_length = 8;
  std::uint64_t seed = 1;
};

int cmd_construct(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  MatrixSequence seq;
  if (o.weights.empty()) {
    seq = construct_average_sequence(g);
  } else {
    const WeightVector w =
        io::weights_from_json(io::read_json_file(o.weights), o.weights);
    require_order(o.weights, w.size(), g.order());
    seq = construct_weighted_sequence(g, w);
  }
  io::write_json_file(o.out, io::sequence_to_json(seq));
  out << "wrote " << seq.size() << " matrices of order " << seq.order << " to "
      << o.out << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const MatrixSequence seq = load_sequence(o.seq);
  const Goal goal = o.goal == "average" ? Goal::kAverage : Goal::kConsensus;
  const VerificationReport report = verify_sequence(g, seq, goal);
  out << io::verification_to_json(report).dump(2) << '\n';
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const MatrixSequence seq = load_sequence(o.seq);
  const RationalVector x0 = load_vector(o.init);
  require_order(o.seq, seq.order, g.order());
  require_order(o.init, x0.size(), g.order());
  if (o.mode == "exact") {
    out << io::trajectory_to_json(simulate_exact(seq, x0)).dump(2) << '\n';
  } else {
    out << io::trajectory_to_json(simulate_approx(seq, x0, o.tolerance)).dump(2)
        << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  out << io::verdict_to_json(assess_feasibility(g, o.cycle_node_limit)).dump(2)
      << '\n';
  return kExitOk;
}

int cmd_certificate(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const MatrixSequence seq = load_sequence(o.seq);
  const RationalVector x0 = load_vector(o.init);
  require_order(o.seq, seq.order, g.order());
  require_order(o.init, x0.size(), g.order());
  const auto walk = extract_even_cycle_certificate(g, seq, x0);
  if (walk) {
    out << io::certificate_to_json(*walk).dump(2) << '\n';
  } else {
    out << "degenerate\n";
  }
  return kExitOk;
}

int cmd_evidence(const Options& o, std::ostream& out) {
  const CycleEvidenceReport report = cycle_impossibility_evidence(
      o.cycle_length, o.trials, o.max_length, o.seed);
  out << io::evidence_to_json(report).dump(2) << '\n';
  return report.rank_one_products == 0 && report.lemma_violations == 0
             ? kExitOk
             : kExitCheckFailed;
}

int cmd_demo(std::ostream& out) {
  const DemoReport report = demo_example();
  out << io::demo_to_json(report).dump(2) << '\n';
  return report.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact finite-time consensus sequences: construct, verify, "
               "simulate, analyze"};
  app.name("ftcons");
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand(
      "construct", "Build an averaging sequence on a bidirectional spanning tree");
  construct->add_option("--graph", o.graph, "Graph JSON")->required();
  construct->add_option("--weights", o.weights,
                        "Weights JSON {\"weights\": [...]} for a weighted average");
  construct->add_option("--out", o.out, "Output sequence JSON")->required();

  auto* verify = app.add_subcommand("verify", "Check a sequence against a graph");
  verify->add_option("--graph", o.graph, "Graph JSON")->required();
  verify->add_option("--seq", o.seq, "Sequence JSON")->required();
  verify->add_option("--goal", o.goal, "consensus or average")
      ->required()
      ->check(CLI::IsMember({"consensus", "average"}));

  auto* simulate = app.add_subcommand("simulate", "Print the state trajectory");
  simulate->add_option("--graph", o.graph, "Graph JSON")->required();
  simulate->add_option("--seq", o.seq, "Sequence JSON")->required();
  simulate->add_option("--init", o.init, "Initial vector JSON")->required();
  simulate->add_option("--mode", o.mode, "exact (default) or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  simulate->add_option("--tolerance", o.tolerance,
                       "Consensus tolerance in approx mode");

  auto* analyze = app.add_subcommand("analyze", "Feasibility verdict for a digraph");
  analyze->add_option("--graph", o.graph, "Graph JSON")->required();
  analyze->add_option("--cycle-node-limit", o.cycle_node_limit,
                      "Largest graph on which simple cycles are enumerated");

  auto* certificate = app.add_subcommand(
      "certificate", "Extract the alternating-sign even cycle of a consensus run");
  certificate->add_option("--graph", o.graph, "Graph JSON")->required();
  certificate->add_option("--seq", o.seq, "Sequence JSON")->required();
  certificate->add_option("--init", o.init, "Initial vector JSON")->required();

  auto* evidence = app.add_subcommand(
      "evidence", "Randomized search for consensus on a directed even cycle");
  evidence->add_option("--cycle-length", o.cycle_length, "Even cycle length >= 4")
      ->required();
  evidence->add_option("--trials", o.trials, "Number of random sequences")
      ->required();
  evidence->add_option("--max-length", o.max_length, "Longest sequence")
      ->required();
  evidence->add_option("--seed", o.seed, "Random seed")->required();

  auto* demo = app.add_subcommand("demo", "Verify the built-in directed example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (certificate->parsed()) return cmd_certificate(o, out);
    if (evidence->parsed()) return cmd_evidence(o, out);
    if (demo->parsed()) return cmd_demo(out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CycleLimitError& e) {
    err << "error: " << e.what() << " (use --cycle-node-limit)\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ftcons::cli
