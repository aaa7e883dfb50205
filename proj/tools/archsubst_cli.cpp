/*
 * Copyright (c) 2026, the archsubst project authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "archsubst/jsonio.hpp"
#include "archsubst/parser.hpp"
#include "archsubst/serializer.hpp"
#include "archsubst/simulation.hpp"

namespace {

using namespace archsubst;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitBound = 2;
constexpr int kExitInputError = 3;

struct RunArgs {
  std::string pre_path, post_path, subst_path;
  std::string script_path, json_path;
  std::optional<std::uint64_t> seed;
  bool interactive = false;
  bool lenient = false;
  std::size_t max_steps = 1000;
};

PairedSystem load_pair(const std::string& pre_path,
                       const std::string& post_path,
                       const std::string& subst_path, bool lenient) {
  ModelSpec pre = parse_model(SourceText::from_file(pre_path));
  ModelSpec post = parse_model(SourceText::from_file(post_path));
  SubstMap subst =
      parse_substitution(SourceText::from_file(subst_path), pre, post);
  LoadOptions opts;
  opts.lenient_shared = lenient;
  auto loaded = PairedSystem::load(std::move(pre), std::move(post),
                                   std::move(subst), opts);
  if (!loaded.ok())
    throw ParseError(post_path, 1, 1, loaded.error().message);
  return std::move(loaded).value();
}

int cmd_check(const std::string& path, bool json) {
  RawModel raw = parse_model_raw(SourceText::from_file(path));
  ConsistencyReport report = check_consistency(raw.initial);
  if (json) {
    std::cout << json_consistency(report) << "\n";
  } else if (report.consistent()) {
    std::cout << "consistent\n";
  } else {
    std::cout << "inconsistent\n";
    for (const auto& v : report.violations)
      std::cout << "  [" << to_string(v.id) << "] " << v.message << "\n";
  }
  return report.consistent() ? kExitOk : kExitViolated;
}

int cmd_subst_check(const std::string& pre_path, const std::string& post_path,
                    const std::string& subst_path, bool json) {
  ModelSpec pre = parse_model(SourceText::from_file(pre_path));
  ModelSpec post = parse_model(SourceText::from_file(post_path));
  SubstMap subst =
      parse_substitution(SourceText::from_file(subst_path), pre, post);
  auto checked = check_subst(post.initial(), pre.initial(), subst);
  if (!checked.ok()) {
    std::cerr << "error: "
              << (checked.error().pre_side ? "pre" : "post")
              << "-level configuration is inconsistent\n";
    return kExitInputError;
  }
  const SubstReport& report = checked.value();
  if (json) {
    std::cout << json_subst(report) << "\n";
  } else if (report.holds()) {
    std::cout << "substitutability constraints hold\n";
  } else {
    std::cout << "substitutability constraints violated\n";
    for (const auto& v : report.violations)
      std::cout << "  [" << to_string(v.id) << "] " << v.message << "\n";
  }
  return report.holds() ? kExitOk : kExitViolated;
}

int cmd_run(const RunArgs& args) {
  PairedSystem ps = load_pair(args.pre_path, args.post_path, args.subst_path,
                              args.lenient);

  std::optional<FinalKind> expected;
  std::unique_ptr<Strategy> strategy;
  if (!args.script_path.empty()) {
    ScenarioScript script =
        parse_scenario(SourceText::from_file(args.script_path));
    expected = script.expect;
    strategy = std::make_unique<ScriptedStrategy>(std::move(script.ops));
  } else if (args.interactive) {
    strategy = std::make_unique<InteractiveStrategy>(
        [](const std::vector<Identifier>& choices)
            -> std::optional<Identifier> {
          std::cerr << "enabled operations:";
          for (const auto& c : choices) std::cerr << " " << c.str();
          std::cerr << "\n> " << std::flush;
          std::string line;
          if (!std::getline(std::cin, line) || line.empty())
            return std::nullopt;
          return id(line);
        });
  } else {
    strategy = std::make_unique<RandomStrategy>(args.seed.value_or(0));
  }

  std::ofstream json_out;
  if (!args.json_path.empty()) {
    json_out.open(args.json_path);
    if (!json_out) {
      std::cerr << "error: cannot open '" << args.json_path << "'\n";
      return kExitInputError;
    }
  }
  auto observer = [&](const TraceStep& step) {
    std::string line = json_step_line(step);
    std::cout << line << "\n" << std::flush;
    if (json_out.is_open()) json_out << line << "\n";
  };

  auto run = run_semi_algorithm(ps, *strategy, args.max_steps, observer);
  if (!run.ok()) {
    std::cerr << "error: " << run.error().message << "\n";
    return kExitInputError;
  }
  const VerdictTrace& trace = run.value();
  std::string final_line = json_final_line(trace);
  std::cout << final_line << "\n";
  if (json_out.is_open()) json_out << final_line << "\n";
  if (!trace.message.empty()) std::cerr << trace.message << "\n";

  if (expected && *expected != trace.final)
    std::cerr << "warning: scenario expected a different final outcome\n";

  switch (trace.final) {
    case FinalKind::ReturnedTrue:
      return kExitOk;
    case FinalKind::ReturnedFalse:
      return kExitViolated;
    case FinalKind::BudgetExhausted:
      return kExitBound;
  }
  return kExitInputError;
}

int cmd_explore(const std::string& pre_path, const std::string& post_path,
                const std::string& subst_path, std::size_t state_bound,
                bool lenient, bool json) {
  PairedSystem ps = load_pair(pre_path, post_path, subst_path, lenient);
  auto result = oracle_check(ps, state_bound);
  if (!result.ok()) {
    std::cerr << "error: " << result.error().message << "\n";
    return kExitBound;
  }
  const OracleResult& oracle = result.value();
  if (json) {
    std::cout << json_oracle(oracle) << "\n";
  } else {
    std::cout << (oracle.simulated ? "simulated" : "not simulated") << "\n"
              << "  pre states:    " << oracle.pre_states << "\n"
              << "  post states:   " << oracle.post_states << "\n"
              << "  related pairs: " << oracle.related_pairs << "\n";
    if (oracle.failing_clause)
      std::cout << "  failing clause: " << to_string(*oracle.failing_clause)
                << "\n";
  }
  return oracle.simulated ? kExitOk : kExitViolated;
}

int cmd_graph(const std::string& path, const std::string& dot_path,
              std::size_t state_bound) {
  ModelSpec spec = parse_model(SourceText::from_file(path));
  auto result = reachable_graph(spec, state_bound);
  if (!result.ok()) {
    std::cerr << "error: " << result.error().message << "\n";
    return kExitBound;
  }
  const Graph& g = result.value();
  if (dot_path.empty()) {
    std::cout << g.to_dot();
  } else {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "error: cannot open '" << dot_path << "'\n";
      return kExitInputError;
    }
    out << g.to_dot();
    std::cout << g.nodes.size() << " states, " << g.edges.size()
              << " transitions\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Consistency, substitutability and simulation checking for "
      "component-based architectures"};
  app.require_subcommand(1);

  std::string model_path;
  bool json = false;
  auto* check = app.add_subcommand("check", "Check consistency of a model");
  check->add_option("model", model_path, "Model file (.arch)")->required();
  check->add_flag("--json", json, "Emit the report as JSON");

  std::string pre_path, post_path, subst_path;
  auto* subst =
      app.add_subcommand("subst-check",
                         "Check the substitutability constraints between two "
                         "model levels");
  subst->add_option("pre", pre_path, "Pre-substitution model")->required();
  subst->add_option("post", post_path, "Post-substitution model")->required();
  subst->add_option("map", subst_path, "Substitution map (.subst)")
      ->required();
  subst->add_flag("--json", json, "Emit the report as JSON");

  RunArgs run_args;
  auto* run = app.add_subcommand(
      "run", "Run the on-the-fly substitutability evaluation");
  run->add_option("pre", run_args.pre_path, "Pre-substitution model")
      ->required();
  run->add_option("post", run_args.post_path, "Post-substitution model")
      ->required();
  run->add_option("map", run_args.subst_path, "Substitution map")->required();
  auto* script_opt =
      run->add_option("--script", run_args.script_path, "Scenario file (.scn)");
  auto* seed_opt = run->add_option("--seed", run_args.seed,
                                   "Drive choices by a seeded random stream");
  auto* inter_flag = run->add_flag("--interactive", run_args.interactive,
                                   "Choose operations on the terminal");
  script_opt->excludes(seed_opt)->excludes(inter_flag);
  seed_opt->excludes(inter_flag);
  run->add_option("--max-steps", run_args.max_steps,
                  "Step budget (default 1000)");
  run->add_option("--json", run_args.json_path,
                  "Also write the verdict stream to this file");
  run->add_flag("--lenient-shared", run_args.lenient,
                "Keep shared operations whose definitions disagree");

  std::size_t state_bound = 10000;
  bool lenient = false;
  auto* explore = app.add_subcommand(
      "explore", "Exhaustively decide simulation on the bounded state spaces");
  explore->add_option("pre", pre_path, "Pre-substitution model")->required();
  explore->add_option("post", post_path, "Post-substitution model")
      ->required();
  explore->add_option("map", subst_path, "Substitution map")->required();
  explore->add_option("--state-bound", state_bound,
                      "Per-side state limit (default 10000)");
  explore->add_flag("--lenient-shared", lenient,
                    "Keep shared operations whose definitions disagree");
  explore->add_flag("--json", json, "Emit the result as JSON");

  std::string dot_path;
  auto* graph =
      app.add_subcommand("graph", "Export the reachable transition graph");
  graph->add_option("model", model_path, "Model file (.arch)")->required();
  graph->add_option("--dot", dot_path, "Write DOT to this file");
  graph->add_option("--state-bound", state_bound,
                    "State limit (default 10000)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(model_path, json);
    if (subst->parsed())
      return cmd_subst_check(pre_path, post_path, subst_path, json);
    if (run->parsed()) return cmd_run(run_args);
    if (explore->parsed())
      return cmd_explore(pre_path, post_path, subst_path, state_bound,
                         lenient, json);
    if (graph->parsed()) return cmd_graph(model_path, dot_path, state_bound);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const WellFormednessError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
