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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "archsubst/jsonio.hpp"
#include "archsubst/parser.hpp"
#include "fixtures.hpp"

using namespace archsubst;
using namespace archsubst::fixtures;

namespace {

const char* kModelsDir = ARCHSUBST_MODELS_DIR;

PairedSystem load_http(const char* post_name = "/http_post.arch",
                       bool lenient = false) {
  auto pre = parse_model(
      SourceText::from_file(std::string(kModelsDir) + "/http_pre.arch"));
  auto post = parse_model(
      SourceText::from_file(std::string(kModelsDir) + post_name));
  auto subst = parse_substitution(
      SourceText::from_file(std::string(kModelsDir) + "/http.subst"), pre,
      post);
  return make_pair(std::move(pre), std::move(post), std::move(subst),
                   lenient);
}

OracleResult must_oracle(const PairedSystem& ps, std::size_t bound = 1000) {
  auto r = oracle_check(ps, bound);
  REQUIRE(r.ok());
  return r.value();
}

VerdictTrace must_run(const PairedSystem& ps, Strategy& strategy,
                      std::size_t max_steps) {
  auto r = run_semi_algorithm(ps, strategy, max_steps);
  REQUIRE(r.ok());
  return r.value();
}

}  // namespace

TEST_CASE("paired system classifies operations by name") {
  auto ps = load_http();
  CHECK(ps.shared_ops().size() == 8);
  CHECK(ps.new_ops() ==
        std::set<Identifier>{id("AddLogger"), id("RemoveLogger")});
  CHECK(ps.mismatched_ops().empty());
}

TEST_CASE("shared operations must agree modulo renaming") {
  auto pre = parse_model(
      SourceText::from_file(std::string(kModelsDir) + "/http_pre.arch"));
  auto post = parse_model(SourceText::from_file(std::string(kModelsDir) +
                                                "/http_post_faulty.arch"));
  auto subst = parse_substitution(
      SourceText::from_file(std::string(kModelsDir) + "/http.subst"), pre,
      post);

  auto strict = PairedSystem::load(pre, post, subst, {});
  REQUIRE_FALSE(strict.ok());

  LoadOptions lenient;
  lenient.lenient_shared = true;
  auto loose = PairedSystem::load(pre, post, subst, lenient);
  REQUIRE(loose.ok());
  CHECK(loose.value().mismatched_ops() ==
        std::vector<Identifier>{id("AddCacheHandler")});
  CHECK(loose.value().shared_ops().count(id("AddCacheHandler")) == 1);
}

TEST_CASE("verdict stream of the runtime scenario") {
  auto ps = load_http();
  auto script = parse_scenario(
      SourceText::from_file(std::string(kModelsDir) + "/runtime.scn"));
  ScriptedStrategy strategy(script.ops);
  auto trace = must_run(ps, strategy, 100);

  std::vector<B4Verdict> expected{
      B4Verdict::BotP, B4Verdict::TopP, B4Verdict::BotP, B4Verdict::TopP,
      B4Verdict::BotP, B4Verdict::TopP, B4Verdict::TopP, B4Verdict::BotP};
  REQUIRE(trace.steps.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(trace.steps[i].verdict == expected[i]);
  CHECK(trace.final == FinalKind::BudgetExhausted);
  CHECK(script.expect == FinalKind::BudgetExhausted);
}

TEST_CASE("trace grammar invariants hold on random runs") {
  auto ps = load_http();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomStrategy strategy(seed);
    auto trace = must_run(ps, strategy, 40);
    for (const auto& step : trace.steps) {
      // Bot and Top never appear inside the stream.
      CHECK((step.verdict == B4Verdict::BotP ||
             step.verdict == B4Verdict::TopP));
      if (step.cls == OpClass::New) CHECK(step.verdict == B4Verdict::BotP);
      if (step.cls == OpClass::Shared) CHECK(step.verdict == B4Verdict::TopP);
      CHECK(step.op.has_value());
    }
    if (trace.final == FinalKind::ReturnedFalse) CHECK(trace.reason);
  }
}

TEST_CASE("the faulty cache handler scenario returns bot structural") {
  auto ps = load_http("/http_post_faulty.arch", true);
  auto script = parse_scenario(
      SourceText::from_file(std::string(kModelsDir) + "/faulty.scn"));
  ScriptedStrategy strategy(script.ops);
  auto trace = must_run(ps, strategy, 100);

  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[1].op == id("AddCacheHandler"));
  CHECK(trace.steps[1].verdict == B4Verdict::TopP);
  CHECK(trace.final == FinalKind::ReturnedFalse);
  CHECK(trace.reason == BotReason::Structural);
  bool names_cache = false;
  for (const auto& w : trace.witness)
    if (w == id("CacheHandler")) names_cache = true;
  CHECK(names_cache);
}

TEST_CASE("oracle failure clauses on minimal fixtures") {
  auto structural = must_oracle(clause_structural());
  CHECK_FALSE(structural.simulated);
  CHECK(structural.failing_clause == ClauseId::Structural);

  auto strict = must_oracle(clause_strict());
  CHECK_FALSE(strict.simulated);
  CHECK(strict.failing_clause == ClauseId::Strict);

  auto stutter = must_oracle(clause_stuttering());
  CHECK_FALSE(stutter.simulated);
  CHECK(stutter.failing_clause == ClauseId::Stuttering);

  auto diverge = must_oracle(clause_divergence());
  CHECK_FALSE(diverge.simulated);
  CHECK(diverge.failing_clause == ClauseId::Divergence);

  auto deadlock = must_oracle(clause_deadlock());
  CHECK_FALSE(deadlock.simulated);
  CHECK(deadlock.failing_clause == ClauseId::Deadlock);

  auto identity = must_oracle(clause_identity());
  CHECK(identity.simulated);
}

TEST_CASE("semi algorithm agrees with the oracle on the clause fixtures") {
  // Runs ending in Bot must be confirmed non-simulated (never the converse).
  for (auto make : {clause_structural, clause_strict, clause_stuttering,
                    clause_divergence, clause_deadlock, clause_identity}) {
    auto ps = make();
    auto report = cross_validate(ps, {0, 1, 2, 3, 4}, 20, 1000);
    REQUIRE(report.ok());
    CHECK(report.value().consistent());
  }
}

TEST_CASE("deadlock introduction is reported as such") {
  auto ps = clause_deadlock();
  RandomStrategy strategy(0);
  auto trace = must_run(ps, strategy, 10);
  CHECK(trace.final == FinalKind::ReturnedFalse);
  CHECK(trace.reason == BotReason::DeadlockIntroduced);
}

TEST_CASE("a doubly deadlocked pair evaluates to potential true") {
  auto c = config({comp("C", {prov("i", "T")})});
  auto ps = make_pair(ModelSpec::make(c, {}), ModelSpec::make(c, {}), {});
  RandomStrategy strategy(0);
  auto trace = must_run(ps, strategy, 0);
  CHECK(trace.final == FinalKind::ReturnedTrue);
  CHECK(trace.steps.empty());
}

TEST_CASE("budget exhaustion is distinct from a real verdict") {
  auto ps = load_http();
  RandomStrategy strategy(123);
  auto trace = must_run(ps, strategy, 3);
  CHECK(trace.final == FinalKind::BudgetExhausted);
  CHECK(trace.steps.size() == 3);
}

TEST_CASE("json stream lines have the documented shape") {
  auto ps = load_http();
  auto script = parse_scenario(
      SourceText::from_file(std::string(kModelsDir) + "/runtime.scn"));
  ScriptedStrategy strategy(script.ops);
  auto trace = must_run(ps, strategy, 100);
  auto first = json_step_line(trace.steps.front());
  CHECK(first ==
        R"({"class":"new","op":"RemoveLogger","step":0,"verdict":"bot_p"})");
  CHECK(json_final_line(trace) ==
        R"({"final":"budget_exhausted","last_verdict":"bot_p"})");
}
