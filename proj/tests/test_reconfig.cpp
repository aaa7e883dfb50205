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

#include "archsubst/graph.hpp"
#include "archsubst/parser.hpp"
#include "fixtures.hpp"

using namespace archsubst;
using namespace archsubst::fixtures;

namespace {

const char* kModelsDir = ARCHSUBST_MODELS_DIR;

ModelSpec load_model(const char* name) {
  return parse_model(SourceText::from_file(std::string(kModelsDir) + name));
}

}  // namespace

TEST_CASE("guards evaluate on the current configuration") {
  auto c = config({comp("A", {prov("a", "T")}, CompState::Started,
                        {param("p", "PT", ParamDomain::int_range(0, 9), 4)}),
                   comp("B", {prov("bp", "TB"),
                              req("b", "T", Contingency::Optional)})},
                  {{id("a"), id("b")}});
  CHECK(Guard::present(id("A"))->eval(c));
  CHECK_FALSE(Guard::present(id("Z"))->eval(c));
  CHECK(Guard::started(id("A"))->eval(c));
  CHECK(Guard::stopped(id("B"))->eval(c));
  CHECK(Guard::bound(id("A"), id("a"))->eval(c));
  CHECK_FALSE(Guard::bound(id("B"), id("bp"))->eval(c));
  CHECK(Guard::compare(id("p"), Guard::CmpOp::Lt,
                       ParamValue{std::int64_t{5}})->eval(c));
  CHECK_FALSE(Guard::compare(id("q"), Guard::CmpOp::Eq,
                             ParamValue{std::int64_t{4}})->eval(c));
  CHECK(Guard::negate(Guard::present(id("Z")))->eval(c));
  CHECK(Guard::conj({Guard::present(id("A")), Guard::present(id("B"))})
            ->eval(c));
  CHECK_FALSE(
      Guard::conj({Guard::present(id("A")), Guard::present(id("Z"))})
          ->eval(c));
  CHECK(Guard::disj({Guard::present(id("Z")), Guard::present(id("B"))})
            ->eval(c));
}

TEST_CASE("apply is atomic and guard checked") {
  auto c = config({comp("A", {prov("a", "T")})});
  ReconfigurationDef bad{id("Bad"), Guard::constant(true),
                         {EditStart{id("A")}, EditDestroy{id("Missing")}}};
  auto r = apply(c, bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().kind == ApplyError::Kind::EditFailed);

  ReconfigurationDef guarded{id("Guarded"), Guard::constant(false),
                             {EditStart{id("A")}}};
  auto g = apply(c, guarded);
  REQUIRE_FALSE(g.ok());
  CHECK(g.error().kind == ApplyError::Kind::GuardFailed);

  ReconfigurationDef ok{id("Ok"), Guard::constant(true), {EditStart{id("A")}}};
  auto s = apply(c, ok);
  REQUIRE(s.ok());
  CHECK(s.value().state().at(id("A")) == CompState::Started);
  // The source configuration is untouched.
  CHECK(c.state().at(id("A")) == CompState::Stopped);
}

TEST_CASE("an edit sequence producing an inconsistent result is rejected") {
  // Stopping nothing else, starting B leaves its mandatory port dangling.
  auto c = config({comp("A", {prov("a", "T")}),
                   comp("B", {prov("bp", "TB"), req("b", "T")})});
  ReconfigurationDef start_b{id("StartB"), Guard::constant(true),
                             {EditStart{id("B")}}};
  auto r = apply(c, start_b);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().kind == ApplyError::Kind::InconsistentResult);
}

TEST_CASE("set value clamps to the declared domain by failing") {
  auto c = config({comp("C", {prov("i", "T")}, CompState::Stopped,
                        {param("p", "PT", ParamDomain::int_range(1, 3), 3)})});
  ReconfigurationDef up{id("Up"), Guard::constant(true),
                        {EditSetValue{id("p"), SetExpr{std::nullopt, id("p"),
                                                       1}}}};
  auto r = apply(c, up);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().kind == ApplyError::Kind::EditFailed);
}

TEST_CASE("enabled is exactly the set of applicable reconfigurations") {
  auto spec = load_model("/http_pre.arch");
  auto g = reachable_graph(spec, 100);
  REQUIRE(g.ok());
  for (const auto& node : g.value().nodes) {
    auto en = enabled(node, spec);
    std::set<Identifier> en_set(en.begin(), en.end());
    for (const auto& op : spec.ops()) {
      bool applies = apply(node, op).ok();
      INFO(op.name.str());
      CHECK(applies == (en_set.count(op.name) != 0));
    }
  }
}

TEST_CASE("http reachable state spaces have the expected size") {
  auto pre = load_model("/http_pre.arch");
  auto post = load_model("/http_post.arch");
  auto g_pre = reachable_graph(pre, 1000);
  auto g_post = reachable_graph(post, 1000);
  REQUIRE(g_pre.ok());
  REQUIRE(g_post.ok());
  // Pre: cache absent or 3x3 parameter grid, times file server 2 on or off.
  CHECK(g_pre.value().nodes.size() == 20);
  // Post: the same, times logger present or absent.
  CHECK(g_post.value().nodes.size() == 40);
}

TEST_CASE("state bound is reported") {
  auto pre = load_model("/http_pre.arch");
  auto g = reachable_graph(pre, 5);
  REQUIRE_FALSE(g.ok());
  CHECK(g.error().bound == 5);
}

TEST_CASE("graph construction and dot export are deterministic") {
  auto dot1 = reachable_graph(load_model("/http_pre.arch"), 1000);
  auto dot2 = reachable_graph(load_model("/http_pre.arch"), 1000);
  REQUIRE(dot1.ok());
  REQUIRE(dot2.ok());
  CHECK(dot1.value().to_dot() == dot2.value().to_dot());
}

TEST_CASE("scripted strategy follows its script and detects mismatches") {
  auto spec = load_model("/http_pre.arch");
  ScriptedStrategy good({id("MemorySizeUp"), id("RemoveCacheHandler")});
  auto path = run_path(spec, good, 10);
  REQUIRE(path.ok());
  // Initial state plus two steps, then the script is consumed.
  CHECK(path.value().steps.size() == 3);
  CHECK(path.value().steps[1].via == id("MemorySizeUp"));

  ScriptedStrategy bad({id("AddCacheHandler")});  // already present
  auto err = run_path(spec, bad, 10);
  REQUIRE_FALSE(err.ok());
  CHECK(err.error().kind == StrategyError::Kind::ScriptMismatch);
}

TEST_CASE("random strategy is reproducible per seed") {
  auto spec = load_model("/http_pre.arch");
  for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
    RandomStrategy s1(seed), s2(seed);
    auto p1 = run_path(spec, s1, 50);
    auto p2 = run_path(spec, s2, 50);
    REQUIRE(p1.ok());
    REQUIRE(p2.ok());
    REQUIRE(p1.value().steps.size() == p2.value().steps.size());
    for (std::size_t i = 0; i < p1.value().steps.size(); ++i) {
      CHECK(p1.value().steps[i].via == p2.value().steps[i].via);
      CHECK(config_equal(p1.value().steps[i].config,
                         p2.value().steps[i].config));
    }
  }
}

TEST_CASE("reachable graph is independent of the exploration strategy") {
  // Random walks only ever visit states discovered by the graph search.
  auto spec = load_model("/http_post.arch");
  auto g = reachable_graph(spec, 1000);
  REQUIRE(g.ok());
  std::set<std::string> keys;
  for (const auto& node : g.value().nodes) keys.insert(node.canonical_key());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomStrategy s(seed);
    auto path = run_path(spec, s, 60);
    REQUIRE(path.ok());
    for (const auto& step : path.value().steps)
      CHECK(keys.count(step.config.canonical_key()) == 1);
  }
}
