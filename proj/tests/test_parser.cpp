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

#include "archsubst/parser.hpp"
#include "archsubst/serializer.hpp"

using namespace archsubst;

namespace {

const char* kModelsDir = ARCHSUBST_MODELS_DIR;

SourceText src(const std::string& text) { return SourceText{"<test>", text}; }

ModelSpec load_model(const char* name) {
  return parse_model(SourceText::from_file(std::string(kModelsDir) + name));
}

bool models_equal(const ModelSpec& a, const ModelSpec& b) {
  if (!config_equal(a.initial(), b.initial())) return false;
  if (a.ops().size() != b.ops().size()) return false;
  for (std::size_t i = 0; i < a.ops().size(); ++i) {
    if (a.ops()[i].name != b.ops()[i].name) return false;
    if (!a.ops()[i].structurally_equal(b.ops()[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the http pre model parses with its full catalogue") {
  auto spec = load_model("/http_pre.arch");
  CHECK(spec.initial().components().size() == 6);
  auto names = spec.op_names();
  CHECK(names ==
        std::set<Identifier>{id("AddCacheHandler"), id("RemoveCacheHandler"),
                             id("AddFileServer"), id("removeFileServer"),
                             id("MemorySizeUp"), id("MemorySizeDown"),
                             id("DurationValidityUp"),
                             id("DurationValidityDown")});
}

TEST_CASE("minimal model round trips through the serializer") {
  auto spec = parse_model(src(R"(
    component A {
      provides a : T;
      state stopped;
    }
  )"));
  std::string text = serialize_model(spec);
  auto again = parse_model(src(text));
  CHECK(models_equal(spec, again));
  CHECK(serialize_model(again) == text);
}

TEST_CASE("serialization is a round trip fixpoint on the corpus") {
  for (const char* name :
       {"/http_pre.arch", "/http_post.arch", "/http_post_faulty.arch"}) {
    INFO(name);
    auto spec = load_model(name);
    std::string text = serialize_model(spec);
    auto again = parse_model(src(text));
    CHECK(models_equal(spec, again));
    CHECK(serialize_model(again) == text);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_model(src("component A {\n  provides a ; T;\n}\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() > 1);
  }
}

TEST_CASE("binding an unknown interface is rejected at its span") {
  try {
    parse_model(src(
        "component A {\n  provides a : T;\n}\n"
        "component B {\n  provides bp : TB;\n  requires b : T optional;\n}\n"
        "bind A.a -> B.unknown;\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 8);
    CHECK(e.message().find("unknown") != std::string::npos);
  }
}

TEST_CASE("interfaces must be used on their declared side") {
  CHECK_THROWS_AS(
      parse_model(src(
          "component A {\n  provides a : T;\n}\n"
          "component B {\n  provides bp : TB;\n  requires b : T;\n}\n"
          "bind B.b -> A.a;\n")),
      ParseError);
}

TEST_CASE("a parameter type keeps one domain") {
  CHECK_THROWS_AS(
      parse_model(src(
          "component A {\n"
          "  provides a : T;\n"
          "  param p : PT in [1..3] = 1;\n"
          "  param q : PT in [1..4] = 1;\n"
          "}\n")),
      ParseError);
}

TEST_CASE("guards parse with precedence and parentheses") {
  auto spec = parse_model(src(
      "component A {\n"
      "  provides a : T;\n"
      "  param p : PT in [0..5] = 0;\n"
      "}\n"
      "reconfiguration R when not present(Z) and (p < 4 or started(A)) {\n"
      "  start A;\n"
      "}\n"));
  const auto* op = spec.find(id("R"));
  REQUIRE(op != nullptr);
  CHECK(op->guard->str() == "not present(Z) and (p < 4 or started(A))");
  CHECK(op->guard->eval(spec.initial()));
}

TEST_CASE("an inconsistent initial configuration fails model parsing") {
  // Started component with a dangling mandatory requirement.
  const char* text =
      "component A {\n"
      "  provides a : T;\n"
      "  requires r : T2;\n"
      "  state started;\n"
      "}\n";
  CHECK_THROWS_AS(parse_model(src(text)), ParseError);
  // The raw entry point still accepts it for reporting purposes.
  auto raw = parse_model_raw(src(text));
  CHECK_FALSE(is_consistent(raw.initial));
}

TEST_CASE("substitution files parse and validate") {
  auto pre = load_model("/http_pre.arch");
  auto post = load_model("/http_post.arch");

  auto subst = parse_substitution(
      SourceText::from_file(std::string(kModelsDir) + "/http.subst"), pre,
      post);
  REQUIRE(subst.mapping.size() == 2);
  CHECK(subst.mapping.at(id("CacheHandler")) == id("CacheHandler_R"));
  CHECK(subst.mapping.at(id("RequestHandler")) == id("RequestHandler_R"));
  CHECK(serialize_substitution(subst) ==
        "substitute CacheHandler -> CacheHandler_R;\n"
        "substitute RequestHandler -> RequestHandler_R;\n");

  CHECK(parse_substitution(src(""), pre, post).empty());

  CHECK_THROWS_AS(parse_substitution(
                      src("substitute CacheHandler -> CacheHandler_R;\n"
                          "substitute CacheHandler -> RequestHandler_R;\n"),
                      pre, post),
                  ParseError);
  CHECK_THROWS_AS(
      parse_substitution(src("substitute Nope -> CacheHandler_R;"), pre,
                         post),
      ParseError);
}

TEST_CASE("scenario files parse") {
  auto script = parse_scenario(src("A B C\nexpect bot\n"));
  CHECK(script.ops == std::vector<Identifier>{id("A"), id("B"), id("C")});
  CHECK(script.expect == FinalKind::ReturnedFalse);

  auto bare = parse_scenario(src("# comment\nOnlyOp\n"));
  CHECK(bare.ops.size() == 1);
  CHECK_FALSE(bare.expect.has_value());

  CHECK_THROWS_AS(parse_scenario(src("# nothing\n")), ParseError);
  CHECK_THROWS_AS(parse_scenario(src("A expect nonsense")), ParseError);
}
