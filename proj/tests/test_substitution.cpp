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
#include "fixtures.hpp"

using namespace archsubst;
using namespace archsubst::fixtures;

namespace {

const char* kModelsDir = ARCHSUBST_MODELS_DIR;

struct Corpus {
  ModelSpec pre;
  ModelSpec post;
  SubstMap subst;
};

Corpus load_corpus() {
  auto pre =
      parse_model(SourceText::from_file(std::string(kModelsDir) +
                                        "/http_pre.arch"));
  auto post =
      parse_model(SourceText::from_file(std::string(kModelsDir) +
                                        "/http_post.arch"));
  auto subst = parse_substitution(
      SourceText::from_file(std::string(kModelsDir) + "/http.subst"), pre,
      post);
  return {std::move(pre), std::move(post), std::move(subst)};
}

SubstReport must_check(const Configuration& post, const Configuration& pre,
                       const SubstMap& subst) {
  auto r = check_subst(post, pre, subst);
  REQUIRE(r.ok());
  return r.value();
}

}  // namespace

TEST_CASE("substitution map validation") {
  auto a = config({comp("A", {prov("a", "T")}), comp("B", {prov("b", "T")})});
  auto r = config({comp("AR", {prov("a", "T")}),
                   comp("B", {prov("b", "T")})});

  SubstMap ok;
  ok.mapping.emplace(id("A"), id("AR"));
  CHECK(validate_subst_map(ok, a, r).ok());

  SubstMap not_injective;
  not_injective.mapping.emplace(id("A"), id("AR"));
  not_injective.mapping.emplace(id("B"), id("AR"));
  CHECK_FALSE(validate_subst_map(not_injective, a, r).ok());

  SubstMap bad_domain;
  bad_domain.mapping.emplace(id("Z"), id("AR"));
  CHECK_FALSE(validate_subst_map(bad_domain, a, r).ok());

  SubstMap old_range;
  old_range.mapping.emplace(id("A"), id("B"));
  CHECK_FALSE(validate_subst_map(old_range, a, r).ok());
}

TEST_CASE("identity substitution holds") {
  auto c = config({comp("A", {prov("a", "T")}, CompState::Started,
                        {param("p", "PT", ParamDomain::int_range(0, 3), 1)})});
  CHECK(must_check(c, c, {}).holds());
}

TEST_CASE("the http substitution satisfies every constraint") {
  auto corpus = load_corpus();
  auto report =
      must_check(corpus.post.initial(), corpus.pre.initial(), corpus.subst);
  CHECK(report.holds());
}

TEST_CASE("the missing cache handler of the faulty model trips s5") {
  auto pre = parse_model(
      SourceText::from_file(std::string(kModelsDir) + "/http_pre.arch"));
  auto post = parse_model(
      SourceText::from_file(std::string(kModelsDir) + "/http_post.arch"));
  SubstMap subst;
  subst.mapping.emplace(id("CacheHandler"), id("CacheHandler_R"));
  subst.mapping.emplace(id("RequestHandler"), id("RequestHandler_R"));

  // Drive the post level to the state where CacheHandler_R is gone.
  auto removed = apply(post.initial(), *post.find(id("RemoveCacheHandler")));
  REQUIRE(removed.ok());
  auto report = must_check(removed.value(), pre.initial(), subst);
  REQUIRE_FALSE(report.holds());
  bool s5_on_cache = false;
  for (const auto& v : report.violations)
    if (v.id == SubstConstraintId::S5)
      for (const auto& w : v.witness)
        if (w == id("CacheHandler")) s5_on_cache = true;
  CHECK(s5_on_cache);
}

TEST_CASE("each substitutability constraint has an exact mutation fixture") {
  for (SubstConstraintId sid :
       {SubstConstraintId::S1, SubstConstraintId::S2, SubstConstraintId::S3,
        SubstConstraintId::S4, SubstConstraintId::S5, SubstConstraintId::S6,
        SubstConstraintId::S7, SubstConstraintId::S8, SubstConstraintId::S9,
        SubstConstraintId::S10, SubstConstraintId::S11,
        SubstConstraintId::S12}) {
    auto fx = s_fixture(sid);
    REQUIRE(is_consistent(fx.pre));
    REQUIRE(is_consistent(fx.post));
    auto report = must_check(fx.post, fx.pre, fx.subst);
    INFO("constraint " << std::string(to_string(sid)));
    REQUIRE_FALSE(report.holds());
    std::set<SubstConstraintId> ids;
    for (const auto& v : report.violations) {
      ids.insert(v.id);
      CHECK_FALSE(v.witness.empty());
    }
    REQUIRE(ids.size() == 1);
    CHECK(*ids.begin() == sid);
  }
}

TEST_CASE("inconsistent inputs are precondition errors") {
  auto good = config({comp("A", {prov("a", "T")})});
  auto bad = cc_fixture(ConstraintId::CC1);
  auto r1 = check_subst(good, bad, {});
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.error().pre_side);
  auto r2 = check_subst(bad, good, {});
  REQUIRE_FALSE(r2.ok());
  CHECK_FALSE(r2.error().pre_side);
}

TEST_CASE("old relations restricted to surviving elements are preserved") {
  // On the corpus: every pre-level relation entry whose participants all
  // survive must reappear identically at the post level.
  auto corpus = load_corpus();
  const Configuration& a = corpus.pre.initial();
  const Configuration& r = corpus.post.initial();
  auto survives = [&](const Identifier& x) {
    return a.components().count(x) ? r.components().count(x) != 0
           : a.is_interface(x)     ? r.is_interface(x)
                                   : r.has_parameter(x);
  };
  for (const auto& [x, c] : a.container()) {
    if (!survives(x) || !r.components().count(c)) continue;
    CHECK(r.container().at(x) == c);
    CHECK(r.container_type().at(x) == a.container_type().at(x));
  }
  for (const auto& [p, q] : a.binding()) {
    if (!r.is_interface(p) || !r.is_interface(q)) continue;
    CHECK(r.binding().at(p) == q);
  }
  for (const auto& [child, par] : a.parent()) {
    if (!r.components().count(child) || !r.components().count(par)) continue;
    CHECK(r.parent().count({child, par}) == 1);
  }
}
