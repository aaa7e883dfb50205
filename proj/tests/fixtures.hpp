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

#ifndef ARCHSUBST_TESTS_FIXTURES_HPP_
#define ARCHSUBST_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "archsubst/consistency.hpp"
#include "archsubst/model.hpp"
#include "archsubst/simulation.hpp"
#include "archsubst/substitution.hpp"

namespace archsubst::fixtures {

// ---------------------------------------------------------------------------
// Small builders

inline InterfaceDecl prov(std::string name, std::string type) {
  return InterfaceDecl{id(std::move(name)), id(std::move(type)), true,
                       Contingency::Mandatory};
}

inline InterfaceDecl req(std::string name, std::string type,
                         Contingency cont = Contingency::Mandatory) {
  return InterfaceDecl{id(std::move(name)), id(std::move(type)), false, cont};
}

inline ParamDecl param(std::string name, std::string type, ParamDomain dom,
                       ParamValue init) {
  return ParamDecl{id(std::move(name)), id(std::move(type)), std::move(dom),
                   std::move(init)};
}

inline ComponentDecl comp(std::string name,
                          std::vector<InterfaceDecl> interfaces,
                          CompState state = CompState::Stopped,
                          std::vector<ParamDecl> params = {},
                          std::vector<std::string> children = {}) {
  ComponentDecl c;
  c.id = id(std::move(name));
  c.interfaces = std::move(interfaces);
  c.params = std::move(params);
  for (auto& ch : children) c.children.push_back(id(std::move(ch)));
  c.state = state;
  return c;
}

inline Configuration config(std::vector<ComponentDecl> comps,
                            std::vector<BindingDecl> binds = {},
                            std::vector<DelegateDecl> delegs = {}) {
  ConfigurationDeclaration decl;
  decl.components = std::move(comps);
  decl.bindings = std::move(binds);
  decl.delegations = std::move(delegs);
  return new_configuration(decl);
}

// ---------------------------------------------------------------------------
// Consistency mutation fixtures: each configuration violates exactly the
// requested constraint.

inline Configuration cc_fixture(ConstraintId which) {
  switch (which) {
    case ConstraintId::CC1:
      // B supplies nothing.
      return config({comp("A", {prov("a", "T")}), comp("B", {})});
    case ConstraintId::CC2:
      // The composite P carries a parameter.
      return config({comp("P", {prov("p", "T")}, CompState::Stopped,
                          {param("x", "PT", ParamDomain::int_range(0, 1), 0)},
                          {"A"}),
                     comp("A", {prov("a", "T")})});
    case ConstraintId::CC3:
      // A and B contain each other.
      return config({comp("A", {prov("a", "T")}, CompState::Stopped, {},
                          {"B"}),
                     comp("B", {prov("b", "T")}, CompState::Stopped, {},
                          {"A"})});
    case ConstraintId::CC4:
      // Binding between two interfaces of the same component.
      return config({comp("A", {prov("a", "T"),
                                req("r", "T", Contingency::Optional)})},
                    {{id("a"), id("r")}});
    case ConstraintId::CC5:
      // The delegation source a is also the source of a binding.
      return config({comp("P", {prov("p", "T")}, CompState::Stopped, {},
                          {"A", "B"}),
                     comp("A", {prov("a", "T")}),
                     comp("B", {prov("bp", "TB"),
                                req("b", "T", Contingency::Optional)})},
                    {{id("a"), id("b")}}, {{id("a"), id("p")}});
    case ConstraintId::CC6:
      // Delegation from a provided interface to a required one.
      return config({comp("P", {prov("pp", "T2"), req("pr", "T")},
                          CompState::Stopped, {}, {"A"}),
                     comp("A", {prov("a", "T")})},
                    {}, {{id("a"), id("pr")}});
    case ConstraintId::CC7:
      // A is started with its mandatory requirement dangling.
      return config({comp("A", {prov("a", "T"), req("r", "T2")},
                          CompState::Started),
                     comp("B", {prov("b", "T2")})});
  }
  throw std::logic_error("unknown constraint");
}

// ---------------------------------------------------------------------------
// Substitutability mutation fixtures. The pre side is a small consistent
// configuration; the post side differs in exactly one aspect so that exactly
// the requested constraint is violated.

struct SubstFixture {
  Configuration pre;
  Configuration post;
  SubstMap subst;
};

inline SubstFixture s_fixture(SubstConstraintId which) {
  auto dom12 = ParamDomain::int_range(1, 2);
  switch (which) {
    case SubstConstraintId::S1: {
      // The parameter keeps its type but changes value.
      auto pre = config({comp("C", {prov("i", "T")}, CompState::Stopped,
                              {param("p", "PT", dom12, 1)})});
      auto post = config({comp("C", {prov("i", "T")}, CompState::Stopped,
                               {param("p", "PT", dom12, 2)})});
      return {pre, post, {}};
    }
    case SubstConstraintId::S2: {
      auto pre = config({comp("C", {prov("i", "T")}, CompState::Started)});
      auto post = config({comp("C", {prov("i", "T")}, CompState::Stopped)});
      return {pre, post, {}};
    }
    case SubstConstraintId::S3: {
      // r flips from optional to mandatory.
      auto pre = config({comp("C", {prov("i", "T"),
                                    req("r", "T2", Contingency::Optional)})});
      auto post = config(
          {comp("C", {prov("i", "T"), req("r", "T2")})});
      return {pre, post, {}};
    }
    case SubstConstraintId::S4: {
      auto a = comp("A", {prov("a", "T")});
      auto b = comp("B", {prov("bp", "TB"),
                          req("b", "T", Contingency::Optional)});
      auto pre = config({a, b}, {{id("a"), id("b")}});
      auto post = config({a, b});
      return {pre, post, {}};
    }
    case SubstConstraintId::S5: {
      // C also uses TD, so the interface type survives D's disappearance.
      auto c = comp("C", {prov("i", "T"), prov("i2", "TD")});
      auto pre = config({c, comp("D", {prov("d", "TD")})});
      auto post = config({c});
      return {pre, post, {}};
    }
    case SubstConstraintId::S6: {
      auto c = comp("C", {prov("i", "T")});
      auto pre = config({c, comp("D", {prov("d", "TD")}, CompState::Started)});
      auto post =
          config({c, comp("DR", {prov("d", "TD")}, CompState::Stopped)});
      SubstMap subst;
      subst.mapping.emplace(id("D"), id("DR"));
      return {pre, post, subst};
    }
    case SubstConstraintId::S7: {
      // The substitute DR does not carry D's interface d.
      auto c = comp("C", {prov("i", "T")});
      auto pre = config({c, comp("D", {prov("d", "TD")})});
      auto post = config({c, comp("DR", {prov("dr", "TD")})});
      SubstMap subst;
      subst.mapping.emplace(id("D"), id("DR"));
      return {pre, post, subst};
    }
    case SubstConstraintId::S8: {
      // The substitute DR does not carry D's parameter q.
      auto c = comp("C", {prov("i", "T")});
      auto pre = config({c, comp("D", {prov("d", "TD")}, CompState::Stopped,
                              {param("q", "QT", dom12, 1)})});
      auto post = config({c, comp("DR", {prov("d", "TD")}, CompState::Stopped,
                               {param("qr", "QT", dom12, 1)})});
      SubstMap subst;
      subst.mapping.emplace(id("D"), id("DR"));
      return {pre, post, subst};
    }
    case SubstConstraintId::S9: {
      // N appears out of nowhere, attached to nothing.
      auto c = comp("C", {prov("i", "T")});
      auto pre = config({c});
      auto post = config({c, comp("N", {prov("n", "TN")})});
      return {pre, post, {}};
    }
    case SubstConstraintId::S10: {
      auto pre = config({comp("C", {prov("i", "T")})});
      auto post = config({comp("C", {prov("i", "T"), prov("j", "T")})});
      return {pre, post, {}};
    }
    case SubstConstraintId::S11: {
      auto pre = config({comp("C", {prov("i", "T")})});
      auto post = config({comp("C", {prov("i", "T")}, CompState::Stopped,
                               {param("newp", "PT", dom12, 1)})});
      return {pre, post, {}};
    }
    case SubstConstraintId::S12: {
      auto a = comp("A", {prov("a", "T")});
      auto b = comp("B", {prov("bp", "TB"),
                          req("b", "T", Contingency::Optional)});
      auto pre = config({a, b});
      auto post = config({a, b}, {{id("a"), id("b")}});
      return {pre, post, {}};
    }
  }
  throw std::logic_error("unknown constraint");
}

// ---------------------------------------------------------------------------
// Minimal paired systems triggering each simulation failure clause.

inline PairedSystem make_pair(ModelSpec pre, ModelSpec post, SubstMap subst,
                              bool lenient = false) {
  LoadOptions opts;
  opts.lenient_shared = lenient;
  auto loaded = PairedSystem::load(std::move(pre), std::move(post),
                                   std::move(subst), opts);
  if (!loaded.ok()) throw std::logic_error(loaded.error().message);
  return std::move(loaded).value();
}

/// Identity system: same model on both sides, empty map. Simulated.
inline PairedSystem clause_identity() {
  auto c = config({comp("C", {prov("i", "T")}, CompState::Started)});
  ReconfigurationDef stop{id("StopC"), Guard::started(id("C")),
                          {EditStop{id("C")}}};
  ReconfigurationDef start{id("StartC"), Guard::stopped(id("C")),
                           {EditStart{id("C")}}};
  auto spec = ModelSpec::make(c, {start, stop});
  return make_pair(spec, spec, {});
}

/// (i) The initial pair already violates the structural constraints.
inline PairedSystem clause_structural() {
  auto fx = s_fixture(SubstConstraintId::S9);
  return make_pair(ModelSpec::make(fx.pre, {}), ModelSpec::make(fx.post, {}),
                   fx.subst);
}

/// (ii) A shared operation is enabled after the substitution but not
/// before. Loaded leniently because the two definitions disagree on purpose.
inline PairedSystem clause_strict() {
  auto c = config({comp("C", {prov("i", "T")})});
  ReconfigurationDef pre_go{id("Go"), Guard::constant(false),
                            {EditStart{id("C")}}};
  ReconfigurationDef post_go{id("Go"), Guard::stopped(id("C")),
                             {EditStart{id("C")}}};
  return make_pair(ModelSpec::make(c, {pre_go}), ModelSpec::make(c, {post_go}),
                   {}, true);
}

/// (iii) A new operation drifts away from every original configuration.
inline PairedSystem clause_stuttering() {
  auto c = config({comp("C", {prov("i", "T")}, CompState::Stopped,
                        {param("p", "PT", ParamDomain::int_range(1, 2), 1)})});
  ReconfigurationDef tweak{
      id("Tweak"),
      Guard::compare(id("p"), Guard::CmpOp::Lt, ParamValue{std::int64_t{2}}),
      {EditSetValue{id("p"), SetExpr{std::nullopt, id("p"), 1}}}};
  return make_pair(ModelSpec::make(c, {}), ModelSpec::make(c, {tweak}), {});
}

/// (iv) A new operation spins forever on the spot.
inline PairedSystem clause_divergence() {
  auto c = config({comp("C", {prov("i", "T")}, CompState::Started)});
  ReconfigurationDef spin{id("Spin"), Guard::started(id("C")),
                          {EditStart{id("C")}}};
  return make_pair(ModelSpec::make(c, {}), ModelSpec::make(c, {spin}), {});
}

/// (v) The post level deadlocks immediately while the original can move.
inline PairedSystem clause_deadlock() {
  auto c = config({comp("C", {prov("i", "T")})});
  ReconfigurationDef boot{id("Boot"), Guard::stopped(id("C")),
                          {EditStart{id("C")}}};
  return make_pair(ModelSpec::make(c, {boot}), ModelSpec::make(c, {}), {});
}

}  // namespace archsubst::fixtures

#endif  // ARCHSUBST_TESTS_FIXTURES_HPP_
