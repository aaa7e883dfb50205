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

#ifndef ARCHSUBST_RECONFIG_HPP_
#define ARCHSUBST_RECONFIG_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "archsubst/consistency.hpp"
#include "archsubst/expected.hpp"
#include "archsubst/model.hpp"

namespace archsubst {

// ---------------------------------------------------------------------------
// Guards: quantifier-free propositional combinations of presence, state and
// parameter-comparison atoms, evaluated on the current configuration only.
// Atoms over elements that do not exist evaluate to false.

struct Guard;
using GuardPtr = std::shared_ptr<const Guard>;

struct Guard {
  enum class Kind {
    Const,
    Present,   // component exists
    Started,   // component exists and is started
    Stopped,   // component exists and is stopped
    Bound,     // interface exists, lives on the named component, is bound
    Compare,   // parameter compared against a constant
    Not,
    And,
    Or
  };
  enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

  Kind kind = Kind::Const;
  bool const_value = false;
  Identifier component;  // Present/Started/Stopped/Bound
  Identifier interface;  // Bound
  Identifier parameter;  // Compare
  CmpOp cmp = CmpOp::Eq;
  ParamValue literal;
  std::vector<GuardPtr> children;  // Not: 1, And/Or: >=2

  bool eval(const Configuration& c) const;
  bool equals(const Guard& other) const;
  GuardPtr renamed(const std::map<Identifier, Identifier>& comp_map) const;
  std::string str() const;

  static GuardPtr constant(bool v);
  static GuardPtr present(Identifier comp);
  static GuardPtr started(Identifier comp);
  static GuardPtr stopped(Identifier comp);
  static GuardPtr bound(Identifier comp, Identifier iface);
  static GuardPtr compare(Identifier param, CmpOp op, ParamValue lit);
  static GuardPtr negate(GuardPtr g);
  static GuardPtr conj(std::vector<GuardPtr> gs);
  static GuardPtr disj(std::vector<GuardPtr> gs);
};

// ---------------------------------------------------------------------------
// Primitive architectural edits. Interface references are component-qualified
// so an edit fails when the interface is not supplied by the named component.

struct EditInstantiate {
  ComponentDecl decl;
  friend bool operator==(const EditInstantiate&,
                         const EditInstantiate&) = default;
};
struct EditDestroy {
  Identifier component;
  friend bool operator==(const EditDestroy&, const EditDestroy&) = default;
};
struct EditAddChild {
  Identifier child, parent;
  friend bool operator==(const EditAddChild&, const EditAddChild&) = default;
};
struct EditRemoveChild {
  Identifier child, parent;
  friend bool operator==(const EditRemoveChild&,
                         const EditRemoveChild&) = default;
};
struct EditBind {
  Identifier prov_comp, prov, req_comp, req;
  friend bool operator==(const EditBind&, const EditBind&) = default;
};
struct EditUnbind {
  Identifier prov_comp, prov;
  friend bool operator==(const EditUnbind&, const EditUnbind&) = default;
};
struct EditDelegate {
  Identifier inner_comp, inner, outer_comp, outer;
  friend bool operator==(const EditDelegate&, const EditDelegate&) = default;
};
struct EditUndelegate {
  Identifier inner_comp, inner;
  friend bool operator==(const EditUndelegate&,
                         const EditUndelegate&) = default;
};
struct EditStart {
  Identifier component;
  friend bool operator==(const EditStart&, const EditStart&) = default;
};
struct EditStop {
  Identifier component;
  friend bool operator==(const EditStop&, const EditStop&) = default;
};

/// Right-hand side of a SetValue edit: a literal, another parameter's value,
/// or a parameter value shifted by an integer offset.
struct SetExpr {
  std::optional<ParamValue> literal;
  std::optional<Identifier> base;
  std::int64_t offset = 0;

  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};
struct EditSetValue {
  Identifier parameter;
  SetExpr expr;
  friend bool operator==(const EditSetValue&, const EditSetValue&) = default;
};

using PrimitiveEdit =
    std::variant<EditInstantiate, EditDestroy, EditAddChild, EditRemoveChild,
                 EditBind, EditUnbind, EditDelegate, EditUndelegate, EditStart,
                 EditStop, EditSetValue>;

std::string edit_str(const PrimitiveEdit& e);
PrimitiveEdit edit_renamed(const PrimitiveEdit& e,
                           const std::map<Identifier, Identifier>& comp_map);

// ---------------------------------------------------------------------------

/// A named, guarded, atomic composite of primitive edits.
struct ReconfigurationDef {
  Identifier name;
  GuardPtr guard;
  std::vector<PrimitiveEdit> body;

  bool structurally_equal(const ReconfigurationDef& other) const;
  ReconfigurationDef renamed(
      const std::map<Identifier, Identifier>& comp_map) const;
};

/// One level's reconfiguration model: an initial consistent configuration
/// plus the reconfiguration catalogue. The reachable consistent
/// configurations form the states of the induced transition system.
class ModelSpec {
 public:
  /// Validates: initial consistent, names unique, bodies non-empty.
  /// Throws WellFormednessError.
  static ModelSpec make(Configuration initial,
                        std::vector<ReconfigurationDef> ops);

  const Configuration& initial() const { return initial_; }
  const std::vector<ReconfigurationDef>& ops() const { return ops_; }
  const ReconfigurationDef* find(const Identifier& name) const;
  std::set<Identifier> op_names() const;

 private:
  ModelSpec(Configuration initial, std::vector<ReconfigurationDef> ops)
      : initial_(std::move(initial)), ops_(std::move(ops)) {}

  Configuration initial_;
  std::vector<ReconfigurationDef> ops_;
};

// ---------------------------------------------------------------------------

struct ApplyError {
  enum class Kind {
    GuardFailed,
    EditFailed,
    InconsistentResult,
    UnknownOperation
  };
  Kind kind;
  std::string message;
  ConsistencyReport report;  // InconsistentResult only
};

/// Applies a reconfiguration atomically: guard, then every edit in order,
/// then well-formedness and consistency of the target. Deterministic.
Expected<Configuration, ApplyError> apply(const Configuration& c,
                                          const ReconfigurationDef& ope);

/// Names of the catalogue subset whose application from c succeeds
/// end-to-end, in catalogue order.
Expected<std::vector<Identifier>, ApplyError> enabled(
    const Configuration& c, const ModelSpec& spec,
    const std::set<Identifier>& subset);

std::vector<Identifier> enabled(const Configuration& c, const ModelSpec& spec);

// ---------------------------------------------------------------------------
// Choice strategies for pick_up.

struct StrategyError {
  enum class Kind { EmptyChoiceSet, ScriptMismatch, InputClosed };
  Kind kind;
  std::string message;
};

class Strategy {
 public:
  virtual ~Strategy() = default;

  /// Picks a member of the non-empty choice set, or nullopt when the
  /// strategy has run out of input (script consumed, channel closed).
  virtual Expected<std::optional<Identifier>, StrategyError> pick(
      const std::vector<Identifier>& choices) = 0;
};

class ScriptedStrategy : public Strategy {
 public:
  explicit ScriptedStrategy(std::vector<Identifier> script)
      : script_(std::move(script)) {}

  Expected<std::optional<Identifier>, StrategyError> pick(
      const std::vector<Identifier>& choices) override;

 private:
  std::vector<Identifier> script_;
  std::size_t next_ = 0;
};

class RandomStrategy : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed) : engine_(seed) {}

  Expected<std::optional<Identifier>, StrategyError> pick(
      const std::vector<Identifier>& choices) override;

 private:
  std::mt19937_64 engine_;
};

class InteractiveStrategy : public Strategy {
 public:
  /// The channel receives the choice set and answers with a member, or
  /// nullopt to stop.
  using Channel =
      std::function<std::optional<Identifier>(const std::vector<Identifier>&)>;

  explicit InteractiveStrategy(Channel channel)
      : channel_(std::move(channel)) {}

  Expected<std::optional<Identifier>, StrategyError> pick(
      const std::vector<Identifier>& choices) override;

 private:
  Channel channel_;
};

// ---------------------------------------------------------------------------

struct Path {
  struct Step {
    Configuration config;
    std::optional<Identifier> via;  // none for the initial configuration
  };
  std::vector<Step> steps;
};

/// Builds an evolution path by repeated enabled/pick_up/apply, stopping at
/// deadlock, at max_steps, or when the strategy runs out of input.
Expected<Path, StrategyError> run_path(const ModelSpec& spec,
                                       Strategy& strategy,
                                       std::size_t max_steps);

}  // namespace archsubst

#endif  // ARCHSUBST_RECONFIG_HPP_
