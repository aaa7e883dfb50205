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

#ifndef ARCHSUBST_MODEL_HPP_
#define ARCHSUBST_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace archsubst {

/// Element namespace, used when pre- and post-substitution models coexist in
/// one address space. Elements preserved across a substitution are Shared.
enum class Namespace { Pre, Post, Shared };

std::string_view to_string(Namespace ns);

/// A named architectural element. Names are `[A-Za-z_][A-Za-z0-9_]*` tokens;
/// the (namespace, name) pair is the identity.
struct Identifier {
  std::string name;
  Namespace ns = Namespace::Shared;

  static bool valid_name(std::string_view s);

  /// "name" for Shared, "pre::name" / "post::name" otherwise.
  std::string str() const;

  friend bool operator==(const Identifier& a, const Identifier& b) {
    return a.ns == b.ns && a.name == b.name;
  }
  friend std::strong_ordering operator<=>(const Identifier& a,
                                          const Identifier& b) {
    if (auto c = a.ns <=> b.ns; c != 0) return c;
    return a.name <=> b.name;
  }
};

inline Identifier id(std::string name) { return Identifier{std::move(name)}; }

enum class CompState { Started, Stopped };
enum class Contingency { Mandatory, Optional };

std::string_view to_string(CompState s);
std::string_view to_string(Contingency c);

/// Current value of a parameter: integer, boolean, or an enum literal.
using ParamValue = std::variant<std::int64_t, bool, std::string>;

std::string to_string(const ParamValue& v);

/// Value domain of a parameter type. Integer domains carry declared bounds so
/// that reachable state spaces stay finite; enumerations list their literals.
struct ParamDomain {
  enum class Kind { IntRange, Boolean, Enumeration };

  Kind kind = Kind::Boolean;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::string> literals;

  static ParamDomain int_range(std::int64_t lo, std::int64_t hi) {
    return ParamDomain{Kind::IntRange, lo, hi, {}};
  }
  static ParamDomain boolean() { return ParamDomain{Kind::Boolean, 0, 0, {}}; }
  static ParamDomain enumeration(std::vector<std::string> lits) {
    return ParamDomain{Kind::Enumeration, 0, 0, std::move(lits)};
  }

  bool contains(const ParamValue& v) const;
  std::string str() const;

  friend bool operator==(const ParamDomain&, const ParamDomain&) = default;
};

// ---------------------------------------------------------------------------
// Declarations fed to new_configuration (and to Instantiate edits).

struct InterfaceDecl {
  Identifier id;
  Identifier itype;
  bool provided = true;
  Contingency contingency = Contingency::Mandatory;  // required side only

  friend bool operator==(const InterfaceDecl&, const InterfaceDecl&) = default;
};

struct ParamDecl {
  Identifier id;
  Identifier ptype;
  ParamDomain domain;
  ParamValue initial;

  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

struct ComponentDecl {
  Identifier id;
  std::vector<InterfaceDecl> interfaces;
  std::vector<ParamDecl> params;
  std::vector<Identifier> children;  // sub-components, declared elsewhere
  CompState state = CompState::Stopped;

  friend bool operator==(const ComponentDecl&, const ComponentDecl&) = default;
};

struct BindingDecl {
  Identifier prov;
  Identifier req;

  friend bool operator==(const BindingDecl&, const BindingDecl&) = default;
};

struct DelegateDecl {
  Identifier inner;
  Identifier outer;

  friend bool operator==(const DelegateDecl&, const DelegateDecl&) = default;
};

struct ConfigurationDeclaration {
  std::vector<ComponentDecl> components;
  std::vector<BindingDecl> bindings;
  std::vector<DelegateDecl> delegations;
};

/// Raised when a declaration or an edited configuration breaks a totality,
/// partiality, typing or reference rule. Carries the offending ids.
class WellFormednessError : public std::runtime_error {
 public:
  WellFormednessError(std::string message, std::vector<Identifier> ids = {})
      : std::runtime_error(std::move(message)), ids_(std::move(ids)) {}

  const std::vector<Identifier>& ids() const { return ids_; }

 private:
  std::vector<Identifier> ids_;
};

// ---------------------------------------------------------------------------

/// Raw relation tables of a configuration. Kept in ordered containers so the
/// canonical form is the storage order.
struct ConfigData {
  std::set<Identifier> components;
  std::set<Identifier> req_interfaces;
  std::set<Identifier> prov_interfaces;
  std::set<Identifier> parameters;
  std::set<Identifier> itypes;
  std::set<Identifier> ptypes;

  std::map<Identifier, Identifier> container;       // iface|param -> component
  std::map<Identifier, Identifier> container_type;  // iface|param -> type
  std::set<std::pair<Identifier, Identifier>> parent;  // (child, parent)
  std::map<Identifier, Identifier> binding;   // prov -> req
  std::map<Identifier, Identifier> delegate;  // inner -> outer
  std::map<Identifier, CompState> state;
  std::map<Identifier, Contingency> contingency;  // req interfaces
  std::map<Identifier, ParamValue> value;
  std::map<Identifier, ParamDomain> domains;  // per ptype

  friend bool operator==(const ConfigData&, const ConfigData&) = default;
};

/// An architectural snapshot <Elem, Rel>: element sets plus the relations
/// structuring them. Immutable once constructed; all edits produce new values.
class Configuration {
 public:
  /// Validates the tuple invariants (totality, partiality, typing, reference
  /// closure) and wraps the data. Throws WellFormednessError.
  static Configuration make(ConfigData data);

  const ConfigData& data() const { return d_; }

  const std::set<Identifier>& components() const { return d_.components; }
  const std::set<Identifier>& req_interfaces() const {
    return d_.req_interfaces;
  }
  const std::set<Identifier>& prov_interfaces() const {
    return d_.prov_interfaces;
  }
  const std::set<Identifier>& parameters() const { return d_.parameters; }
  const std::set<Identifier>& itypes() const { return d_.itypes; }
  const std::set<Identifier>& ptypes() const { return d_.ptypes; }
  const std::map<Identifier, Identifier>& container() const {
    return d_.container;
  }
  const std::map<Identifier, Identifier>& container_type() const {
    return d_.container_type;
  }
  const std::set<std::pair<Identifier, Identifier>>& parent() const {
    return d_.parent;
  }
  const std::map<Identifier, Identifier>& binding() const {
    return d_.binding;
  }
  const std::map<Identifier, Identifier>& delegate() const {
    return d_.delegate;
  }
  const std::map<Identifier, CompState>& state() const { return d_.state; }
  const std::map<Identifier, Contingency>& contingency() const {
    return d_.contingency;
  }
  const std::map<Identifier, ParamValue>& value() const { return d_.value; }
  const std::map<Identifier, ParamDomain>& domains() const {
    return d_.domains;
  }

  bool has_component(const Identifier& c) const {
    return d_.components.count(c) != 0;
  }
  bool is_provided(const Identifier& i) const {
    return d_.prov_interfaces.count(i) != 0;
  }
  bool is_required(const Identifier& i) const {
    return d_.req_interfaces.count(i) != 0;
  }
  bool is_interface(const Identifier& i) const {
    return is_provided(i) || is_required(i);
  }
  bool has_parameter(const Identifier& p) const {
    return d_.parameters.count(p) != 0;
  }

  /// True iff the component has at least one sub-component.
  bool is_composite(const Identifier& c) const;
  /// True iff the component is not a sub-component of anything.
  bool is_top_level(const Identifier& c) const;

  std::vector<Identifier> children_of(const Identifier& c) const;
  std::vector<Identifier> parents_of(const Identifier& c) const;
  std::vector<Identifier> interfaces_of(const Identifier& c) const;
  std::vector<Identifier> parameters_of(const Identifier& c) const;

  /// Interface occurs in Binding, on either side.
  bool in_binding(const Identifier& i) const;
  /// Interface occurs in Delegate, on either side.
  bool in_delegation(const Identifier& i) const;

  /// Deterministic textual dump of the canonical form; equal keys iff equal
  /// configurations.
  std::string canonical_key() const;

  /// Stable 64-bit FNV-1a hash of the canonical key, as 16 hex digits.
  std::string stable_hash() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.d_ == b.d_;
  }

 private:
  explicit Configuration(ConfigData d) : d_(std::move(d)) {}

  ConfigData d_;
};

/// Builds and validates a configuration from a declaration. Checks
/// well-formedness only, not the consistency constraints.
/// Throws WellFormednessError.
Configuration new_configuration(const ConfigurationDeclaration& decl);

/// Structural equality on the canonical form (order-insensitive by storage).
bool config_equal(const Configuration& a, const Configuration& b);

}  // namespace archsubst

#endif  // ARCHSUBST_MODEL_HPP_
