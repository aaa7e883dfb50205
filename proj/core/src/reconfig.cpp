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

#include "archsubst/reconfig.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace archsubst {

namespace {

Identifier mapped(const Identifier& x,
                  const std::map<Identifier, Identifier>& m) {
  auto it = m.find(x);
  return it == m.end() ? x : it->second;
}

const char* cmp_str(Guard::CmpOp op) {
  switch (op) {
    case Guard::CmpOp::Eq:
      return "==";
    case Guard::CmpOp::Ne:
      return "!=";
    case Guard::CmpOp::Lt:
      return "<";
    case Guard::CmpOp::Le:
      return "<=";
    case Guard::CmpOp::Gt:
      return ">";
    case Guard::CmpOp::Ge:
      return ">=";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// Guards

GuardPtr Guard::constant(bool v) {
  auto g = std::make_shared<Guard>();
  g->kind = Kind::Const;
  g->const_value = v;
  return g;
}

GuardPtr Guard::present(Identifier comp) {
  auto g = std::make_shared<Guard>();
  g->kind = Kind::Present;
  g->component = std::move(comp);
  return g;
}

GuardPtr Guard::started(Identifier comp) {
  auto g = std::make_shared<Guard>();
  g->kind = Kind::Started;
  g->component = std::move(comp);
  return g;
}

GuardPtr Guard::stopped(Identifier comp) {
  auto g = std::make_shared<Guard>();
  g->kind = Kind::Stopped;
  g->component = std::move(comp);
  return g;
}

GuardPtr Guard::bound(Identifier comp, Identifier iface) {
  auto g = std::make_shared<Guard>();
  g->kind = Kind::Bound;
  g->component = std::move(comp);
  g->interface = std::move(iface);
  return g;
}

GuardPtr Guard::compare(Identifier param, CmpOp op, ParamValue lit) {
  auto g = std::make_shared<Guard>();
  g->kind = Kind::Compare;
  g->parameter = std::move(param);
  g->cmp = op;
  g->literal = std::move(lit);
  return g;
}

GuardPtr Guard::negate(GuardPtr inner) {
  auto g = std::make_shared<Guard>();
  g->kind = Kind::Not;
  g->children.push_back(std::move(inner));
  return g;
}

namespace {

GuardPtr nary(Guard::Kind kind, bool neutral, std::vector<GuardPtr> gs) {
  std::vector<GuardPtr> flat;
  for (auto& g : gs) {
    if (g->kind == kind)
      flat.insert(flat.end(), g->children.begin(), g->children.end());
    else
      flat.push_back(std::move(g));
  }
  if (flat.empty()) return Guard::constant(neutral);
  if (flat.size() == 1) return flat.front();
  auto g = std::make_shared<Guard>();
  g->kind = kind;
  g->children = std::move(flat);
  return g;
}

}  // namespace

GuardPtr Guard::conj(std::vector<GuardPtr> gs) {
  return nary(Kind::And, true, std::move(gs));
}

GuardPtr Guard::disj(std::vector<GuardPtr> gs) {
  return nary(Kind::Or, false, std::move(gs));
}

bool Guard::eval(const Configuration& c) const {
  switch (kind) {
    case Kind::Const:
      return const_value;
    case Kind::Present:
      return c.has_component(component);
    case Kind::Started:
      return c.has_component(component) &&
             c.state().at(component) == CompState::Started;
    case Kind::Stopped:
      return c.has_component(component) &&
             c.state().at(component) == CompState::Stopped;
    case Kind::Bound: {
      if (!c.is_interface(interface)) return false;
      if (c.container().at(interface) != component) return false;
      return c.in_binding(interface);
    }
    case Kind::Compare: {
      if (!c.has_parameter(parameter)) return false;
      const ParamValue& v = c.value().at(parameter);
      switch (cmp) {
        case CmpOp::Eq:
          return v == literal;
        case CmpOp::Ne:
          return v != literal;
        default:
          break;
      }
      if (!std::holds_alternative<std::int64_t>(v) ||
          !std::holds_alternative<std::int64_t>(literal))
        return false;
      auto a = std::get<std::int64_t>(v);
      auto b = std::get<std::int64_t>(literal);
      switch (cmp) {
        case CmpOp::Lt:
          return a < b;
        case CmpOp::Le:
          return a <= b;
        case CmpOp::Gt:
          return a > b;
        case CmpOp::Ge:
          return a >= b;
        default:
          return false;
      }
    }
    case Kind::Not:
      return !children.front()->eval(c);
    case Kind::And:
      return std::all_of(children.begin(), children.end(),
                         [&](const GuardPtr& g) { return g->eval(c); });
    case Kind::Or:
      return std::any_of(children.begin(), children.end(),
                         [&](const GuardPtr& g) { return g->eval(c); });
  }
  return false;
}

bool Guard::equals(const Guard& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Const:
      return const_value == o.const_value;
    case Kind::Present:
    case Kind::Started:
    case Kind::Stopped:
      return component == o.component;
    case Kind::Bound:
      return component == o.component && interface == o.interface;
    case Kind::Compare:
      return parameter == o.parameter && cmp == o.cmp && literal == o.literal;
    case Kind::Not:
    case Kind::And:
    case Kind::Or: {
      if (children.size() != o.children.size()) return false;
      for (std::size_t i = 0; i < children.size(); ++i)
        if (!children[i]->equals(*o.children[i])) return false;
      return true;
    }
  }
  return false;
}

GuardPtr Guard::renamed(const std::map<Identifier, Identifier>& m) const {
  auto g = std::make_shared<Guard>(*this);
  g->component = mapped(component, m);
  g->children.clear();
  for (const auto& ch : children) g->children.push_back(ch->renamed(m));
  return g;
}

std::string Guard::str() const {
  auto wrap = [](const GuardPtr& g, bool paren) {
    return paren ? "(" + g->str() + ")" : g->str();
  };
  switch (kind) {
    case Kind::Const:
      return const_value ? "true" : "false";
    case Kind::Present:
      return "present(" + component.str() + ")";
    case Kind::Started:
      return "started(" + component.str() + ")";
    case Kind::Stopped:
      return "stopped(" + component.str() + ")";
    case Kind::Bound:
      return "bound(" + component.str() + "." + interface.str() + ")";
    case Kind::Compare:
      return parameter.str() + " " + cmp_str(cmp) + " " + to_string(literal);
    case Kind::Not: {
      const GuardPtr& ch = children.front();
      bool paren = ch->kind == Kind::And || ch->kind == Kind::Or ||
                   ch->kind == Kind::Compare;
      return "not " + wrap(ch, paren);
    }
    case Kind::And: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += " and ";
        out += wrap(children[i], children[i]->kind == Kind::Or);
      }
      return out;
    }
    case Kind::Or: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += " or ";
        out += children[i]->str();
      }
      return out;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Edits

namespace {

bool data_in_binding(const ConfigData& d, const Identifier& i) {
  if (d.binding.count(i)) return true;
  return std::any_of(d.binding.begin(), d.binding.end(),
                     [&](const auto& b) { return b.second == i; });
}

bool data_in_delegation(const ConfigData& d, const Identifier& i) {
  if (d.delegate.count(i)) return true;
  return std::any_of(d.delegate.begin(), d.delegate.end(),
                     [&](const auto& del) { return del.second == i; });
}

bool data_is_iface(const ConfigData& d, const Identifier& i) {
  return d.req_interfaces.count(i) || d.prov_interfaces.count(i);
}

std::optional<std::string> check_iface_ref(const ConfigData& d,
                                           const Identifier& comp,
                                           const Identifier& iface) {
  if (!data_is_iface(d, iface))
    return "interface '" + iface.str() + "' does not exist";
  if (d.container.at(iface) != comp)
    return "interface '" + iface.str() + "' is not supplied by '" +
           comp.str() + "'";
  return std::nullopt;
}

// Applies one edit in place; returns an error message on failure.
std::optional<std::string> apply_edit(ConfigData& d, const PrimitiveEdit& e) {
  using R = std::optional<std::string>;
  return std::visit(
      [&](const auto& ed) -> R {
        using T = std::decay_t<decltype(ed)>;
        if constexpr (std::is_same_v<T, EditInstantiate>) {
          const ComponentDecl& decl = ed.decl;
          if (d.components.count(decl.id))
            return "component '" + decl.id.str() + "' already exists";
          d.components.insert(decl.id);
          d.state[decl.id] = decl.state;
          for (const auto& i : decl.interfaces) {
            if (d.container.count(i.id))
              return "element '" + i.id.str() + "' already exists";
            if (i.provided)
              d.prov_interfaces.insert(i.id);
            else {
              d.req_interfaces.insert(i.id);
              d.contingency[i.id] = i.contingency;
            }
            d.container[i.id] = decl.id;
            d.container_type[i.id] = i.itype;
            d.itypes.insert(i.itype);
          }
          for (const auto& p : decl.params) {
            if (d.container.count(p.id))
              return "element '" + p.id.str() + "' already exists";
            d.parameters.insert(p.id);
            d.container[p.id] = decl.id;
            d.container_type[p.id] = p.ptype;
            auto [it, fresh] = d.domains.emplace(p.ptype, p.domain);
            if (!fresh && !(it->second == p.domain))
              return "parameter type '" + p.ptype.str() +
                     "' redeclared with a different domain";
            d.ptypes.insert(p.ptype);
            d.value[p.id] = p.initial;
          }
          for (const auto& child : decl.children) {
            if (!d.components.count(child))
              return "child '" + child.str() + "' does not exist";
            d.parent.emplace(child, decl.id);
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditDestroy>) {
          const Identifier& c = ed.component;
          if (!d.components.count(c))
            return "component '" + c.str() + "' does not exist";
          for (const auto& [child, par] : d.parent) {
            if (par == c)
              return "component '" + c.str() + "' still has sub-component '" +
                     child.str() + "'";
            if (child == c)
              return "component '" + c.str() +
                     "' is still attached to composite '" + par.str() + "'";
          }
          std::vector<Identifier> owned;
          for (const auto& [x, cc] : d.container)
            if (cc == c) owned.push_back(x);
          for (const auto& x : owned)
            if (data_is_iface(d, x) &&
                (data_in_binding(d, x) || data_in_delegation(d, x)))
              return "interface '" + x.str() + "' of '" + c.str() +
                     "' is still connected";
          for (const auto& x : owned) {
            d.req_interfaces.erase(x);
            d.prov_interfaces.erase(x);
            d.parameters.erase(x);
            d.container.erase(x);
            d.container_type.erase(x);
            d.contingency.erase(x);
            d.value.erase(x);
          }
          d.components.erase(c);
          d.state.erase(c);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditAddChild>) {
          if (!d.components.count(ed.child))
            return "component '" + ed.child.str() + "' does not exist";
          if (!d.components.count(ed.parent))
            return "component '" + ed.parent.str() + "' does not exist";
          if (!d.parent.emplace(ed.child, ed.parent).second)
            return "'" + ed.child.str() + "' is already a sub-component of '" +
                   ed.parent.str() + "'";
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditRemoveChild>) {
          if (!d.parent.erase({ed.child, ed.parent}))
            return "'" + ed.child.str() + "' is not a sub-component of '" +
                   ed.parent.str() + "'";
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditBind>) {
          if (auto err = check_iface_ref(d, ed.prov_comp, ed.prov)) return err;
          if (auto err = check_iface_ref(d, ed.req_comp, ed.req)) return err;
          if (!d.prov_interfaces.count(ed.prov))
            return "'" + ed.prov.str() + "' is not a provided interface";
          if (!d.req_interfaces.count(ed.req))
            return "'" + ed.req.str() + "' is not a required interface";
          if (d.binding.count(ed.prov))
            return "'" + ed.prov.str() + "' is already bound";
          d.binding[ed.prov] = ed.req;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditUnbind>) {
          if (auto err = check_iface_ref(d, ed.prov_comp, ed.prov)) return err;
          if (!d.binding.erase(ed.prov))
            return "'" + ed.prov.str() + "' is not bound";
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditDelegate>) {
          if (auto err = check_iface_ref(d, ed.inner_comp, ed.inner))
            return err;
          if (auto err = check_iface_ref(d, ed.outer_comp, ed.outer))
            return err;
          if (d.delegate.count(ed.inner))
            return "'" + ed.inner.str() + "' is already delegated";
          d.delegate[ed.inner] = ed.outer;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditUndelegate>) {
          if (auto err = check_iface_ref(d, ed.inner_comp, ed.inner))
            return err;
          if (!d.delegate.erase(ed.inner))
            return "'" + ed.inner.str() + "' is not delegated";
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditStart>) {
          if (!d.components.count(ed.component))
            return "component '" + ed.component.str() + "' does not exist";
          d.state[ed.component] = CompState::Started;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, EditStop>) {
          if (!d.components.count(ed.component))
            return "component '" + ed.component.str() + "' does not exist";
          d.state[ed.component] = CompState::Stopped;
          return std::nullopt;
        } else {
          static_assert(std::is_same_v<T, EditSetValue>);
          if (!d.parameters.count(ed.parameter))
            return "parameter '" + ed.parameter.str() + "' does not exist";
          ParamValue v;
          if (ed.expr.literal) {
            v = *ed.expr.literal;
          } else {
            const Identifier& base = ed.expr.base.value();
            if (!d.parameters.count(base))
              return "parameter '" + base.str() + "' does not exist";
            const ParamValue& bv = d.value.at(base);
            if (ed.expr.offset != 0 &&
                !std::holds_alternative<std::int64_t>(bv))
              return "parameter '" + base.str() + "' is not integer-valued";
            if (std::holds_alternative<std::int64_t>(bv))
              v = std::get<std::int64_t>(bv) + ed.expr.offset;
            else
              v = bv;
          }
          const auto& dom = d.domains.at(d.container_type.at(ed.parameter));
          if (!dom.contains(v))
            return "value " + to_string(v) + " for '" + ed.parameter.str() +
                   "' is outside its domain " + dom.str();
          d.value[ed.parameter] = v;
          return std::nullopt;
        }
      },
      e);
}

}  // namespace

std::string edit_str(const PrimitiveEdit& e) {
  std::ostringstream os;
  std::visit(
      [&](const auto& ed) {
        using T = std::decay_t<decltype(ed)>;
        if constexpr (std::is_same_v<T, EditInstantiate>)
          os << "new component " << ed.decl.id.str();
        else if constexpr (std::is_same_v<T, EditDestroy>)
          os << "destroy " << ed.component.str();
        else if constexpr (std::is_same_v<T, EditAddChild>)
          os << "attach " << ed.child.str() << " to " << ed.parent.str();
        else if constexpr (std::is_same_v<T, EditRemoveChild>)
          os << "detach " << ed.child.str() << " from " << ed.parent.str();
        else if constexpr (std::is_same_v<T, EditBind>)
          os << "bind " << ed.prov_comp.str() << "." << ed.prov.str() << " -> "
             << ed.req_comp.str() << "." << ed.req.str();
        else if constexpr (std::is_same_v<T, EditUnbind>)
          os << "unbind " << ed.prov_comp.str() << "." << ed.prov.str();
        else if constexpr (std::is_same_v<T, EditDelegate>)
          os << "delegate " << ed.inner_comp.str() << "." << ed.inner.str()
             << " -> " << ed.outer_comp.str() << "." << ed.outer.str();
        else if constexpr (std::is_same_v<T, EditUndelegate>)
          os << "undelegate " << ed.inner_comp.str() << "." << ed.inner.str();
        else if constexpr (std::is_same_v<T, EditStart>)
          os << "start " << ed.component.str();
        else if constexpr (std::is_same_v<T, EditStop>)
          os << "stop " << ed.component.str();
        else {
          os << "set " << ed.parameter.str() << " := ";
          if (ed.expr.literal)
            os << to_string(*ed.expr.literal);
          else {
            os << ed.expr.base->str();
            if (ed.expr.offset > 0)
              os << " + " << ed.expr.offset;
            else if (ed.expr.offset < 0)
              os << " - " << -ed.expr.offset;
          }
        }
      },
      e);
  return os.str();
}

PrimitiveEdit edit_renamed(const PrimitiveEdit& e,
                           const std::map<Identifier, Identifier>& m) {
  return std::visit(
      [&](auto ed) -> PrimitiveEdit {
        using T = std::decay_t<decltype(ed)>;
        if constexpr (std::is_same_v<T, EditInstantiate>) {
          ed.decl.id = mapped(ed.decl.id, m);
          for (auto& ch : ed.decl.children) ch = mapped(ch, m);
        } else if constexpr (std::is_same_v<T, EditDestroy> ||
                             std::is_same_v<T, EditStart> ||
                             std::is_same_v<T, EditStop>) {
          ed.component = mapped(ed.component, m);
        } else if constexpr (std::is_same_v<T, EditAddChild> ||
                             std::is_same_v<T, EditRemoveChild>) {
          ed.child = mapped(ed.child, m);
          ed.parent = mapped(ed.parent, m);
        } else if constexpr (std::is_same_v<T, EditBind>) {
          ed.prov_comp = mapped(ed.prov_comp, m);
          ed.req_comp = mapped(ed.req_comp, m);
        } else if constexpr (std::is_same_v<T, EditUnbind>) {
          ed.prov_comp = mapped(ed.prov_comp, m);
        } else if constexpr (std::is_same_v<T, EditDelegate>) {
          ed.inner_comp = mapped(ed.inner_comp, m);
          ed.outer_comp = mapped(ed.outer_comp, m);
        } else if constexpr (std::is_same_v<T, EditUndelegate>) {
          ed.inner_comp = mapped(ed.inner_comp, m);
        }
        return ed;
      },
      e);
}

// ---------------------------------------------------------------------------

bool ReconfigurationDef::structurally_equal(
    const ReconfigurationDef& other) const {
  if (name != other.name) return false;
  if (!guard->equals(*other.guard)) return false;
  return body == other.body;
}

ReconfigurationDef ReconfigurationDef::renamed(
    const std::map<Identifier, Identifier>& m) const {
  ReconfigurationDef out;
  out.name = name;
  out.guard = guard->renamed(m);
  for (const auto& e : body) out.body.push_back(edit_renamed(e, m));
  return out;
}

ModelSpec ModelSpec::make(Configuration initial,
                          std::vector<ReconfigurationDef> ops) {
  auto report = check_consistency(initial);
  if (!report.consistent()) {
    std::string msg = "initial configuration is inconsistent:";
    for (const auto& v : report.violations)
      msg += " [" + std::string(to_string(v.id)) + "] " + v.message + ";";
    throw WellFormednessError(msg);
  }
  std::set<Identifier> names;
  for (const auto& op : ops) {
    if (!names.insert(op.name).second)
      throw WellFormednessError(
          "reconfiguration '" + op.name.str() + "' declared twice", {op.name});
    if (op.body.empty())
      throw WellFormednessError(
          "reconfiguration '" + op.name.str() + "' has an empty body",
          {op.name});
  }
  return ModelSpec(std::move(initial), std::move(ops));
}

const ReconfigurationDef* ModelSpec::find(const Identifier& name) const {
  for (const auto& op : ops_)
    if (op.name == name) return &op;
  return nullptr;
}

std::set<Identifier> ModelSpec::op_names() const {
  std::set<Identifier> out;
  for (const auto& op : ops_) out.insert(op.name);
  return out;
}

// ---------------------------------------------------------------------------

Expected<Configuration, ApplyError> apply(const Configuration& c,
                                          const ReconfigurationDef& ope) {
  if (!ope.guard->eval(c))
    return ApplyError{ApplyError::Kind::GuardFailed,
                      "guard of '" + ope.name.str() + "' does not hold",
                      {}};
  ConfigData d = c.data();
  for (const auto& e : ope.body) {
    if (auto err = apply_edit(d, e))
      return ApplyError{ApplyError::Kind::EditFailed,
                        "edit '" + edit_str(e) + "' of '" + ope.name.str() +
                            "' failed: " + *err,
                        {}};
  }
  try {
    Configuration target = Configuration::make(std::move(d));
    auto report = check_consistency(target);
    if (!report.consistent())
      return ApplyError{ApplyError::Kind::InconsistentResult,
                        "target of '" + ope.name.str() + "' is inconsistent",
                        std::move(report)};
    return target;
  } catch (const WellFormednessError& e) {
    return ApplyError{ApplyError::Kind::EditFailed,
                      "target of '" + ope.name.str() +
                          "' is ill-formed: " + e.what(),
                      {}};
  }
}

Expected<std::vector<Identifier>, ApplyError> enabled(
    const Configuration& c, const ModelSpec& spec,
    const std::set<Identifier>& subset) {
  for (const auto& name : subset)
    if (!spec.find(name))
      return ApplyError{ApplyError::Kind::UnknownOperation,
                        "unknown reconfiguration '" + name.str() + "'",
                        {}};
  std::vector<Identifier> out;
  for (const auto& op : spec.ops())
    if (subset.count(op.name) && apply(c, op).ok()) out.push_back(op.name);
  return out;
}

std::vector<Identifier> enabled(const Configuration& c,
                                const ModelSpec& spec) {
  std::vector<Identifier> out;
  for (const auto& op : spec.ops())
    if (apply(c, op).ok()) out.push_back(op.name);
  return out;
}

// ---------------------------------------------------------------------------

Expected<std::optional<Identifier>, StrategyError> ScriptedStrategy::pick(
    const std::vector<Identifier>& choices) {
  if (choices.empty())
    return StrategyError{StrategyError::Kind::EmptyChoiceSet,
                         "empty choice set"};
  if (next_ >= script_.size()) return std::optional<Identifier>{};
  const Identifier& want = script_[next_];
  if (std::find(choices.begin(), choices.end(), want) == choices.end()) {
    std::string avail;
    for (const auto& c : choices) avail += (avail.empty() ? "" : ", ") + c.str();
    return StrategyError{StrategyError::Kind::ScriptMismatch,
                         "scripted operation '" + want.str() +
                             "' is not enabled; enabled: {" + avail + "}"};
  }
  ++next_;
  return std::optional<Identifier>{want};
}

Expected<std::optional<Identifier>, StrategyError> RandomStrategy::pick(
    const std::vector<Identifier>& choices) {
  if (choices.empty())
    return StrategyError{StrategyError::Kind::EmptyChoiceSet,
                         "empty choice set"};
  // Plain modulo keeps the draw reproducible across standard libraries.
  std::size_t idx = static_cast<std::size_t>(engine_() % choices.size());
  return std::optional<Identifier>{choices[idx]};
}

Expected<std::optional<Identifier>, StrategyError> InteractiveStrategy::pick(
    const std::vector<Identifier>& choices) {
  if (choices.empty())
    return StrategyError{StrategyError::Kind::EmptyChoiceSet,
                         "empty choice set"};
  auto choice = channel_(choices);
  if (!choice) return std::optional<Identifier>{};
  if (std::find(choices.begin(), choices.end(), *choice) == choices.end())
    return StrategyError{StrategyError::Kind::ScriptMismatch,
                         "choice '" + choice->str() + "' is not enabled"};
  return choice;
}

Expected<Path, StrategyError> run_path(const ModelSpec& spec,
                                       Strategy& strategy,
                                       std::size_t max_steps) {
  Path path;
  path.steps.push_back({spec.initial(), std::nullopt});
  Configuration current = spec.initial();
  for (std::size_t i = 0; i < max_steps; ++i) {
    auto choices = enabled(current, spec);
    if (choices.empty()) break;  // deadlock
    auto picked = strategy.pick(choices);
    if (!picked.ok()) return picked.error();
    if (!picked.value()) break;  // strategy out of input
    const ReconfigurationDef* op = spec.find(*picked.value());
    auto next = apply(current, *op);
    assert(next.ok());
    current = std::move(next).value();
    path.steps.push_back({current, *picked.value()});
  }
  return path;
}

}  // namespace archsubst
