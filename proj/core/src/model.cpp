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

#include "archsubst/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace archsubst {

std::string_view to_string(Namespace ns) {
  switch (ns) {
    case Namespace::Pre:
      return "pre";
    case Namespace::Post:
      return "post";
    case Namespace::Shared:
      return "shared";
  }
  return "?";
}

std::string_view to_string(CompState s) {
  return s == CompState::Started ? "started" : "stopped";
}

std::string_view to_string(Contingency c) {
  return c == Contingency::Mandatory ? "mandatory" : "optional";
}

bool Identifier::valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string Identifier::str() const {
  if (ns == Namespace::Shared) return name;
  return std::string(to_string(ns)) + "::" + name;
}

std::string to_string(const ParamValue& v) {
  if (std::holds_alternative<std::int64_t>(v))
    return std::to_string(std::get<std::int64_t>(v));
  if (std::holds_alternative<bool>(v))
    return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

bool ParamDomain::contains(const ParamValue& v) const {
  switch (kind) {
    case Kind::IntRange:
      return std::holds_alternative<std::int64_t>(v) &&
             std::get<std::int64_t>(v) >= lo && std::get<std::int64_t>(v) <= hi;
    case Kind::Boolean:
      return std::holds_alternative<bool>(v);
    case Kind::Enumeration:
      return std::holds_alternative<std::string>(v) &&
             std::find(literals.begin(), literals.end(),
                       std::get<std::string>(v)) != literals.end();
  }
  return false;
}

std::string ParamDomain::str() const {
  switch (kind) {
    case Kind::IntRange:
      return "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
    case Kind::Boolean:
      return "bool";
    case Kind::Enumeration: {
      std::string out = "{";
      for (std::size_t i = 0; i < literals.size(); ++i) {
        if (i) out += ", ";
        out += literals[i];
      }
      return out + "}";
    }
  }
  return "?";
}

namespace {

[[noreturn]] void fail(std::string msg, std::vector<Identifier> ids = {}) {
  throw WellFormednessError(std::move(msg), std::move(ids));
}

}  // namespace

Configuration Configuration::make(ConfigData d) {
  if (d.components.empty()) fail("components set is empty");

  // Global id uniqueness across element kinds.
  std::set<Identifier> seen;
  auto declare = [&](const Identifier& x, const char* kind) {
    if (!Identifier::valid_name(x.name))
      fail(std::string("invalid ") + kind + " name '" + x.str() + "'", {x});
    if (!seen.insert(x).second)
      fail("duplicate element id '" + x.str() + "'", {x});
  };
  for (const auto& c : d.components) declare(c, "component");
  for (const auto& i : d.req_interfaces) declare(i, "interface");
  for (const auto& i : d.prov_interfaces) declare(i, "interface");
  for (const auto& p : d.parameters) declare(p, "parameter");
  for (const auto& t : d.itypes) declare(t, "type");
  for (const auto& t : d.ptypes) declare(t, "type");

  auto is_iface = [&](const Identifier& i) {
    return d.req_interfaces.count(i) || d.prov_interfaces.count(i);
  };

  // container / container_type: total on interfaces + parameters.
  for (const auto& i : d.req_interfaces)
    if (!d.container.count(i) || !d.container_type.count(i))
      fail("container/container_type not total on interface '" + i.str() + "'",
           {i});
  for (const auto& i : d.prov_interfaces)
    if (!d.container.count(i) || !d.container_type.count(i))
      fail("container/container_type not total on interface '" + i.str() + "'",
           {i});
  for (const auto& p : d.parameters)
    if (!d.container.count(p) || !d.container_type.count(p))
      fail("container/container_type not total on parameter '" + p.str() + "'",
           {p});
  for (const auto& [x, c] : d.container) {
    if (!is_iface(x) && !d.parameters.count(x))
      fail("container defined on undeclared element '" + x.str() + "'", {x});
    if (!d.components.count(c))
      fail("container of '" + x.str() + "' is undeclared component '" +
               c.str() + "'",
           {x, c});
  }
  for (const auto& [x, t] : d.container_type) {
    if (is_iface(x)) {
      if (!d.itypes.count(t))
        fail("interface '" + x.str() + "' typed with non-interface type '" +
                 t.str() + "'",
             {x, t});
    } else if (d.parameters.count(x)) {
      if (!d.ptypes.count(t))
        fail("parameter '" + x.str() + "' typed with non-parameter type '" +
                 t.str() + "'",
             {x, t});
    } else {
      fail("container_type defined on undeclared element '" + x.str() + "'",
           {x});
    }
  }

  for (const auto& [child, par] : d.parent) {
    if (!d.components.count(child) || !d.components.count(par))
      fail("parent pair references undeclared component", {child, par});
  }

  for (const auto& [ip, ir] : d.binding) {
    if (!d.prov_interfaces.count(ip))
      fail("binding source '" + ip.str() + "' is not a provided interface",
           {ip});
    if (!d.req_interfaces.count(ir))
      fail("binding target '" + ir.str() + "' is not a required interface",
           {ir});
  }
  for (const auto& [in, out] : d.delegate) {
    if (!is_iface(in) || !is_iface(out))
      fail("delegation references undeclared interface", {in, out});
    if (in == out) fail("delegation from interface to itself", {in});
  }

  for (const auto& c : d.components)
    if (!d.state.count(c)) fail("state not total on '" + c.str() + "'", {c});
  for (const auto& [c, s] : d.state) {
    (void)s;
    if (!d.components.count(c))
      fail("state defined on undeclared component '" + c.str() + "'", {c});
  }

  for (const auto& i : d.req_interfaces)
    if (!d.contingency.count(i))
      fail("contingency not total on '" + i.str() + "'", {i});
  for (const auto& [i, ct] : d.contingency) {
    (void)ct;
    if (!d.req_interfaces.count(i))
      fail("contingency defined on non-required interface '" + i.str() + "'",
           {i});
  }

  for (const auto& t : d.ptypes)
    if (!d.domains.count(t))
      fail("no value domain declared for parameter type '" + t.str() + "'",
           {t});
  for (const auto& [t, dom] : d.domains) {
    (void)dom;
    if (!d.ptypes.count(t))
      fail("domain declared for undeclared parameter type '" + t.str() + "'",
           {t});
  }

  for (const auto& p : d.parameters)
    if (!d.value.count(p)) fail("value not total on '" + p.str() + "'", {p});
  for (const auto& [p, v] : d.value) {
    if (!d.parameters.count(p))
      fail("value defined on undeclared parameter '" + p.str() + "'", {p});
    const auto& dom = d.domains.at(d.container_type.at(p));
    if (!dom.contains(v))
      fail("value " + to_string(v) + " of parameter '" + p.str() +
               "' outside its declared domain " + dom.str(),
           {p});
  }

  return Configuration(std::move(d));
}

bool Configuration::is_composite(const Identifier& c) const {
  return std::any_of(d_.parent.begin(), d_.parent.end(),
                     [&](const auto& pr) { return pr.second == c; });
}

bool Configuration::is_top_level(const Identifier& c) const {
  return std::none_of(d_.parent.begin(), d_.parent.end(),
                      [&](const auto& pr) { return pr.first == c; });
}

std::vector<Identifier> Configuration::children_of(const Identifier& c) const {
  std::vector<Identifier> out;
  for (const auto& [child, par] : d_.parent)
    if (par == c) out.push_back(child);
  return out;
}

std::vector<Identifier> Configuration::parents_of(const Identifier& c) const {
  std::vector<Identifier> out;
  for (const auto& [child, par] : d_.parent)
    if (child == c) out.push_back(par);
  return out;
}

std::vector<Identifier> Configuration::interfaces_of(
    const Identifier& c) const {
  std::vector<Identifier> out;
  for (const auto& [x, cc] : d_.container)
    if (cc == c && is_interface(x)) out.push_back(x);
  return out;
}

std::vector<Identifier> Configuration::parameters_of(
    const Identifier& c) const {
  std::vector<Identifier> out;
  for (const auto& [x, cc] : d_.container)
    if (cc == c && d_.parameters.count(x)) out.push_back(x);
  return out;
}

bool Configuration::in_binding(const Identifier& i) const {
  if (d_.binding.count(i)) return true;
  return std::any_of(d_.binding.begin(), d_.binding.end(),
                     [&](const auto& b) { return b.second == i; });
}

bool Configuration::in_delegation(const Identifier& i) const {
  if (d_.delegate.count(i)) return true;
  return std::any_of(d_.delegate.begin(), d_.delegate.end(),
                     [&](const auto& del) { return del.second == i; });
}

std::string Configuration::canonical_key() const {
  std::ostringstream os;
  auto ids = [&](const char* tag, const std::set<Identifier>& s) {
    os << tag << ':';
    for (const auto& x : s) os << x.str() << ',';
    os << ';';
  };
  ids("C", d_.components);
  ids("RI", d_.req_interfaces);
  ids("PI", d_.prov_interfaces);
  ids("P", d_.parameters);
  ids("IT", d_.itypes);
  ids("PT", d_.ptypes);
  os << "CO:";
  for (const auto& [x, c] : d_.container) os << x.str() << '>' << c.str() << ',';
  os << ";CT:";
  for (const auto& [x, t] : d_.container_type)
    os << x.str() << '>' << t.str() << ',';
  os << ";PA:";
  for (const auto& [a, b] : d_.parent) os << a.str() << '>' << b.str() << ',';
  os << ";B:";
  for (const auto& [a, b] : d_.binding) os << a.str() << '>' << b.str() << ',';
  os << ";D:";
  for (const auto& [a, b] : d_.delegate) os << a.str() << '>' << b.str() << ',';
  os << ";S:";
  for (const auto& [c, s] : d_.state) os << c.str() << '=' << to_string(s) << ',';
  os << ";CG:";
  for (const auto& [i, ct] : d_.contingency)
    os << i.str() << '=' << to_string(ct) << ',';
  os << ";V:";
  for (const auto& [p, v] : d_.value) os << p.str() << '=' << to_string(v) << ',';
  os << ";DOM:";
  for (const auto& [t, dom] : d_.domains)
    os << t.str() << '=' << dom.str() << ',';
  os << ';';
  return os.str();
}

std::string Configuration::stable_hash() const {
  const std::string key = canonical_key();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Configuration new_configuration(const ConfigurationDeclaration& decl) {
  ConfigData d;

  for (const auto& comp : decl.components) {
    if (!d.components.insert(comp.id).second)
      fail("component '" + comp.id.str() + "' declared twice", {comp.id});
    d.state[comp.id] = comp.state;
    for (const auto& i : comp.interfaces) {
      if (i.provided)
        d.prov_interfaces.insert(i.id);
      else {
        d.req_interfaces.insert(i.id);
        d.contingency[i.id] = i.contingency;
      }
      if (d.container.count(i.id))
        fail("interface '" + i.id.str() + "' declared twice", {i.id});
      d.container[i.id] = comp.id;
      d.container_type[i.id] = i.itype;
      d.itypes.insert(i.itype);
    }
    for (const auto& p : comp.params) {
      if (d.container.count(p.id))
        fail("parameter '" + p.id.str() + "' declared twice", {p.id});
      d.parameters.insert(p.id);
      d.container[p.id] = comp.id;
      d.container_type[p.id] = p.ptype;
      auto [it, fresh] = d.domains.emplace(p.ptype, p.domain);
      if (!fresh && !(it->second == p.domain))
        fail("parameter type '" + p.ptype.str() +
                 "' declared with conflicting domains",
             {p.ptype});
      d.ptypes.insert(p.ptype);
      d.value[p.id] = p.initial;
    }
  }
  for (const auto& comp : decl.components)
    for (const auto& child : comp.children) {
      if (!d.components.count(child))
        fail("child '" + child.str() + "' of '" + comp.id.str() +
                 "' is not a declared component",
             {child, comp.id});
      d.parent.emplace(child, comp.id);
    }

  for (const auto& b : decl.bindings) {
    if (d.binding.count(b.prov))
      fail("provided interface '" + b.prov.str() + "' bound twice",
           {b.prov});
    d.binding[b.prov] = b.req;
  }
  for (const auto& del : decl.delegations) {
    if (d.delegate.count(del.inner))
      fail("interface '" + del.inner.str() + "' delegated twice",
           {del.inner});
    d.delegate[del.inner] = del.outer;
  }

  return Configuration::make(std::move(d));
}

bool config_equal(const Configuration& a, const Configuration& b) {
  return a == b;
}

}  // namespace archsubst
