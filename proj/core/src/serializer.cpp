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

#include "archsubst/serializer.hpp"

#include <sstream>

namespace archsubst {

namespace {

std::string domain_str(const ParamDomain& dom) {
  switch (dom.kind) {
    case ParamDomain::Kind::Boolean:
      return "bool";
    case ParamDomain::Kind::IntRange:
      return "[" + std::to_string(dom.lo) + ".." + std::to_string(dom.hi) +
             "]";
    case ParamDomain::Kind::Enumeration: {
      std::string out = "{";
      for (std::size_t i = 0; i < dom.literals.size(); ++i) {
        if (i) out += ", ";
        out += dom.literals[i];
      }
      return out + "}";
    }
  }
  return "?";
}

void emit_interface(std::ostream& os, const InterfaceDecl& iface,
                    const std::string& indent) {
  os << indent << (iface.provided ? "provides " : "requires ")
     << iface.id.name << " : " << iface.itype.name;
  if (!iface.provided && iface.contingency == Contingency::Optional)
    os << " optional";
  os << ";\n";
}

void emit_param(std::ostream& os, const ParamDecl& p,
                const std::string& indent) {
  os << indent << "param " << p.id.name << " : " << p.ptype.name << " in "
     << domain_str(p.domain) << " = " << to_string(p.initial) << ";\n";
}

void emit_component_decl(std::ostream& os, const ComponentDecl& comp,
                         const std::string& indent) {
  std::string inner = indent + "  ";
  os << "component " << comp.id.name << " {\n";
  for (const auto& i : comp.interfaces) emit_interface(os, i, inner);
  for (const auto& p : comp.params) emit_param(os, p, inner);
  for (const auto& c : comp.children) os << inner << "child " << c.name
                                         << ";\n";
  os << inner << "state "
     << (comp.state == CompState::Started ? "started" : "stopped") << ";\n";
  os << indent << "}\n";
}

/// Rebuilds a declaration from the canonical relation tables, so the output
/// order never depends on how the configuration was first written down.
ComponentDecl decl_of(const Configuration& c, const Identifier& comp) {
  ComponentDecl decl;
  decl.id = comp;
  for (const auto& i : c.interfaces_of(comp)) {
    InterfaceDecl iface;
    iface.id = i;
    iface.itype = c.container_type().at(i);
    iface.provided = c.is_provided(i);
    if (!iface.provided) iface.contingency = c.contingency().at(i);
    decl.interfaces.push_back(std::move(iface));
  }
  for (const auto& p : c.parameters_of(comp)) {
    ParamDecl param;
    param.id = p;
    param.ptype = c.container_type().at(p);
    param.domain = c.domains().at(param.ptype);
    param.initial = c.value().at(p);
    decl.params.push_back(std::move(param));
  }
  decl.children = c.children_of(comp);
  decl.state = c.state().at(comp);
  return decl;
}

void emit_edit(std::ostream& os, const PrimitiveEdit& e,
               const std::string& indent) {
  if (const auto* inst = std::get_if<EditInstantiate>(&e)) {
    os << indent << "new ";
    emit_component_decl(os, inst->decl, indent);
    return;
  }
  os << indent << edit_str(e) << ";\n";
}

}  // namespace

std::string serialize_model(const ModelSpec& spec) {
  const Configuration& c = spec.initial();
  std::ostringstream os;

  for (const auto& comp : c.components()) {
    emit_component_decl(os, decl_of(c, comp), "");
    os << "\n";
  }

  for (const auto& [prov, req] : c.binding())
    os << "bind " << c.container().at(prov).name << "." << prov.name << " -> "
       << c.container().at(req).name << "." << req.name << ";\n";
  for (const auto& [inner, outer] : c.delegate())
    os << "delegate " << c.container().at(inner).name << "." << inner.name
       << " -> " << c.container().at(outer).name << "." << outer.name
       << ";\n";
  if (!c.binding().empty() || !c.delegate().empty()) os << "\n";

  for (const auto& op : spec.ops()) {
    os << "reconfiguration " << op.name.name << " when " << op.guard->str()
       << " {\n";
    for (const auto& e : op.body) emit_edit(os, e, "  ");
    os << "}\n\n";
  }
  return os.str();
}

std::string serialize_substitution(const SubstMap& subst) {
  std::ostringstream os;
  for (const auto& [from, to] : subst.mapping)
    os << "substitute " << from.name << " -> " << to.name << ";\n";
  return os.str();
}

}  // namespace archsubst
