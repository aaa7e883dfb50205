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

#include "archsubst/consistency.hpp"

#include <algorithm>
#include <map>

namespace archsubst {

std::string_view to_string(ConstraintId id) {
  switch (id) {
    case ConstraintId::CC1:
      return "CC1";
    case ConstraintId::CC2:
      return "CC2";
    case ConstraintId::CC3:
      return "CC3";
    case ConstraintId::CC4:
      return "CC4";
    case ConstraintId::CC5:
      return "CC5";
    case ConstraintId::CC6:
      return "CC6";
    case ConstraintId::CC7:
      return "CC7";
  }
  return "?";
}

namespace {

void add(ConsistencyReport& r, ConstraintId id, std::vector<Identifier> w,
         std::string msg) {
  r.violations.push_back({id, std::move(w), std::move(msg)});
}

// CC3: Kahn's algorithm on the parent relation; leftover nodes form cycles.
void check_cc3(const Configuration& c, ConsistencyReport& r) {
  std::map<Identifier, int> out_deg;  // child -> number of parents not removed
  std::map<Identifier, std::vector<Identifier>> children;
  for (const auto& comp : c.components()) out_deg[comp] = 0;
  for (const auto& [child, par] : c.parent()) {
    ++out_deg[child];
    children[par].push_back(child);
  }
  std::vector<Identifier> queue;
  for (const auto& [comp, deg] : out_deg)
    if (deg == 0) queue.push_back(comp);
  std::size_t removed = 0;
  while (!queue.empty()) {
    Identifier cur = queue.back();
    queue.pop_back();
    ++removed;
    for (const auto& ch : children[cur])
      if (--out_deg[ch] == 0) queue.push_back(ch);
  }
  if (removed != c.components().size()) {
    std::vector<Identifier> cyc;
    for (const auto& [comp, deg] : out_deg)
      if (deg > 0) cyc.push_back(comp);
    add(r, ConstraintId::CC3, cyc, "parent relation contains a cycle");
  }
}

}  // namespace

ConsistencyReport check_consistency(const Configuration& c) {
  ConsistencyReport r;

  // CC1
  for (const auto& comp : c.components()) {
    bool supplies = false;
    for (const auto& [i, cc] : c.container())
      if (cc == comp && c.is_provided(i)) {
        supplies = true;
        break;
      }
    if (!supplies)
      add(r, ConstraintId::CC1, {comp},
          "component '" + comp.str() + "' supplies no provided interface");
  }

  // CC2
  for (const auto& comp : c.components()) {
    if (!c.is_composite(comp)) continue;
    for (const auto& p : c.parameters_of(comp))
      add(r, ConstraintId::CC2, {comp, p},
          "composite '" + comp.str() + "' has parameter '" + p.str() + "'");
  }

  // CC3
  check_cc3(c, r);

  // CC4
  for (const auto& [ip, ir] : c.binding()) {
    const Identifier& cp = c.container().at(ip);
    const Identifier& cr = c.container().at(ir);
    std::vector<Identifier> w{ip, ir};
    if (c.container_type().at(ip) != c.container_type().at(ir)) {
      add(r, ConstraintId::CC4, w,
          "bound interfaces '" + ip.str() + "' and '" + ir.str() +
              "' have different types");
    }
    if (cp == cr) {
      add(r, ConstraintId::CC4, w,
          "bound interfaces '" + ip.str() + "' and '" + ir.str() +
              "' are supplied by the same component '" + cp.str() + "'");
    } else {
      // Common composite; top-level components share the virtual root.
      bool common = c.is_top_level(cp) && c.is_top_level(cr);
      if (!common) {
        auto pp = c.parents_of(cp);
        auto pr = c.parents_of(cr);
        common = std::any_of(pp.begin(), pp.end(), [&](const Identifier& x) {
          return std::find(pr.begin(), pr.end(), x) != pr.end();
        });
      }
      if (!common)
        add(r, ConstraintId::CC4, w,
            "containers of bound interfaces '" + ip.str() + "' and '" +
                ir.str() + "' are not sub-components of a common composite");
    }
  }

  // CC5
  for (const auto& [in, out] : c.delegate()) {
    (void)out;
    if (c.in_binding(in))
      add(r, ConstraintId::CC5, {in},
          "interface '" + in.str() +
              "' is both bound and the source of a delegation");
  }

  // CC6
  for (const auto& [in, out] : c.delegate()) {
    std::vector<Identifier> w{in, out};
    if (c.is_provided(in) != c.is_provided(out))
      add(r, ConstraintId::CC6, w,
          "delegation '" + in.str() + "' -> '" + out.str() +
              "' mixes provided and required interfaces");
    if (c.container_type().at(in) != c.container_type().at(out))
      add(r, ConstraintId::CC6, w,
          "delegation '" + in.str() + "' -> '" + out.str() +
              "' links interfaces of different types");
    const Identifier& ci = c.container().at(in);
    const Identifier& co = c.container().at(out);
    if (!c.parent().count({ci, co}))
      add(r, ConstraintId::CC6, w,
          "delegation '" + in.str() + "' -> '" + out.str() +
              "' does not go from a sub-component to its parent");
  }

  // CC7
  for (const auto& [comp, st] : c.state()) {
    if (st != CompState::Started) continue;
    for (const auto& i : c.interfaces_of(comp)) {
      if (!c.is_required(i)) continue;
      if (c.contingency().at(i) != Contingency::Mandatory) continue;
      if (!c.in_binding(i) && !c.in_delegation(i))
        add(r, ConstraintId::CC7, {comp, i},
            "started component '" + comp.str() +
                "' has unsatisfied mandatory required interface '" + i.str() +
                "'");
    }
  }

  return r;
}

bool is_consistent(const Configuration& c) {
  return check_consistency(c).consistent();
}

}  // namespace archsubst
