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

#include "archsubst/substitution.hpp"

#include <algorithm>
#include <deque>

namespace archsubst {

std::string_view to_string(SubstConstraintId id) {
  switch (id) {
    case SubstConstraintId::S1:
      return "S1";
    case SubstConstraintId::S2:
      return "S2";
    case SubstConstraintId::S3:
      return "S3";
    case SubstConstraintId::S4:
      return "S4";
    case SubstConstraintId::S5:
      return "S5";
    case SubstConstraintId::S6:
      return "S6";
    case SubstConstraintId::S7:
      return "S7";
    case SubstConstraintId::S8:
      return "S8";
    case SubstConstraintId::S9:
      return "S9";
    case SubstConstraintId::S10:
      return "S10";
    case SubstConstraintId::S11:
      return "S11";
    case SubstConstraintId::S12:
      return "S12";
  }
  return "?";
}

Expected<std::monostate, SubstMapError> validate_subst_map(
    const SubstMap& subst, const Configuration& pre,
    const Configuration& post) {
  std::set<Identifier> range;
  for (const auto& [from, to] : subst.mapping) {
    if (!range.insert(to).second)
      return SubstMapError{
          "substitute '" + to.str() + "' is the image of two components",
          {to}};
    if (!pre.has_component(from))
      return SubstMapError{"'" + from.str() +
                               "' is not a component of the pre-level "
                               "configuration",
                           {from}};
    if (!post.has_component(to))
      return SubstMapError{"'" + to.str() +
                               "' is not a component of the post-level "
                               "configuration",
                           {to}};
    if (pre.has_component(to))
      return SubstMapError{"substitute '" + to.str() +
                               "' already exists at the pre level; "
                               "substitutes must be new components",
                           {to}};
  }
  return std::monostate{};
}

namespace {

struct Ctx {
  const Configuration& post;  // c_R
  const Configuration& pre;   // c_A
  const SubstMap& subst;
  std::set<Identifier> surviving;  // Components_A ∩ Components_R
  std::set<Identifier> replaced;   // Components_A \ Components_R
  std::set<Identifier> fresh;      // Components_R \ Components_A
  std::set<Identifier> subst_range;
  SubstReport report;

  void add(SubstConstraintId id, std::vector<Identifier> w, std::string msg) {
    report.violations.push_back({id, std::move(w), std::move(msg)});
  }

  bool iface_in_both(const Identifier& i) const {
    return pre.is_interface(i) && post.is_interface(i);
  }
};

void check_s1(Ctx& x) {
  for (const auto& t : x.pre.itypes())
    if (!x.post.itypes().count(t))
      x.add(SubstConstraintId::S1, {t},
            "interface type '" + t.str() + "' disappeared");
  for (const auto& t : x.pre.ptypes()) {
    if (!x.post.ptypes().count(t)) {
      x.add(SubstConstraintId::S1, {t},
            "parameter type '" + t.str() + "' disappeared");
      continue;
    }
    if (!(x.pre.domains().at(t) == x.post.domains().at(t)))
      x.add(SubstConstraintId::S1, {t},
            "parameter type '" + t.str() + "' changed its value domain");
  }
  for (const auto& p : x.pre.parameters()) {
    if (!x.post.has_parameter(p)) continue;  // existence handled by S2/S8
    if (x.pre.container_type().at(p) != x.post.container_type().at(p))
      x.add(SubstConstraintId::S1, {p},
            "parameter '" + p.str() + "' changed its type");
    else if (!(x.pre.value().at(p) == x.post.value().at(p)))
      x.add(SubstConstraintId::S1, {p},
            "parameter '" + p.str() + "' changed its value (" +
                to_string(x.pre.value().at(p)) + " -> " +
                to_string(x.post.value().at(p)) + ")");
  }
}

void check_s2(Ctx& x) {
  for (const auto& [elem, comp] : x.pre.container()) {
    if (!x.surviving.count(comp)) continue;
    bool in_post = x.post.is_interface(elem) || x.post.has_parameter(elem);
    if (!in_post) {
      x.add(SubstConstraintId::S2, {elem, comp},
            "element '" + elem.str() + "' of surviving component '" +
                comp.str() + "' disappeared");
    } else if (x.post.container().at(elem) != comp) {
      x.add(SubstConstraintId::S2, {elem, comp},
            "element '" + elem.str() + "' moved from surviving component '" +
                comp.str() + "' to '" + x.post.container().at(elem).str() +
                "'");
    }
  }
  for (const auto& c : x.surviving)
    if (x.pre.state().at(c) != x.post.state().at(c))
      x.add(SubstConstraintId::S2, {c},
            "surviving component '" + c.str() + "' changed state");
}

void check_s3(Ctx& x) {
  for (const auto& i : x.pre.req_interfaces()) {
    if (x.post.is_provided(i)) {
      x.add(SubstConstraintId::S3, {i},
            "interface '" + i.str() + "' changed from required to provided");
      continue;
    }
    if (!x.post.is_required(i)) continue;
    if (x.pre.contingency().at(i) != x.post.contingency().at(i))
      x.add(SubstConstraintId::S3, {i},
            "interface '" + i.str() + "' changed contingency");
  }
  for (const auto& i : x.pre.prov_interfaces())
    if (x.post.is_required(i))
      x.add(SubstConstraintId::S3, {i},
            "interface '" + i.str() + "' changed from provided to required");
  for (const auto& i : x.pre.req_interfaces())
    if (x.iface_in_both(i) &&
        x.pre.container_type().at(i) != x.post.container_type().at(i))
      x.add(SubstConstraintId::S3, {i},
            "interface '" + i.str() + "' changed its type");
  for (const auto& i : x.pre.prov_interfaces())
    if (x.iface_in_both(i) &&
        x.pre.container_type().at(i) != x.post.container_type().at(i))
      x.add(SubstConstraintId::S3, {i},
            "interface '" + i.str() + "' changed its type");
}

void check_s4(Ctx& x) {
  for (const auto& [ip, ir] : x.pre.binding()) {
    if (!x.iface_in_both(ip) || !x.iface_in_both(ir)) continue;
    auto it = x.post.binding().find(ip);
    if (it == x.post.binding().end() || it->second != ir)
      x.add(SubstConstraintId::S4, {ip, ir},
            "old binding '" + ip.str() + "' -> '" + ir.str() +
                "' was not kept");
  }
  for (const auto& [in, out] : x.pre.delegate()) {
    if (!x.iface_in_both(in) || !x.iface_in_both(out)) continue;
    auto it = x.post.delegate().find(in);
    if (it == x.post.delegate().end() || it->second != out)
      x.add(SubstConstraintId::S4, {in, out},
            "old delegation '" + in.str() + "' -> '" + out.str() +
                "' was not kept");
  }
}

void check_s5(Ctx& x) {
  for (const auto& c : x.replaced) {
    auto it = x.subst.mapping.find(c);
    if (it == x.subst.mapping.end()) {
      x.add(SubstConstraintId::S5, {c},
            "component '" + c.str() +
                "' disappeared without a substitute");
    } else if (!x.post.has_component(it->second)) {
      x.add(SubstConstraintId::S5, {c, it->second},
            "substitute '" + it->second.str() + "' of '" + c.str() +
                "' is not present");
    }
  }
}

void check_s6(Ctx& x) {
  for (const auto& [c, s] : x.subst.mapping) {
    if (!x.pre.has_component(c) || !x.post.has_component(s)) continue;
    if (x.pre.state().at(c) != x.post.state().at(s))
      x.add(SubstConstraintId::S6, {c, s},
            "substitute '" + s.str() + "' is not in the state of '" + c.str() +
                "'");
    for (const auto& p : x.pre.parents_of(c)) {
      bool same = x.post.parent().count({s, p}) != 0;
      bool via_subst = false;
      auto it = x.subst.mapping.find(p);
      if (it != x.subst.mapping.end())
        via_subst = x.post.parent().count({s, it->second}) != 0;
      if (!same && !via_subst)
        x.add(SubstConstraintId::S6, {c, s, p},
              "substitute '" + s.str() + "' lost the parent '" + p.str() +
                  "' of '" + c.str() + "'");
    }
    if (x.pre.is_top_level(c) && !x.post.is_top_level(s))
      x.add(SubstConstraintId::S6, {c, s},
            "substitute '" + s.str() + "' of top-level '" + c.str() +
                "' is not top-level");
  }
}

void check_s7(Ctx& x) {
  for (const auto& c : x.replaced) {
    auto it = x.subst.mapping.find(c);
    if (it == x.subst.mapping.end() || !x.post.has_component(it->second))
      continue;  // S5 already reports this
    for (const auto& i : x.pre.interfaces_of(c)) {
      if (!x.post.is_interface(i))
        x.add(SubstConstraintId::S7, {i, c},
              "interface '" + i.str() + "' of replaced '" + c.str() +
                  "' is not supplied at the post level");
      else if (x.post.container().at(i) != it->second)
        x.add(SubstConstraintId::S7, {i, c, it->second},
              "interface '" + i.str() + "' of replaced '" + c.str() +
                  "' is not supplied by substitute '" + it->second.str() +
                  "'");
    }
  }
}

bool in_subtree(const Configuration& c, const Identifier& root,
                const Identifier& comp) {
  if (comp == root) return true;
  // Walk up from comp; the parent relation is acyclic on consistent inputs.
  std::deque<Identifier> todo{comp};
  std::set<Identifier> seen;
  while (!todo.empty()) {
    Identifier cur = todo.front();
    todo.pop_front();
    if (!seen.insert(cur).second) continue;
    for (const auto& p : c.parents_of(cur)) {
      if (p == root) return true;
      todo.push_back(p);
    }
  }
  return false;
}

void check_s8(Ctx& x) {
  for (const auto& c : x.replaced) {
    auto it = x.subst.mapping.find(c);
    if (it == x.subst.mapping.end() || !x.post.has_component(it->second))
      continue;
    for (const auto& p : x.pre.parameters_of(c)) {
      if (!x.post.has_parameter(p))
        x.add(SubstConstraintId::S8, {p, c},
              "parameter '" + p.str() + "' of replaced '" + c.str() +
                  "' disappeared");
      else if (!in_subtree(x.post, it->second, x.post.container().at(p)))
        x.add(SubstConstraintId::S8, {p, c, it->second},
              "parameter '" + p.str() + "' of replaced '" + c.str() +
                  "' is not on substitute '" + it->second.str() +
                  "' or a sub-component of it");
    }
  }
}

void check_s9(Ctx& x) {
  for (const auto& n : x.fresh) {
    if (x.subst_range.count(n)) continue;
    auto parents = x.post.parents_of(n);
    bool has_new_parent =
        std::any_of(parents.begin(), parents.end(),
                    [&](const Identifier& p) { return x.fresh.count(p) != 0; });
    if (!has_new_parent) {
      x.add(SubstConstraintId::S9, {n},
            "new component '" + n.str() + "' has no new parent");
      continue;
    }
    // Parent chain through new components must bottom out at a substitute.
    std::deque<Identifier> todo{n};
    std::set<Identifier> seen;
    bool reaches = false;
    while (!todo.empty() && !reaches) {
      Identifier cur = todo.front();
      todo.pop_front();
      if (!seen.insert(cur).second) continue;
      for (const auto& p : x.post.parents_of(cur)) {
        if (!x.fresh.count(p)) continue;
        if (x.subst_range.count(p)) {
          reaches = true;
          break;
        }
        todo.push_back(p);
      }
    }
    if (!reaches)
      x.add(SubstConstraintId::S9, {n},
            "parent chain of new component '" + n.str() +
                "' does not reach a substitute");
  }
}

void check_s10(Ctx& x) {
  for (const auto& i : x.post.req_interfaces())
    if (!x.pre.is_interface(i) &&
        !x.fresh.count(x.post.container().at(i)))
      x.add(SubstConstraintId::S10, {i, x.post.container().at(i)},
            "new interface '" + i.str() + "' lives on old component '" +
                x.post.container().at(i).str() + "'");
  for (const auto& i : x.post.prov_interfaces())
    if (!x.pre.is_interface(i) &&
        !x.fresh.count(x.post.container().at(i)))
      x.add(SubstConstraintId::S10, {i, x.post.container().at(i)},
            "new interface '" + i.str() + "' lives on old component '" +
                x.post.container().at(i).str() + "'");
}

void check_s11(Ctx& x) {
  for (const auto& p : x.post.parameters())
    if (!x.pre.has_parameter(p) && !x.fresh.count(x.post.container().at(p)))
      x.add(SubstConstraintId::S11, {p, x.post.container().at(p)},
            "new parameter '" + p.str() + "' lives on old component '" +
                x.post.container().at(p).str() + "'");
}

void check_s12(Ctx& x) {
  auto endpoint_new = [&](const Identifier& i) {
    return x.fresh.count(x.post.container().at(i)) != 0;
  };
  for (const auto& [ip, ir] : x.post.binding()) {
    auto it = x.pre.binding().find(ip);
    if (it != x.pre.binding().end() && it->second == ir) continue;  // old
    if (!endpoint_new(ip) && !endpoint_new(ir))
      x.add(SubstConstraintId::S12, {ip, ir},
            "new binding '" + ip.str() + "' -> '" + ir.str() +
                "' connects only old components");
  }
  for (const auto& [in, out] : x.post.delegate()) {
    auto it = x.pre.delegate().find(in);
    if (it != x.pre.delegate().end() && it->second == out) continue;
    if (!endpoint_new(in) && !endpoint_new(out))
      x.add(SubstConstraintId::S12, {in, out},
            "new delegation '" + in.str() + "' -> '" + out.str() +
                "' connects only old components");
  }
}

}  // namespace

Expected<SubstReport, SubstPreconditionError> check_subst(
    const Configuration& post, const Configuration& pre,
    const SubstMap& subst) {
  if (auto r = check_consistency(pre); !r.consistent())
    return SubstPreconditionError{true, std::move(r)};
  if (auto r = check_consistency(post); !r.consistent())
    return SubstPreconditionError{false, std::move(r)};

  Ctx x{post, pre, subst, {}, {}, {}, {}, {}};
  for (const auto& c : pre.components()) {
    if (post.has_component(c))
      x.surviving.insert(c);
    else
      x.replaced.insert(c);
  }
  for (const auto& c : post.components())
    if (!pre.has_component(c)) x.fresh.insert(c);
  for (const auto& [from, to] : subst.mapping) {
    (void)from;
    x.subst_range.insert(to);
  }

  check_s1(x);
  check_s2(x);
  check_s3(x);
  check_s4(x);
  check_s5(x);
  check_s6(x);
  check_s7(x);
  check_s8(x);
  check_s9(x);
  check_s10(x);
  check_s11(x);
  check_s12(x);

  return std::move(x.report);
}

}  // namespace archsubst
