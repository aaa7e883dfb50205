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

#ifndef ARCHSUBST_SUBSTITUTION_HPP_
#define ARCHSUBST_SUBSTITUTION_HPP_

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "archsubst/consistency.hpp"
#include "archsubst/expected.hpp"
#include "archsubst/model.hpp"

namespace archsubst {

/// Partial injective mapping from pre-level components to their post-level
/// substitutes. Substitutes are brand-new components of the post level.
struct SubstMap {
  std::map<Identifier, Identifier> mapping;

  bool empty() const { return mapping.empty(); }
};

struct SubstMapError {
  std::string message;
  std::vector<Identifier> ids;
};

/// Checks injectivity and the domain/range invariants against concrete
/// element sets (pre = c_A, post = c_R).
Expected<std::monostate, SubstMapError> validate_subst_map(
    const SubstMap& subst, const Configuration& pre,
    const Configuration& post);

/// The substitutability constraint catalogue. "Old" elements are those of
/// the pre level; "surviving" components exist at both levels; "replaced"
/// components exist only at the pre level; "new" elements exist only at the
/// post level.
///
///   S1   old parameter types keep their domains, old interface types
///        survive, and parameters present at both levels keep type and value
///   S2   elements contained in surviving components stay there, and
///        surviving components keep their state
///   S3   interfaces present at both levels keep kind, type and contingency
///   S4   old bindings and delegations whose endpoints survive are kept
///   S5   a component that disappears has a substitute that is present
///   S6   a substitute keeps the old state and the old parent, or the old
///        parent was substituted as well (top level stays top level)
///   S7   interfaces of a replaced component are supplied by its substitute
///   S8   parameters of a replaced component live on its substitute or on a
///        sub-component of the substitute
///   S9   a new non-substitute component has a new parent, and its parent
///        chain reaches a substitute
///   S10  new interfaces are contained in new components
///   S11  new parameters are contained in new components
///   S12  a new binding or delegation has an endpoint in a new component
enum class SubstConstraintId {
  S1,
  S2,
  S3,
  S4,
  S5,
  S6,
  S7,
  S8,
  S9,
  S10,
  S11,
  S12
};

std::string_view to_string(SubstConstraintId id);

struct SubstViolation {
  SubstConstraintId id;
  std::vector<Identifier> witness;
  std::string message;
};

struct SubstReport {
  std::vector<SubstViolation> violations;

  bool holds() const { return violations.empty(); }
};

struct SubstPreconditionError {
  bool pre_side;  // true when the pre-level configuration is inconsistent
  ConsistencyReport report;
};

/// Def.-4-style structural substitutability check between a post-level
/// configuration (c_R, `post`) and a pre-level one (c_A, `pre`). Both must be
/// consistent; evaluation of S1..S12 is exhaustive.
Expected<SubstReport, SubstPreconditionError> check_subst(
    const Configuration& post, const Configuration& pre,
    const SubstMap& subst);

}  // namespace archsubst

#endif  // ARCHSUBST_SUBSTITUTION_HPP_
