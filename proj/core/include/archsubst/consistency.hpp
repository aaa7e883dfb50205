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

#ifndef ARCHSUBST_CONSISTENCY_HPP_
#define ARCHSUBST_CONSISTENCY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "archsubst/model.hpp"

namespace archsubst {

/// The fixed catalogue of architectural consistency constraints.
///
///   CC1  every component supplies at least one provided interface
///   CC2  composite components have no parameters
///   CC3  the parent relation is acyclic
///   CC4  bound interfaces: same type, different containers, containers
///        sub-components of a common composite (top-level components count
///        as children of an implicit virtual root)
///   CC5  an interface that is the source of a delegation takes part in no
///        binding, and vice versa (delegation targets are the composite's
///        public face and may be bound)
///   CC6  a delegation links a sub-component interface to a same-kind,
///        same-type interface of its parent
///   CC7  a component is started only if each mandatory required interface
///        it contains is bound or delegated
enum class ConstraintId { CC1, CC2, CC3, CC4, CC5, CC6, CC7 };

std::string_view to_string(ConstraintId id);

struct Violation {
  ConstraintId id;
  std::vector<Identifier> witness;
  std::string message;
};

struct ConsistencyReport {
  std::vector<Violation> violations;

  bool consistent() const { return violations.empty(); }
};

/// Evaluates the whole catalogue, in order CC1..CC7, without stopping at the
/// first violation.
ConsistencyReport check_consistency(const Configuration& c);

bool is_consistent(const Configuration& c);

}  // namespace archsubst

#endif  // ARCHSUBST_CONSISTENCY_HPP_
