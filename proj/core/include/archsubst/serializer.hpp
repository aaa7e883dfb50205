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

#ifndef ARCHSUBST_SERIALIZER_HPP_
#define ARCHSUBST_SERIALIZER_HPP_

#include <string>

#include "archsubst/reconfig.hpp"
#include "archsubst/substitution.hpp"

namespace archsubst {

/// Renders a model in the canonical concrete syntax: components in identifier
/// order, then bindings, delegations and the reconfiguration catalogue.
/// Parsing the output yields an equal model, and re-serializing it yields the
/// same text (round-trip fixpoint).
std::string serialize_model(const ModelSpec& spec);

std::string serialize_substitution(const SubstMap& subst);

}  // namespace archsubst

#endif  // ARCHSUBST_SERIALIZER_HPP_
