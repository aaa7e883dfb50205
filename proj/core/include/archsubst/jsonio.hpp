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

#ifndef ARCHSUBST_JSONIO_HPP_
#define ARCHSUBST_JSONIO_HPP_

#include <string>

#include "archsubst/consistency.hpp"
#include "archsubst/simulation.hpp"
#include "archsubst/substitution.hpp"

namespace archsubst {

/// One JSON line per step, e.g.
/// {"step":0,"op":"AddLogger","class":"new","verdict":"bot_p"}
std::string json_step_line(const TraceStep& step);

/// Closing JSON line of a verdict stream, e.g.
/// {"final":"bot","reason":"structural","witness":["CacheHandler"]}
std::string json_final_line(const VerdictTrace& trace);

std::string json_consistency(const ConsistencyReport& report);

std::string json_subst(const SubstReport& report);

std::string json_oracle(const OracleResult& result);

}  // namespace archsubst

#endif  // ARCHSUBST_JSONIO_HPP_
