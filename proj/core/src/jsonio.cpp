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

#include "archsubst/jsonio.hpp"

#include <json.hpp>

namespace archsubst {

namespace {

using nlohmann::json;

json ids_array(const std::vector<Identifier>& ids) {
  json arr = json::array();
  for (const auto& i : ids) arr.push_back(i.str());
  return arr;
}

}  // namespace

std::string json_step_line(const TraceStep& step) {
  json line;
  line["step"] = step.index;
  line["op"] = step.op ? step.op->str() : "";
  line["class"] = std::string(to_string(step.cls));
  line["verdict"] = std::string(to_string(step.verdict));
  return line.dump();
}

std::string json_final_line(const VerdictTrace& trace) {
  json line;
  switch (trace.final) {
    case FinalKind::ReturnedTrue:
      line["final"] = "top_p";
      break;
    case FinalKind::ReturnedFalse:
      line["final"] = "bot";
      line["reason"] = std::string(to_string(*trace.reason));
      line["witness"] = ids_array(trace.witness);
      break;
    case FinalKind::BudgetExhausted:
      line["final"] = "budget_exhausted";
      if (trace.last_verdict)
        line["last_verdict"] = std::string(to_string(*trace.last_verdict));
      break;
  }
  return line.dump();
}

std::string json_consistency(const ConsistencyReport& report) {
  json out;
  out["consistent"] = report.consistent();
  json arr = json::array();
  for (const auto& v : report.violations) {
    json item;
    item["id"] = std::string(to_string(v.id));
    item["witness"] = ids_array(v.witness);
    item["message"] = v.message;
    arr.push_back(std::move(item));
  }
  out["violations"] = std::move(arr);
  return out.dump(2);
}

std::string json_subst(const SubstReport& report) {
  json out;
  out["holds"] = report.holds();
  json arr = json::array();
  for (const auto& v : report.violations) {
    json item;
    item["id"] = std::string(to_string(v.id));
    item["witness"] = ids_array(v.witness);
    item["message"] = v.message;
    arr.push_back(std::move(item));
  }
  out["violations"] = std::move(arr);
  return out.dump(2);
}

std::string json_oracle(const OracleResult& result) {
  json out;
  out["simulated"] = result.simulated;
  out["pre_states"] = result.pre_states;
  out["post_states"] = result.post_states;
  out["related_pairs"] = result.related_pairs;
  if (result.failing_clause)
    out["failing_clause"] = std::string(to_string(*result.failing_clause));
  return out.dump(2);
}

}  // namespace archsubst
