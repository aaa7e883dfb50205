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

#include "archsubst/graph.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace archsubst {

std::vector<const Graph::Edge*> Graph::edges_from(std::size_t node) const {
  std::vector<const Edge*> out;
  for (const auto& e : edges)
    if (e.from == node) out.push_back(&e);
  return out;
}

bool Graph::terminal(std::size_t node) const {
  for (const auto& e : edges)
    if (e.from == node) return false;
  return true;
}

std::string Graph::to_dot() const {
  std::ostringstream os;
  os << "digraph reachable {\n";
  os << "  rankdir=LR;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << nodes[i].stable_hash() << "\"];\n";
  for (const auto& e : edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.op.str()
       << "\"];\n";
  os << "}\n";
  return os.str();
}

Expected<Graph, BoundExceeded> reachable_graph(const ModelSpec& spec,
                                               std::size_t state_bound) {
  Graph g;
  std::unordered_map<std::string, std::size_t> index;
  std::deque<std::size_t> frontier;

  g.nodes.push_back(spec.initial());
  index.emplace(spec.initial().canonical_key(), 0);
  if (g.nodes.size() > state_bound)
    return BoundExceeded{state_bound, "state bound exceeded"};
  frontier.push_back(0);

  while (!frontier.empty()) {
    std::size_t cur = frontier.front();
    frontier.pop_front();
    // Catalogue order keeps the discovery order deterministic.
    for (const auto& op : spec.ops()) {
      auto next = apply(g.nodes[cur], op);
      if (!next.ok()) continue;
      Configuration target = std::move(next).value();
      std::string key = target.canonical_key();
      auto it = index.find(key);
      std::size_t tgt;
      if (it == index.end()) {
        tgt = g.nodes.size();
        g.nodes.push_back(std::move(target));
        index.emplace(std::move(key), tgt);
        if (g.nodes.size() > state_bound)
          return BoundExceeded{state_bound,
                               "state bound of " +
                                   std::to_string(state_bound) +
                                   " states exceeded"};
        frontier.push_back(tgt);
      } else {
        tgt = it->second;
      }
      g.edges.push_back({cur, op.name, tgt});
    }
  }
  return g;
}

}  // namespace archsubst
