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

#ifndef ARCHSUBST_GRAPH_HPP_
#define ARCHSUBST_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "archsubst/expected.hpp"
#include "archsubst/reconfig.hpp"

namespace archsubst {

/// Finite reachable fragment of the transition system: breadth-first closure
/// of apply over all enabled operations, nodes deduplicated by config_equal.
/// Node 0 is the initial configuration; node order is BFS discovery order and
/// never depends on any choice strategy.
struct Graph {
  struct Edge {
    std::size_t from;
    Identifier op;
    std::size_t to;
  };

  std::vector<Configuration> nodes;
  std::vector<Edge> edges;

  std::vector<const Edge*> edges_from(std::size_t node) const;
  bool terminal(std::size_t node) const;

  /// DOT export; nodes are labelled by a stable configuration hash.
  std::string to_dot() const;
};

struct BoundExceeded {
  std::size_t bound;
  std::string message;
};

Expected<Graph, BoundExceeded> reachable_graph(const ModelSpec& spec,
                                               std::size_t state_bound);

}  // namespace archsubst

#endif  // ARCHSUBST_GRAPH_HPP_
