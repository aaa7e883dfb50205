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

#ifndef ARCHSUBST_PARSER_HPP_
#define ARCHSUBST_PARSER_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "archsubst/reconfig.hpp"
#include "archsubst/simulation.hpp"
#include "archsubst/substitution.hpp"

namespace archsubst {

/// A source file held in memory. Line and column numbers are 1-based.
struct SourceText {
  std::string path;
  std::string text;

  /// Reads the whole file. Throws ParseError on I/O failure.
  static SourceText from_file(const std::string& path);
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, std::size_t line, std::size_t col,
             std::string message);

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t col_;
  std::string message_;
};

/// A parsed model before the consistency gate: the initial configuration is
/// well formed but may violate the consistency constraints.
struct RawModel {
  Configuration initial;
  std::vector<ReconfigurationDef> ops;
};

RawModel parse_model_raw(const SourceText& src);

/// Parses one level's model file (.arch): component blocks, top-level
/// bindings and delegations, and the reconfiguration catalogue. The result
/// is well formed and its initial configuration is consistent; violations of
/// either surface as ParseError. The grammar is documented in
/// docs/grammar.md.
ModelSpec parse_model(const SourceText& src);

/// Parses a substitution file (.subst) of `substitute Old -> New;` lines and
/// validates the map against the two initial configurations.
SubstMap parse_substitution(const SourceText& src, const ModelSpec& pre,
                            const ModelSpec& post);

/// An operation script for the Scripted strategy, with an optional expected
/// final outcome used by regression scenarios.
struct ScenarioScript {
  std::vector<Identifier> ops;
  std::optional<FinalKind> expect;
};

/// Parses a scenario file (.scn): whitespace-separated operation names,
/// optionally closed by `expect true|bot|budget`. The op list must be
/// non-empty.
ScenarioScript parse_scenario(const SourceText& src);

}  // namespace archsubst

#endif  // ARCHSUBST_PARSER_HPP_
