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

#ifndef ARCHSUBST_SIMULATION_HPP_
#define ARCHSUBST_SIMULATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "archsubst/expected.hpp"
#include "archsubst/graph.hpp"
#include "archsubst/reconfig.hpp"
#include "archsubst/substitution.hpp"

namespace archsubst {

/// Four-valued runtime verdicts, ordered BOT < BOT_P < TOP_P < TOP.
/// The potential values mean "not violated yet".
enum class B4Verdict { Bot, BotP, TopP, Top };

std::string_view to_string(B4Verdict v);

enum class OpClass { Shared, New, None };

std::string_view to_string(OpClass c);

enum class BotReason { Structural, DeadlockIntroduced, StrictSimulationBroken };

std::string_view to_string(BotReason r);

enum class FinalKind { ReturnedTrue, ReturnedFalse, BudgetExhausted };

struct TraceStep {
  std::size_t index;
  std::optional<Identifier> op;
  OpClass cls = OpClass::None;
  B4Verdict verdict = B4Verdict::TopP;
  std::string note;
};

/// Output of one on-the-fly run: the per-step verdict stream plus the final
/// outcome. Bot can only be the final verdict.
struct VerdictTrace {
  std::vector<TraceStep> steps;
  FinalKind final = FinalKind::BudgetExhausted;
  std::optional<BotReason> reason;         // ReturnedFalse only
  std::vector<Identifier> witness;         // ReturnedFalse only
  std::optional<B4Verdict> last_verdict;   // BudgetExhausted only
  std::string message;

  bool ended_false() const { return final == FinalKind::ReturnedFalse; }
};

struct LoadOptions {
  /// Keep name-shared operations whose definitions disagree (they are
  /// still driven simultaneously, as the on-the-fly check requires).
  bool lenient_shared = false;
};

/// A pre/post pair of reconfiguration models linked by a substitution map.
/// Shared operations are identified by name; their definitions must agree up
/// to renaming the substituted components, unless loaded leniently.
class PairedSystem {
 public:
  using LoadOptions = archsubst::LoadOptions;

  struct LoadError {
    std::string message;
    std::vector<Identifier> ids;
  };

  static Expected<PairedSystem, LoadError> load(ModelSpec pre, ModelSpec post,
                                                SubstMap subst,
                                                const LoadOptions& opts = {});

  const ModelSpec& pre() const { return pre_; }
  const ModelSpec& post() const { return post_; }
  const SubstMap& subst() const { return subst_; }
  const std::set<Identifier>& shared_ops() const { return shared_ops_; }
  const std::set<Identifier>& new_ops() const { return new_ops_; }
  /// Shared-by-name operations whose definitions disagree (lenient mode).
  const std::vector<Identifier>& mismatched_ops() const {
    return mismatched_;
  }

 private:
  PairedSystem(ModelSpec pre, ModelSpec post, SubstMap subst)
      : pre_(std::move(pre)), post_(std::move(post)), subst_(std::move(subst)) {}

  ModelSpec pre_;
  ModelSpec post_;
  SubstMap subst_;
  std::set<Identifier> shared_ops_;
  std::set<Identifier> new_ops_;
  std::vector<Identifier> mismatched_;
};

/// Callback invoked as each step verdict is produced (live streaming).
using StepObserver = std::function<void(const TraceStep&)>;

/// On-the-fly substitutability check: drives the post level by the chosen
/// strategy, mirrors shared operations on the pre level, and emits a B4
/// verdict per step. Returns Bot (with a reason) on violation, TopP when
/// both levels deadlock, and BudgetExhausted after max_steps iterations.
/// The result domain excludes Top.
Expected<VerdictTrace, StrategyError> run_semi_algorithm(
    const PairedSystem& ps, Strategy& strategy, std::size_t max_steps,
    const StepObserver& observer = {});

/// The Def.-3 clause that disqualified a configuration pair.
enum class ClauseId { Structural, Strict, Stuttering, Divergence, Deadlock };

std::string_view to_string(ClauseId c);

struct OracleResult {
  bool simulated = false;
  std::size_t pre_states = 0;
  std::size_t post_states = 0;
  std::size_t related_pairs = 0;
  /// Why the initial pair fell out of the relation, when not simulated.
  std::optional<ClauseId> failing_clause;
};

/// Bounded exhaustive check: builds both reachable graphs, then computes the
/// greatest substitutability-based simulation by fixpoint (seeded by the
/// structural, deadlock and divergence clauses; refined by the strict and
/// stuttering clauses). Divergence uses the all-paths reading: a post state
/// that can reach a cycle of new operations through new operations only is
/// excluded.
Expected<OracleResult, BoundExceeded> oracle_check(const PairedSystem& ps,
                                                   std::size_t state_bound);

/// Self-check harness: every semi-algorithm run ending in Bot must be
/// confirmed non-simulated by the oracle.
struct ValidationReport {
  struct Run {
    std::uint64_t seed;
    FinalKind final;
    std::optional<BotReason> reason;
  };
  std::vector<Run> runs;
  OracleResult oracle;
  std::size_t bot_runs = 0;
  std::vector<std::uint64_t> contradictions;  // seeds where Bot vs simulated

  bool consistent() const { return contradictions.empty(); }
};

Expected<ValidationReport, BoundExceeded> cross_validate(
    const PairedSystem& ps, const std::vector<std::uint64_t>& seeds,
    std::size_t max_steps, std::size_t state_bound);

}  // namespace archsubst

#endif  // ARCHSUBST_SIMULATION_HPP_
