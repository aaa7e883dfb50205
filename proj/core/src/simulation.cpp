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

#include "archsubst/simulation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace archsubst {

std::string_view to_string(B4Verdict v) {
  switch (v) {
    case B4Verdict::Bot:
      return "bot";
    case B4Verdict::BotP:
      return "bot_p";
    case B4Verdict::TopP:
      return "top_p";
    case B4Verdict::Top:
      return "top";
  }
  return "?";
}

std::string_view to_string(OpClass c) {
  switch (c) {
    case OpClass::Shared:
      return "shared";
    case OpClass::New:
      return "new";
    case OpClass::None:
      return "none";
  }
  return "?";
}

std::string_view to_string(BotReason r) {
  switch (r) {
    case BotReason::Structural:
      return "structural";
    case BotReason::DeadlockIntroduced:
      return "deadlock-introduced";
    case BotReason::StrictSimulationBroken:
      return "strict-simulation-broken";
  }
  return "?";
}

std::string_view to_string(ClauseId c) {
  switch (c) {
    case ClauseId::Structural:
      return "structural";
    case ClauseId::Strict:
      return "strict-simulation";
    case ClauseId::Stuttering:
      return "stuttering";
    case ClauseId::Divergence:
      return "divergence";
    case ClauseId::Deadlock:
      return "deadlock";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Expected<PairedSystem, PairedSystem::LoadError> PairedSystem::load(
    ModelSpec pre, ModelSpec post, SubstMap subst, const LoadOptions& opts) {
  if (auto v = validate_subst_map(subst, pre.initial(), post.initial());
      !v.ok())
    return LoadError{"invalid substitution map: " + v.error().message,
                     v.error().ids};

  PairedSystem ps(std::move(pre), std::move(post), std::move(subst));
  auto pre_names = ps.pre_.op_names();
  for (const auto& op : ps.post_.ops()) {
    if (pre_names.count(op.name))
      ps.shared_ops_.insert(op.name);
    else
      ps.new_ops_.insert(op.name);
  }

  for (const auto& name : ps.shared_ops_) {
    const ReconfigurationDef* a = ps.pre_.find(name);
    const ReconfigurationDef* r = ps.post_.find(name);
    if (!a->renamed(ps.subst_.mapping).structurally_equal(*r))
      ps.mismatched_.push_back(name);
  }
  if (!ps.mismatched_.empty() && !opts.lenient_shared) {
    std::string msg =
        "shared operation(s) differ between the two levels (after renaming "
        "substituted components):";
    for (const auto& n : ps.mismatched_) msg += " '" + n.str() + "'";
    return LoadError{std::move(msg), ps.mismatched_};
  }
  return ps;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Identifier> subst_witness(const SubstReport& report) {
  std::vector<Identifier> out;
  for (const auto& v : report.violations)
    for (const auto& w : v.witness)
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  return out;
}

std::string subst_message(const SubstReport& report) {
  std::string out;
  for (const auto& v : report.violations) {
    if (!out.empty()) out += "; ";
    out += "[" + std::string(to_string(v.id)) + "] " + v.message;
  }
  return out;
}

}  // namespace

Expected<VerdictTrace, StrategyError> run_semi_algorithm(
    const PairedSystem& ps, Strategy& strategy, std::size_t max_steps,
    const StepObserver& observer) {
  Configuration c_r = ps.post().initial();
  Configuration c_a = ps.pre().initial();
  VerdictTrace trace;
  auto emit = [&](TraceStep s) {
    if (observer) observer(s);
    trace.steps.push_back(std::move(s));
  };
  auto budget = [&]() {
    trace.final = FinalKind::BudgetExhausted;
    trace.last_verdict = trace.steps.empty()
                             ? std::optional<B4Verdict>{}
                             : std::optional<B4Verdict>{
                                   trace.steps.back().verdict};
    trace.message = "step budget exhausted before a final verdict";
    return trace;
  };

  std::size_t steps_taken = 0;
  while (true) {
    auto subst_check = check_subst(c_r, c_a, ps.subst());
    const SubstReport* report = subst_check.ok() ? &subst_check.value() : nullptr;
    if (!report || !report->holds()) {
      trace.final = FinalKind::ReturnedFalse;
      trace.reason = BotReason::Structural;
      if (report) {
        trace.witness = subst_witness(*report);
        trace.message = subst_message(*report);
      } else {
        trace.message = "configuration became inconsistent";
      }
      return trace;
    }

    auto e_r = enabled(c_r, ps.post());
    auto e_a = enabled(c_a, ps.pre());
    if (e_r.empty() && e_a.empty()) {
      trace.final = FinalKind::ReturnedTrue;
      trace.message = "both levels deadlocked with all clauses satisfied";
      return trace;
    }
    if (e_r.empty()) {
      trace.final = FinalKind::ReturnedFalse;
      trace.reason = BotReason::DeadlockIntroduced;
      trace.witness = e_a;
      trace.message =
          "post level deadlocked while the pre level can still move";
      return trace;
    }

    if (steps_taken >= max_steps) return budget();

    auto picked = strategy.pick(e_r);
    if (!picked.ok()) return picked.error();
    if (!picked.value()) return budget();
    const Identifier& ope = *picked.value();

    auto next_r = apply(c_r, *ps.post().find(ope));
    assert(next_r.ok());
    c_r = std::move(next_r).value();

    if (ps.new_ops().count(ope)) {
      emit({steps_taken, ope, OpClass::New, B4Verdict::BotP,
            "new operation: potential stuttering trouble or divergence"});
    } else if (std::find(e_a.begin(), e_a.end(), ope) != e_a.end()) {
      auto next_a = apply(c_a, *ps.pre().find(ope));
      assert(next_a.ok());
      c_a = std::move(next_a).value();
      emit({steps_taken, ope, OpClass::Shared, B4Verdict::TopP,
            "shared operation applied at both levels"});
    } else {
      trace.final = FinalKind::ReturnedFalse;
      trace.reason = BotReason::StrictSimulationBroken;
      trace.witness = {ope};
      trace.message = "shared operation '" + ope.str() +
                      "' is enabled after substitution but not before";
      return trace;
    }
    ++steps_taken;
  }
}

// ---------------------------------------------------------------------------

namespace {

// Nodes of the post graph from which an infinite run of new operations
// exists: backward closure, over new-op edges, of the new-op cycles.
std::vector<char> divergent_states(const Graph& g,
                                   const std::set<Identifier>& new_ops) {
  std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (const auto& e : g.edges) {
    if (!new_ops.count(e.op)) continue;
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }

  // Iteratively strip nodes with no outgoing new-op edge; survivors can
  // prolong a new-op run forever, i.e. reach a new-op cycle.
  std::vector<std::size_t> out_deg(n, 0);
  for (std::size_t v = 0; v < n; ++v) out_deg[v] = fwd[v].size();
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (out_deg[v] == 0) queue.push_back(v);
  std::vector<char> alive(n, 1);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    alive[v] = 0;
    for (std::size_t u : bwd[v]) {
      // Count edges u->v once each; duplicates are fine, the degree drops
      // exactly per stored edge.
      if (alive[u] && --out_deg[u] == 0) queue.push_back(u);
    }
  }

  std::vector<char> div(n, 0);
  std::deque<std::size_t> frontier;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) {
      div[v] = 1;
      frontier.push_back(v);
    }
  while (!frontier.empty()) {
    std::size_t v = frontier.front();
    frontier.pop_front();
    for (std::size_t u : bwd[v])
      if (!div[u]) {
        div[u] = 1;
        frontier.push_back(u);
      }
  }
  return div;
}

}  // namespace

Expected<OracleResult, BoundExceeded> oracle_check(const PairedSystem& ps,
                                                   std::size_t state_bound) {
  auto g_r = reachable_graph(ps.post(), state_bound);
  if (!g_r.ok()) return g_r.error();
  auto g_a = reachable_graph(ps.pre(), state_bound);
  if (!g_a.ok()) return g_a.error();
  const Graph& gr = g_r.value();
  const Graph& ga = g_a.value();
  const std::size_t nr = gr.nodes.size();
  const std::size_t na = ga.nodes.size();

  std::vector<std::map<Identifier, std::size_t>> succ_r(nr), succ_a(na);
  for (const auto& e : gr.edges) succ_r[e.from][e.op] = e.to;
  for (const auto& e : ga.edges) succ_a[e.from][e.op] = e.to;
  std::vector<char> terminal_r(nr, 1), terminal_a(na, 1);
  for (const auto& e : gr.edges) terminal_r[e.from] = 0;
  for (const auto& e : ga.edges) terminal_a[e.from] = 0;

  std::vector<char> div = divergent_states(gr, ps.new_ops());

  enum class Reason : char { None, Structural, Deadlock, Divergence, Strict,
                             Stuttering };
  std::vector<char> rel(nr * na, 0);
  std::vector<Reason> why(nr * na, Reason::None);
  auto at = [&](std::size_t r, std::size_t a) { return r * na + a; };

  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t a = 0; a < na; ++a) {
      auto sc = check_subst(gr.nodes[r], ga.nodes[a], ps.subst());
      if (!sc.ok() || !sc.value().holds()) {
        why[at(r, a)] = Reason::Structural;
      } else if (terminal_r[r] && !terminal_a[a]) {
        why[at(r, a)] = Reason::Deadlock;
      } else if (div[r]) {
        why[at(r, a)] = Reason::Divergence;
      } else {
        rel[at(r, a)] = 1;
      }
    }
  }

  // The removal loop only ever shrinks the relation.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t a = 0; a < na; ++a) {
        if (!rel[at(r, a)]) continue;
        Reason drop = Reason::None;
        for (const auto& [ope, r2] : succ_r[r]) {
          if (ps.new_ops().count(ope)) {
            if (!rel[at(r2, a)]) {
              drop = Reason::Stuttering;
              break;
            }
          } else {
            auto it = succ_a[a].find(ope);
            if (it == succ_a[a].end() || !rel[at(r2, it->second)]) {
              drop = Reason::Strict;
              break;
            }
          }
        }
        if (drop != Reason::None) {
          rel[at(r, a)] = 0;
          why[at(r, a)] = drop;
          changed = true;
        }
      }
    }
  }

  OracleResult res;
  res.pre_states = na;
  res.post_states = nr;
  res.related_pairs =
      static_cast<std::size_t>(std::count(rel.begin(), rel.end(), char(1)));
  res.simulated = rel[at(0, 0)] != 0;
  if (!res.simulated) {
    switch (why[at(0, 0)]) {
      case Reason::Structural:
        res.failing_clause = ClauseId::Structural;
        break;
      case Reason::Deadlock:
        res.failing_clause = ClauseId::Deadlock;
        break;
      case Reason::Divergence:
        res.failing_clause = ClauseId::Divergence;
        break;
      case Reason::Strict:
        res.failing_clause = ClauseId::Strict;
        break;
      case Reason::Stuttering:
        res.failing_clause = ClauseId::Stuttering;
        break;
      case Reason::None:
        break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

Expected<ValidationReport, BoundExceeded> cross_validate(
    const PairedSystem& ps, const std::vector<std::uint64_t>& seeds,
    std::size_t max_steps, std::size_t state_bound) {
  auto oracle = oracle_check(ps, state_bound);
  if (!oracle.ok()) return oracle.error();

  ValidationReport report;
  report.oracle = oracle.value();
  for (auto seed : seeds) {
    RandomStrategy strategy(seed);
    auto run = run_semi_algorithm(ps, strategy, max_steps);
    assert(run.ok());  // the random strategy never errors
    const VerdictTrace& trace = run.value();
    report.runs.push_back({seed, trace.final, trace.reason});
    if (trace.ended_false()) {
      ++report.bot_runs;
      if (report.oracle.simulated) report.contradictions.push_back(seed);
    }
  }
  return report;
}

}  // namespace archsubst
