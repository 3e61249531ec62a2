// Copyright 2026 The beamform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "beamform/search_ts.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "beamform/errors.hpp"

namespace beamform {

void TsParams::validate() const {
  if (max_iter < 1) throw InvalidParameter("max_iter must be at least 1");
  // max_len >= max_iter is accepted; the stagnation stop then never fires first.
  if (max_len < 1) throw InvalidParameter("max_len must be at least 1");
  if (m_restarts < 1) throw InvalidParameter("the number of restarts must be at least 1");
}

TabuState init_tabu_state(const ColumnIndices& start, SearchProbe& probe) {
  const CodebookSpec& spec = probe.spec();
  if (!is_valid(start, spec)) throw InvalidIndex("tabu search start is not a valid candidate");
  TabuState state;
  const std::uint64_t card = spec.cardinality();
  state.tabu.assign(card, 0);
  const auto radix = static_cast<std::uint64_t>(spec.angle_count());
  std::array<std::uint64_t, kMaxRf> digits{};
  for (std::uint64_t p = 0; p < card; ++p) {
    std::uint64_t rest = p;
    for (int c = 0; c < spec.n_rf; ++c) {
      digits[c] = rest % radix;
      rest /= radix;
    }
    for (int a = 0; a < spec.n_rf && state.tabu[p] == 0; ++a) {
      for (int b = a + 1; b < spec.n_rf; ++b) {
        if (digits[a] == digits[b]) {
          state.tabu[p] = 1;
          break;
        }
      }
    }
  }
  state.current = probe.evaluate(start, state.start_evals);
  state.best = state.current;
  return state;
}

StepOutcome ts_step(TabuState& state, SearchProbe& probe) {
  const CodebookSpec& spec = probe.spec();
  const auto hood = neighbors(state.current.indices, spec);
  if (hood.empty()) throw DegenerateNeighborhood("current solution has no admissible neighbors");

  struct Ranked {
    Evaluated candidate;
    SolutionIndex p;
    int slot;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(hood.size());
  for (const Neighbor& nb : hood) {
    ranked.push_back(Ranked{probe.evaluate_neighbor(state.current, nb, state.neighbor_evals),
                            solution_index(nb.indices, spec), nb.slot});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.candidate.cost != b.candidate.cost) return a.candidate.cost > b.candidate.cost;
    return a.p < b.p;
  });

  StepOutcome outcome;
  outcome.evaluated = static_cast<int>(ranked.size());
  const double best_cost = state.best.cost;

  const Ranked* chosen = nullptr;
  for (const Ranked& r : ranked) {
    if (r.candidate.cost > best_cost) {
      chosen = &r;
      outcome.via = Selection::aspiration;
      break;
    }
    if (!state.is_tabu(r.p)) {
      chosen = &r;
      outcome.via = Selection::non_tabu;
      break;
    }
  }
  if (chosen == nullptr) {
    // Neighbors are always valid candidates, so this never clears a permanent entry.
    for (const Ranked& r : ranked) state.tabu[r.p.value - 1] = 0;
    chosen = &ranked.front();
    outcome.via = Selection::after_reset;
    outcome.was_tabu = true;
  } else {
    outcome.was_tabu = state.is_tabu(chosen->p);
  }

  outcome.slot = chosen->slot;
  outcome.selected = chosen->p;
  outcome.improved = chosen->candidate.cost > best_cost;
  if (outcome.improved) {
    state.tabu[chosen->p.value - 1] = 0;
    state.best = chosen->candidate;
    state.flag = 0;
  } else {
    state.tabu[chosen->p.value - 1] = 1;
    ++state.flag;
  }
  state.current = chosen->candidate;
  ++state.iterations;
  return outcome;
}

TsResult ts_search(const ColumnIndices& start, SearchProbe& probe, const TsParams& params,
                   const StepObserver& observer) {
  params.validate();
  TabuState state = init_tabu_state(start, probe);
  while (state.iterations < params.max_iter && state.flag < params.max_len) {
    const StepOutcome outcome = ts_step(state, probe);
    if (observer) observer(state, outcome);
  }
  return TsResult{state.best.indices, state.best.cost, state.neighbor_evals.value(),
                  state.start_evals.value(), state.iterations};
}

std::vector<ColumnIndices> initial_solutions(const CodebookSpec& spec, int m) {
  spec.validate();
  if (m < 1) throw InvalidParameter("the number of initial solutions must be at least 1");
  const std::uint64_t card = spec.cardinality();
  std::vector<ColumnIndices> starts;
  starts.reserve(m);
  for (int i = 1; i <= m; ++i) {
    const double target = (i - 0.5) * static_cast<double>(card) / m;
    auto p = static_cast<std::uint64_t>(std::max<long long>(1, std::llround(target)));
    p = std::min(p, card);
    ColumnIndices q = index_to_columns(SolutionIndex{p}, spec);
    std::uint64_t tried = 1;
    while (!is_valid(q, spec)) {
      if (++tried > card) throw Infeasible("codebook has no valid candidate");
      p = p == card ? 1 : p + 1;
      q = index_to_columns(SolutionIndex{p}, spec);
    }
    starts.push_back(std::move(q));
  }
  return starts;
}

TsResult ts_multistart(SearchProbe& probe, const TsParams& params,
                       const std::optional<ColumnIndices>& warm_start) {
  params.validate();
  const CodebookSpec& spec = probe.spec();
  auto starts = initial_solutions(spec, params.m_restarts);
  if (warm_start) {
    const auto warm = solution_index(*warm_start, spec).value;
    std::size_t nearest = 0;
    std::uint64_t nearest_gap = 0;
    for (std::size_t i = 0; i < starts.size(); ++i) {
      const auto p = solution_index(starts[i], spec).value;
      const std::uint64_t gap = p > warm ? p - warm : warm - p;
      if (i == 0 || gap < nearest_gap) {
        nearest = i;
        nearest_gap = gap;
      }
    }
    starts[nearest] = *warm_start;
  }

  TsResult best;
  std::uint64_t evals = 0;
  std::uint64_t start_evals = 0;
  int iterations = 0;
  bool have = false;
  for (const ColumnIndices& start : starts) {
    TsResult r = ts_search(start, probe, params);
    evals += r.evals;
    start_evals += r.start_evals;
    iterations += r.iterations;
    const bool better =
        !have || r.cost > best.cost ||
        (r.cost == best.cost && solution_index(r.best, spec) < solution_index(best.best, spec));
    if (better) {
      best = std::move(r);
      have = true;
    }
  }
  best.evals = evals;
  best.start_evals = start_evals;
  best.iterations = iterations;
  return best;
}

}  // namespace beamform
