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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "beamform/codebook.hpp"
#include "beamform/metric.hpp"
#include "beamform/probe.hpp"

namespace beamform {

struct TsParams {
  int max_iter = 500;  // iteration cap
  int max_len = 100;   // stop after this many consecutive non-improving steps
  int m_restarts = 1;  // number of stratified initial solutions

  void validate() const;
};

// Search state for one restart. The tabu list is indexed by solution index
// minus one; entries of candidates with repeated columns are set at
// construction and never cleared.
struct TabuState {
  std::vector<std::uint8_t> tabu;
  int flag = 0;
  int iterations = 0;
  Evaluated current;
  Evaluated best;
  EvalCounter neighbor_evals;
  EvalCounter start_evals;

  bool is_tabu(SolutionIndex p) const { return tabu[p.value - 1] != 0; }
};

// Builds a fresh state at `start` and evaluates the start once (tallied on
// start_evals, not on neighbor_evals).
TabuState init_tabu_state(const ColumnIndices& start, SearchProbe& probe);

enum class Selection {
  aspiration,   // beat the best-so-far
  non_tabu,     // tabu bit was clear
  after_reset,  // every neighbor was blocked; the neighborhood's tabu bits were cleared
};

struct StepOutcome {
  int slot = 0;
  SolutionIndex selected;
  Selection via = Selection::non_tabu;
  bool was_tabu = false;
  bool improved = false;
  int evaluated = 0;
};

// One iteration: evaluate the neighborhood of `current`, pick the
// best-ranked admissible neighbor and update tabu bits, best-so-far and flag.
StepOutcome ts_step(TabuState& state, SearchProbe& probe);

struct TsResult {
  ColumnIndices best;
  double cost = kInadmissible;
  std::uint64_t evals = 0;        // neighborhood evaluations
  std::uint64_t start_evals = 0;  // one per restart
  int iterations = 0;
};

using StepObserver = std::function<void(const TabuState&, const StepOutcome&)>;

// Runs ts_step until max_iter iterations or flag == max_len.
TsResult ts_search(const ColumnIndices& start, SearchProbe& probe, const TsParams& params,
                   const StepObserver& observer = {});

// M valid starts at solution indices round((i - 1/2) 2^(bits n_rf) / M),
// each moved forward (with wrap-around) to the next valid candidate.
std::vector<ColumnIndices> initial_solutions(const CodebookSpec& spec, int m);

// Best of ts_search over the stratified starts. A warm start replaces the
// stratified start closest to it in solution index.
TsResult ts_multistart(SearchProbe& probe, const TsParams& params,
                       const std::optional<ColumnIndices>& warm_start = std::nullopt);

}  // namespace beamform
