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
#include <vector>

#include "beamform/channel.hpp"
#include "beamform/codebook.hpp"
#include "beamform/metric.hpp"
#include "beamform/search_ts.hpp"

namespace beamform {

struct TurboParams {
  int k_iterations = 4;
  TsParams ts_params_tx{};
  TsParams ts_params_rx{};
  // Seed each round's searches with the previous round's solution for that
  // side. Off reproduces plain cold restarts every round.
  bool warm_start = true;

  void validate() const;
};

struct TurboResult {
  ColumnIndices precoder;
  ColumnIndices combiner;
  double cost = 0.0;
  double rate = 0.0;
  std::uint64_t evals_total = 0;  // neighborhood evaluations, comparable to ts_complexity
  std::uint64_t start_evals = 0;  // one per restart, tracked separately
  int message_rounds = 0;
  std::vector<double> per_round_rates;
};

// K rounds of: combiner search with the precoder fixed, then precoder search
// with the new combiner fixed. Both searches see the channel only through
// effective-channel probes.
TurboResult turbo_search(const ChannelMatrix& h, const CodebookSpec& spec_t,
                         const CodebookSpec& spec_r, const LinkBudget& budget,
                         const TurboParams& params);

// Worst-case evaluation budget (2 nt_rf max_iter M + 2 nr_rf max_iter M) K.
std::uint64_t ts_complexity(const TurboParams& params, const CodebookSpec& spec_t,
                            const CodebookSpec& spec_r);

}  // namespace beamform
