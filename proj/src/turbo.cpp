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

#include "beamform/turbo.hpp"

#include <optional>

#include "beamform/errors.hpp"
#include "beamform/probe.hpp"

namespace beamform {

void TurboParams::validate() const {
  if (k_iterations < 1) throw InvalidParameter("the number of turbo iterations must be at least 1");
  ts_params_tx.validate();
  ts_params_rx.validate();
}

TurboResult turbo_search(const ChannelMatrix& h, const CodebookSpec& spec_t,
                         const CodebookSpec& spec_r, const LinkBudget& budget,
                         const TurboParams& params) {
  params.validate();
  budget.validate();
  if (spec_t.n_rf != spec_r.n_rf) throw InvalidDimension("both sides must use the same RF chain count");
  const SteeringTable tx(spec_t);
  const SteeringTable rx(spec_r);

  TurboResult result;
  ColumnIndices precoder = initial_solutions(spec_t, params.ts_params_tx.m_restarts).front();
  std::optional<ColumnIndices> combiner;

  for (int k = 1; k <= params.k_iterations; ++k) {
    const bool warm = params.warm_start && k >= 2;

    SideProbe rx_probe(h, Side::receive, rx, tx.materialize(precoder), budget);
    const TsResult rc = ts_multistart(rx_probe, params.ts_params_rx,
                                      warm ? combiner : std::nullopt);
    combiner = rc.best;

    SideProbe tx_probe(h, Side::transmit, tx, rx.materialize(*combiner), budget);
    const TsResult rp = ts_multistart(tx_probe, params.ts_params_tx,
                                      warm ? std::optional<ColumnIndices>(precoder) : std::nullopt);
    precoder = rp.best;

    result.evals_total += rc.evals + rp.evals;
    result.start_evals += rc.start_evals + rp.start_evals;
    result.cost = rp.cost;
    result.per_round_rates.push_back(rate(rp.cost));
  }
  result.precoder = precoder;
  result.combiner = *combiner;
  result.rate = result.per_round_rates.back();
  result.message_rounds = params.k_iterations;
  return result;
}

std::uint64_t ts_complexity(const TurboParams& params, const CodebookSpec& spec_t,
                            const CodebookSpec& spec_r) {
  params.validate();
  auto side = [](const CodebookSpec& spec, const TsParams& ts) {
    return 2ULL * static_cast<std::uint64_t>(spec.n_rf) * static_cast<std::uint64_t>(ts.max_iter) *
           static_cast<std::uint64_t>(ts.m_restarts);
  };
  return (side(spec_t, params.ts_params_tx) + side(spec_r, params.ts_params_rx)) *
         static_cast<std::uint64_t>(params.k_iterations);
}

}  // namespace beamform
