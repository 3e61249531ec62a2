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

#include "beamform/channel.hpp"
#include "beamform/codebook.hpp"
#include "beamform/metric.hpp"

namespace beamform {

// Default cap on full-search evaluations. Large enough for 5-bit codebooks with
// two RF chains (984064 pairs), small enough to refuse 6-bit runs unless asked.
inline constexpr std::uint64_t kDefaultFsCeiling = 1'000'000;

struct FsResult {
  ColumnIndices best_precoder;
  ColumnIndices best_combiner;
  double best_cost = 0.0;
  std::uint64_t evals = 0;
};

// Ordered distinct-column candidates per side, multiplied across sides:
// 2^Bt (2^Bt - 1) ... (2^Bt - nt_rf + 1) x (same for the receive side).
std::uint64_t fs_complexity(const CodebookSpec& spec_t, const CodebookSpec& spec_r);

// Exhaustive joint search over every valid precoder/combiner pair. Pairs whose
// combiner is rank deficient are counted but cannot win. Ties go to the
// smallest (precoder index, combiner index).
FsResult full_search(const ChannelMatrix& h, const CodebookSpec& spec_t,
                     const CodebookSpec& spec_r, const LinkBudget& budget,
                     std::uint64_t ceiling = kDefaultFsCeiling);

}  // namespace beamform
