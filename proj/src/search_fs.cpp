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

#include "beamform/search_fs.hpp"

#include <limits>
#include <string>
#include <vector>

#include "beamform/errors.hpp"

namespace beamform {

namespace {

std::uint64_t arrangements(const CodebookSpec& spec) {
  std::uint64_t count = 1;
  const auto n = static_cast<std::uint64_t>(spec.angle_count());
  for (int k = 0; k < spec.n_rf; ++k) count *= n - static_cast<std::uint64_t>(k);
  return count;
}

// Valid candidates of a codebook in increasing solution-index order.
std::vector<ColumnIndices> valid_candidates(const CodebookSpec& spec) {
  std::vector<ColumnIndices> out;
  out.reserve(arrangements(spec));
  ColumnIndices q(spec.n_rf, 1);
  const int top = spec.angle_count();
  while (true) {
    if (is_valid(q, spec)) out.push_back(q);
    int c = spec.n_rf - 1;
    while (c >= 0 && q[c] == top) {
      q[c] = 1;
      --c;
    }
    if (c < 0) break;
    ++q[c];
  }
  return out;
}

}  // namespace

std::uint64_t fs_complexity(const CodebookSpec& spec_t, const CodebookSpec& spec_r) {
  spec_t.validate();
  spec_r.validate();
  return arrangements(spec_t) * arrangements(spec_r);
}

FsResult full_search(const ChannelMatrix& h, const CodebookSpec& spec_t,
                     const CodebookSpec& spec_r, const LinkBudget& budget,
                     std::uint64_t ceiling) {
  budget.validate();
  const std::uint64_t total = fs_complexity(spec_t, spec_r);
  if (total > ceiling) {
    throw BudgetExceeded("full search needs " + std::to_string(total) +
                         " evaluations, above the ceiling of " + std::to_string(ceiling));
  }
  if (spec_t.n_rf != spec_r.n_rf) throw InvalidDimension("both sides must use the same RF chain count");
  if (spec_t.n_antennas != h.nt() || spec_r.n_antennas != h.nr()) {
    throw InvalidDimension("codebook antenna counts do not match the channel");
  }

  const SteeringTable tx(spec_t);
  const SteeringTable rx(spec_r);
  // cross(j-1, i-1) = f_r(j)^H H f_t(i); every effective channel is a gather from it.
  const CMatrix cross = rx.columns().adjoint() * h.h() * tx.columns();
  const auto precoders = valid_candidates(spec_t);
  const auto combiners = valid_candidates(spec_r);
  const int n = spec_t.n_rf;

  FsResult best;
  best.best_cost = -std::numeric_limits<double>::infinity();
  std::size_t best_p = 0;
  std::size_t best_c = 0;
  bool found = false;
  std::uint64_t evals = 0;
  SmallMatrix g(n, n);

  for (std::size_t ci = 0; ci < combiners.size(); ++ci) {
    const ColumnIndices& c = combiners[ci];
    const SmallMatrix gram = rx.gram(c);
    for (std::size_t pi = 0; pi < precoders.size(); ++pi) {
      const ColumnIndices& p = precoders[pi];
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g(a, b) = cross(c[a] - 1, p[b] - 1);
      }
      ++evals;
      const auto value = try_cost_value(g, gram, budget);
      if (!value) continue;
      // Candidate lists are in solution-index order, so list positions compare like indices.
      if (!found || *value > best.best_cost ||
          (*value == best.best_cost && (pi < best_p || (pi == best_p && ci < best_c)))) {
        found = true;
        best.best_cost = *value;
        best_p = pi;
        best_c = ci;
      }
    }
  }
  if (!found) throw SingularCombiner("every combiner in the codebook is rank deficient");
  best.best_precoder = precoders[best_p];
  best.best_combiner = combiners[best_c];
  best.evals = evals;
  return best;
}

}  // namespace beamform
