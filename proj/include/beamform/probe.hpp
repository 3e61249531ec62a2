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

#include <limits>

#include "beamform/channel.hpp"
#include "beamform/codebook.hpp"
#include "beamform/metric.hpp"

namespace beamform {

// Cost assigned to candidates whose combiner columns alias onto the same
// steering vector (singular R_n). Such candidates can be walked through but
// never become the best solution.
inline constexpr double kInadmissible = -std::numeric_limits<double>::infinity();

// A candidate of the searched side together with the effective channel it
// produces and its cost.
struct Evaluated {
  ColumnIndices indices;
  SmallMatrix g;
  double cost = kInadmissible;
};

// What a one-sided search may observe: the cost of a full candidate, or of a
// neighbor derived from an already evaluated candidate. Every call is one
// cost evaluation and is tallied on `counter`.
class SearchProbe {
 public:
  virtual ~SearchProbe() = default;

  virtual const CodebookSpec& spec() const = 0;
  virtual Evaluated evaluate(const ColumnIndices& indices, EvalCounter& counter) = 0;
  virtual Evaluated evaluate_neighbor(const Evaluated& from, const Neighbor& neighbor,
                                      EvalCounter& counter) = 0;
};

enum class Side { transmit, receive };

// Effective-channel probe for searching one side while the other side's
// matrix is held fixed. Transmit: the combiner is fixed and neighbors change
// one column of g. Receive: the precoder is fixed and neighbors change one row
// of g along with the noise Gram matrix.
class SideProbe final : public SearchProbe {
 public:
  SideProbe(const ChannelMatrix& h, Side searched, const SteeringTable& table,
            const CMatrix& fixed_other, const LinkBudget& budget);

  const CodebookSpec& spec() const override { return table_.spec(); }
  Side side() const { return side_; }

  Evaluated evaluate(const ColumnIndices& indices, EvalCounter& counter) override;
  Evaluated evaluate_neighbor(const Evaluated& from, const Neighbor& neighbor,
                              EvalCounter& counter) override;

 private:
  double score(const Evaluated& candidate) const;

  Side side_;
  const SteeringTable& table_;
  LinkBudget budget_;
  // Transmit: C^H H f_t(n) in column n-1. Receive: f_r(n)^H H P in row n-1.
  CMatrix projected_;
  SmallMatrix fixed_gram_;
};

}  // namespace beamform
