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
#include <optional>

#include "beamform/channel.hpp"
#include "beamform/types.hpp"

namespace beamform {

// Transmit power and noise variance, both linear. Only rho / sigma2 enters the cost.
struct LinkBudget {
  double rho = 1.0;
  double sigma2 = 1.0;

  static LinkBudget from_snr_db(double snr_db);
  double snr_db() const;
  void validate() const;
};

// C^H H P, of shape nr_rf x nt_rf.
struct EffectiveChannel {
  SmallMatrix g;
};

// Number of cost-function evaluations performed by one search run.
class EvalCounter {
 public:
  void add(std::uint64_t n = 1) { count_ += n; }
  std::uint64_t value() const { return count_; }
  EvalCounter& operator+=(const EvalCounter& other) {
    count_ += other.count_;
    return *this;
  }

 private:
  std::uint64_t count_ = 0;
};

EffectiveChannel effective_channel(const ChannelMatrix& h, const CMatrix& precoder,
                                   const CMatrix& combiner);

// det(I_ns + (rho/ns) R_n^{-1} g g^H) with R_n = sigma2 C^H C. Counts one
// evaluation. Throws SingularCombiner when C^H C is numerically singular.
double cost(const EffectiveChannel& g, const CMatrix& combiner, const LinkBudget& budget, int ns,
            EvalCounter& counter);

// log2 of a cost value; throws DomainError below 1.
double rate(double cost_value);

// Effective channel after replacing precoder column `position` with `new_column`.
EffectiveChannel update_column(const EffectiveChannel& g, const ChannelMatrix& h,
                               const CMatrix& combiner, const CVector& new_column, int position);

// Effective channel after replacing combiner column `position` with `new_column`;
// only row `position` of g changes.
EffectiveChannel update_row(const EffectiveChannel& g, const ChannelMatrix& h,
                            const CMatrix& precoder, const CVector& new_column, int position);

// Low-level evaluation shared by the searches. `gram` is C^H C. Returns
// nullopt when the noise covariance is singular. Does not count.
std::optional<double> try_cost_value(const SmallMatrix& g, const SmallMatrix& gram,
                                     const LinkBudget& budget);

// Real determinant of a Hermitian matrix of size at most kMaxRf.
double hermitian_det(const SmallMatrix& m);

}  // namespace beamform
