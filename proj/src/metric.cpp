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

#include "beamform/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beamform/errors.hpp"

namespace beamform {

namespace {

// det(C^H C) / prod(diag) below this is treated as rank deficient. Aliased
// steering vectors land around 1e-16; the closest distinct beams of practical
// codebooks stay above 1e-6.
constexpr double kSingularTolerance = 1e-9;

// Costs this far below 1 are roundoff; anything lower is a breakdown.
constexpr double kCostSlack = 1e-9;

void require_small(Eigen::Index rows, Eigen::Index cols) {
  if (rows > kMaxRf || cols > kMaxRf) {
    throw InvalidDimension("effective channel larger than " + std::to_string(kMaxRf) + "x" +
                           std::to_string(kMaxRf));
  }
}

}  // namespace

LinkBudget LinkBudget::from_snr_db(double snr_db) {
  return LinkBudget{std::pow(10.0, snr_db / 10.0), 1.0};
}

double LinkBudget::snr_db() const { return 10.0 * std::log10(rho / sigma2); }

void LinkBudget::validate() const {
  if (!(rho > 0.0) || !(sigma2 > 0.0)) {
    throw InvalidParameter("transmit power and noise variance must be positive");
  }
}

EffectiveChannel effective_channel(const ChannelMatrix& h, const CMatrix& precoder,
                                   const CMatrix& combiner) {
  if (precoder.rows() != h.nt() || combiner.rows() != h.nr()) {
    throw InvalidDimension("precoder/combiner row counts do not match the channel");
  }
  require_small(combiner.cols(), precoder.cols());
  return EffectiveChannel{SmallMatrix(combiner.adjoint() * (h.h() * precoder))};
}

double hermitian_det(const SmallMatrix& m) {
  switch (m.rows()) {
    case 0:
      return 1.0;
    case 1:
      return m(0, 0).real();
    case 2:
      return m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
    default:
      return m.partialPivLu().determinant().real();
  }
}

std::optional<double> try_cost_value(const SmallMatrix& g, const SmallMatrix& gram,
                                     const LinkBudget& budget) {
  const Eigen::Index n = g.rows();
  const double gram_det = hermitian_det(gram);
  double diag = 1.0;
  for (Eigen::Index a = 0; a < n; ++a) diag *= gram(a, a).real();
  if (!(gram_det > kSingularTolerance * diag)) return std::nullopt;

  // det(I + (rho/ns) R_n^{-1} g g^H) = det(C^H C + (rho/(ns sigma2)) g g^H) / det(C^H C)
  const double scale = budget.rho / (budget.sigma2 * static_cast<double>(n));
  SmallMatrix m(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      Complex acc = 0.0;
      for (Eigen::Index c = 0; c < g.cols(); ++c) acc += g(a, c) * std::conj(g(b, c));
      m(a, b) = gram(a, b) + scale * acc;
      if (b != a) m(b, a) = std::conj(m(a, b));
    }
  }
  return hermitian_det(m) / gram_det;
}

double cost(const EffectiveChannel& g, const CMatrix& combiner, const LinkBudget& budget, int ns,
            EvalCounter& counter) {
  budget.validate();
  if (g.g.rows() != ns || combiner.cols() != ns) {
    throw InvalidDimension("effective channel rows and combiner columns must equal ns");
  }
  counter.add();
  const SmallMatrix gram = combiner.adjoint() * combiner;
  const auto value = try_cost_value(g.g, gram, budget);
  if (!value) throw SingularCombiner("combiner columns are linearly dependent; R_n is singular");
  return *value;
}

double rate(double cost_value) {
  if (!(cost_value >= 1.0 - kCostSlack)) {
    throw DomainError("cost value " + std::to_string(cost_value) + " is below 1");
  }
  return std::log2(std::max(cost_value, 1.0));
}

EffectiveChannel update_column(const EffectiveChannel& g, const ChannelMatrix& h,
                               const CMatrix& combiner, const CVector& new_column, int position) {
  if (position < 0 || position >= g.g.cols()) throw InvalidDimension("column position out of range");
  if (new_column.size() != h.nt() || combiner.rows() != h.nr() ||
      combiner.cols() != g.g.rows()) {
    throw InvalidDimension("column update shapes do not conform");
  }
  EffectiveChannel out = g;
  out.g.col(position) = combiner.adjoint() * (h.h() * new_column);
  return out;
}

EffectiveChannel update_row(const EffectiveChannel& g, const ChannelMatrix& h,
                            const CMatrix& precoder, const CVector& new_column, int position) {
  if (position < 0 || position >= g.g.rows()) throw InvalidDimension("row position out of range");
  if (new_column.size() != h.nr() || precoder.rows() != h.nt() ||
      precoder.cols() != g.g.cols()) {
    throw InvalidDimension("row update shapes do not conform");
  }
  EffectiveChannel out = g;
  out.g.row(position) = (new_column.adjoint() * h.h()) * precoder;
  return out;
}

}  // namespace beamform
