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

#include "beamform/probe.hpp"

#include "beamform/errors.hpp"

namespace beamform {

SideProbe::SideProbe(const ChannelMatrix& h, Side searched, const SteeringTable& table,
                     const CMatrix& fixed_other, const LinkBudget& budget)
    : side_(searched), table_(table), budget_(budget) {
  budget_.validate();
  const CodebookSpec& s = table_.spec();
  if (fixed_other.cols() != s.n_rf) {
    throw InvalidDimension("fixed side must have as many columns as the searched side");
  }
  if (side_ == Side::transmit) {
    if (fixed_other.rows() != h.nr() || s.n_antennas != h.nt()) {
      throw InvalidDimension("transmit probe shapes do not match the channel");
    }
    projected_ = fixed_other.adjoint() * (h.h() * table_.columns());
    fixed_gram_ = fixed_other.adjoint() * fixed_other;
  } else {
    if (fixed_other.rows() != h.nt() || s.n_antennas != h.nr()) {
      throw InvalidDimension("receive probe shapes do not match the channel");
    }
    projected_ = table_.columns().adjoint() * (h.h() * fixed_other);
  }
}

double SideProbe::score(const Evaluated& candidate) const {
  const auto value = side_ == Side::transmit
                         ? try_cost_value(candidate.g, fixed_gram_, budget_)
                         : try_cost_value(candidate.g, table_.gram(candidate.indices), budget_);
  return value ? *value : kInadmissible;
}

Evaluated SideProbe::evaluate(const ColumnIndices& indices, EvalCounter& counter) {
  const int n = table_.spec().n_rf;
  if (!is_valid(indices, table_.spec())) throw InvalidIndex("probe called with an invalid candidate");
  Evaluated out;
  out.indices = indices;
  out.g.resize(n, n);
  for (int k = 0; k < n; ++k) {
    if (side_ == Side::transmit) {
      out.g.col(k) = projected_.col(indices[k] - 1);
    } else {
      out.g.row(k) = projected_.row(indices[k] - 1);
    }
  }
  counter.add();
  out.cost = score(out);
  return out;
}

Evaluated SideProbe::evaluate_neighbor(const Evaluated& from, const Neighbor& neighbor,
                                       EvalCounter& counter) {
  Evaluated out;
  out.indices = neighbor.indices;
  out.g = from.g;
  if (side_ == Side::transmit) {
    out.g.col(neighbor.column) = projected_.col(neighbor.new_index - 1);
  } else {
    out.g.row(neighbor.column) = projected_.row(neighbor.new_index - 1);
  }
  counter.add();
  out.cost = score(out);
  return out;
}

}  // namespace beamform
