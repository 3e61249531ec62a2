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

#include "beamform/codebook.hpp"

#include <numbers>
#include <string>

#include "beamform/errors.hpp"

namespace beamform {

namespace {

// Keeps the tabu list (one byte per solution) addressable.
constexpr int kMaxIndexBits = 30;

void check_range(const ColumnIndices& indices, const CodebookSpec& spec) {
  if (static_cast<int>(indices.size()) != spec.n_rf) {
    throw InvalidDimension("expected " + std::to_string(spec.n_rf) + " column indices, got " +
                           std::to_string(indices.size()));
  }
  for (int q : indices) {
    if (q < 1 || q > spec.angle_count()) {
      throw InvalidIndex("column index " + std::to_string(q) + " outside 1.." +
                         std::to_string(spec.angle_count()));
    }
  }
}

bool has_repeat(const ColumnIndices& indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] == indices[b]) return true;
    }
  }
  return false;
}

}  // namespace

void CodebookSpec::validate() const {
  if (bits < 1) throw InvalidParameter("quantization bits must be at least 1");
  if (n_rf < 1) throw InvalidDimension("a candidate needs at least one column");
  if (n_rf > kMaxRf) throw InvalidDimension("too many RF chains for the codebook");
  if (n_antennas < 1) throw InvalidDimension("codebook needs at least one antenna");
  if (bits * n_rf > kMaxIndexBits) {
    throw InvalidParameter("bits * n_rf = " + std::to_string(bits * n_rf) +
                           " exceeds the supported solution space");
  }
  if (n_rf > angle_count()) {
    throw Infeasible("no candidate with distinct columns exists: n_rf > 2^bits");
  }
  geometry.validate();
}

double angle_of_index(int n, int bits) {
  if (bits < 1 || bits > kMaxIndexBits) throw InvalidParameter("quantization bits out of range");
  const int count = 1 << bits;
  if (n < 1 || n > count) {
    throw InvalidIndex("angle index " + std::to_string(n) + " outside 1.." + std::to_string(count));
  }
  return 2.0 * std::numbers::pi * n / count;
}

bool is_valid(const ColumnIndices& indices, const CodebookSpec& spec) {
  if (static_cast<int>(indices.size()) != spec.n_rf) return false;
  for (int q : indices) {
    if (q < 1 || q > spec.angle_count()) return false;
  }
  return !has_repeat(indices);
}

CMatrix materialize(const ColumnIndices& indices, const CodebookSpec& spec) {
  check_range(indices, spec);
  CMatrix m(spec.n_antennas, spec.n_rf);
  for (int c = 0; c < spec.n_rf; ++c) {
    m.col(c) = ula_response(spec.n_antennas, angle_of_index(indices[c], spec.bits), spec.geometry);
  }
  return m;
}

SolutionIndex solution_index(const ColumnIndices& indices, const CodebookSpec& spec) {
  check_range(indices, spec);
  std::uint64_t p = 0;
  const auto radix = static_cast<std::uint64_t>(spec.angle_count());
  for (int q : indices) {
    p = p * radix + static_cast<std::uint64_t>(q - 1);
  }
  return SolutionIndex{p + 1};
}

ColumnIndices index_to_columns(SolutionIndex p, const CodebookSpec& spec) {
  if (p.value < 1 || p.value > spec.cardinality()) {
    throw InvalidIndex("solution index " + std::to_string(p.value) + " outside 1.." +
                       std::to_string(spec.cardinality()));
  }
  const auto radix = static_cast<std::uint64_t>(spec.angle_count());
  ColumnIndices indices(spec.n_rf);
  std::uint64_t rest = p.value - 1;
  for (int c = spec.n_rf - 1; c >= 0; --c) {
    indices[c] = static_cast<int>(rest % radix) + 1;
    rest /= radix;
  }
  return indices;
}

std::vector<Neighbor> neighbors(const ColumnIndices& indices, const CodebookSpec& spec) {
  check_range(indices, spec);
  std::vector<Neighbor> out;
  out.reserve(2 * indices.size());
  const int top = spec.angle_count();
  for (int u = 1; u <= 2 * spec.n_rf; ++u) {
    const int column = (u + 1) / 2 - 1;
    const int step = (u % 2 == 1) ? -1 : 1;
    int moved = indices[column] + step;
    if (moved < 1) moved = 1;
    if (moved > top) moved = top;
    if (moved == indices[column]) continue;
    ColumnIndices candidate = indices;
    candidate[column] = moved;
    if (has_repeat(candidate)) continue;
    out.push_back(Neighbor{u, column, moved, std::move(candidate)});
  }
  return out;
}

SteeringTable::SteeringTable(const CodebookSpec& spec) : spec_(spec) {
  spec_.validate();
  const int count = spec_.angle_count();
  columns_.resize(spec_.n_antennas, count);
  for (int n = 1; n <= count; ++n) {
    columns_.col(n - 1) =
        ula_response(spec_.n_antennas, angle_of_index(n, spec_.bits), spec_.geometry);
  }
  gram_ = columns_.adjoint() * columns_;
}

CMatrix SteeringTable::materialize(const ColumnIndices& indices) const {
  check_range(indices, spec_);
  CMatrix m(spec_.n_antennas, spec_.n_rf);
  for (int c = 0; c < spec_.n_rf; ++c) m.col(c) = column(indices[c]);
  return m;
}

SmallMatrix SteeringTable::gram(const ColumnIndices& indices) const {
  const auto n = static_cast<Eigen::Index>(indices.size());
  SmallMatrix g(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) g(a, b) = inner(indices[a], indices[b]);
  }
  return g;
}

}  // namespace beamform
