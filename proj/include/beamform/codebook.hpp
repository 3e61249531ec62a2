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

#include <compare>
#include <cstdint>
#include <vector>

#include "beamform/channel.hpp"
#include "beamform/types.hpp"

namespace beamform {

// Beamsteering codebook of one link end: every candidate is n_rf steering
// columns, each aimed at one of 2^bits quantized angles 2 pi n / 2^bits.
struct CodebookSpec {
  int n_rf = 2;
  int bits = 4;
  int n_antennas = 64;
  ArrayGeometry geometry{};

  // Number of quantized angles per column, 2^bits.
  int angle_count() const { return 1 << bits; }
  // Number of column-index tuples, 2^(bits * n_rf). This is also the tabu list size.
  std::uint64_t cardinality() const { return std::uint64_t{1} << (bits * n_rf); }

  void validate() const;
};

// Per-column angle indices q_1..q_n_rf, each in 1..2^bits.
using ColumnIndices = std::vector<int>;

// Mixed-radix position p in 1..2^(bits * n_rf) of a column-index tuple.
struct SolutionIndex {
  std::uint64_t value = 1;

  friend auto operator<=>(const SolutionIndex&, const SolutionIndex&) = default;
};

double angle_of_index(int n, int bits);

// True when every index is in range and no two columns share an index.
bool is_valid(const ColumnIndices& indices, const CodebookSpec& spec);

CMatrix materialize(const ColumnIndices& indices, const CodebookSpec& spec);

SolutionIndex solution_index(const ColumnIndices& indices, const CodebookSpec& spec);
ColumnIndices index_to_columns(SolutionIndex p, const CodebookSpec& spec);

// One entry of a neighborhood. `slot` is the 1-based label u: column
// ceil(u/2) is decremented for odd u and incremented for even u.
struct Neighbor {
  int slot = 0;
  int column = 0;     // 0-based position of the changed column
  int new_index = 0;  // new angle index of that column
  ColumnIndices indices;
};

// Neighbors in slot order. Slots that clamp back onto `indices` or produce a
// repeated column index are left out; the remaining slots keep their labels.
std::vector<Neighbor> neighbors(const ColumnIndices& indices, const CodebookSpec& spec);

// Materialized steering columns for all 2^bits angle indices of a codebook,
// plus their pairwise inner products. Column n-1 holds index n.
class SteeringTable {
 public:
  explicit SteeringTable(const CodebookSpec& spec);

  const CodebookSpec& spec() const { return spec_; }
  const CMatrix& columns() const { return columns_; }
  auto column(int n) const { return columns_.col(n - 1); }
  // f(n_a)^H f(n_b)
  Complex inner(int n_a, int n_b) const { return gram_(n_a - 1, n_b - 1); }

  CMatrix materialize(const ColumnIndices& indices) const;
  // C^H C for the candidate with these column indices.
  SmallMatrix gram(const ColumnIndices& indices) const;

 private:
  CodebookSpec spec_;
  CMatrix columns_;
  CMatrix gram_;
};

}  // namespace beamform
