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

// Test fixtures shared by the unit and acceptance suites.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "beamform/codebook.hpp"
#include "beamform/probe.hpp"
#include "beamform/search_ts.hpp"

namespace fixture {

using beamform::ColumnIndices;

// Probe over an explicit cost function of the column indices.
class LandscapeProbe final : public beamform::SearchProbe {
 public:
  LandscapeProbe(beamform::CodebookSpec spec, std::function<double(const ColumnIndices&)> f)
      : spec_(spec), f_(std::move(f)) {}

  const beamform::CodebookSpec& spec() const override { return spec_; }

  beamform::Evaluated evaluate(const ColumnIndices& q, beamform::EvalCounter& counter) override {
    counter.add();
    return beamform::Evaluated{q, {}, f_(q)};
  }

  beamform::Evaluated evaluate_neighbor(const beamform::Evaluated&, const beamform::Neighbor& nb,
                                        beamform::EvalCounter& counter) override {
    counter.add();
    return beamform::Evaluated{nb.indices, {}, f_(nb.indices)};
  }

 private:
  beamform::CodebookSpec spec_;
  std::function<double(const ColumnIndices&)> f_;
};

// 3-bit, two-column landscape with a peak at {3,6} and a ring of good
// solutions {2,6} -> {2,5} -> {3,5} around it; everything else is flat.
inline double ring_landscape(const ColumnIndices& q) {
  static const std::map<ColumnIndices, double> values{
      {{3, 6}, 10.0}, {{2, 6}, 9.0}, {{3, 5}, 8.5}, {{2, 5}, 8.0}};
  const auto it = values.find(q);
  return it == values.end() ? 1.0 : it->second;
}

inline beamform::CodebookSpec ring_spec() { return beamform::CodebookSpec{2, 3, 8, {}}; }

// Conventional tabu search where the tabu object is the move (column,
// direction); only the reverse of the latest move is forbidden. Returns the
// sequence of solutions selected as starting points.
inline std::vector<ColumnIndices> move_tabu_walk(beamform::SearchProbe& probe, ColumnIndices start,
                                                 int steps) {
  beamform::EvalCounter counter;
  const auto& spec = probe.spec();
  beamform::Evaluated current = probe.evaluate(start, counter);
  double best = current.cost;
  int tabu_column = -1;
  int tabu_direction = 0;
  std::vector<ColumnIndices> visited;
  for (int i = 0; i < steps; ++i) {
    struct Move {
      beamform::Evaluated e;
      int column;
      int direction;
      beamform::SolutionIndex p;
    };
    std::vector<Move> moves;
    for (const auto& nb : beamform::neighbors(current.indices, spec)) {
      const int direction = nb.new_index > current.indices[nb.column] ? 1 : -1;
      moves.push_back(Move{probe.evaluate_neighbor(current, nb, counter), nb.column, direction,
                           beamform::solution_index(nb.indices, spec)});
    }
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      return a.e.cost != b.e.cost ? a.e.cost > b.e.cost : a.p < b.p;
    });
    const Move* chosen = nullptr;
    for (const auto& m : moves) {
      const bool tabu = m.column == tabu_column && m.direction == tabu_direction;
      if (!tabu || m.e.cost > best) {
        chosen = &m;
        break;
      }
    }
    if (chosen == nullptr) chosen = &moves.front();
    tabu_column = chosen->column;
    tabu_direction = -chosen->direction;
    best = std::max(best, chosen->e.cost);
    current = chosen->e;
    visited.push_back(current.indices);
  }
  return visited;
}

inline int max_visits(const std::vector<ColumnIndices>& walk) {
  std::map<ColumnIndices, int> count;
  int most = 0;
  for (const auto& q : walk) most = std::max(most, ++count[q]);
  return most;
}

}  // namespace fixture
