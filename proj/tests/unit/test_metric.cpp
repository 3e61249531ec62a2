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

#include <cmath>

#include "beamform/codebook.hpp"
#include "beamform/errors.hpp"
#include "beamform/metric.hpp"
#include "beamform/probe.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace beamform;

namespace {

ChannelMatrix random_channel(Rng& rng, int nr, int nt, int l = 3) {
  return assemble_channel(SystemDims::symmetric_rf(nt, nr, 1), draw_paths(l, rng), ArrayGeometry{});
}

CMatrix random_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

}  // namespace

TEST_CASE("effective_channel examples") {
  const CMatrix p = materialize({2, 9}, CodebookSpec{2, 4, 64, {}});
  const CMatrix c = materialize({3, 11}, CodebookSpec{2, 4, 16, {}});
  const ChannelMatrix zero(CMatrix::Zero(16, 64));
  CHECK(effective_channel(zero, p, c).g.norm() == 0.0);

  // Rank-one channel with unit gain: g factors into two array-gain terms.
  const double aoa = 1.1;
  const double aod = 0.4;
  PathSet one{{Complex(1.0, 0.0)}, {aod}, {aoa}};
  const ChannelMatrix h = assemble_channel(SystemDims::symmetric_rf(64, 16, 1), one, ArrayGeometry{});
  const CVector fr = ula_response(16, 2.3, ArrayGeometry{});
  const CVector ft = ula_response(64, 0.2, ArrayGeometry{});
  const auto g = effective_channel(h, ft, fr);
  const Complex expected = std::sqrt(64.0 * 16.0) * fr.dot(ula_response(16, aoa, ArrayGeometry{})) *
                           ula_response(64, aod, ArrayGeometry{}).dot(ft);
  CHECK(std::abs(g.g(0, 0) - expected) < 1e-10);

  CHECK_THROWS_AS(effective_channel(h, fr, fr), InvalidDimension);
}

TEST_CASE("cost examples and counter") {
  EvalCounter counter;
  const CMatrix c = materialize({1, 6}, CodebookSpec{2, 3, 16, {}});
  const LinkBudget budget = LinkBudget::from_snr_db(0.0);
  CHECK(cost(EffectiveChannel{SmallMatrix::Zero(2, 2)}, c, budget, 2, counter) ==
        doctest::Approx(1.0));
  CHECK(counter.value() == 1);

  const CMatrix single = ula_response(16, 0.3, ArrayGeometry{});
  SmallMatrix g(1, 1);
  g(0, 0) = Complex(0.6, -0.8);
  const LinkBudget b{3.0, 1.5};
  CHECK(cost(EffectiveChannel{g}, single, b, 1, counter) == doctest::Approx(1.0 + 2.0 * 1.0));
  CHECK(counter.value() == 2);

  const CMatrix duplicate = materialize({3, 3}, CodebookSpec{2, 3, 16, {}});
  CHECK_THROWS_AS(cost(EffectiveChannel{SmallMatrix::Zero(2, 2)}, duplicate, budget, 2, counter),
                  SingularCombiner);
  // Indices 1 and 3 of a 3-bit grid have equal sine, hence identical steering vectors.
  const CMatrix aliased = materialize({1, 3}, CodebookSpec{2, 3, 16, {}});
  CHECK_THROWS_AS(cost(EffectiveChannel{SmallMatrix::Zero(2, 2)}, aliased, budget, 2, counter),
                  SingularCombiner);
  CHECK_THROWS_AS(cost(EffectiveChannel{SmallMatrix::Zero(2, 2)}, c, budget, 1, counter),
                  InvalidDimension);
}

TEST_CASE("cost agrees with the eigenvalue route on random instances") {
  Rng rng(77);
  std::uniform_real_distribution<double> snr(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const CMatrix g = random_matrix(rng, n, n);
    const CMatrix c = random_matrix(rng, 12, n);
    const LinkBudget budget{std::pow(10.0, snr(rng) / 10.0), 0.5 + (trial % 3)};
    EvalCounter counter;
    const double value = cost(EffectiveChannel{SmallMatrix(g)}, c, budget, n, counter);
    const double ref = oracle::cost_by_eigenvalues(g, c, budget.rho, budget.sigma2);
    CHECK(value == doctest::Approx(ref).epsilon(1e-10));
    CHECK(value >= 1.0);
  }
}

TEST_CASE("rate") {
  CHECK(rate(1.0) == 0.0);
  CHECK(rate(2.0) == doctest::Approx(1.0));
  CHECK(rate(1.0 - 1e-13) == 0.0);
  CHECK_THROWS_AS(rate(0.5), DomainError);
  CHECK_THROWS_AS(rate(std::nan("")), DomainError);
}

TEST_CASE("rate does not decrease with transmit power") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const ChannelMatrix h = random_channel(rng, 16, 64);
    const CMatrix p = materialize({1 + trial % 16, 1 + (trial + 5) % 16}, CodebookSpec{2, 4, 64, {}});
    const ColumnIndices cq{1 + trial % 7, 9 + trial % 8};
    if (oracle::aliased(cq, 16, 4)) continue;
    const CMatrix c = materialize(cq, CodebookSpec{2, 4, 16, {}});
    const auto g = effective_channel(h, p, c);
    EvalCounter counter;
    const double rho = std::pow(10.0, (trial % 40 - 20) / 10.0);
    const double low = rate(cost(g, c, LinkBudget{rho, 1.0}, 2, counter));
    const double high = rate(cost(g, c, LinkBudget{2 * rho, 1.0}, 2, counter));
    CHECK(high >= low);
  }
}

TEST_CASE("update_column and update_row match full recomputation") {
  Rng rng(3);
  const CodebookSpec spec_t{2, 4, 64, {}};
  const CodebookSpec spec_r{2, 4, 16, {}};
  const ChannelMatrix h = random_channel(rng, 16, 64);
  const CMatrix p = materialize({4, 13}, spec_t);
  const CMatrix c = materialize({2, 10}, spec_r);
  const auto g = effective_channel(h, p, c);

  SUBCASE("identical column leaves g unchanged") {
    const auto same = update_column(g, h, c, p.col(1), 1);
    CHECK((same.g - g.g).norm() < 1e-12);
  }
  SUBCASE("substitute and substitute back") {
    const CVector other = materialize({7}, CodebookSpec{1, 4, 64, {}}).col(0);
    const auto moved = update_column(g, h, c, other, 0);
    CHECK((moved.g.col(1) - g.g.col(1)).norm() == 0.0);
    CMatrix p2 = p;
    p2.col(0) = other;
    CHECK((moved.g - effective_channel(h, p2, c).g).norm() < 1e-10 * g.g.norm());
    const auto back = update_column(moved, h, c, p.col(0), 0);
    CHECK((back.g - g.g).norm() < 1e-10 * g.g.norm());
  }
  SUBCASE("row update for the combiner side") {
    const CVector other = materialize({15}, CodebookSpec{1, 4, 16, {}}).col(0);
    const auto moved = update_row(g, h, p, other, 1);
    CMatrix c2 = c;
    c2.col(1) = other;
    CHECK((moved.g - effective_channel(h, p, c2).g).norm() < 1e-10 * g.g.norm());
    CHECK((moved.g.row(0) - g.g.row(0)).norm() == 0.0);
  }
  SUBCASE("bad positions") {
    CHECK_THROWS_AS(update_column(g, h, c, p.col(0), 2), InvalidDimension);
    CHECK_THROWS_AS(update_row(g, h, p, c.col(0), -1), InvalidDimension);
    CHECK_THROWS_AS(update_column(g, h, c, c.col(0), 0), InvalidDimension);
  }
}

TEST_CASE("side probes agree with direct pair costs") {
  Rng rng(21);
  const CodebookSpec spec_t{2, 4, 64, {}};
  const CodebookSpec spec_r{2, 4, 16, {}};
  const SteeringTable tx(spec_t);
  const SteeringTable rx(spec_r);
  const LinkBudget budget = LinkBudget::from_snr_db(0.0);
  for (int trial = 0; trial < 20; ++trial) {
    const ChannelMatrix h = random_channel(rng, 16, 64);
    const ColumnIndices pq{1 + trial % 16, 1 + (trial * 7 + 3) % 16};
    const ColumnIndices cq{2 + trial % 3, 10 + trial % 5};
    if (pq[0] == pq[1] || oracle::aliased(cq, 16, 4)) continue;
    const CMatrix p = tx.materialize(pq);
    const CMatrix c = rx.materialize(cq);

    SideProbe tx_probe(h, Side::transmit, tx, c, budget);
    EvalCounter counter;
    const Evaluated at = tx_probe.evaluate(pq, counter);
    CHECK(at.cost == doctest::Approx(oracle::pair_cost(h.h(), p, c, 1.0)).epsilon(1e-10));
    for (const auto& nb : neighbors(pq, spec_t)) {
      const Evaluated e = tx_probe.evaluate_neighbor(at, nb, counter);
      CHECK(e.cost == doctest::Approx(oracle::pair_cost(h.h(), tx.materialize(nb.indices), c, 1.0))
                          .epsilon(1e-10));
    }

    SideProbe rx_probe(h, Side::receive, rx, p, budget);
    const Evaluated rat = rx_probe.evaluate(cq, counter);
    CHECK(rat.cost == doctest::Approx(at.cost).epsilon(1e-10));
    for (const auto& nb : neighbors(cq, spec_r)) {
      const Evaluated e = rx_probe.evaluate_neighbor(rat, nb, counter);
      if (oracle::aliased(nb.indices, 16, 4)) {
        CHECK(e.cost == kInadmissible);
      } else {
        CHECK(e.cost == doctest::Approx(oracle::pair_cost(h.h(), p, rx.materialize(nb.indices), 1.0))
                            .epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("singularity test flags exactly the aliased combiners") {
  const LinkBudget budget = LinkBudget::from_snr_db(0.0);
  for (int n_antennas : {8, 16, 32}) {
    for (int bits = 1; bits <= 6; ++bits) {
      const CodebookSpec spec{2, bits, n_antennas, {}};
      const SteeringTable table(spec);
      for (const auto& q : oracle::distinct_tuples(bits, 2)) {
        const auto value = try_cost_value(SmallMatrix::Zero(2, 2), table.gram(q), budget);
        REQUIRE(value.has_value() != oracle::aliased(q, n_antennas, bits));
      }
    }
  }
}
