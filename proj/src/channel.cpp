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

#include "beamform/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "beamform/errors.hpp"

namespace beamform {

void SystemDims::validate() const {
  if (ns < 1) throw InvalidDimension("ns must be at least 1");
  if (nt_rf != ns || nr_rf != ns) {
    throw InvalidDimension("RF chain counts must equal the number of streams (nt_rf = nr_rf = ns)");
  }
  if (ns > kMaxRf) {
    throw InvalidDimension("at most " + std::to_string(kMaxRf) + " RF chains per side are supported");
  }
  if (nt < nt_rf) throw InvalidDimension("nt must be at least nt_rf");
  if (nr < nr_rf) throw InvalidDimension("nr must be at least nr_rf");
}

double ArrayGeometry::phase_factor() const {
  return 2.0 * std::numbers::pi * spacing_over_wavelength;
}

void ArrayGeometry::validate() const {
  if (!(spacing_over_wavelength > 0.0) || !std::isfinite(spacing_over_wavelength)) {
    throw InvalidParameter("antenna spacing over wavelength must be positive");
  }
}

void PathSet::validate() const {
  if (gains.empty()) throw InvalidParameter("a path set needs at least one path");
  if (aod.size() != gains.size() || aoa.size() != gains.size()) {
    throw InvalidDimension("path gains, AoDs and AoAs must have equal length");
  }
}

ChannelMatrix::ChannelMatrix(CMatrix h) : h_(std::move(h)) {
  if (!h_.allFinite()) throw InvalidParameter("channel matrix has non-finite entries");
}

CVector ula_response(int n_antennas, double angle, const ArrayGeometry& geometry) {
  if (n_antennas < 1) throw InvalidDimension("array needs at least one antenna");
  const double step = geometry.phase_factor() * std::sin(angle);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_antennas));
  CVector v(n_antennas);
  for (int m = 0; m < n_antennas; ++m) {
    v[m] = std::polar(scale, step * m);
  }
  return v;
}

PathSet draw_paths(int l, Rng& rng) {
  if (l < 1) throw InvalidParameter("path count must be at least 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, std::numbers::pi);
  PathSet paths;
  paths.gains.reserve(l);
  paths.aod.reserve(l);
  paths.aoa.reserve(l);
  // Draw order is part of the reproducibility contract: gain, AoD, AoA per path.
  for (int i = 0; i < l; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    paths.gains.emplace_back(re / std::numbers::sqrt2, im / std::numbers::sqrt2);
    paths.aod.push_back(uniform(rng));
    paths.aoa.push_back(uniform(rng));
  }
  return paths;
}

ChannelMatrix assemble_channel(const SystemDims& dims, const PathSet& paths,
                               const ArrayGeometry& geometry) {
  dims.validate();
  paths.validate();
  geometry.validate();
  const auto l = static_cast<double>(paths.size());
  CMatrix h = CMatrix::Zero(dims.nr, dims.nt);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const CVector fr = ula_response(dims.nr, paths.aoa[i], geometry);
    const CVector ft = ula_response(dims.nt, paths.aod[i], geometry);
    h.noalias() += paths.gains[i] * fr * ft.adjoint();
  }
  h *= std::sqrt(static_cast<double>(dims.nt) * dims.nr / l);
  return ChannelMatrix(std::move(h));
}

}  // namespace beamform
