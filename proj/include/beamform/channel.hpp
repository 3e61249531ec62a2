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

#include <cstddef>
#include <vector>

#include "beamform/types.hpp"

namespace beamform {

// Antenna and RF-chain counts of a point-to-point link. The search assumes
// one RF chain per data stream on both ends.
struct SystemDims {
  int nt = 64;
  int nr = 16;
  int nt_rf = 2;
  int nr_rf = 2;
  int ns = 2;

  static SystemDims symmetric_rf(int nt, int nr, int n_rf) {
    return SystemDims{nt, nr, n_rf, n_rf, n_rf};
  }

  // Throws InvalidDimension when the invariants do not hold.
  void validate() const;
};

struct ArrayGeometry {
  double spacing_over_wavelength = 0.5;

  // k * d with k = 2 pi / lambda.
  double phase_factor() const;
  void validate() const;
};

// Multipath parameters of one channel realization: complex gains plus
// departure/arrival azimuths in radians.
struct PathSet {
  std::vector<Complex> gains;
  std::vector<double> aod;
  std::vector<double> aoa;

  std::size_t size() const { return gains.size(); }
  void validate() const;
};

class ChannelMatrix {
 public:
  ChannelMatrix() = default;
  explicit ChannelMatrix(CMatrix h);

  const CMatrix& h() const { return h_; }
  int nr() const { return static_cast<int>(h_.rows()); }
  int nt() const { return static_cast<int>(h_.cols()); }

 private:
  CMatrix h_;
};

// ULA steering vector (1/sqrt(n)) [1, e^{j kd sin a}, ..., e^{j (n-1) kd sin a}]^T.
CVector ula_response(int n_antennas, double angle, const ArrayGeometry& geometry);

// L paths with CN(0,1) gains and AoD/AoA uniform on [0, pi].
PathSet draw_paths(int l, Rng& rng);

// H = sqrt(nt nr / L) sum_l alpha_l f_r(aoa_l) f_t(aod_l)^H.
ChannelMatrix assemble_channel(const SystemDims& dims, const PathSet& paths,
                               const ArrayGeometry& geometry);

}  // namespace beamform
