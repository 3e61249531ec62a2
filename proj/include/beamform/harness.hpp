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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beamform/channel.hpp"
#include "beamform/search_fs.hpp"
#include "beamform/turbo.hpp"

namespace beamform {

enum class Scheme { fs, turbo_ts };

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);

struct ExperimentConfig {
  SystemDims dims{};
  int bits_t = 4;
  int bits_r = 4;
  int l_paths = 3;
  double spacing_over_wavelength = 0.5;
  std::vector<double> snr_db_list{0.0};
  int trials = 500;
  std::uint64_t seed = 42;
  std::vector<Scheme> schemes{Scheme::fs, Scheme::turbo_ts};
  TurboParams turbo{};
  std::uint64_t fs_ceiling = kDefaultFsCeiling;
  int workers = 1;

  CodebookSpec transmit_codebook() const;
  CodebookSpec receive_codebook() const;
  void validate() const;
};

struct TrialRecord {
  int trial_id = 0;
  Scheme scheme = Scheme::fs;
  double snr_db = 0.0;
  int nt = 0;
  int nr = 0;
  int nrf = 0;
  int bits_t = 0;
  int bits_r = 0;
  double rate = 0.0;
  std::uint64_t evals = 0;
  int message_rounds = 0;
  std::uint64_t seed = 0;
};

// Stable per-trial seed; adding trials never changes the seeds of existing ones.
std::uint64_t derive_seed(std::uint64_t master_seed, int trial_id);

// One channel per trial, shared by every scheme and SNR point of that trial.
// Records are sorted by (trial_id, scheme, snr_db) whatever the worker count.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);

enum class SweepAxis { max_iter, max_len, m_restarts, k_iterations };

SweepAxis parse_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

struct SweepPoint {
  double value = 0.0;
  double snr_db = 0.0;
  double mean_rate = 0.0;
  double mean_evals = 0.0;
};

// Overrides one Turbo-TS parameter (on both sides) per value and reports the
// mean Turbo-TS rate at every SNR point.
std::vector<SweepPoint> parameter_sweep(const ExperimentConfig& config, SweepAxis axis,
                                        const std::vector<double>& values);

double mean_rate(const std::vector<TrialRecord>& records, Scheme scheme,
                 std::optional<double> snr_db = std::nullopt);

void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out);

// Flat key=value configuration. Keys: nt nr nrf bits bits_t bits_r l_paths
// spacing_over_wavelength snr_db_list trials seed schemes max_iter max_len
// m_restarts k_iterations warm_start fs_ceiling workers.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

// "start:step:stop" (inclusive) or a comma-separated list.
std::vector<double> parse_snr_list(std::string_view text);

}  // namespace beamform
