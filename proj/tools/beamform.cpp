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

// beamform: codebook beamforming search and Monte-Carlo rate simulation.
//
//   beamform run --config exp.cfg --snr -20:2:10 --out results.csv
//   beamform sweep --axis k --values 1,2,3,4,5,6 --bits 6 --max-iter 3000 ...
//   beamform complexity --bits 4,5,6 --nrf 2

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "beamform/errors.hpp"
#include "beamform/harness.hpp"
#include "beamform/search_fs.hpp"
#include "beamform/turbo.hpp"

namespace {

using beamform::ExperimentConfig;

// Reference Turbo-TS settings for the 4/5/6-bit codebooks with two RF chains.
std::optional<beamform::TsParams> reference_params(int bits) {
  switch (bits) {
    case 4:
      return beamform::TsParams{500, 100, 1};
    case 5:
      return beamform::TsParams{1000, 200, 2};
    case 6:
      return beamform::TsParams{3000, 600, 5};
    default:
      return std::nullopt;
  }
}

// Flags shared by `run` and `sweep`, kept as raw text and applied through the
// same key=value path as the config file so both behave identically.
struct ExperimentFlags {
  std::string config_path;
  std::string out_path;
  std::vector<std::pair<std::string, std::string>> order = {
      {"nt", ""},       {"nr", ""},        {"nrf", ""},          {"bits", ""},
      {"bits_t", ""},   {"bits_r", ""},    {"l_paths", ""},      {"spacing_over_wavelength", ""},
      {"snr", ""},      {"trials", ""},    {"seed", ""},         {"schemes", ""},
      {"max_iter", ""}, {"max_len", ""},   {"m_restarts", ""},   {"k_iterations", ""},
      {"workers", ""},  {"fs_ceiling", ""}};
  bool cold_start = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "key=value configuration file");
    app->add_option("--out", out_path, "output file (default: stdout)");
    const std::map<std::string, std::pair<std::string, std::string>> flags = {
        {"nt", {"--nt", "transmit antennas"}},
        {"nr", {"--nr", "receive antennas"}},
        {"nrf", {"--nrf", "RF chains per side (= streams)"}},
        {"bits", {"--bits", "quantization bits, both sides"}},
        {"bits_t", {"--bits-t", "transmit quantization bits"}},
        {"bits_r", {"--bits-r", "receive quantization bits"}},
        {"l_paths", {"--paths", "number of propagation paths L"}},
        {"spacing_over_wavelength", {"--spacing", "antenna spacing over wavelength"}},
        {"snr", {"--snr", "SNR points in dB: start:step:stop or a,b,c"}},
        {"trials", {"--trials", "Monte-Carlo trials"}},
        {"seed", {"--seed", "master seed"}},
        {"schemes", {"--scheme", "comma list of fs, turbo_ts"}},
        {"max_iter", {"--max-iter", "tabu search iteration cap"}},
        {"max_len", {"--max-len", "tabu search stagnation cap"}},
        {"m_restarts", {"--restarts", "initial solutions per search (M)"}},
        {"k_iterations", {"--k", "turbo rounds (K)"}},
        {"workers", {"--workers", "parallel trial workers"}},
        {"fs_ceiling", {"--fs-ceiling", "maximum full-search evaluations per trial"}}};
    for (auto& [key, value] : order) {
      const auto& [flag, help] = flags.at(key);
      app->add_option(flag, value, help);
    }
    app->add_flag("--cold-start", cold_start, "restart every turbo round from stratified starts only");
  }

  ExperimentConfig build() const {
    ExperimentConfig config;
    if (!config_path.empty()) config = beamform::load_config(config_path);
    for (const auto& [key, value] : order) {
      if (!value.empty()) beamform::apply_setting(config, key, value);
    }
    if (cold_start) config.turbo.warm_start = false;
    return config;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw beamform::InvalidParameter("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : beamform::parse_snr_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

int run_complexity(const std::string& bits_text, int nrf, int k, int max_iter, int restarts) {
  std::cout << "bits,fs_count,ts_budget,ratio_percent\n";
  for (int bits : parse_int_list(bits_text)) {
    auto params = reference_params(bits);
    if (max_iter > 0 || restarts > 0) {
      if (!params) params = beamform::TsParams{};
      if (max_iter > 0) params->max_iter = max_iter;
      if (restarts > 0) params->m_restarts = restarts;
    }
    if (!params) {
      throw beamform::InvalidParameter("no reference settings for " + std::to_string(bits) +
                                       " bits; pass --max-iter and --restarts");
    }
    const beamform::CodebookSpec spec{nrf, bits, 64, {}};
    beamform::TurboParams turbo;
    turbo.k_iterations = k;
    turbo.ts_params_tx = turbo.ts_params_rx = *params;
    const auto fs = beamform::fs_complexity(spec, spec);
    const auto ts = beamform::ts_complexity(turbo, spec, spec);
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.2f", 100.0 * static_cast<double>(ts) / static_cast<double>(fs));
    std::cout << bits << ',' << fs << ',' << ts << ',' << ratio << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codebook beamforming search: exhaustive and Turbo-TS"};
  app.require_subcommand(1);

  ExperimentFlags run_flags;
  auto* run = app.add_subcommand("run", "Monte-Carlo experiment, one CSV row per (trial, scheme, SNR)");
  run_flags.attach(run);

  ExperimentFlags sweep_flags;
  std::string axis = "k";
  std::string values;
  auto* sweep = app.add_subcommand("sweep", "mean Turbo-TS rate against one search parameter");
  sweep_flags.attach(sweep);
  sweep->add_option("--axis", axis, "max_iter, max_len, m_restarts (m) or k_iterations (k)");
  sweep->add_option("--values", values, "comma list or start:step:stop")->required();

  std::string complexity_bits = "4,5,6";
  int complexity_nrf = 2;
  int complexity_k = 4;
  int complexity_max_iter = 0;
  int complexity_restarts = 0;
  auto* complexity = app.add_subcommand("complexity", "evaluation counts of FS and Turbo-TS");
  complexity->add_option("--bits", complexity_bits, "quantization bits list");
  complexity->add_option("--nrf", complexity_nrf, "RF chains per side");
  complexity->add_option("--k", complexity_k, "turbo rounds");
  complexity->add_option("--max-iter", complexity_max_iter, "override the reference max_iter");
  complexity->add_option("--restarts", complexity_restarts, "override the reference M");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const ExperimentConfig config = run_flags.build();
      const auto records = beamform::run_experiment(config);
      Output out(run_flags.out_path);
      beamform::emit_csv(records, out.stream());
    } else if (*sweep) {
      const ExperimentConfig config = sweep_flags.build();
      const auto sweep_axis = beamform::parse_axis(axis);
      std::vector<double> sweep_values = beamform::parse_snr_list(values);
      const auto table = beamform::parameter_sweep(config, sweep_axis, sweep_values);
      Output out(sweep_flags.out_path);
      out.stream() << beamform::to_string(sweep_axis) << ",snr_db,mean_rate_bps_hz,mean_evals\n";
      for (const auto& point : table) {
        char line[128];
        std::snprintf(line, sizeof line, "%.6g,%.6g,%.6g,%.6g\n", point.value, point.snr_db,
                      point.mean_rate, point.mean_evals);
        out.stream() << line;
      }
    } else if (*complexity) {
      return run_complexity(complexity_bits, complexity_nrf, complexity_k, complexity_max_iter,
                            complexity_restarts);
    }
  } catch (const std::exception& e) {
    std::cerr << "beamform: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
