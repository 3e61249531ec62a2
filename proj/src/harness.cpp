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

#include "beamform/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "beamform/errors.hpp"

namespace beamform {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<TrialRecord> run_trial(const ExperimentConfig& config, const CodebookSpec& spec_t,
                                   const CodebookSpec& spec_r, int trial_id) {
  const std::uint64_t seed = derive_seed(config.seed, trial_id);
  Rng rng(seed);
  const ArrayGeometry geometry{config.spacing_over_wavelength};
  const PathSet paths = draw_paths(config.l_paths, rng);
  const ChannelMatrix h = assemble_channel(config.dims, paths, geometry);

  std::vector<TrialRecord> out;
  for (double snr : config.snr_db_list) {
    const LinkBudget budget = LinkBudget::from_snr_db(snr);
    for (Scheme scheme : config.schemes) {
      TrialRecord r;
      r.trial_id = trial_id;
      r.scheme = scheme;
      r.snr_db = snr;
      r.nt = config.dims.nt;
      r.nr = config.dims.nr;
      r.nrf = config.dims.ns;
      r.bits_t = config.bits_t;
      r.bits_r = config.bits_r;
      r.seed = seed;
      if (scheme == Scheme::fs) {
        const FsResult fs = full_search(h, spec_t, spec_r, budget, config.fs_ceiling);
        r.rate = rate(fs.best_cost);
        r.evals = fs.evals;
        r.message_rounds = 0;
      } else {
        const TurboResult ts = turbo_search(h, spec_t, spec_r, budget, config.turbo);
        r.rate = ts.rate;
        r.evals = ts.evals_total;
        r.message_rounds = ts.message_rounds;
      }
      out.push_back(r);
    }
  }
  return out;
}

auto record_key(const TrialRecord& r) { return std::make_tuple(r.trial_id, r.scheme, r.snr_db); }

}  // namespace

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::fs ? "fs" : "turbo_ts";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "fs") return Scheme::fs;
  if (name == "turbo_ts") return Scheme::turbo_ts;
  throw InvalidParameter("unknown scheme '" + std::string(name) + "' (expected fs or turbo_ts)");
}

CodebookSpec ExperimentConfig::transmit_codebook() const {
  return CodebookSpec{dims.nt_rf, bits_t, dims.nt, ArrayGeometry{spacing_over_wavelength}};
}

CodebookSpec ExperimentConfig::receive_codebook() const {
  return CodebookSpec{dims.nr_rf, bits_r, dims.nr, ArrayGeometry{spacing_over_wavelength}};
}

void ExperimentConfig::validate() const {
  dims.validate();
  ArrayGeometry{spacing_over_wavelength}.validate();
  if (l_paths < 1) throw InvalidParameter("l_paths must be at least 1");
  if (trials < 1) throw InvalidParameter("trials must be at least 1");
  if (snr_db_list.empty()) throw InvalidParameter("the SNR list is empty");
  if (schemes.empty()) throw InvalidParameter("no scheme selected");
  if (workers < 1) throw InvalidParameter("workers must be at least 1");
  const CodebookSpec spec_t = transmit_codebook();
  const CodebookSpec spec_r = receive_codebook();
  spec_t.validate();
  spec_r.validate();
  turbo.validate();
  if (std::find(schemes.begin(), schemes.end(), Scheme::fs) != schemes.end()) {
    const std::uint64_t needed = fs_complexity(spec_t, spec_r);
    if (needed > fs_ceiling) {
      throw BudgetExceeded("full search needs " + std::to_string(needed) +
                           " evaluations per trial, above fs_ceiling = " +
                           std::to_string(fs_ceiling));
    }
  }
}

std::uint64_t derive_seed(std::uint64_t master_seed, int trial_id) {
  return splitmix64(splitmix64(master_seed) ^ static_cast<std::uint64_t>(trial_id));
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();
  const CodebookSpec spec_t = config.transmit_codebook();
  const CodebookSpec spec_r = config.receive_codebook();

  std::vector<std::vector<TrialRecord>> per_trial(config.trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const int t = next.fetch_add(1);
      if (t >= config.trials) return;
      try {
        per_trial[t] = run_trial(config, spec_t, spec_r, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(config.trials);
        return;
      }
    }
  };

  const int n_workers = std::min(config.workers, config.trials);
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TrialRecord> records;
  for (auto& trial : per_trial) {
    records.insert(records.end(), trial.begin(), trial.end());
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const TrialRecord& a, const TrialRecord& b) { return record_key(a) < record_key(b); });
  return records;
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "max_iter" || name == "max-iter") return SweepAxis::max_iter;
  if (name == "max_len" || name == "max-len") return SweepAxis::max_len;
  if (name == "m_restarts" || name == "restarts" || name == "m") return SweepAxis::m_restarts;
  if (name == "k_iterations" || name == "k") return SweepAxis::k_iterations;
  throw InvalidParameter("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::max_iter:
      return "max_iter";
    case SweepAxis::max_len:
      return "max_len";
    case SweepAxis::m_restarts:
      return "m_restarts";
    case SweepAxis::k_iterations:
      return "k_iterations";
  }
  return "?";
}

std::vector<SweepPoint> parameter_sweep(const ExperimentConfig& config, SweepAxis axis,
                                        const std::vector<double>& values) {
  if (values.empty()) throw InvalidParameter("sweep needs at least one value");
  std::vector<SweepPoint> table;
  for (double value : values) {
    const double rounded = std::round(value);
    if (rounded != value || value < 1) {
      throw InvalidParameter("sweep values for " + std::string(to_string(axis)) +
                             " must be positive integers");
    }
    const int v = static_cast<int>(rounded);
    ExperimentConfig cfg = config;
    cfg.schemes = {Scheme::turbo_ts};
    switch (axis) {
      case SweepAxis::max_iter:
        cfg.turbo.ts_params_tx.max_iter = cfg.turbo.ts_params_rx.max_iter = v;
        break;
      case SweepAxis::max_len:
        cfg.turbo.ts_params_tx.max_len = cfg.turbo.ts_params_rx.max_len = v;
        break;
      case SweepAxis::m_restarts:
        cfg.turbo.ts_params_tx.m_restarts = cfg.turbo.ts_params_rx.m_restarts = v;
        break;
      case SweepAxis::k_iterations:
        cfg.turbo.k_iterations = v;
        break;
    }
    const auto records = run_experiment(cfg);
    for (double snr : cfg.snr_db_list) {
      double evals = 0.0;
      int n = 0;
      for (const auto& r : records) {
        if (r.snr_db != snr) continue;
        evals += static_cast<double>(r.evals);
        ++n;
      }
      table.push_back(SweepPoint{value, snr, mean_rate(records, Scheme::turbo_ts, snr),
                                 n > 0 ? evals / n : 0.0});
    }
  }
  return table;
}

double mean_rate(const std::vector<TrialRecord>& records, Scheme scheme,
                 std::optional<double> snr_db) {
  double sum = 0.0;
  int n = 0;
  for (const auto& r : records) {
    if (r.scheme != scheme) continue;
    if (snr_db && r.snr_db != *snr_db) continue;
    sum += r.rate;
    ++n;
  }
  if (n == 0) throw EmptyOutput("no records for scheme " + std::string(to_string(scheme)));
  return sum / n;
}

void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
  if (records.empty()) throw EmptyOutput("no records to write");
  std::vector<TrialRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const TrialRecord& a, const TrialRecord& b) { return record_key(a) < record_key(b); });
  out << "trial_id,scheme,snr_db,nt,nr,nrf,bits_t,bits_r,rate_bps_hz,evals,message_rounds,seed\n";
  char snr[32];
  char rate_text[32];
  for (const auto& r : sorted) {
    std::snprintf(snr, sizeof snr, "%.6g", r.snr_db);
    std::snprintf(rate_text, sizeof rate_text, "%.6g", r.rate);
    out << r.trial_id << ',' << to_string(r.scheme) << ',' << snr << ',' << r.nt << ',' << r.nr
        << ',' << r.nrf << ',' << r.bits_t << ',' << r.bits_r << ',' << rate_text << ','
        << r.evals << ',' << r.message_rounds << ',' << r.seed << '\n';
  }
}

}  // namespace beamform
