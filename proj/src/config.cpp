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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

#include "beamform/errors.hpp"
#include "beamform/harness.hpp"

namespace beamform {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidParameter("bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw InvalidParameter("bad boolean '" + std::string(text) + "' for " + std::string(key));
}

template <typename F>
void for_each_item(std::string_view text, F&& f) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) f(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
}

}  // namespace

std::vector<double> parse_snr_list(std::string_view text) {
  text = trim(text);
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos) throw InvalidParameter("SNR range must be start:step:stop");
    const double start = parse_number<double>("snr", text.substr(0, a));
    const double step = parse_number<double>("snr", text.substr(a + 1, b - a - 1));
    const double stop = parse_number<double>("snr", text.substr(b + 1));
    if (step == 0.0 || (stop - start) / step < 0.0) {
      throw InvalidParameter("SNR range step does not reach the stop value");
    }
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
  } else {
    for_each_item(text, [&](std::string_view item) { out.push_back(parse_number<double>("snr", item)); });
  }
  if (out.empty()) throw InvalidParameter("empty SNR list");
  return out;
}

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
  auto& tx = config.turbo.ts_params_tx;
  auto& rx = config.turbo.ts_params_rx;
  if (key == "nt") {
    config.dims.nt = parse_number<int>(key, value);
  } else if (key == "nr") {
    config.dims.nr = parse_number<int>(key, value);
  } else if (key == "nrf" || key == "ns") {
    const int n = parse_number<int>(key, value);
    config.dims.nt_rf = config.dims.nr_rf = config.dims.ns = n;
  } else if (key == "bits") {
    config.bits_t = config.bits_r = parse_number<int>(key, value);
  } else if (key == "bits_t") {
    config.bits_t = parse_number<int>(key, value);
  } else if (key == "bits_r") {
    config.bits_r = parse_number<int>(key, value);
  } else if (key == "l_paths") {
    config.l_paths = parse_number<int>(key, value);
  } else if (key == "spacing_over_wavelength") {
    config.spacing_over_wavelength = parse_number<double>(key, value);
  } else if (key == "snr_db_list" || key == "snr") {
    config.snr_db_list = parse_snr_list(value);
  } else if (key == "trials") {
    config.trials = parse_number<int>(key, value);
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "schemes" || key == "scheme") {
    config.schemes.clear();
    for_each_item(value, [&](std::string_view item) { config.schemes.push_back(parse_scheme(item)); });
  } else if (key == "max_iter") {
    tx.max_iter = rx.max_iter = parse_number<int>(key, value);
  } else if (key == "max_len") {
    tx.max_len = rx.max_len = parse_number<int>(key, value);
  } else if (key == "m_restarts" || key == "restarts") {
    tx.m_restarts = rx.m_restarts = parse_number<int>(key, value);
  } else if (key == "k_iterations" || key == "k") {
    config.turbo.k_iterations = parse_number<int>(key, value);
  } else if (key == "warm_start") {
    config.turbo.warm_start = parse_bool(key, value);
  } else if (key == "fs_ceiling") {
    config.fs_ceiling = parse_number<std::uint64_t>(key, value);
  } else if (key == "workers") {
    config.workers = parse_number<int>(key, value);
  } else {
    throw InvalidParameter("unknown configuration key '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidParameter("line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(base, trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open config file " + path);
  return parse_config(in, std::move(base));
}

}  // namespace beamform
