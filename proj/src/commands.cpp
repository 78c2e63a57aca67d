// Copyright 2026 The femtobb Authors
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

#include "femtobb/commands.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "femtobb/errors.hpp"

namespace femtobb::commands {
namespace {

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw std::invalid_argument(fmt::format("malformed {} \"{}\"", what, text));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open output file for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError(path, "failed writing output file");
}

}  // namespace

std::vector<Kbps> ArbitRange::levels() const {
  std::vector<Kbps> out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(Kbps(start + static_cast<double>(i) * step));
  }
  return out;
}

ArbitRange parse_arbit_range(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw std::invalid_argument(
        fmt::format("ARBIT range \"{}\" must have the form start:stop:step", text));
  }
  ArbitRange range;
  range.start = parse_double(trim(text.substr(0, first)), "range start");
  range.stop = parse_double(trim(text.substr(first + 1, second - first - 1)), "range stop");
  range.step = parse_double(trim(text.substr(second + 1)), "range step");
  if (range.start < 0.0) throw std::invalid_argument("ARBIT range start must be >= 0");
  if (range.start > range.stop) throw std::invalid_argument("ARBIT range start exceeds stop");
  if (!(range.step > 0.0)) throw std::invalid_argument("ARBIT range step must be > 0");
  return range;
}

std::vector<model::Scheme> parse_schemes(std::string_view text) {
  std::vector<model::Scheme> out;
  while (true) {
    const auto comma = text.find(',');
    const auto name = trim(text.substr(0, comma));
    if (name == "both") {
      out.push_back(model::Scheme::kTraditional);
      out.push_back(model::Scheme::kProposed);
    } else if (auto scheme = model::parse_scheme(name)) {
      out.push_back(*scheme);
    } else {
      throw std::invalid_argument(fmt::format(
          "unknown scheme \"{}\" (expected traditional, proposed or both)", name));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return sim::canonical_schemes(out);
}

void write_summary_csv(std::span<const sim::SchemeSummary> rows, std::ostream& out) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << fmt::format("{},{:.3f},{:.6f},{:.6f},{:.6f},{:.6f},{}\n", model::to_string(r.scheme),
                       r.arbit.value(), r.mean_sl, r.std_sl, r.mean_util, r.std_util,
                       r.replications);
  }
}

void write_timeseries_csv(std::span<const sim::TickRecord> ticks, std::ostream& out) {
  out << kTimeseriesHeader << '\n';
  for (const auto& tick : ticks) {
    const auto& h = tick.history;
    const auto& a = tick.alloc;
    out << fmt::format("{:.3f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{}\n", h.t,
                       h.b_f.value(), h.b_i.value(), h.b_r.value(), a.grant_femto.value(),
                       a.femto_served.value(), a.bg_served.value(), a.sl, tick.util,
                       model::to_string(h.scheme));
  }
}

void write_util_sl_csv(std::span<const sim::SchemeSummary> rows, std::ostream& out) {
  out << kUtilSlHeader << '\n';
  for (auto scheme : {model::Scheme::kTraditional, model::Scheme::kProposed}) {
    for (const auto& r : rows) {
      if (r.scheme != scheme) continue;
      out << fmt::format("{},{:.3f},{:.6f},{:.6f}\n", model::to_string(r.scheme), r.arbit.value(),
                         r.mean_util, r.mean_sl);
    }
  }
}

std::vector<sim::SchemeSummary> run_command(const sim::ScenarioConfig& cfg,
                                            std::span<const model::Scheme> schemes,
                                            const RunOutputs& outputs,
                                            std::ostream& stdout_sink) {
  const auto chosen = sim::canonical_schemes(schemes);
  if (chosen.empty()) throw std::invalid_argument("no scheme selected");
  const auto stats = sim::run_experiment(cfg, chosen);

  if (outputs.summary.empty()) {
    write_summary_csv(stats.schemes, stdout_sink);
  } else {
    write_file(outputs.summary, [&](std::ostream& out) { write_summary_csv(stats.schemes, out); });
  }

  if (!outputs.timeseries.empty() || !outputs.history.empty()) {
    std::vector<sim::TickRecord> ticks;
    std::vector<broker::HistoryRecord> history;
    const auto seed = sim::replication_seed(cfg.run.base_seed, 0);
    for (auto scheme : chosen) {
      auto run = sim::run_replication(cfg, scheme, seed, /*keep_timeseries=*/true);
      for (const auto& tick : run.timeseries) history.push_back(tick.history);
      ticks.insert(ticks.end(), run.timeseries.begin(), run.timeseries.end());
    }
    if (!outputs.timeseries.empty()) {
      write_file(outputs.timeseries, [&](std::ostream& out) { write_timeseries_csv(ticks, out); });
    }
    if (!outputs.history.empty()) broker::export_history(history, outputs.history);
  }
  return stats.schemes;
}

std::filesystem::path util_sl_path(const std::filesystem::path& sweep_csv) {
  auto out = sweep_csv;
  out.replace_filename(sweep_csv.stem().string() + "_util_sl.csv");
  return out;
}

std::vector<sim::SchemeSummary> sweep_command(const sim::ScenarioConfig& cfg,
                                              std::span<const Kbps> arbits,
                                              std::span<const model::Scheme> schemes,
                                              const std::filesystem::path& out,
                                              std::ostream& stdout_sink) {
  const auto chosen = sim::canonical_schemes(schemes);
  if (chosen.empty()) throw std::invalid_argument("no scheme selected");
  const auto rows = sim::sweep_arbit(cfg, arbits, chosen);
  if (out.empty()) {
    write_summary_csv(rows, stdout_sink);
    return rows;
  }
  write_file(out, [&](std::ostream& os) { write_summary_csv(rows, os); });
  write_file(util_sl_path(out), [&](std::ostream& os) { write_util_sl_csv(rows, os); });
  return rows;
}

}  // namespace femtobb::commands
