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

#include "femtobb/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "femtobb/commands.hpp"
#include "femtobb/errors.hpp"

namespace femtobb::report {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 50;
constexpr double kBottom = 60;

const char* colour(model::Scheme scheme) {
  return scheme == model::Scheme::kTraditional ? "#c0392b" : "#2471a3";
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

bool to_double(std::string_view s, double& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

std::string escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Minimal SVG canvas with a plot area and linear axes.
class Svg {
 public:
  Svg(std::string_view title, double x_min, double x_max, double y_min, double y_max)
      : x_min_(x_min), x_max_(x_max > x_min ? x_max : x_min + 1),
        y_min_(y_min), y_max_(y_max > y_min ? y_max : y_min + 1) {
    body_ += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">{3}</text>\n",
        kWidth, kHeight, kWidth / 2, escape(title));
  }

  double px(double x) const {
    return kLeft + (x - x_min_) / (x_max_ - x_min_) * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    return kHeight - kBottom - (y - y_min_) / (y_max_ - y_min_) * (kHeight - kTop - kBottom);
  }

  void axes(std::string_view x_label, std::string_view y_label, int y_ticks) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    body_ += fmt::format(
        "<path d=\"M{:.1f},{:.1f} L{:.1f},{:.1f} L{:.1f},{:.1f}\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        x0, y1, x0, y0, x1, y0);
    for (int i = 0; i <= y_ticks; ++i) {
      const double v = y_min_ + (y_max_ - y_min_) * i / y_ticks;
      body_ += fmt::format(
          "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"#ddd\"/>\n"
          "<text x=\"{3:.1f}\" y=\"{4:.1f}\" text-anchor=\"end\">{5:.2f}</text>\n",
          x0, py(v), x1, x0 - 6, py(v) + 4, v);
    }
    body_ += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n"
        "<text x=\"18\" y=\"{:.1f}\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 18 {:.1f})\">{}</text>\n",
        (x0 + x1) / 2, kHeight - 15, escape(x_label), (y0 + y1) / 2, (y0 + y1) / 2,
        escape(y_label));
  }

  void x_tick(double x, std::string_view label) {
    body_ += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                         px(x), kHeight - kBottom + 18, escape(label));
  }

  void raw(const std::string& s) { body_ += s; }

  std::string finish() const { return body_ + "</svg>\n"; }

 private:
  double x_min_, x_max_, y_min_, y_max_;
  std::string body_;
};

std::vector<sim::SchemeSummary> rows_for(const std::vector<sim::SchemeSummary>& rows,
                                         model::Scheme scheme) {
  std::vector<sim::SchemeSummary> out;
  for (const auto& r : rows) {
    if (r.scheme == scheme) out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.arbit < b.arbit; });
  return out;
}

std::string sl_chart(const std::vector<sim::SchemeSummary>& rows, model::Scheme scheme) {
  const auto series = rows_for(rows, scheme);
  double x_min = 0, x_max = 1;
  if (!series.empty()) {
    x_min = series.front().arbit.value();
    x_max = series.back().arbit.value();
    if (x_max == x_min) {
      x_min -= 500;
      x_max += 500;
    }
  }
  const std::string title =
      fmt::format("Femtocell satisfaction level vs ARBIT ({} scheme)", model::to_string(scheme));
  Svg svg(title, x_min, x_max, 0.0, 1.0);
  svg.axes("ARBIT (kbps)", "mean satisfaction level", 10);
  if (series.empty()) {
    svg.raw(fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">no data for this "
                        "scheme</text>\n",
                        kWidth / 2, kHeight / 2));
    return svg.finish();
  }
  std::string path;
  for (const auto& r : series) {
    const double x = svg.px(r.arbit.value());
    path += fmt::format("{}{:.1f},{:.1f} ", path.empty() ? "M" : "L", x, svg.py(r.mean_sl));
    const double lo = std::max(0.0, r.mean_sl - r.std_sl);
    const double hi = std::min(1.0, r.mean_sl + r.std_sl);
    svg.raw(fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"{3}\"/>\n"
        "<circle cx=\"{0:.1f}\" cy=\"{4:.1f}\" r=\"3.5\" fill=\"{3}\"/>\n",
        x, svg.py(lo), svg.py(hi), colour(scheme), svg.py(r.mean_sl)));
    svg.x_tick(r.arbit.value(), fmt::format("{:g}", r.arbit.value()));
  }
  svg.raw(fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n", path,
                      colour(scheme)));
  return svg.finish();
}

struct Bar {
  model::Scheme scheme;
  std::optional<double> value;
  std::string caption;
};

std::string bar_chart(std::string_view title, std::string_view y_label,
                      const std::vector<Bar>& bars) {
  Svg svg(title, 0.0, static_cast<double>(bars.size()), 0.0, 1.0);
  svg.axes("scheme", y_label, 10);
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& bar = bars[i];
    const double centre = static_cast<double>(i) + 0.5;
    svg.x_tick(centre, model::to_string(bar.scheme));
    const double x = svg.px(centre - 0.25);
    const double w = svg.px(centre + 0.25) - x;
    if (bar.value) {
      svg.raw(fmt::format(
          "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"{}\"/>\n"
          "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.3f}</text>\n",
          x, svg.py(*bar.value), w, svg.py(0.0) - svg.py(*bar.value), colour(bar.scheme),
          svg.px(centre), svg.py(*bar.value) - 6, *bar.value));
    }
    svg.raw(fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\" "
                        "font-size=\"11\">{}</text>\n",
                        svg.px(centre), kHeight - kBottom + 34, escape(bar.caption)));
  }
  return svg.finish();
}

std::optional<sim::SchemeSummary> closest_level(const std::vector<sim::SchemeSummary>& rows,
                                                model::Scheme scheme, double arbit) {
  std::optional<sim::SchemeSummary> best;
  for (const auto& r : rows_for(rows, scheme)) {
    if (!best || std::abs(r.arbit.value() - arbit) < std::abs(best->arbit.value() - arbit)) {
      best = r;
    }
  }
  return best;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open report file for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(path, "failed writing report file");
}

}  // namespace

std::vector<sim::SchemeSummary> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("no data: input is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != commands::kSummaryHeader) {
    throw DataError(fmt::format("unexpected header \"{}\" (expected \"{}\")", line,
                                commands::kSummaryHeader));
  }
  std::vector<sim::SchemeSummary> rows;
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line);
    auto bad = [&](std::string_view why) {
      return DataError(fmt::format("row {}: {}: \"{}\"", line_no, why, line));
    };
    if (fields.size() != 7) throw bad("expected 7 fields");
    sim::SchemeSummary row;
    const auto scheme = model::parse_scheme(fields[0]);
    if (!scheme) throw bad("unknown scheme");
    row.scheme = *scheme;
    double arbit = 0, reps = 0;
    if (!to_double(fields[1], arbit) || arbit < 0 || !to_double(fields[2], row.mean_sl) ||
        !to_double(fields[3], row.std_sl) || !to_double(fields[4], row.mean_util) ||
        !to_double(fields[5], row.std_util) || !to_double(fields[6], reps) || reps < 1 ||
        reps != std::floor(reps)) {
      throw bad("malformed number");
    }
    row.arbit = Kbps(arbit);
    row.replications = static_cast<unsigned>(reps);
    rows.push_back(row);
  }
  if (rows.empty()) throw DataError("no data: CSV has a header but no rows");
  return rows;
}

std::vector<sim::SchemeSummary> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open sweep CSV: {}", path.string()));
  try {
    return read_sweep_csv(in);
  } catch (const DataError& e) {
    throw DataError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::optional<sim::SchemeSummary> best_level_meeting(const std::vector<sim::SchemeSummary>& rows,
                                                     model::Scheme scheme, double target) {
  std::optional<sim::SchemeSummary> best;
  for (const auto& r : rows_for(rows, scheme)) {
    if (r.mean_sl >= target) best = r;
  }
  return best;
}

std::vector<std::string> report_files() {
  return {"sl_vs_arbit_traditional.svg", "sl_vs_arbit_proposed.svg",
          "utilization_comparison_arbit6000.svg", "utilization_at_95pct_sl.svg", "summary.txt"};
}

std::string summary_text(const std::vector<sim::SchemeSummary>& rows) {
  std::ostringstream out;
  out << fmt::format("{:<12} {:>10} {:>9} {:>9} {:>10} {:>9} {:>5}\n", "scheme", "arbit_kbps",
                     "mean_sl", "std_sl", "mean_util", "std_util", "reps");
  for (auto scheme : {model::Scheme::kTraditional, model::Scheme::kProposed}) {
    for (const auto& r : rows_for(rows, scheme)) {
      out << fmt::format("{:<12} {:>10.1f} {:>9.4f} {:>9.4f} {:>10.4f} {:>9.4f} {:>5}\n",
                         model::to_string(r.scheme), r.arbit.value(), r.mean_sl, r.std_sl,
                         r.mean_util, r.std_util, r.replications);
    }
  }
  out << fmt::format("\nHighest ARBIT with mean SL >= {:.2f}:\n", kTargetSatisfaction);
  for (auto scheme : {model::Scheme::kTraditional, model::Scheme::kProposed}) {
    if (rows_for(rows, scheme).empty()) continue;
    if (auto best = best_level_meeting(rows, scheme, kTargetSatisfaction)) {
      out << fmt::format("  {:<12} arbit={:.1f} kbps  sl={:.4f}  util={:.4f}\n",
                         model::to_string(scheme), best->arbit.value(), best->mean_sl,
                         best->mean_util);
    } else {
      out << fmt::format("  {:<12} no level reaches the target\n", model::to_string(scheme));
    }
  }
  return out.str();
}

void render_report(const std::vector<sim::SchemeSummary>& rows,
                   const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir, "cannot create report directory");
  const auto files = report_files();

  write_text(out_dir / files[0], sl_chart(rows, model::Scheme::kTraditional));
  write_text(out_dir / files[1], sl_chart(rows, model::Scheme::kProposed));

  std::vector<Bar> util_bars;
  for (auto scheme : {model::Scheme::kTraditional, model::Scheme::kProposed}) {
    if (auto r = closest_level(rows, scheme, kComparisonArbitKbps)) {
      util_bars.push_back({scheme, r->mean_util, fmt::format("ARBIT {:g} kbps", r->arbit.value())});
    }
  }
  write_text(out_dir / files[2],
             bar_chart("Bandwidth utilization at ARBIT = 6000 kbps", "mean utilization",
                       util_bars));

  std::vector<Bar> target_bars;
  for (auto scheme : {model::Scheme::kTraditional, model::Scheme::kProposed}) {
    if (rows_for(rows, scheme).empty()) continue;
    if (auto r = best_level_meeting(rows, scheme, kTargetSatisfaction)) {
      target_bars.push_back({scheme, r->mean_util,
                             fmt::format("ARBIT {:g} kbps, SL {:.3f}", r->arbit.value(),
                                         r->mean_sl)});
    } else {
      target_bars.push_back({scheme, std::nullopt, "SL target not reached"});
    }
  }
  write_text(out_dir / files[3],
             bar_chart("Utilization at the highest ARBIT keeping SL >= 0.95", "mean utilization",
                       target_bars));

  write_text(out_dir / files[4], summary_text(rows));
}

}  // namespace femtobb::report
