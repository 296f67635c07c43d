// Copyright 2026 The vqbench Authors
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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqbench/scoring.hpp"

// SVG rendering of device scores: a four-axis radar chart (runtime east,
// accuracy north, scalability west, capacity south) and an overall-score bar
// chart. Output is plain text with no timestamps, so the same scores always
// render to the same bytes.

namespace vqbench {
namespace detail {

inline std::string fmt_fixed(double v, int precision) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot render a non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline const char* report_color(std::size_t i) {
  static const char* palette[] = {"#3366cc", "#dc3912", "#109618",
                                  "#990099", "#ff9900", "#0099c6"};
  return palette[i % (sizeof(palette) / sizeof(palette[0]))];
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace detail

/// Renders all devices onto one radar chart. Each axis is normalized by the
/// maximum of that category over the devices (minimum 1 to keep the division
/// sound); the maxima are recorded in the chart title.
inline std::string radar_svg(const std::vector<DeviceScores>& devices) {
  using detail::fmt_fixed;
  if (devices.empty()) throw std::invalid_argument("no scores to render");

  double max_rt = 1, max_ac = 1, max_sc = 1, max_cap = 1;
  for (const DeviceScores& d : devices) {
    max_rt = std::max(max_rt, d.runtime);
    max_ac = std::max(max_ac, d.accuracy);
    max_sc = std::max(max_sc, d.scalability);
    max_cap = std::max(max_cap, d.capacity);
  }

  const double cx = 320, cy = 320, radius = 240;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  svg += "<title>score radar (axis maxima: runtime " + fmt_fixed(max_rt, 3) + ", accuracy " +
         fmt_fixed(max_ac, 3) + ", scalability " + fmt_fixed(max_sc, 3) + ", capacity " +
         fmt_fixed(max_cap, 3) + ")</title>\n";
  svg += "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";

  // Grid: concentric diamonds at quarter fractions plus the two axis lines.
  for (int step = 1; step <= 4; ++step) {
    const double r = radius * step / 4;
    svg += "<polygon points=\"" + fmt_fixed(cx + r, 1) + "," + fmt_fixed(cy, 1) + " " +
           fmt_fixed(cx, 1) + "," + fmt_fixed(cy - r, 1) + " " + fmt_fixed(cx - r, 1) + "," +
           fmt_fixed(cy, 1) + " " + fmt_fixed(cx, 1) + "," + fmt_fixed(cy + r, 1) +
           "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  svg += "<line x1=\"" + fmt_fixed(cx - radius, 1) + "\" y1=\"" + fmt_fixed(cy, 1) + "\" x2=\"" +
         fmt_fixed(cx + radius, 1) + "\" y2=\"" + fmt_fixed(cy, 1) +
         "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fmt_fixed(cx, 1) + "\" y1=\"" + fmt_fixed(cy - radius, 1) + "\" x2=\"" +
         fmt_fixed(cx, 1) + "\" y2=\"" + fmt_fixed(cy + radius, 1) +
         "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  svg += "<text x=\"" + fmt_fixed(cx + radius + 8, 1) + "\" y=\"" + fmt_fixed(cy + 4, 1) +
         "\" font-family=\"sans-serif\" font-size=\"14\">runtime</text>\n";
  svg += "<text x=\"" + fmt_fixed(cx, 1) + "\" y=\"" + fmt_fixed(cy - radius - 10, 1) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">accuracy</text>\n";
  svg += "<text x=\"" + fmt_fixed(cx - radius - 8, 1) + "\" y=\"" + fmt_fixed(cy + 4, 1) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"end\">scalability</text>\n";
  svg += "<text x=\"" + fmt_fixed(cx, 1) + "\" y=\"" + fmt_fixed(cy + radius + 20, 1) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">capacity</text>\n";

  for (std::size_t i = 0; i < devices.size(); ++i) {
    const DeviceScores& d = devices[i];
    const double east = radius * detail::clamp01(d.runtime / max_rt);
    const double north = radius * detail::clamp01(d.accuracy / max_ac);
    const double west = radius * detail::clamp01(d.scalability / max_sc);
    const double south = radius * detail::clamp01(d.capacity / max_cap);
    svg += "<polygon points=\"" + fmt_fixed(cx + east, 1) + "," + fmt_fixed(cy, 1) + " " +
           fmt_fixed(cx, 1) + "," + fmt_fixed(cy - north, 1) + " " + fmt_fixed(cx - west, 1) +
           "," + fmt_fixed(cy, 1) + " " + fmt_fixed(cx, 1) + "," + fmt_fixed(cy + south, 1) +
           "\" fill=\"" + detail::report_color(i) + "\" fill-opacity=\"0.25\" stroke=\"" +
           detail::report_color(i) + "\" stroke-width=\"2\"/>\n";
  }

  // Legend in the top-left corner.
  for (std::size_t i = 0; i < devices.size(); ++i) {
    const double y = 24 + 20 * static_cast<double>(i);
    svg += "<rect x=\"16\" y=\"" + fmt_fixed(y - 10, 1) +
           "\" width=\"12\" height=\"12\" fill=\"" + detail::report_color(i) + "\"/>\n";
    svg += "<text x=\"34\" y=\"" + fmt_fixed(y, 1) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" +
           detail::xml_escape(devices[i].device) + " (overall " +
           fmt_fixed(devices[i].overall, 2) + ")</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

/// Renders the overall score of each device as a bar chart.
inline std::string overall_svg(const std::vector<DeviceScores>& devices) {
  using detail::fmt_fixed;
  if (devices.empty()) throw std::invalid_argument("no scores to render");

  const double width = 640, height = 400;
  const double plot_left = 60, plot_right = width - 20;
  const double plot_top = 40, plot_bottom = height - 60;
  double max_overall = 1e-9;
  for (const DeviceScores& d : devices) max_overall = std::max(max_overall, d.overall);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\">\n";
  svg += "<title>overall scores (maximum " + fmt_fixed(max_overall, 3) + ")</title>\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"#ffffff\"/>\n";
  svg += "<line x1=\"" + fmt_fixed(plot_left, 1) + "\" y1=\"" + fmt_fixed(plot_bottom, 1) +
         "\" x2=\"" + fmt_fixed(plot_right, 1) + "\" y2=\"" + fmt_fixed(plot_bottom, 1) +
         "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  const auto n = static_cast<double>(devices.size());
  const double slot = (plot_right - plot_left) / n;
  const double bar_w = std::min(80.0, slot * 0.6);
  for (std::size_t i = 0; i < devices.size(); ++i) {
    const DeviceScores& d = devices[i];
    const double frac = detail::clamp01(d.overall / max_overall);
    const double h = (plot_bottom - plot_top) * frac;
    const double x = plot_left + slot * (static_cast<double>(i) + 0.5) - bar_w / 2;
    svg += "<rect x=\"" + fmt_fixed(x, 1) + "\" y=\"" + fmt_fixed(plot_bottom - h, 1) +
           "\" width=\"" + fmt_fixed(bar_w, 1) + "\" height=\"" + fmt_fixed(h, 1) +
           "\" fill=\"" + detail::report_color(i) + "\"/>\n";
    svg += "<text x=\"" + fmt_fixed(x + bar_w / 2, 1) + "\" y=\"" +
           fmt_fixed(plot_bottom - h - 6, 1) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           fmt_fixed(d.overall, 2) + "</text>\n";
    svg += "<text x=\"" + fmt_fixed(x + bar_w / 2, 1) + "\" y=\"" + fmt_fixed(plot_bottom + 18, 1) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           detail::xml_escape(d.device) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace vqbench
